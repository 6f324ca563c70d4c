#include "operadkit/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "operadkit/catalog.hpp"
#include "operadkit/errors.hpp"
#include "operadkit/functors.hpp"
#include "operadkit/io.hpp"
#include "operadkit/operad_ideals.hpp"
#include "operadkit/permutation.hpp"
#include "operadkit/series.hpp"

namespace operadkit::cli {

namespace {

bool color_enabled() {
  const char* v = std::getenv("OPERADKIT_COLOR");
  if (v == nullptr) return false;
  const std::string s(v);
  return s == "1" || s == "on" || s == "always";
}

class Printer {
 public:
  Printer(std::ostream& os, bool machine) : os_(os), machine_(machine), color_(color_enabled()) {}

  bool machine() const { return machine_; }
  std::ostream& os() { return os_; }

  /// One machine record: "<type> k=v k=v ...".
  void record(const std::string& type, const std::vector<std::pair<std::string, std::string>>& kv) {
    os_ << type;
    for (const auto& [k, v] : kv) os_ << ' ' << k << '=' << v;
    os_ << '\n';
  }

  std::string good(const std::string& s) const { return paint("32", s); }
  std::string bad(const std::string& s) const { return paint("31", s); }
  std::string dim(const std::string& s) const { return paint("2", s); }

 private:
  std::string paint(const char* code, const std::string& s) const {
    return color_ ? "\x1b[" + std::string(code) + "m" + s + "\x1b[0m" : s;
  }

  std::ostream& os_;
  bool machine_;
  bool color_;
};

template <class T>
std::string join(const std::vector<T>& xs, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t k = 0; k < xs.size(); ++k) os << (k ? sep : "") << xs[k];
  return os.str();
}

std::string read_all(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw ParseError(path, "cannot open file");
    buf << f.rdbuf();
  }
  return buf.str();
}

void write_all(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ParseError(path, "cannot open output file");
  f << text;
}

Structure load(const std::string& path, std::istream& in) { return parse_text(read_all(path, in)); }

TruncatedOperad load_operad(const std::string& path, std::istream& in) {
  Structure s = load(path, in);
  if (auto* p = std::get_if<TruncatedOperad>(&s)) return std::move(*p);
  throw ParseError("$.kind", "this command needs an operad document");
}

std::string kind_name(const Structure& s) { return std::holds_alternative<TruncatedOperad>(s) ? "operad" : "algebra"; }

void report_violations(Printer& pr, const std::string& kind, const std::string& checker,
                       const std::vector<Violation>& v) {
  if (pr.machine()) {
    pr.record("check", {{"kind", kind},
                        {"checker", checker},
                        {"violations", std::to_string(v.size())},
                        {"status", v.empty() ? "clean" : "failed"}});
    for (const auto& x : v) {
      pr.record("violation", {{"checker", checker},
                              {"axiom", x.axiom},
                              {"grades", join(x.grades)},
                              {"slot", std::to_string(x.slot)}});
    }
    return;
  }
  if (v.empty()) {
    pr.os() << kind << ' ' << checker << ": " << pr.good("clean") << '\n';
    return;
  }
  pr.os() << kind << ' ' << checker << ": " << pr.bad(std::to_string(v.size()) + " violation(s)") << '\n';
  for (const auto& x : v) pr.os() << "  " << x.to_string() << '\n';
}

int cmd_check(Printer& pr, const std::string& file, const std::string& as, std::istream& in) {
  const Structure s = load(file, in);
  bool clean = true;
  if (const auto* p = std::get_if<TruncatedOperad>(&s)) {
    if (!as.empty() && as != "axioms") throw ParseError("--as", "operads only support --as axioms");
    const auto v = check_axioms(*p);
    report_violations(pr, "operad", "axioms", v);
    clean = v.empty();
  } else {
    const auto& a = std::get<GradedAlgebra>(s);
    const auto assoc = check_associativity(a);
    report_violations(pr, "algebra", "associativity", assoc);
    clean = assoc.empty();
    std::string which = as.empty() ? (a.typed() ? "pgperm" : "gperm") : as;
    std::vector<Violation> v;
    if (which == "gperm") {
      v = check_gperm(a);
    } else if (which == "pgperm") {
      v = check_pgperm(a);
    } else if (which == "pgc") {
      v = check_pgc(a);
    } else if (which == "graded-commutative") {
      v = check_graded_commutative(a);
    } else if (which == "commutative") {
      v = check_commutative(a);
    } else if (which != "associativity") {
      throw ParseError("--as", "unknown algebra checker \"" + which + "\"");
    }
    if (which != "associativity") {
      report_violations(pr, "algebra", which, v);
      clean = clean && v.empty();
    }
  }
  return clean ? kOk : kCheckFailed;
}

int cmd_classify(Printer& pr, const std::string& file, std::istream& in) {
  const TruncatedOperad p = load_operad(file, in);
  const SymmetryReport r = classify_symmetry(p);
  auto window = [](const std::optional<std::size_t>& w) { return w ? std::to_string(*w) : std::string("none"); };
  if (pr.machine()) {
    for (std::size_t n = 1; n < r.per_arity.size(); ++n) {
      pr.record("arity", {{"n", std::to_string(n)}, {"dim", std::to_string(p.dim(n))}, {"class", to_string(r.per_arity[n])}});
    }
    pr.record("global", {{"sigma_trivial", r.sigma_trivial ? "1" : "0"},
                         {"sigma_sign", r.sigma_sign ? "1" : "0"},
                         {"a_trivial", r.a_trivial ? "1" : "0"},
                         {"almost_sigma_trivial", window(r.almost_sigma_trivial)},
                         {"almost_sigma_sign", window(r.almost_sigma_sign)},
                         {"almost_a_trivial", window(r.almost_a_trivial)}});
    return kOk;
  }
  for (std::size_t n = 1; n < r.per_arity.size(); ++n) {
    pr.os() << "arity " << n << " (dim " << p.dim(n) << "): " << to_string(r.per_arity[n]) << '\n';
  }
  auto yn = [&](bool b) { return b ? pr.good("yes") : pr.dim("no"); };
  pr.os() << "Sigma-trivial: " << yn(r.sigma_trivial) << '\n'
          << "Sigma-sign: " << yn(r.sigma_sign) << '\n'
          << "A-trivial: " << yn(r.a_trivial) << '\n'
          << "almost Sigma-trivial from arity: " << window(r.almost_sigma_trivial) << '\n'
          << "almost Sigma-sign from arity: " << window(r.almost_sigma_sign) << '\n'
          << "almost A-trivial from arity: " << window(r.almost_a_trivial) << '\n';
  return kOk;
}

int cmd_functor(Printer& pr, const std::string& name, const std::string& file, const std::string& out_path,
                std::istream& in, std::ostream& out) {
  const Structure s = load(file, in);
  auto need_operad = [&]() -> const TruncatedOperad& {
    if (const auto* p = std::get_if<TruncatedOperad>(&s)) return *p;
    throw ParseError("$.kind", name + " needs an operad document");
  };
  auto need_algebra = [&]() -> const GradedAlgebra& {
    if (const auto* a = std::get_if<GradedAlgebra>(&s)) return *a;
    throw ParseError("$.kind", name + " needs an algebra document");
  };
  std::string text;
  if (name == "forget_F") {
    text = to_text(forget_F(need_operad()));
  } else if (name == "f_a_triv") {
    text = to_text(f_a_triv(need_operad()));
  } else if (name == "g_sigma_triv") {
    text = to_text(g_sigma_triv(need_algebra()));
  } else if (name == "g_a_triv") {
    text = to_text(g_a_triv(need_algebra()));
  } else if (name == "g_sigma_sign") {
    text = to_text(g_sigma_sign(need_algebra()));
  } else {
    throw ParseError("functor", "unknown functor \"" + name + "\"");
  }
  write_all(out_path, text, out);
  if (!out_path.empty() && out_path != "-" && !pr.machine()) pr.os() << "wrote " << out_path << '\n';
  return kOk;
}

int cmd_roundtrip(Printer& pr, const std::string& file, const std::string& pair_name, std::istream& in) {
  FunctorPair pair;
  if (pair_name == "42") {
    pair = FunctorPair::sigma_trivial;
  } else if (pair_name == "56") {
    pair = FunctorPair::a_trivial;
  } else {
    throw ParseError("--pair", "expected 42 or 56");
  }
  const Structure s = load(file, in);
  const RoundtripReport r = std::visit([&](const auto& x) { return roundtrip(x, pair); }, s);
  if (pr.machine()) {
    pr.record("roundtrip", {{"kind", kind_name(s)},
                            {"composite", r.composite},
                            {"differences", std::to_string(r.differences.size())},
                            {"status", r.identical() ? "identical" : "differs"}});
  } else {
    pr.os() << r.composite << ": "
            << (r.identical() ? pr.good("identical") : pr.bad(std::to_string(r.differences.size()) + " difference(s)"))
            << '\n';
    for (const auto& d : r.differences) pr.os() << "  " << d << '\n';
  }
  return r.identical() ? kOk : kCheckFailed;
}

int cmd_hilbert(Printer& pr, const std::string& file, std::optional<std::size_t> fit, bool gk, bool heuristic,
                std::istream& in) {
  const Structure s = load(file, in);
  const std::vector<std::size_t> h = std::visit([](const auto& x) { return hilbert(x); }, s);
  if (pr.machine()) {
    pr.record("hilbert", {{"kind", kind_name(s)}, {"coefficients", join(h)}});
  } else {
    pr.os() << "coefficients: " << join(h, " ") << '\n';
  }
  int code = kOk;
  std::optional<RationalSeries> series;
  if (fit || gk) {
    series = rational_fit(h, fit.value_or(2));
    if (pr.machine()) {
      pr.record("fit", {{"status", series ? "ok" : "none"}, {"series", series ? series->to_string() : ""}});
    } else {
      pr.os() << "rational fit: " << (series ? series->to_string() : pr.bad("none within order")) << '\n';
    }
    if (!series) code = kCheckFailed;
  }
  if (gk && series) {
    const std::size_t g = gk_estimate(*series);
    if (pr.machine()) {
      pr.record("gk", {{"estimate", std::to_string(g)}});
    } else {
      pr.os() << "GK dimension: " << g << '\n';
    }
  }
  if (heuristic) {
    const auto slope = gk_heuristic(h);
    std::ostringstream v;
    if (slope) {
      v.precision(3);
      v << std::fixed << *slope;
    } else {
      v << "n/a";
    }
    if (pr.machine()) {
      pr.record("gk_heuristic", {{"slope", v.str()}});
    } else {
      pr.os() << "GK heuristic (log-log slope, not exact): " << v.str() << '\n';
    }
  }
  return code;
}

int cmd_torsion(Printer& pr, const std::string& file, const std::string& side, std::size_t window, std::istream& in) {
  const Structure s = load(file, in);
  TorsionReport r;
  if (const auto* p = std::get_if<TruncatedOperad>(&s)) {
    if (side == "l") {
      r = left_torsion(*p, window);
    } else if (side == "r") {
      r = right_torsion(*p, window);
    } else if (side == "br") {
      r = bullet_right_torsion(*p, window);
    } else {
      throw ParseError("--side", "expected l, r or br");
    }
  } else {
    const auto& a = std::get<GradedAlgebra>(s);
    if (side == "l") {
      r = left_torsion(a, window);
    } else if (side == "r") {
      r = right_torsion(a, window);
    } else {
      throw ParseError("--side", "algebras support l or r");
    }
  }
  const bool operad = std::holds_alternative<TruncatedOperad>(s);
  const std::string grade = operad ? "arity" : "degree";
  const auto dims = r.subsets.dims();
  if (pr.machine()) {
    pr.record("torsion", {{"kind", kind_name(s)},
                          {"side", side},
                          {"window", std::to_string(r.window)},
                          {"max_grade", std::to_string(r.max_grade)}});
  } else {
    pr.os() << "torsion side=" << side << " window=" << r.window << " truncation=" << r.max_grade << '\n';
  }
  for (std::size_t k = operad ? 1 : 0; k < dims.size(); ++k) {
    if (pr.machine()) {
      pr.record(grade, {{"index", std::to_string(k)},
                        {"dim", std::to_string(dims[k])},
                        {"determined", r.determined[k] ? "1" : "0"}});
    } else {
      pr.os() << grade << ' ' << k << ": ";
      if (r.determined[k]) {
        pr.os() << dims[k] << '\n';
      } else {
        pr.os() << pr.dim("undetermined (no constraint inside the truncation)") << '\n';
      }
    }
  }
  return kOk;
}

int cmd_center(Printer& pr, const std::string& file, std::istream& in) {
  const TruncatedOperad p = load_operad(file, in);
  for (std::size_t n = 1; n <= p.max_arity(); ++n) {
    for (std::size_t b = 0; b < p.dim(n); ++b) {
      const CentralityResult c = is_central(p, {n, unit_vector(p.field(), p.dim(n), b)});
      if (pr.machine()) {
        pr.record("basis", {{"arity", std::to_string(n)}, {"index", std::to_string(b)}, {"central", c.central ? "1" : "0"}});
      } else {
        pr.os() << "arity " << n << " e" << b << ": "
                << (c.central ? pr.good("central") : pr.bad("not central") + " (" + c.witness + ")") << '\n';
      }
    }
  }
  return kOk;
}

struct CatalogArgs {
  std::string name;
  std::optional<std::size_t> max_arity;
  std::optional<std::size_t> max_degree;
  std::size_t a = 1;
  std::size_t b = 1;
  bool operad = false;
  std::vector<std::size_t> degrees{1, 1};
  std::size_t gen_degree = 1;
  std::string typing = "none";
  std::string field = "Q";
  std::string out;
};

int cmd_catalog(Printer& pr, const CatalogArgs& c, std::ostream& out) {
  const Field f = Field::parse(c.field);
  auto arity = [&](std::size_t fallback) {
    if (c.max_arity) return *c.max_arity;
    if (c.max_degree) return *c.max_degree + 1;
    return fallback;
  };
  auto degree = [&](std::size_t fallback) {
    if (c.max_degree) return *c.max_degree;
    if (c.max_arity) return *c.max_arity - 1;
    return fallback;
  };
  if ((c.max_arity && *c.max_arity < 1)) throw ParseError("--max-arity", "must be at least 1");
  std::string text;
  if (c.name == "com") {
    text = to_text(build_com(arity(7), f));
  } else if (c.name == "ope") {
    text = to_text(build_ope(arity(7), f));
  } else if (c.name == "massey") {
    text = c.operad ? to_text(build_massey_operad(c.a, c.b, arity(7), f))
                    : to_text(build_massey_algebra(c.a, c.b, degree(6), f));
  } else if (c.name == "ex63") {
    text = to_text(build_ex63_algebra(degree(6), f));
  } else if (c.name == "ex64") {
    text = c.operad ? to_text(build_ex64_operad(arity(7), f)) : to_text(build_ex64_algebra(degree(6), f));
  } else if (c.name == "poly") {
    PolyTyping t = PolyTyping::none;
    if (c.typing == "even") {
      t = PolyTyping::even;
    } else if (c.typing == "odd") {
      t = PolyTyping::odd;
    } else if (c.typing != "none") {
      throw ParseError("--typing", "expected none, even or odd");
    }
    text = to_text(build_polynomial(c.gen_degree, degree(6), t, f));
  } else if (c.name == "free-gperm") {
    text = to_text(free_gperm(c.degrees, degree(6), f));
  } else {
    throw ParseError("catalog", "unknown catalog entry \"" + c.name + "\"");
  }
  write_all(c.out, text, out);
  if (!c.out.empty() && c.out != "-" && !pr.machine()) pr.os() << "wrote " << c.out << '\n';
  return kOk;
}

int cmd_signlemma(Printer& pr, std::size_t m, std::size_t n) {
  const SignLemmaReport r = verify_sign_lemma(m, n);
  for (const auto& c : r.cases) {
    if (pr.machine()) {
      pr.record("case", {{"name", c.name}, {"checked", std::to_string(c.checked)}, {"failed", std::to_string(c.failed)}});
    } else {
      pr.os() << "(" << c.name << ") " << c.statement << ": " << c.checked << " checked, "
              << (c.passed() ? pr.good("all hold") : pr.bad(std::to_string(c.failed) + " failed: " + c.first_failure))
              << '\n';
    }
  }
  if (pr.machine()) {
    pr.record("signlemma", {{"m", std::to_string(m)},
                            {"n", std::to_string(n)},
                            {"family_2", r.family_2_passed() ? "1" : "0"},
                            {"status", r.all_passed() ? "ok" : "failed"}});
  } else if (r.family_2_passed()) {
    pr.os() << pr.good("all 2d-family identities hold") << '\n';
  }
  return r.all_passed() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with truncated symmetric operads and graded algebras", "operadkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  app.add_option("--format", format, "Output style")->check(CLI::IsMember({"human", "machine"}));

  std::string file, as, name, out_path, pair_name, side;
  std::optional<std::size_t> fit;
  bool gk = false, heuristic = false;
  std::size_t window = 1, sm = 5, sn = 4;
  CatalogArgs cat;

  auto* check = app.add_subcommand("check", "Run the axiom checker for the document kind");
  check->add_option("file", file, "Structure file, - for stdin");
  check->add_option("--as", as, "Algebra checker: associativity|gperm|pgperm|pgc|graded-commutative|commutative");

  auto* classify = app.add_subcommand("classify", "Symmetry class per arity");
  classify->add_option("file", file);

  auto* functor = app.add_subcommand("functor", "Apply a functor");
  functor->add_option("name", name, "forget_F|g_sigma_triv|g_a_triv|f_a_triv|g_sigma_sign")->required();
  functor->add_option("file", file);
  functor->add_option("-o,--output", out_path);

  auto* rt = app.add_subcommand("roundtrip", "Compose a functor pair and diff against the input");
  rt->add_option("file", file);
  rt->add_option("--pair", pair_name, "42 (Sigma-trivial / GPerm) or 56 (A-trivial / PGPerm)")->required();

  auto* hil = app.add_subcommand("hilbert", "Dimensions, rational fit and GK dimension");
  hil->add_option("file", file);
  hil->add_option("--fit", fit, "Maximal denominator degree");
  hil->add_flag("--gk", gk, "Exact GK dimension from the fitted series");
  hil->add_flag("--gk-heuristic", heuristic, "Floating-point log-log slope");

  auto* tor = app.add_subcommand("torsion", "Truncated torsion dimensions");
  tor->add_option("file", file);
  tor->add_option("--side", side, "l, r or br")->required();
  tor->add_option("--window", window, "Smallest partner grade")->required();

  auto* center = app.add_subcommand("center", "Centrality of every basis element");
  center->add_option("file", file);

  auto* catalog = app.add_subcommand("catalog", "Emit a catalog structure");
  catalog->add_option("name", cat.name, "com|ope|massey|ex63|ex64|poly|free-gperm")->required();
  catalog->add_option("--max-arity", cat.max_arity);
  catalog->add_option("--max-degree", cat.max_degree);
  catalog->add_option("--a", cat.a, "Exterior generators (massey)");
  catalog->add_option("--b", cat.b, "Polynomial generators (massey)");
  catalog->add_flag("--operad", cat.operad, "Emit the associated operad (massey, ex64)");
  catalog->add_option("--degrees", cat.degrees, "Generator degrees (free-gperm)")->delimiter(',');
  catalog->add_option("--gen-degree", cat.gen_degree, "Generator degree (poly)");
  catalog->add_option("--typing", cat.typing, "none|even|odd (poly)");
  catalog->add_option("--field", cat.field, "Q or Fp:<p>");
  catalog->add_option("-o,--output", cat.out);

  auto* sign = app.add_subcommand("signlemma", "Exhaustive sign identities");
  sign->add_option("--m", sm, "Largest outer arity");
  sign->add_option("--n", sn, "Largest inner arity");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kInvalid;
  }

  Printer pr(out, format == "machine");
  try {
    if (*check) return cmd_check(pr, file, as, in);
    if (*classify) return cmd_classify(pr, file, in);
    if (*functor) return cmd_functor(pr, name, file, out_path, in, out);
    if (*rt) return cmd_roundtrip(pr, file, pair_name, in);
    if (*hil) return cmd_hilbert(pr, file, fit, gk, heuristic, in);
    if (*tor) return cmd_torsion(pr, file, side, window, in);
    if (*center) return cmd_center(pr, file, in);
    if (*catalog) return cmd_catalog(pr, cat, out);
    if (*sign) return cmd_signlemma(pr, sm, sn);
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << '\n';
    return kInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace operadkit::cli
