#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "operadkit/algebra.hpp"
#include "operadkit/catalog.hpp"
#include "operadkit/errors.hpp"
#include "operadkit/functors.hpp"
#include "operadkit/io.hpp"
#include "operadkit/operad.hpp"
#include "operadkit/series.hpp"

namespace py = pybind11;
using namespace operadkit;

namespace {

std::vector<std::string> messages(const std::vector<Violation>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

py::int_ to_py(const mpz_class& z) { return py::int_(py::module_::import("builtins").attr("int")(z.get_str())); }

py::list to_py(const IntPoly& p) {
  py::list out;
  for (const auto& c : p) out.append(to_py(c));
  return out;
}

IntPoly from_py(const std::vector<py::int_>& xs) {
  IntPoly out;
  for (const auto& x : xs) out.emplace_back(py::str(py::handle(x)).cast<std::string>());
  return out;
}

PolyTyping poly_typing(const std::string& s) {
  if (s == "none") return PolyTyping::none;
  if (s == "even") return PolyTyping::even;
  if (s == "odd") return PolyTyping::odd;
  throw py::value_error("typing must be none, even or odd");
}

FunctorPair functor_pair(const std::string& s) {
  if (s == "42" || s == "sigma_trivial") return FunctorPair::sigma_trivial;
  if (s == "56" || s == "a_trivial") return FunctorPair::a_trivial;
  throw py::value_error("pair must be 42, 56, sigma_trivial or a_trivial");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact truncated symmetric operads and graded Perm-type algebras";

  auto base = py::register_exception<Error>(m, "OperadkitError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<Field>(m, "Field")
      .def_static("rationals", &Field::rationals)
      .def_static("prime", &Field::prime)
      .def_static("parse", &Field::parse)
      .def_property_readonly("characteristic", &Field::characteristic)
      .def("__str__", &Field::to_string)
      .def("__eq__", [](const Field& a, const Field& b) { return a == b; });

  py::class_<TruncatedOperad>(m, "Operad")
      .def_property_readonly("max_arity", &TruncatedOperad::max_arity)
      .def_property_readonly("field", &TruncatedOperad::field)
      .def("hilbert", [](const TruncatedOperad& p) { return hilbert(p); })
      .def("check_axioms", [](const TruncatedOperad& p) { return messages(check_axioms(p)); })
      .def("classify",
           [](const TruncatedOperad& p) {
             const SymmetryReport r = classify_symmetry(p);
             py::dict d;
             d["sigma_trivial"] = r.sigma_trivial;
             d["sigma_sign"] = r.sigma_sign;
             d["a_trivial"] = r.a_trivial;
             std::vector<std::string> per;
             for (std::size_t n = 1; n < r.per_arity.size(); ++n) per.push_back(to_string(r.per_arity[n]));
             d["per_arity"] = per;
             return d;
           })
      .def("to_text", [](const TruncatedOperad& p) { return to_text(p); })
      .def("__repr__", [](const TruncatedOperad& p) {
        return "<Operad over " + p.field().to_string() + " up to arity " + std::to_string(p.max_arity()) + ">";
      });

  py::class_<GradedAlgebra>(m, "Algebra")
      .def_property_readonly("max_degree", &GradedAlgebra::max_degree)
      .def_property_readonly("field", &GradedAlgebra::field)
      .def_property_readonly("typed", &GradedAlgebra::typed)
      .def("hilbert", [](const GradedAlgebra& a) { return hilbert(a); })
      .def("check_associativity", [](const GradedAlgebra& a) { return messages(check_associativity(a)); })
      .def("check_gperm", [](const GradedAlgebra& a) { return messages(check_gperm(a)); })
      .def("check_pgperm", [](const GradedAlgebra& a) { return messages(check_pgperm(a)); })
      .def("check_pgc", [](const GradedAlgebra& a) { return messages(check_pgc(a)); })
      .def("check_graded_commutative", [](const GradedAlgebra& a) { return messages(check_graded_commutative(a)); })
      .def("check_commutative", [](const GradedAlgebra& a) { return messages(check_commutative(a)); })
      .def("to_text", [](const GradedAlgebra& a) { return to_text(a); })
      .def("__repr__", [](const GradedAlgebra& a) {
        return "<Algebra over " + a.field().to_string() + " up to degree " + std::to_string(a.max_degree()) + ">";
      });

  const Field q = Field::rationals();
  m.def("build_com", &build_com, py::arg("max_arity"), py::arg("field") = q);
  m.def("build_ope", &build_ope, py::arg("max_arity"), py::arg("field") = q);
  m.def("build_massey_algebra", &build_massey_algebra, py::arg("a"), py::arg("b"), py::arg("max_degree"),
        py::arg("field") = q);
  m.def("build_massey_operad", &build_massey_operad, py::arg("a"), py::arg("b"), py::arg("max_arity"),
        py::arg("field") = q);
  m.def("build_ex63_algebra", &build_ex63_algebra, py::arg("max_degree"), py::arg("field") = q);
  m.def("build_ex64_algebra", &build_ex64_algebra, py::arg("max_degree"), py::arg("field") = q);
  m.def("build_ex64_operad", &build_ex64_operad, py::arg("max_arity"), py::arg("field") = q);
  m.def(
      "build_polynomial",
      [](std::size_t gen_degree, std::size_t max_degree, const std::string& typing, const Field& f) {
        return build_polynomial(gen_degree, max_degree, poly_typing(typing), f);
      },
      py::arg("generator_degree"), py::arg("max_degree"), py::arg("typing") = "none", py::arg("field") = q);
  m.def("free_gperm", &free_gperm, py::arg("generator_degrees"), py::arg("max_degree"), py::arg("field") = q);

  m.def("forget_F", &forget_F, py::arg("operad"), py::arg("validate") = true);
  m.def("g_sigma_triv", &g_sigma_triv, py::arg("algebra"), py::arg("validate") = true);
  m.def("g_a_triv", &g_a_triv, py::arg("algebra"), py::arg("validate") = true);
  m.def("f_a_triv", &f_a_triv, py::arg("operad"), py::arg("validate") = true);
  m.def("g_sigma_sign", &g_sigma_sign, py::arg("algebra"), py::arg("validate") = true);
  m.def("all_odd_typing", &all_odd_typing);
  m.def("all_even_typing", &all_even_typing);
  m.def("erase_typing", &erase_typing);

  m.def("diff", py::overload_cast<const TruncatedOperad&, const TruncatedOperad&>(&diff));
  m.def("diff", py::overload_cast<const GradedAlgebra&, const GradedAlgebra&>(&diff));
  m.def("roundtrip", [](const TruncatedOperad& p, const std::string& pair) {
    return roundtrip(p, functor_pair(pair)).differences;
  });
  m.def("roundtrip", [](const GradedAlgebra& a, const std::string& pair) {
    return roundtrip(a, functor_pair(pair)).differences;
  });

  m.def("parse", [](const std::string& text) -> py::object {
    return std::visit([](auto&& x) { return py::cast(std::move(x)); }, parse_text(text));
  });

  m.def(
      "rational_fit",
      [](const std::vector<py::int_>& coeffs, std::size_t max_order) -> py::object {
        const auto f = rational_fit(std::vector<mpz_class>(from_py(coeffs)), max_order);
        if (!f) return py::none();
        return py::make_tuple(to_py(f->numerator), to_py(f->denominator));
      },
      py::arg("coefficients"), py::arg("max_order"));
  m.def("gk_estimate", [](const std::vector<py::int_>& num, const std::vector<py::int_>& den) {
    return gk_estimate(RationalSeries{from_py(num), from_py(den)});
  });
  m.def("series_to_string", [](const std::vector<py::int_>& num, const std::vector<py::int_>& den) {
    return RationalSeries{from_py(num), from_py(den)}.to_string();
  });

  m.def("verify_sign_lemma", [](std::size_t m_max, std::size_t n_max) {
    py::dict d;
    for (const auto& c : verify_sign_lemma(m_max, n_max).cases) d[py::str(c.name)] = py::make_tuple(c.checked, c.failed);
    return d;
  });
}
