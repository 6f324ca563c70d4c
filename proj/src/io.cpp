#include "operadkit/io.hpp"

#include <json.hpp>

#include "operadkit/errors.hpp"

namespace operadkit {

namespace {

using Json = nlohmann::ordered_json;

Json scalar_json(const Scalar& s) {
  const mpq_class& v = s.value();
  if (v.get_den() == 1 && v.get_num().fits_slong_p()) return v.get_num().get_si();
  return s.to_string();
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_json(s));
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

// Nonzero entries of a bilinear map tensor as [a, b, out, c].
Json entries_json(const Matrix& c, std::size_t right_dim) {
  Json out = Json::array();
  for (std::size_t col = 0; col < c.cols(); ++col) {
    for (std::size_t r = 0; r < c.rows(); ++r) {
      if (!c(r, col).is_zero()) out.push_back(Json::array({col / right_dim, col % right_dim, r, scalar_json(c(r, col))}));
    }
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::string_view text) {
    try {
      root_ = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError("$", std::string("invalid JSON: ") + e.what());
    }
    if (!root_.is_object()) throw ParseError("$", "document must be an object");
  }

  const Json& root() const { return root_; }

  static const Json& member(const Json& obj, const std::string& path, const char* key) {
    if (!obj.is_object()) throw ParseError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(path, std::string("missing key \"") + key + "\"");
    return *it;
  }

  static std::size_t size(const Json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(path, "expected a nonnegative integer");
    return j.get<std::size_t>();
  }

  static const Json& array(const Json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path, "expected an array");
    return j;
  }

  static Scalar scalar(const Field& f, const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Scalar(f, static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
      try {
        return Scalar::parse(f, j.get<std::string>());
      } catch (const Error& e) {
        throw ParseError(path, e.what());
      }
    }
    throw ParseError(path, "expected an integer or a \"p/q\" string");
  }

  static Vector vector(const Field& f, const Json& j, std::size_t len, const std::string& path) {
    array(j, path);
    if (j.size() != len) {
      throw ParseError(path, "expected " + std::to_string(len) + " entries, got " + std::to_string(j.size()));
    }
    Vector v;
    for (std::size_t k = 0; k < len; ++k) v.push_back(scalar(f, j[k], path + "[" + std::to_string(k) + "]"));
    return v;
  }

  static Matrix matrix(const Field& f, const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
    array(j, path);
    if (j.size() != rows) throw ParseError(path, "expected " + std::to_string(rows) + " rows");
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      const Vector row = vector(f, j[r], cols, path + "[" + std::to_string(r) + "]");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
  }

  static Field field(const Json& root) {
    const Json& f = member(root, "$", "field");
    if (!f.is_string()) throw ParseError("$.field", "expected \"Q\" or \"Fp:<p>\"");
    try {
      return Field::parse(f.get<std::string>());
    } catch (const Error& e) {
      throw ParseError("$.field", e.what());
    }
  }

  // Reads [a, b, out, c] entries into a zero tensor of the given shape.
  static void entries(const Field& f, const Json& j, Matrix& c, std::size_t left_dim, std::size_t right_dim,
                      const std::string& path) {
    array(j, path);
    for (std::size_t k = 0; k < j.size(); ++k) {
      const std::string p = path + "[" + std::to_string(k) + "]";
      const Json& e = array(j[k], p);
      if (e.size() != 4) throw ParseError(p, "entry must be [left, right, out, scalar]");
      const std::size_t a = size(e[0], p + "[0]");
      const std::size_t b = size(e[1], p + "[1]");
      const std::size_t r = size(e[2], p + "[2]");
      if (a >= left_dim) throw ParseError(p + "[0]", "left basis index out of range");
      if (b >= right_dim) throw ParseError(p + "[1]", "right basis index out of range");
      if (r >= c.rows()) throw ParseError(p + "[2]", "output basis index out of range");
      c(r, a * right_dim + b) += scalar(f, e[3], p + "[3]");
    }
  }

 private:
  Json root_;
};

std::string kind_of(const Json& root) {
  const Json& k = Reader::member(root, "$", "kind");
  if (!k.is_string()) throw ParseError("$.kind", "expected \"operad\" or \"algebra\"");
  return k.get<std::string>();
}

TruncatedOperad operad_from(const Json& root) {
  const Field f = Reader::field(root);
  const std::size_t n_max = Reader::size(Reader::member(root, "$", "max_arity"), "$.max_arity");
  if (n_max < 1) throw ParseError("$.max_arity", "must be at least 1");
  OperadData d;
  d.field = f;
  d.max_arity = n_max;
  d.dims.assign(n_max + 1, 0);
  d.actions.resize(n_max + 1);
  const Json& ar = Reader::array(Reader::member(root, "$", "arities"), "$.arities");
  if (ar.size() != n_max) throw ParseError("$.arities", "expected one block per arity 1..max_arity");
  for (std::size_t k = 0; k < ar.size(); ++k) {
    const std::string p = "$.arities[" + std::to_string(k) + "]";
    const std::size_t n = Reader::size(Reader::member(ar[k], p, "arity"), p + ".arity");
    if (n != k + 1) throw ParseError(p + ".arity", "arity blocks must be listed as 1, 2, ..., max_arity");
    d.dims[n] = Reader::size(Reader::member(ar[k], p, "dim"), p + ".dim");
  }
  for (std::size_t k = 0; k < ar.size(); ++k) {
    const std::string p = "$.arities[" + std::to_string(k) + "]";
    const std::size_t n = k + 1;
    auto it = ar[k].find("actions");
    if (it == ar[k].end()) continue;
    const Json& acts = Reader::array(*it, p + ".actions");
    if (acts.empty()) continue;
    if (acts.size() + 1 != n) throw ParseError(p + ".actions", "expected " + std::to_string(n - 1) + " action matrices");
    for (std::size_t s = 0; s < acts.size(); ++s) {
      d.actions[n].push_back(
          Reader::matrix(f, acts[s], d.dims[n], d.dims[n], p + ".actions[" + std::to_string(s) + "]"));
    }
  }
  d.identity = Reader::vector(f, Reader::member(root, "$", "identity"), d.dims[1], "$.identity");
  if (auto it = root.find("compositions"); it != root.end()) {
    const Json& comps = Reader::array(*it, "$.compositions");
    for (std::size_t k = 0; k < comps.size(); ++k) {
      const std::string p = "$.compositions[" + std::to_string(k) + "]";
      const std::size_t m = Reader::size(Reader::member(comps[k], p, "m"), p + ".m");
      const std::size_t n = Reader::size(Reader::member(comps[k], p, "n"), p + ".n");
      const std::size_t i = Reader::size(Reader::member(comps[k], p, "i"), p + ".i");
      if (m < 1 || n < 1 || i < 1 || i > m || m + n - 1 > n_max) {
        throw ParseError(p, "composition key out of range for max_arity " + std::to_string(n_max));
      }
      if (d.compositions.contains({m, n, i})) throw ParseError(p, "duplicate composition key");
      Matrix c(f, d.dims[m + n - 1], d.dims[m] * d.dims[n]);
      Reader::entries(f, Reader::member(comps[k], p, "entries"), c, d.dims[m], d.dims[n], p + ".entries");
      d.compositions.emplace(CompositionKey{m, n, i}, std::move(c));
    }
  }
  try {
    return TruncatedOperad(std::move(d));
  } catch (const Error& e) {
    throw ParseError("$", e.what());
  }
}

GradedAlgebra algebra_from(const Json& root) {
  const Field f = Reader::field(root);
  const std::size_t d_max = Reader::size(Reader::member(root, "$", "max_degree"), "$.max_degree");
  AlgebraData d;
  d.field = f;
  d.max_degree = d_max;
  const Json& dims = Reader::array(Reader::member(root, "$", "dims"), "$.dims");
  if (dims.size() != d_max + 1) throw ParseError("$.dims", "expected max_degree+1 entries");
  for (std::size_t k = 0; k < dims.size(); ++k) d.dims.push_back(Reader::size(dims[k], "$.dims[" + std::to_string(k) + "]"));
  d.unit = Reader::vector(f, Reader::member(root, "$", "unit"), d.dims[0], "$.unit");
  if (auto it = root.find("products"); it != root.end()) {
    const Json& prods = Reader::array(*it, "$.products");
    for (std::size_t k = 0; k < prods.size(); ++k) {
      const std::string p = "$.products[" + std::to_string(k) + "]";
      const std::size_t i = Reader::size(Reader::member(prods[k], p, "i"), p + ".i");
      const std::size_t j = Reader::size(Reader::member(prods[k], p, "j"), p + ".j");
      if (i + j > d_max) throw ParseError(p, "product key exceeds max_degree " + std::to_string(d_max));
      if (d.products.contains({i, j})) throw ParseError(p, "duplicate product key");
      Matrix c(f, d.dims[i + j], d.dims[i] * d.dims[j]);
      Reader::entries(f, Reader::member(prods[k], p, "entries"), c, d.dims[i], d.dims[j], p + ".entries");
      d.products.emplace(ProductKey{i, j}, std::move(c));
    }
  }
  if (auto it = root.find("typing"); it != root.end()) {
    const Json& t = Reader::array(*it, "$.typing");
    if (t.size() != d_max + 1) throw ParseError("$.typing", "expected max_degree+1 strings");
    Typing typing(d_max + 1);
    for (std::size_t i = 0; i <= d_max; ++i) {
      const std::string p = "$.typing[" + std::to_string(i) + "]";
      if (!t[i].is_string()) throw ParseError(p, "expected a string of 'e'/'o' flags");
      const std::string s = t[i].get<std::string>();
      if (s.size() != (i == 0 ? 0 : d.dims[i])) {
        throw ParseError(p, i == 0 ? "degree 0 carries no typing" : "expected one flag per basis vector");
      }
      for (char c : s) {
        if (c != 'e' && c != 'o') throw ParseError(p, "flags must be 'e' or 'o'");
        typing[i].push_back(c == 'o');
      }
    }
    d.typing = std::move(typing);
  }
  try {
    return GradedAlgebra(std::move(d));
  } catch (const Error& e) {
    throw ParseError("$", e.what());
  }
}

}  // namespace

std::string to_text(const TruncatedOperad& p) {
  Json j;
  j["kind"] = "operad";
  j["field"] = p.field().to_string();
  j["max_arity"] = p.max_arity();
  Json ar = Json::array();
  for (std::size_t n = 1; n <= p.max_arity(); ++n) {
    Json block;
    block["arity"] = n;
    block["dim"] = p.dim(n);
    Json acts = Json::array();
    for (int k = 1; k < static_cast<int>(n); ++k) acts.push_back(matrix_json(p.action(n, k)));
    block["actions"] = std::move(acts);
    ar.push_back(std::move(block));
  }
  j["arities"] = std::move(ar);
  j["identity"] = vector_json(p.identity());
  Json comps = Json::array();
  for (const auto& [key, c] : p.data().compositions) {
    const auto [m, n, i] = key;
    if (c.is_zero()) continue;
    Json block;
    block["m"] = m;
    block["n"] = n;
    block["i"] = i;
    block["entries"] = entries_json(c, p.dim(n));
    comps.push_back(std::move(block));
  }
  j["compositions"] = std::move(comps);
  return j.dump(1) + "\n";
}

std::string to_text(const GradedAlgebra& a) {
  Json j;
  j["kind"] = "algebra";
  j["field"] = a.field().to_string();
  j["max_degree"] = a.max_degree();
  j["dims"] = a.dims();
  j["unit"] = vector_json(a.unit());
  Json prods = Json::array();
  for (const auto& [key, c] : a.data().products) {
    if (c.is_zero()) continue;
    Json block;
    block["i"] = key.first;
    block["j"] = key.second;
    block["entries"] = entries_json(c, a.dim(key.second));
    prods.push_back(std::move(block));
  }
  j["products"] = std::move(prods);
  if (a.typed()) {
    Json t = Json::array();
    for (std::size_t i = 0; i <= a.max_degree(); ++i) {
      std::string s;
      for (std::size_t k = 0; i > 0 && k < a.dim(i); ++k) s += a.type_of(i, k) ? 'o' : 'e';
      t.push_back(s);
    }
    j["typing"] = std::move(t);
  }
  return j.dump(1) + "\n";
}

std::string to_text(const Structure& s) {
  return std::visit([](const auto& x) { return to_text(x); }, s);
}

Structure parse_text(std::string_view text) {
  Reader r(text);
  const std::string kind = kind_of(r.root());
  if (kind == "operad") return operad_from(r.root());
  if (kind == "algebra") return algebra_from(r.root());
  throw ParseError("$.kind", "unknown kind \"" + kind + "\"");
}

TruncatedOperad parse_operad(std::string_view text) {
  Reader r(text);
  if (kind_of(r.root()) != "operad") throw ParseError("$.kind", "expected an operad document");
  return operad_from(r.root());
}

GradedAlgebra parse_algebra(std::string_view text) {
  Reader r(text);
  if (kind_of(r.root()) != "algebra") throw ParseError("$.kind", "expected an algebra document");
  return algebra_from(r.root());
}

}  // namespace operadkit
