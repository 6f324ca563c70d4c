#include "operadkit/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "operadkit/errors.hpp"

namespace operadkit {

namespace {

std::string key_string(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

GradedAlgebra::GradedAlgebra(AlgebraData data) : data_(std::move(data)) {
  const std::size_t d_max = data_.max_degree;
  if (data_.dims.size() != d_max + 1) throw DimensionMismatch("dims must have max_degree+1 entries");
  if (data_.unit.size() != data_.dims[0]) throw DimensionMismatch("unit must lie in A_0");
  for (const auto& [key, mat] : data_.products) {
    const auto [i, j] = key;
    if (i + j > d_max) throw DimensionMismatch("product key " + key_string(i, j) + " exceeds max_degree");
    if (mat.rows() != data_.dims[i + j] || mat.cols() != data_.dims[i] * data_.dims[j]) {
      throw DimensionMismatch("product " + key_string(i, j) + " has wrong shape");
    }
    if (mat.field() != data_.field) throw FieldMismatch("product " + key_string(i, j) + " over another field");
  }
  for (std::size_t i = 0; i <= d_max; ++i) {
    for (std::size_t j = 0; i + j <= d_max; ++j) {
      data_.products.try_emplace({i, j}, data_.field, data_.dims[i + j], data_.dims[i] * data_.dims[j]);
    }
  }
  if (data_.typing) {
    auto& t = *data_.typing;
    if (t.size() != d_max + 1) throw DimensionMismatch("typing must have max_degree+1 entries");
    if (!t[0].empty()) throw DimensionMismatch("degree 0 carries no typing");
    for (std::size_t i = 1; i <= d_max; ++i) {
      if (t[i].size() != data_.dims[i]) {
        throw DimensionMismatch("typing of degree " + std::to_string(i) + " has wrong length");
      }
    }
  }
}

std::size_t GradedAlgebra::dim(std::size_t i) const {
  if (i > data_.max_degree) throw TruncationExceeded("degree " + std::to_string(i) + " above max_degree");
  return data_.dims[i];
}

const Matrix& GradedAlgebra::product(std::size_t i, std::size_t j) const {
  if (i + j > data_.max_degree) {
    throw TruncationExceeded("product of degrees " + std::to_string(i) + " and " + std::to_string(j) +
                             " exceeds max_degree " + std::to_string(data_.max_degree));
  }
  return data_.products.at({i, j});
}

int GradedAlgebra::type_of(std::size_t i, std::size_t a) const {
  if (!data_.typing) throw MissingTyping("algebra carries no even/odd typing");
  if (i == 0) return 0;
  return (*data_.typing)[i][a] ? 1 : 0;
}

Vector GradedAlgebra::xi(const Vector& x) const {
  if (x.size() != dim(1)) throw DimensionMismatch("Xi acts on A_1");
  Vector out = x;
  for (std::size_t a = 0; a < out.size(); ++a) {
    if (type_of(1, a)) out[a] = -out[a];
  }
  return out;
}

Vector GradedAlgebra::multiply(std::size_t i, const Vector& x, std::size_t j, const Vector& y) const {
  const Matrix& c = product(i, j);
  const std::size_t di = data_.dims[i], dj = data_.dims[j];
  if (x.size() != di || y.size() != dj) throw DimensionMismatch("multiply: operand length mismatch");
  Vector out = zero_vector(data_.field, c.rows());
  for (std::size_t a = 0; a < di; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < dj; ++b) {
      if (y[b].is_zero()) continue;
      const Scalar coef = x[a] * y[b];
      for (std::size_t r = 0; r < c.rows(); ++r) {
        const auto& e = c(r, a * dj + b);
        if (!e.is_zero()) out[r] += coef * e;
      }
    }
  }
  return out;
}

Homogeneous GradedAlgebra::multiply(const Homogeneous& x, const Homogeneous& y) const {
  return {x.grade + y.grade, multiply(x.grade, x.coords, y.grade, y.coords)};
}

Vector GradedAlgebra::multiply_basis(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const {
  return product(i, j).column(a * data_.dims[j] + b);
}

namespace {

Vector basis(const GradedAlgebra& a, std::size_t i, std::size_t k) { return unit_vector(a.field(), a.dim(i), k); }

std::string witness3(std::size_t x, std::size_t y, std::size_t z, const Vector& lhs, const Vector& rhs) {
  std::ostringstream os;
  os << "x=e" << x << " y=e" << y << " z=e" << z << " lhs=" << to_string(lhs) << " rhs=" << to_string(rhs);
  return os.str();
}

// Runs body over basis triples of degrees (i, j, k) with i+j+k <= D, stopping
// a degree triple at its first failure.
using TripleBody = std::function<std::optional<std::string>(std::size_t, std::size_t, std::size_t)>;
void over_triples(const GradedAlgebra& a, std::size_t i, std::size_t j, std::size_t k, const std::string& axiom,
                  const TripleBody& body, std::vector<Violation>& out) {
  for (std::size_t x = 0; x < a.dim(i); ++x) {
    for (std::size_t y = 0; y < a.dim(j); ++y) {
      for (std::size_t z = 0; z < a.dim(k); ++z) {
        if (auto w = body(x, y, z)) {
          out.push_back({axiom, {i, j, k}, 0, *w});
          return;
        }
      }
    }
  }
}

Scalar sign_scalar(const Field& f, int exponent) { return Scalar(f, exponent % 2 == 0 ? 1L : -1L); }

bool supported_on_type(const GradedAlgebra& a, std::size_t deg, const Vector& v, int t) {
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (!v[r].is_zero() && a.type_of(deg, r) != t) return false;
  }
  return true;
}

}  // namespace

std::vector<Violation> check_associativity(const GradedAlgebra& a) {
  std::vector<Violation> out;
  const std::size_t d_max = a.max_degree();
  for (std::size_t i = 0; i <= d_max; ++i) {
    for (std::size_t x = 0; x < a.dim(i); ++x) {
      const Vector e = basis(a, i, x);
      const Vector left = a.multiply(0, a.unit(), i, e);
      const Vector right = a.multiply(i, e, 0, a.unit());
      if (left != e || right != e) {
        out.push_back({"unit", {i}, 0,
                       "x=e" + std::to_string(x) + " 1x=" + to_string(left) + " x1=" + to_string(right)});
        break;
      }
    }
  }
  for (std::size_t i = 0; i <= d_max; ++i) {
    for (std::size_t j = 0; i + j <= d_max; ++j) {
      for (std::size_t k = 0; i + j + k <= d_max; ++k) {
        over_triples(
            a, i, j, k, "associativity",
            [&](std::size_t x, std::size_t y, std::size_t z) -> std::optional<std::string> {
              const Vector lhs = a.multiply(i + j, a.multiply_basis(i, x, j, y), k, basis(a, k, z));
              const Vector rhs = a.multiply(i, basis(a, i, x), j + k, a.multiply_basis(j, y, k, z));
              if (lhs == rhs) return std::nullopt;
              return witness3(x, y, z, lhs, rhs);
            },
            out);
      }
    }
  }
  sort_violations(out);
  return out;
}

std::vector<Violation> check_gperm(const GradedAlgebra& a) {
  std::vector<Violation> out;
  const std::size_t d_max = a.max_degree();
  for (std::size_t i = 1; i <= d_max; ++i) {
    for (std::size_t j = 0; i + j <= d_max; ++j) {
      for (std::size_t k = 0; i + j + k <= d_max; ++k) {
        over_triples(
            a, i, j, k, "gperm",
            [&](std::size_t x, std::size_t y, std::size_t z) -> std::optional<std::string> {
              const Vector ex = basis(a, i, x);
              const Vector lhs = a.multiply(i, ex, j + k, a.multiply_basis(j, y, k, z));
              const Vector rhs = a.multiply(i, ex, j + k, a.multiply_basis(k, z, j, y));
              if (lhs == rhs) return std::nullopt;
              return witness3(x, y, z, lhs, rhs);
            },
            out);
      }
    }
  }
  sort_violations(out);
  return out;
}

std::vector<Violation> check_pgperm(const GradedAlgebra& a) {
  if (!a.typed()) throw MissingTyping("check_pgperm needs an even/odd typing");
  std::vector<Violation> out;
  const Field& f = a.field();
  const std::size_t d_max = a.max_degree();
  // (ii) typed parts of positive degree are left ideals.
  for (std::size_t i = 0; i <= d_max; ++i) {
    for (std::size_t j = 1; i + j <= d_max; ++j) {
      bool failed = false;
      for (std::size_t x = 0; x < a.dim(i) && !failed; ++x) {
        for (std::size_t z = 0; z < a.dim(j); ++z) {
          const Vector v = a.multiply_basis(i, x, j, z);
          if (!supported_on_type(a, i + j, v, a.type_of(j, z))) {
            out.push_back({"left-ideal", {i, j}, 0,
                           "e" + std::to_string(x) + " * e" + std::to_string(z) + " changes type"});
            failed = true;
            break;
          }
        }
      }
    }
  }
  // (iii) typed parts of degree >= 2 are two-sided ideals.
  for (std::size_t j = 2; j <= d_max; ++j) {
    for (std::size_t i = 0; i + j <= d_max; ++i) {
      bool failed = false;
      for (std::size_t z = 0; z < a.dim(j) && !failed; ++z) {
        for (std::size_t x = 0; x < a.dim(i); ++x) {
          const Vector v = a.multiply_basis(j, z, i, x);
          if (!supported_on_type(a, i + j, v, a.type_of(j, z))) {
            out.push_back({"two-sided-ideal", {j, i}, 0,
                           "e" + std::to_string(z) + " * e" + std::to_string(x) + " changes type"});
            failed = true;
            break;
          }
        }
      }
    }
  }
  // (iv) x(yz) = a(y,z) x(zy) for deg x >= 2.
  for (std::size_t i = 2; i <= d_max; ++i) {
    for (std::size_t j = 0; i + j <= d_max; ++j) {
      for (std::size_t k = 0; i + j + k <= d_max; ++k) {
        over_triples(
            a, i, j, k, "signed-perm",
            [&](std::size_t x, std::size_t y, std::size_t z) -> std::optional<std::string> {
              const bool minus = a.type_of(j, y) && a.type_of(k, z) && j % 2 == 1 && k % 2 == 1;
              const Vector ex = basis(a, i, x);
              const Vector lhs = a.multiply(i, ex, j + k, a.multiply_basis(j, y, k, z));
              const Vector rhs = scaled(sign_scalar(f, minus ? 1 : 0),
                                        a.multiply(i, ex, j + k, a.multiply_basis(k, z, j, y)));
              if (lhs == rhs) return std::nullopt;
              return witness3(x, y, z, lhs, rhs);
            },
            out);
      }
    }
  }
  if (d_max >= 1) {
    // (va) x in A_1, y, z in A_0.
    over_triples(
        a, 1, 0, 0, "xi-va",
        [&](std::size_t x, std::size_t y, std::size_t z) -> std::optional<std::string> {
          const Vector ex = basis(a, 1, x), ey = basis(a, 0, y), ez = basis(a, 0, z);
          const Vector lhs = a.xi(a.multiply(1, a.xi(a.multiply(1, ex, 0, ey)), 0, ez));
          const Vector rhs = a.multiply(1, a.xi(a.multiply(1, a.xi(ex), 0, ez)), 0, ey);
          if (lhs == rhs) return std::nullopt;
          return witness3(x, y, z, lhs, rhs);
        },
        out);
    for (std::size_t k = 1; 1 + k <= d_max; ++k) {
      // (vb) x in A_1, y in A_0, z of degree k.
      over_triples(
          a, 1, 0, k, "xi-vb",
          [&](std::size_t x, std::size_t y, std::size_t z) -> std::optional<std::string> {
            const Vector ex = basis(a, 1, x), ey = basis(a, 0, y), ez = basis(a, k, z);
            const Vector lhs = a.multiply(1, a.xi(a.multiply(1, ex, 0, ey)), k, ez);
            const Vector rhs = a.multiply(1 + k, a.multiply(1, a.xi(ex), k, ez), 0, ey);
            if (lhs == rhs) return std::nullopt;
            return witness3(x, y, z, lhs, rhs);
          },
          out);
      // (vb)' x in A_1, y of degree k, z in A_0.
      over_triples(
          a, 1, k, 0, "xi-vb-prime",
          [&](std::size_t x, std::size_t y, std::size_t z) -> std::optional<std::string> {
            const Vector ex = basis(a, 1, x), ey = basis(a, k, y), ez = basis(a, 0, z);
            const Vector lhs = a.multiply(1 + k, a.multiply(1, ex, k, ey), 0, ez);
            const Vector rhs = a.multiply(1, a.xi(a.multiply(1, a.xi(ex), 0, ez)), k, ey);
            if (lhs == rhs) return std::nullopt;
            return witness3(x, y, z, lhs, rhs);
          },
          out);
    }
    // (vc) x in A_1, y of degree j, z of degree k, j, k >= 1.
    for (std::size_t j = 1; 1 + j <= d_max; ++j) {
      for (std::size_t k = 1; 1 + j + k <= d_max; ++k) {
        over_triples(
            a, 1, j, k, "xi-vc",
            [&](std::size_t x, std::size_t y, std::size_t z) -> std::optional<std::string> {
              const Vector ex = basis(a, 1, x), ey = basis(a, j, y), ez = basis(a, k, z);
              const int ty = a.type_of(j, y), tz = a.type_of(k, z);
              const Vector lhs = scaled(sign_scalar(f, static_cast<int>(k * (j - 1)) * ty),
                                        a.multiply(1 + j, a.multiply(1, ex, j, ey), k, ez));
              const Vector rhs = scaled(sign_scalar(f, static_cast<int>(k - 1) * tz),
                                        a.multiply(1 + k, a.multiply(1, a.xi(ex), k, ez), j, ey));
              if (lhs == rhs) return std::nullopt;
              return witness3(x, y, z, lhs, rhs);
            },
            out);
      }
    }
  }
  sort_violations(out);
  return out;
}

namespace {

std::vector<Violation> commutation(const GradedAlgebra& a, const std::string& axiom,
                                   const std::function<bool(std::size_t, std::size_t, std::size_t, std::size_t)>& minus) {
  std::vector<Violation> out;
  const std::size_t d_max = a.max_degree();
  for (std::size_t i = 0; i <= d_max; ++i) {
    for (std::size_t j = i; i + j <= d_max; ++j) {
      bool failed = false;
      for (std::size_t y = 0; y < a.dim(i) && !failed; ++y) {
        for (std::size_t z = 0; z < a.dim(j); ++z) {
          const Vector yz = a.multiply_basis(i, y, j, z);
          const Vector zy = a.multiply_basis(j, z, i, y);
          const Vector rhs = scaled(sign_scalar(a.field(), minus(i, y, j, z) ? 1 : 0), zy);
          if (yz != rhs) {
            out.push_back({axiom, {i, j}, 0,
                           "y=e" + std::to_string(y) + " z=e" + std::to_string(z) + " yz=" + to_string(yz) +
                               " zy=" + to_string(zy)});
            failed = true;
            break;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Violation> check_pgc(const GradedAlgebra& a) {
  if (!a.typed()) throw MissingTyping("check_pgc needs an even/odd typing");
  std::vector<Violation> out;
  const std::size_t d_max = a.max_degree();
  for (std::size_t j = 1; j <= d_max; ++j) {
    for (std::size_t i = 0; i + j <= d_max; ++i) {
      bool failed = false;
      for (std::size_t z = 0; z < a.dim(j) && !failed; ++z) {
        const int t = a.type_of(j, z);
        for (std::size_t x = 0; x < a.dim(i); ++x) {
          if (!supported_on_type(a, i + j, a.multiply_basis(i, x, j, z), t) ||
              !supported_on_type(a, i + j, a.multiply_basis(j, z, i, x), t)) {
            out.push_back({"typed-ideal", {j, i}, 0,
                           "e" + std::to_string(z) + " times e" + std::to_string(x) + " changes type"});
            failed = true;
            break;
          }
        }
      }
    }
  }
  auto signed_comm = commutation(a, "pgc-commutation", [&](std::size_t i, std::size_t y, std::size_t j, std::size_t z) {
    return (i * j) % 2 == 1 && a.type_of(i, y) && a.type_of(j, z);
  });
  out.insert(out.end(), signed_comm.begin(), signed_comm.end());
  if (out.empty()) {
    const auto perm = check_pgperm(a);
    if (!perm.empty()) {
      out.push_back({"pgc-not-pgperm", {}, 0,
                     std::to_string(perm.size()) + " PGPerm violations, first: " + perm.front().to_string()});
    }
  }
  sort_violations(out);
  return out;
}

std::vector<Violation> check_graded_commutative(const GradedAlgebra& a) {
  auto out = commutation(a, "graded-commutativity",
                         [](std::size_t i, std::size_t, std::size_t j, std::size_t) { return (i * j) % 2 == 1; });
  sort_violations(out);
  return out;
}

std::vector<Violation> check_commutative(const GradedAlgebra& a) {
  auto out = commutation(a, "commutativity", [](std::size_t, std::size_t, std::size_t, std::size_t) { return false; });
  sort_violations(out);
  return out;
}

GradedAlgebra with_typing(const GradedAlgebra& a, Typing typing) {
  AlgebraData d = a.data();
  d.typing = std::move(typing);
  return GradedAlgebra(std::move(d));
}

GradedAlgebra erase_typing(const GradedAlgebra& a) {
  AlgebraData d = a.data();
  d.typing.reset();
  return GradedAlgebra(std::move(d));
}

namespace {

Typing uniform_typing(const GradedAlgebra& a, bool odd) {
  Typing t(a.max_degree() + 1);
  for (std::size_t i = 1; i <= a.max_degree(); ++i) t[i].assign(a.dim(i), odd);
  return t;
}

}  // namespace

GradedAlgebra all_odd_typing(const GradedAlgebra& a) { return with_typing(a, uniform_typing(a, true)); }
GradedAlgebra all_even_typing(const GradedAlgebra& a) { return with_typing(a, uniform_typing(a, false)); }

GradedAlgebra free_gperm(const std::vector<std::size_t>& generator_degrees, std::size_t max_degree,
                         const Field& field) {
  for (auto g : generator_degrees) {
    if (g < 1) throw DimensionMismatch("free_gperm generators need positive degree");
  }
  const std::size_t ngen = generator_degrees.size();
  // Sorted multisets of generator indices by total degree.
  std::vector<std::vector<std::vector<std::size_t>>> monomials(max_degree + 1);
  monomials[0].push_back({});
  std::function<void(std::vector<std::size_t>&, std::size_t, std::size_t)> grow =
      [&](std::vector<std::size_t>& cur, std::size_t start, std::size_t deg) {
        for (std::size_t g = start; g < ngen; ++g) {
          const std::size_t nd = deg + generator_degrees[g];
          if (nd > max_degree) continue;
          cur.push_back(g);
          monomials[nd].push_back(cur);
          grow(cur, g, nd);
          cur.pop_back();
        }
      };
  std::vector<std::size_t> scratch;
  grow(scratch, 0, 0);
  for (auto& ms : monomials) std::sort(ms.begin(), ms.end());

  using Word = std::pair<std::size_t, std::vector<std::size_t>>;
  std::vector<std::vector<Word>> words(max_degree + 1);
  std::vector<std::map<Word, std::size_t>> index(max_degree + 1);
  for (std::size_t d = 1; d <= max_degree; ++d) {
    for (std::size_t g = 0; g < ngen; ++g) {
      if (generator_degrees[g] > d) continue;
      for (const auto& m : monomials[d - generator_degrees[g]]) words[d].push_back({g, m});
    }
    for (std::size_t k = 0; k < words[d].size(); ++k) index[d][words[d][k]] = k;
  }
  AlgebraData data;
  data.field = field;
  data.max_degree = max_degree;
  data.dims.push_back(1);
  for (std::size_t d = 1; d <= max_degree; ++d) data.dims.push_back(words[d].size());
  data.unit = Vector{Scalar::one(field)};
  for (std::size_t i = 0; i <= max_degree; ++i) {
    for (std::size_t j = 0; i + j <= max_degree; ++j) {
      Matrix c(field, data.dims[i + j], data.dims[i] * data.dims[j]);
      for (std::size_t a = 0; a < data.dims[i]; ++a) {
        for (std::size_t b = 0; b < data.dims[j]; ++b) {
          std::size_t row = 0;
          if (i == 0) {
            row = b;
          } else if (j == 0) {
            row = a;
          } else {
            const auto& [g1, m1] = words[i][a];
            const auto& [g2, m2] = words[j][b];
            std::vector<std::size_t> m = m1;
            m.push_back(g2);
            m.insert(m.end(), m2.begin(), m2.end());
            std::sort(m.begin(), m.end());
            row = index[i + j].at({g1, m});
          }
          c(row, a * data.dims[j] + b) = Scalar::one(field);
        }
      }
      data.products.emplace(ProductKey{i, j}, std::move(c));
    }
  }
  return GradedAlgebra(std::move(data));
}

GradedAlgebra veronese_2(const GradedAlgebra& a) {
  const std::size_t d_max = a.max_degree() / 2;
  AlgebraData d;
  d.field = a.field();
  d.max_degree = d_max;
  for (std::size_t k = 0; k <= d_max; ++k) d.dims.push_back(a.dim(2 * k));
  d.unit = a.unit();
  for (std::size_t i = 0; i <= d_max; ++i) {
    for (std::size_t j = 0; i + j <= d_max; ++j) d.products.emplace(ProductKey{i, j}, a.product(2 * i, 2 * j));
  }
  return GradedAlgebra(std::move(d));
}

GradedAlgebra subring_truncation(const GradedAlgebra& a, std::size_t w) {
  const std::size_t d_max = a.max_degree();
  if (w < 1 || w > d_max) throw DimensionMismatch("window w must satisfy 1 <= w <= max_degree");
  const Field& f = a.field();
  auto kept = [&](std::size_t i) { return i >= w; };
  AlgebraData d;
  d.field = f;
  d.max_degree = d_max;
  d.dims.assign(d_max + 1, 0);
  d.dims[0] = 1;
  for (std::size_t i = w; i <= d_max; ++i) d.dims[i] = a.dim(i);
  d.unit = Vector{Scalar::one(f)};
  const Vector& u = a.unit();
  for (std::size_t i = 0; i <= d_max; ++i) {
    for (std::size_t j = 0; i + j <= d_max; ++j) {
      Matrix c(f, d.dims[i + j], d.dims[i] * d.dims[j]);
      if (i == 0 && j == 0) {
        const Vector r = a.multiply(0, u, 0, u);
        for (std::size_t k = 0; k < u.size(); ++k) {
          if (!u[k].is_zero()) {
            c(0, 0) = r[k] / u[k];
            break;
          }
        }
      } else if (i == 0 && kept(j)) {
        for (std::size_t b = 0; b < d.dims[j]; ++b) {
          const Vector r = a.multiply(0, u, j, basis(a, j, b));
          for (std::size_t row = 0; row < r.size(); ++row) c(row, b) = r[row];
        }
      } else if (j == 0 && kept(i)) {
        for (std::size_t x = 0; x < d.dims[i]; ++x) {
          const Vector r = a.multiply(i, basis(a, i, x), 0, u);
          for (std::size_t row = 0; row < r.size(); ++row) c(row, x) = r[row];
        }
      } else if (kept(i) && kept(j)) {
        c = a.product(i, j);
      }
      d.products.emplace(ProductKey{i, j}, std::move(c));
    }
  }
  if (a.typed()) {
    Typing t(d_max + 1);
    for (std::size_t i = w; i <= d_max; ++i) t[i] = (*a.data().typing)[i];
    d.typing = std::move(t);
  }
  return GradedAlgebra(std::move(d));
}

GradedAlgebra change_basis(const GradedAlgebra& a, const std::vector<Matrix>& bases,
                           std::optional<Typing> new_typing) {
  const std::size_t d_max = a.max_degree();
  if (bases.size() != d_max + 1) throw DimensionMismatch("change_basis needs one matrix per degree");
  std::vector<Matrix> inv(d_max + 1);
  for (std::size_t i = 0; i <= d_max; ++i) {
    if (bases[i].rows() != a.dim(i) || bases[i].cols() != a.dim(i)) {
      throw DimensionMismatch("change_basis: matrix for degree " + std::to_string(i) + " has wrong shape");
    }
    inv[i] = inverse(bases[i]);
  }
  AlgebraData d = a.data();
  d.unit = inv[0] * a.unit();
  for (auto& [key, c] : d.products) {
    const auto [i, j] = key;
    c = inv[i + j] * c * kronecker(bases[i], bases[j]);
  }
  d.typing = std::move(new_typing);
  return GradedAlgebra(std::move(d));
}

GradedAlgebra restrict_degree(const GradedAlgebra& a, std::size_t dmax) {
  if (dmax > a.max_degree()) throw DimensionMismatch("restrict_degree: degree out of range");
  AlgebraData d = a.data();
  d.max_degree = dmax;
  d.dims.resize(dmax + 1);
  std::erase_if(d.products, [dmax](const auto& kv) { return kv.first.first + kv.first.second > dmax; });
  if (d.typing) d.typing->resize(dmax + 1);
  return GradedAlgebra(std::move(d));
}

std::vector<std::size_t> hilbert(const GradedAlgebra& a) { return a.dims(); }

GradedSubset zero_subset(const GradedAlgebra& a) {
  GradedSubset s;
  for (std::size_t i = 0; i <= a.max_degree(); ++i) s.parts.push_back(Subspace::zero(a.field(), a.dim(i)));
  return s;
}

GradedSubset full_subset(const GradedAlgebra& a) {
  GradedSubset s;
  for (std::size_t i = 0; i <= a.max_degree(); ++i) s.parts.push_back(Subspace::full(a.field(), a.dim(i)));
  return s;
}

GradedSubset element_subset(const GradedAlgebra& a, const Homogeneous& x) {
  GradedSubset s = zero_subset(a);
  s.parts.at(x.grade) = Subspace::span(a.field(), a.dim(x.grade), {x.coords});
  return s;
}

namespace {

void check_subset(const GradedAlgebra& a, const GradedSubset& s) {
  if (s.parts.size() != a.max_degree() + 1) throw DimensionMismatch("graded subset length differs from max_degree+1");
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    if (s.parts[i].ambient_dim() != a.dim(i)) throw DimensionMismatch("graded subset ambient mismatch");
  }
}

GradedSubset span_all(const GradedAlgebra& a, const std::vector<std::vector<Vector>>& vecs) {
  GradedSubset out;
  for (std::size_t i = 0; i <= a.max_degree(); ++i) out.parts.push_back(Subspace::span(a.field(), a.dim(i), vecs[i]));
  return out;
}

// Column c is e_c * y (right multiplication by y) or y * e_c (left).
Matrix mult_map(const GradedAlgebra& a, std::size_t k, std::size_t j, const Vector& y, bool y_on_left) {
  Matrix m(a.field(), a.dim(k + j), a.dim(k));
  for (std::size_t c = 0; c < a.dim(k); ++c) {
    const Vector v = y_on_left ? a.multiply(j, y, k, basis(a, k, c)) : a.multiply(k, basis(a, k, c), j, y);
    for (std::size_t r = 0; r < v.size(); ++r) m(r, c) = v[r];
  }
  return m;
}

TorsionReport algebra_torsion(const GradedAlgebra& a, std::size_t w, bool left) {
  const std::size_t d_max = a.max_degree();
  if (w < 1 || w > d_max) throw DimensionMismatch("torsion window must satisfy 1 <= w <= max_degree");
  TorsionReport r;
  r.window = w;
  r.max_grade = d_max;
  r.subsets = zero_subset(a);
  r.determined.assign(d_max + 1, false);
  for (std::size_t k = 0; k <= d_max; ++k) {
    Matrix stacked(a.field(), 0, a.dim(k));
    for (std::size_t j = w; j + k <= d_max; ++j) {
      r.determined[k] = true;
      for (std::size_t b = 0; b < a.dim(j); ++b) {
        stacked = Matrix::stack(stacked, mult_map(a, k, j, basis(a, j, b), left));
      }
    }
    r.subsets.parts[k] = r.determined[k] ? kernel(stacked) : Subspace::full(a.field(), a.dim(k));
  }
  return r;
}

}  // namespace

GradedSubset generated_ideal(const GradedAlgebra& a, const GradedSubset& s) {
  check_subset(a, s);
  const std::size_t d_max = a.max_degree();
  GradedSubset cur = s;
  for (;;) {
    std::vector<std::vector<Vector>> vecs(d_max + 1);
    for (std::size_t k = 0; k <= d_max; ++k) vecs[k] = cur.parts[k].basis_vectors();
    for (std::size_t k = 0; k <= d_max; ++k) {
      const auto xs = cur.parts[k].basis_vectors();
      for (std::size_t j = 0; j + k <= d_max; ++j) {
        for (std::size_t b = 0; b < a.dim(j); ++b) {
          const Vector y = basis(a, j, b);
          for (const auto& x : xs) {
            vecs[k + j].push_back(a.multiply(k, x, j, y));
            vecs[k + j].push_back(a.multiply(j, y, k, x));
          }
        }
      }
    }
    GradedSubset next = span_all(a, vecs);
    if (next.dims() == cur.dims()) return cur;
    cur = std::move(next);
  }
}

GradedSubset ideal_product(const GradedAlgebra& a, const GradedSubset& i, const GradedSubset& j) {
  check_subset(a, i);
  check_subset(a, j);
  const std::size_t d_max = a.max_degree();
  std::vector<std::vector<Vector>> vecs(d_max + 1);
  for (std::size_t p = 0; p <= d_max; ++p) {
    const auto xs = i.parts[p].basis_vectors();
    for (std::size_t q = 0; p + q <= d_max; ++q) {
      for (const auto& y : j.parts[q].basis_vectors()) {
        for (const auto& x : xs) vecs[p + q].push_back(a.multiply(p, x, q, y));
      }
    }
  }
  return span_all(a, vecs);
}

GradedSubset commutator_ideal(const GradedAlgebra& a) {
  const std::size_t d_max = a.max_degree();
  std::vector<std::vector<Vector>> vecs(d_max + 1);
  for (std::size_t i = 0; i <= d_max; ++i) {
    for (std::size_t j = 0; i + j <= d_max; ++j) {
      for (std::size_t x = 0; x < a.dim(i); ++x) {
        for (std::size_t y = 0; y < a.dim(j); ++y) {
          vecs[i + j].push_back(a.multiply_basis(i, x, j, y) - a.multiply_basis(j, y, i, x));
        }
      }
    }
  }
  return generated_ideal(a, span_all(a, vecs));
}

TorsionReport left_torsion(const GradedAlgebra& a, std::size_t w) { return algebra_torsion(a, w, true); }
TorsionReport right_torsion(const GradedAlgebra& a, std::size_t w) { return algebra_torsion(a, w, false); }

}  // namespace operadkit
