#include "operadkit/operad.hpp"

#include <sstream>

#include "operadkit/errors.hpp"

namespace operadkit {

namespace {

std::string arities(std::initializer_list<std::size_t> xs) {
  std::ostringstream os;
  bool first = true;
  for (auto x : xs) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  return os.str();
}

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const Field& field,
                   const std::string& what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw DimensionMismatch(what + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                            ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (m.field() != field) throw FieldMismatch(what + ": field differs from the operad's field");
}

}  // namespace

TruncatedOperad::TruncatedOperad(OperadData data) : data_(std::move(data)) {
  const std::size_t n_max = data_.max_arity;
  if (n_max < 1) throw DimensionMismatch("max_arity must be at least 1");
  if (data_.dims.size() != n_max + 1) throw DimensionMismatch("dims must have max_arity+1 entries");
  if (data_.dims[0] != 0) throw DimensionMismatch("operads are reduced: dim P(0) must be 0");
  if (data_.actions.size() != n_max + 1) data_.actions.resize(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto& acts = data_.actions[n];
    const std::size_t want = n >= 2 ? n - 1 : 0;
    if (acts.empty() && want > 0) {
      acts.assign(want, Matrix::identity(data_.field, data_.dims[n]));
    }
    if (acts.size() != want) {
      throw DimensionMismatch("arity " + std::to_string(n) + ": expected " + std::to_string(want) +
                              " action matrices");
    }
    for (std::size_t k = 0; k < want; ++k) {
      require_shape(acts[k], data_.dims[n], data_.dims[n], data_.field,
                    "action of s_" + std::to_string(k + 1) + " on arity " + std::to_string(n));
    }
  }
  if (data_.identity.size() != data_.dims[1]) throw DimensionMismatch("identity vector must lie in P(1)");
  for (const auto& [key, mat] : data_.compositions) {
    const auto [m, n, i] = key;
    if (m < 1 || n < 1 || i < 1 || i > m || m + n - 1 > n_max) {
      throw DimensionMismatch("composition key (" + arities({m, n, i}) + ") out of range");
    }
    require_shape(mat, data_.dims[m + n - 1], data_.dims[m] * data_.dims[n], data_.field,
                  "composition (" + arities({m, n, i}) + ")");
  }
  for (std::size_t m = 1; m <= n_max; ++m) {
    for (std::size_t n = 1; m + n - 1 <= n_max; ++n) {
      for (std::size_t i = 1; i <= m; ++i) {
        data_.compositions.try_emplace({m, n, i}, data_.field, data_.dims[m + n - 1],
                                       data_.dims[m] * data_.dims[n]);
      }
    }
  }
}

std::size_t TruncatedOperad::dim(std::size_t n) const {
  if (n > data_.max_arity) throw TruncationExceeded("arity " + std::to_string(n) + " above max_arity");
  return data_.dims[n];
}

const Matrix& TruncatedOperad::action(std::size_t n, int k) const {
  if (n > data_.max_arity || k < 1 || static_cast<std::size_t>(k) >= n) {
    throw DimensionMismatch("no generator s_" + std::to_string(k) + " in arity " + std::to_string(n));
  }
  return data_.actions[n][k - 1];
}

void TruncatedOperad::check_composable(std::size_t m, std::size_t i, std::size_t n) const {
  if (m < 1 || n < 1 || i < 1 || i > m) {
    throw DimensionMismatch("invalid partial composition (" + arities({m, n, i}) + ")");
  }
  if (m + n - 1 > data_.max_arity) {
    throw TruncationExceeded("composition of arities " + std::to_string(m) + " and " + std::to_string(n) +
                             " exceeds max_arity " + std::to_string(data_.max_arity));
  }
}

const Matrix& TruncatedOperad::composition(std::size_t m, std::size_t n, std::size_t i) const {
  check_composable(m, i, n);
  return data_.compositions.at({m, n, i});
}

Matrix TruncatedOperad::action_matrix(std::size_t n, const Permutation& p) const {
  if (p.size() != n && !(n <= 1 && p.size() == 1)) {
    throw DimensionMismatch("permutation on " + std::to_string(p.size()) + " letters acting on arity " +
                            std::to_string(n));
  }
  const std::size_t d = dim(n);
  Matrix m = Matrix::identity(data_.field, d);
  // p = s_{k1} ... s_{kr} acts as s_{k1} first.
  for (int k : p.adjacent_word()) m = action(n, k) * m;
  return m;
}

Vector TruncatedOperad::act(std::size_t n, const Vector& v, const Permutation& p) const {
  if (v.size() != dim(n)) throw DimensionMismatch("vector length differs from dim P(n)");
  if (p.size() != n && !(n <= 1 && p.size() == 1)) {
    throw DimensionMismatch("permutation size differs from arity");
  }
  Vector out = v;
  for (int k : p.adjacent_word()) out = action(n, k) * out;
  return out;
}

Vector TruncatedOperad::compose(std::size_t m, const Vector& x, std::size_t i, std::size_t n,
                                const Vector& y) const {
  const Matrix& c = composition(m, n, i);
  const std::size_t dm = data_.dims[m], dn = data_.dims[n];
  if (x.size() != dm || y.size() != dn) throw DimensionMismatch("compose: operand length mismatch");
  Vector out = zero_vector(data_.field, c.rows());
  for (std::size_t a = 0; a < dm; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < dn; ++b) {
      if (y[b].is_zero()) continue;
      const Scalar coef = x[a] * y[b];
      const std::size_t col = a * dn + b;
      for (std::size_t r = 0; r < c.rows(); ++r) {
        if (!c(r, col).is_zero()) out[r] += coef * c(r, col);
      }
    }
  }
  return out;
}

Homogeneous TruncatedOperad::compose_partial(const Homogeneous& x, std::size_t i, const Homogeneous& y) const {
  return {x.grade + y.grade - 1, compose(x.grade, x.coords, i, y.grade, y.coords)};
}

Vector TruncatedOperad::compose_basis_left(std::size_t m, std::size_t a, std::size_t i, std::size_t n,
                                           const Vector& y) const {
  const Matrix& c = composition(m, n, i);
  const std::size_t dn = data_.dims[n];
  Vector out = zero_vector(data_.field, c.rows());
  for (std::size_t b = 0; b < dn; ++b) {
    if (y[b].is_zero()) continue;
    for (std::size_t r = 0; r < c.rows(); ++r) {
      const auto& e = c(r, a * dn + b);
      if (!e.is_zero()) out[r] += y[b] * e;
    }
  }
  return out;
}

Vector TruncatedOperad::compose_basis_right(std::size_t m, const Vector& x, std::size_t i, std::size_t n,
                                            std::size_t b) const {
  const Matrix& c = composition(m, n, i);
  const std::size_t dn = data_.dims[n];
  Vector out = zero_vector(data_.field, c.rows());
  for (std::size_t a = 0; a < data_.dims[m]; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t r = 0; r < c.rows(); ++r) {
      const auto& e = c(r, a * dn + b);
      if (!e.is_zero()) out[r] += x[a] * e;
    }
  }
  return out;
}

namespace {

std::string witness(std::initializer_list<std::pair<const char*, std::size_t>> parts, const Vector& lhs,
                    const Vector& rhs) {
  std::ostringstream os;
  for (const auto& [name, idx] : parts) os << name << "=e" << idx << ' ';
  os << "lhs=" << to_string(lhs) << " rhs=" << to_string(rhs);
  return os.str();
}

void check_coxeter(const TruncatedOperad& p, std::vector<Violation>& out) {
  for (std::size_t n = 2; n <= p.max_arity(); ++n) {
    const std::size_t d = p.dim(n);
    if (d == 0) continue;
    const Matrix id = Matrix::identity(p.field(), d);
    for (int k = 1; k < static_cast<int>(n); ++k) {
      const Matrix& s = p.action(n, k);
      if (!(s * s).is_identity()) {
        out.push_back({"coxeter-square", {n}, static_cast<std::size_t>(k), "rho(s_k)^2 != 1"});
      }
      for (int l = k + 1; l < static_cast<int>(n); ++l) {
        const Matrix& t = p.action(n, l);
        if (l == k + 1) {
          if (s * t * s != t * s * t) {
            out.push_back({"coxeter-braid", {n}, static_cast<std::size_t>(k),
                           "s_k s_{k+1} s_k != s_{k+1} s_k s_{k+1}, k+1=" + std::to_string(l)});
          }
        } else if (s * t != t * s) {
          out.push_back({"coxeter-commute", {n}, static_cast<std::size_t>(k),
                         "s_k and s_" + std::to_string(l) + " do not commute"});
        }
      }
    }
  }
}

void check_identity(const TruncatedOperad& p, std::vector<Violation>& out) {
  const auto& one = p.identity();
  for (std::size_t n = 1; n <= p.max_arity(); ++n) {
    const std::size_t d = p.dim(n);
    for (std::size_t a = 0; a < d; ++a) {
      const Vector e = unit_vector(p.field(), d, a);
      const Vector left = p.compose(1, one, 1, n, e);
      if (left != e) {
        out.push_back({"identity-left", {n}, 1, witness({{"theta", a}}, left, e)});
        break;
      }
    }
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t a = 0; a < d; ++a) {
        const Vector e = unit_vector(p.field(), d, a);
        const Vector right = p.compose_basis_left(n, a, i, 1, one);
        if (right != e) {
          out.push_back({"identity-right", {n}, i, witness({{"theta", a}}, right, e)});
          break;
        }
      }
    }
  }
}

// (lambda o_i mu) o_{i-1+j} nu = lambda o_i (mu o_j nu)
void check_sequential(const TruncatedOperad& p, std::vector<Violation>& out) {
  const std::size_t big_n = p.max_arity();
  for (std::size_t l = 1; l <= big_n; ++l) {
    for (std::size_t m = 1; l + m - 1 <= big_n; ++m) {
      for (std::size_t n = 1; l + m + n - 2 <= big_n; ++n) {
        const std::size_t dl = p.dim(l), dm = p.dim(m), dn = p.dim(n);
        if (dl == 0 || dm == 0 || dn == 0) continue;
        for (std::size_t i = 1; i <= l; ++i) {
          for (std::size_t j = 1; j <= m; ++j) {
            bool failed = false;
            for (std::size_t a = 0; a < dl && !failed; ++a) {
              for (std::size_t b = 0; b < dm && !failed; ++b) {
                const Vector lm = p.composition(l, m, i).column(a * dm + b);
                for (std::size_t c = 0; c < dn; ++c) {
                  const Vector lhs = p.compose_basis_right(l + m - 1, lm, i - 1 + j, n, c);
                  const Vector mn = p.composition(m, n, j).column(b * dn + c);
                  const Vector rhs = p.compose_basis_left(l, a, i, m + n - 1, mn);
                  if (lhs != rhs) {
                    out.push_back({"sequential", {l, m, n}, i,
                                   "j=" + std::to_string(j) + " " +
                                       witness({{"lambda", a}, {"mu", b}, {"nu", c}}, lhs, rhs)});
                    failed = true;
                    break;
                  }
                }
              }
            }
          }
        }
      }
    }
  }
}

// (lambda o_i mu) o_{k-1+m} nu = (lambda o_k nu) o_i mu, i < k
void check_parallel(const TruncatedOperad& p, std::vector<Violation>& out) {
  const std::size_t big_n = p.max_arity();
  for (std::size_t l = 2; l <= big_n; ++l) {
    for (std::size_t m = 1; l + m - 1 <= big_n; ++m) {
      for (std::size_t n = 1; l + m + n - 2 <= big_n; ++n) {
        const std::size_t dl = p.dim(l), dm = p.dim(m), dn = p.dim(n);
        if (dl == 0 || dm == 0 || dn == 0) continue;
        for (std::size_t i = 1; i <= l; ++i) {
          for (std::size_t k = i + 1; k <= l; ++k) {
            bool failed = false;
            for (std::size_t a = 0; a < dl && !failed; ++a) {
              for (std::size_t b = 0; b < dm && !failed; ++b) {
                const Vector lm = p.composition(l, m, i).column(a * dm + b);
                for (std::size_t c = 0; c < dn; ++c) {
                  const Vector lhs = p.compose_basis_right(l + m - 1, lm, k - 1 + m, n, c);
                  const Vector ln = p.composition(l, n, k).column(a * dn + c);
                  const Vector rhs = p.compose_basis_right(l + n - 1, ln, i, m, b);
                  if (lhs != rhs) {
                    out.push_back({"parallel", {l, m, n}, i,
                                   "k=" + std::to_string(k) + " " +
                                       witness({{"lambda", a}, {"mu", b}, {"nu", c}}, lhs, rhs)});
                    failed = true;
                    break;
                  }
                }
              }
            }
          }
        }
      }
    }
  }
}

// mu o_i (nu * s) = (mu o_i nu) * s'
void check_equivariance_inner(const TruncatedOperad& p, std::vector<Violation>& out) {
  const std::size_t big_n = p.max_arity();
  for (std::size_t m = 1; m <= big_n; ++m) {
    for (std::size_t n = 2; m + n - 1 <= big_n; ++n) {
      const std::size_t dm = p.dim(m), dn = p.dim(n);
      if (dm == 0 || dn == 0) continue;
      for (int k = 1; k < static_cast<int>(n); ++k) {
        const Permutation s = Permutation::adjacent(n, k);
        for (std::size_t i = 1; i <= m; ++i) {
          const Matrix after = p.action_matrix(m + n - 1, sigma_prime(m, static_cast<int>(i), s));
          bool failed = false;
          for (std::size_t a = 0; a < dm && !failed; ++a) {
            for (std::size_t b = 0; b < dn; ++b) {
              const Vector nu_s = p.action(n, k).column(b);
              const Vector lhs = p.compose_basis_left(m, a, i, n, nu_s);
              const Vector rhs = after * p.composition(m, n, i).column(a * dn + b);
              if (lhs != rhs) {
                out.push_back({"equivariance-inner", {m, n}, i,
                               "s_" + std::to_string(k) + " " + witness({{"mu", a}, {"nu", b}}, lhs, rhs)});
                failed = true;
                break;
              }
            }
          }
        }
      }
    }
  }
}

// (mu * phi) o_i nu = (mu o_{phi(i)} nu) * phi''
void check_equivariance_outer(const TruncatedOperad& p, std::vector<Violation>& out) {
  const std::size_t big_n = p.max_arity();
  for (std::size_t m = 2; m <= big_n; ++m) {
    for (std::size_t n = 1; m + n - 1 <= big_n; ++n) {
      const std::size_t dm = p.dim(m), dn = p.dim(n);
      if (dm == 0 || dn == 0) continue;
      for (int k = 1; k < static_cast<int>(m); ++k) {
        const Permutation phi = Permutation::adjacent(m, k);
        for (std::size_t i = 1; i <= m; ++i) {
          const std::size_t target = static_cast<std::size_t>(phi(static_cast<int>(i)));
          const Matrix after = p.action_matrix(m + n - 1, phi_doubleprime(phi, static_cast<int>(i), n));
          bool failed = false;
          for (std::size_t a = 0; a < dm && !failed; ++a) {
            const Vector mu_phi = p.action(m, k).column(a);
            for (std::size_t b = 0; b < dn; ++b) {
              const Vector lhs = p.compose_basis_right(m, mu_phi, i, n, b);
              const Vector rhs = after * p.composition(m, n, target).column(a * dn + b);
              if (lhs != rhs) {
                out.push_back({"equivariance-outer", {m, n}, i,
                               "s_" + std::to_string(k) + " " + witness({{"mu", a}, {"nu", b}}, lhs, rhs)});
                failed = true;
                break;
              }
            }
          }
        }
      }
    }
  }
}

}  // namespace

std::vector<Violation> check_axioms(const TruncatedOperad& p) {
  std::vector<Violation> out;
  check_coxeter(p, out);
  check_identity(p, out);
  check_sequential(p, out);
  check_parallel(p, out);
  check_equivariance_inner(p, out);
  check_equivariance_outer(p, out);
  sort_violations(out);
  return out;
}

std::string to_string(ArityClass c) {
  switch (c) {
    case ArityClass::zero: return "zero";
    case ArityClass::sigma_trivial: return "sigma_trivial";
    case ArityClass::sigma_sign: return "sigma_sign";
    case ArityClass::a_trivial_mixed: return "A_trivial_mixed";
    case ArityClass::not_a_trivial: return "not_A_trivial";
  }
  return "?";
}

bool arity_is_sigma_trivial(const TruncatedOperad& p, std::size_t n) {
  for (int k = 1; k < static_cast<int>(n); ++k) {
    if (!p.action(n, k).is_identity()) return false;
  }
  return true;
}

bool arity_is_sigma_sign(const TruncatedOperad& p, std::size_t n) {
  for (int k = 1; k < static_cast<int>(n); ++k) {
    const Matrix& s = p.action(n, k);
    if (!(s + Matrix::identity(p.field(), s.rows())).is_zero()) return false;
  }
  return true;
}

bool arity_is_a_trivial(const TruncatedOperad& p, std::size_t n) {
  // The products s_k s_l generate the alternating group; for involutions
  // rho(s_k) rho(s_l) = 1 iff rho(s_k) = rho(s_l).
  for (int k = 2; k < static_cast<int>(n); ++k) {
    if (p.action(n, k) != p.action(n, 1)) return false;
  }
  return true;
}

SymmetryReport classify_symmetry(const TruncatedOperad& p) {
  const std::size_t big_n = p.max_arity();
  SymmetryReport r;
  r.per_arity.assign(big_n + 1, ArityClass::zero);
  std::vector<bool> triv(big_n + 1, true), sign(big_n + 1, true), alt(big_n + 1, true);
  for (std::size_t n = 1; n <= big_n; ++n) {
    if (p.dim(n) == 0) continue;
    triv[n] = arity_is_sigma_trivial(p, n);
    sign[n] = arity_is_sigma_sign(p, n);
    alt[n] = arity_is_a_trivial(p, n);
    if (triv[n]) {
      r.per_arity[n] = ArityClass::sigma_trivial;
    } else if (sign[n]) {
      r.per_arity[n] = ArityClass::sigma_sign;
    } else if (alt[n]) {
      r.per_arity[n] = ArityClass::a_trivial_mixed;
    } else {
      r.per_arity[n] = ArityClass::not_a_trivial;
    }
  }
  auto all_from = [&](const std::vector<bool>& flags, std::size_t w) {
    for (std::size_t n = w; n <= big_n; ++n) {
      if (!flags[n]) return false;
    }
    return true;
  };
  auto window = [&](const std::vector<bool>& flags) -> std::optional<std::size_t> {
    for (std::size_t w = 2; w <= big_n; ++w) {
      if (all_from(flags, w)) return w;
    }
    return std::nullopt;
  };
  r.sigma_trivial = all_from(triv, 1);
  r.sigma_sign = all_from(sign, 1);
  r.a_trivial = all_from(alt, 1);
  r.almost_sigma_trivial = window(triv);
  r.almost_sigma_sign = window(sign);
  r.almost_a_trivial = window(alt);
  return r;
}

std::pair<Subspace, Subspace> triv_sign_split(const TruncatedOperad& p, std::size_t n) {
  if (n < 2 || n > p.max_arity()) throw DimensionMismatch("triv_sign_split needs 2 <= n <= max_arity");
  if (p.field().characteristic() == 2) throw CharTwo("the triv/sign splitting needs char != 2");
  if (!arity_is_a_trivial(p, n)) throw NotATrivial("arity " + std::to_string(n) + " is not A-trivial");
  const Matrix id = Matrix::identity(p.field(), p.dim(n));
  const Matrix& s = p.action(n, 1);
  return {image(id + s), image(id - s)};
}

TruncatedOperad truncation_suboperad(const TruncatedOperad& p, std::size_t w) {
  const std::size_t big_n = p.max_arity();
  if (w < 2 || w > big_n) throw DimensionMismatch("window w must satisfy 2 <= w <= max_arity");
  const Field& f = p.field();
  // New P(1) is spanned by the identity; kept(n) says whether P(n) survives.
  auto kept = [&](std::size_t n) { return n >= w; };
  OperadData d;
  d.field = f;
  d.max_arity = big_n;
  d.dims.assign(big_n + 1, 0);
  d.dims[1] = 1;
  for (std::size_t n = w; n <= big_n; ++n) d.dims[n] = p.dim(n);
  d.actions.resize(big_n + 1);
  for (std::size_t n = 2; n <= big_n; ++n) {
    for (int k = 1; k < static_cast<int>(n); ++k) {
      d.actions[n].push_back(kept(n) ? p.action(n, k) : Matrix(f, 0, 0));
    }
  }
  d.identity = Vector{Scalar::one(f)};
  for (std::size_t m = 1; m <= big_n; ++m) {
    for (std::size_t n = 1; m + n - 1 <= big_n; ++n) {
      for (std::size_t i = 1; i <= m; ++i) {
        const std::size_t out = m + n - 1;
        Matrix c(f, d.dims[out], d.dims[m] * d.dims[n]);
        if (m == 1 && n == 1) {
          // 1 o_1 1 in the basis {1}: read off at the first nonzero entry of 1.
          const Vector& u = p.identity();
          const Vector r = p.compose(1, u, 1, 1, u);
          for (std::size_t k = 0; k < u.size(); ++k) {
            if (!u[k].is_zero()) {
              c(0, 0) = r[k] / u[k];
              break;
            }
          }
        } else if (m == 1 && kept(n)) {
          for (std::size_t b = 0; b < d.dims[n]; ++b) {
            const Vector r = p.compose(1, p.identity(), 1, n, unit_vector(f, p.dim(n), b));
            for (std::size_t row = 0; row < d.dims[out]; ++row) c(row, b) = r[row];
          }
        } else if (n == 1 && kept(m)) {
          for (std::size_t a = 0; a < d.dims[m]; ++a) {
            const Vector r = p.compose_basis_left(m, a, i, 1, p.identity());
            for (std::size_t row = 0; row < d.dims[out]; ++row) c(row, a) = r[row];
          }
        } else if (kept(m) && kept(n)) {
          c = p.composition(m, n, i);
        }
        d.compositions.emplace(CompositionKey{m, n, i}, std::move(c));
      }
    }
  }
  return TruncatedOperad(std::move(d));
}

TruncatedOperad change_basis(const TruncatedOperad& p, const std::vector<Matrix>& bases) {
  const std::size_t big_n = p.max_arity();
  if (bases.size() != big_n + 1) throw DimensionMismatch("change_basis needs one matrix per arity");
  std::vector<Matrix> inv(big_n + 1);
  for (std::size_t n = 1; n <= big_n; ++n) {
    if (bases[n].rows() != p.dim(n) || bases[n].cols() != p.dim(n)) {
      throw DimensionMismatch("change_basis: matrix for arity " + std::to_string(n) + " has wrong shape");
    }
    inv[n] = inverse(bases[n]);
  }
  OperadData d = p.data();
  for (std::size_t n = 2; n <= big_n; ++n) {
    for (auto& s : d.actions[n]) s = inv[n] * s * bases[n];
  }
  d.identity = inv[1] * p.identity();
  for (auto& [key, c] : d.compositions) {
    const auto [m, n, i] = key;
    c = inv[m + n - 1] * c * kronecker(bases[m], bases[n]);
  }
  return TruncatedOperad(std::move(d));
}

TruncatedOperad restrict_arity(const TruncatedOperad& p, std::size_t n) {
  if (n < 1 || n > p.max_arity()) throw DimensionMismatch("restrict_arity: arity out of range");
  OperadData d = p.data();
  d.max_arity = n;
  d.dims.resize(n + 1);
  d.actions.resize(n + 1);
  std::erase_if(d.compositions, [n](const auto& kv) {
    const auto [a, b, i] = kv.first;
    return a + b - 1 > n;
  });
  return TruncatedOperad(std::move(d));
}

std::vector<std::size_t> hilbert(const TruncatedOperad& p) { return p.dims(); }

}  // namespace operadkit
