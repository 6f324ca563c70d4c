#include "operadkit/operad_ideals.hpp"

#include <map>
#include <sstream>

#include "operadkit/errors.hpp"

namespace operadkit {

GradedSubset zero_subset(const TruncatedOperad& p) {
  GradedSubset s;
  for (std::size_t n = 0; n <= p.max_arity(); ++n) s.parts.push_back(Subspace::zero(p.field(), p.dims()[n]));
  return s;
}

GradedSubset full_subset(const TruncatedOperad& p) {
  GradedSubset s;
  for (std::size_t n = 0; n <= p.max_arity(); ++n) s.parts.push_back(Subspace::full(p.field(), p.dims()[n]));
  return s;
}

GradedSubset element_subset(const TruncatedOperad& p, const Homogeneous& x) {
  GradedSubset s = zero_subset(p);
  if (x.grade < 1 || x.grade > p.max_arity()) throw DimensionMismatch("element arity out of range");
  s.parts[x.grade] = Subspace::span(p.field(), p.dim(x.grade), {x.coords});
  return s;
}

Subspace sigma_closure(const TruncatedOperad& p, std::size_t n, const Subspace& s) {
  Subspace cur = s;
  if (n < 2) return cur;
  for (;;) {
    std::vector<Vector> vecs = cur.basis_vectors();
    const std::size_t before = vecs.size();
    for (std::size_t idx = 0; idx < before; ++idx) {
      for (int k = 1; k < static_cast<int>(n); ++k) vecs.push_back(p.action(n, k) * vecs[idx]);
    }
    Subspace next = Subspace::span(p.field(), p.dim(n), vecs);
    if (next.dim() == cur.dim()) return cur;
    cur = std::move(next);
  }
}

bool is_sigma_stable(const TruncatedOperad& p, const GradedSubset& s) {
  for (std::size_t n = 2; n < s.parts.size(); ++n) {
    for (const auto& v : s.parts[n].basis_vectors()) {
      for (int k = 1; k < static_cast<int>(n); ++k) {
        if (!s.parts[n].contains(p.action(n, k) * v)) return false;
      }
    }
  }
  return true;
}

namespace {

void check_subset(const TruncatedOperad& p, const GradedSubset& s) {
  if (s.parts.size() != p.max_arity() + 1) throw DimensionMismatch("graded subset length differs from max_arity+1");
  for (std::size_t n = 0; n < s.parts.size(); ++n) {
    if (s.parts[n].ambient_dim() != p.dims()[n]) throw DimensionMismatch("graded subset ambient mismatch");
  }
}

GradedSubset from_vectors(const TruncatedOperad& p, const std::vector<std::vector<Vector>>& vecs, bool close) {
  GradedSubset out;
  for (std::size_t n = 0; n <= p.max_arity(); ++n) {
    Subspace s = Subspace::span(p.field(), p.dims()[n], vecs[n]);
    out.parts.push_back(close ? sigma_closure(p, n, s) : s);
  }
  return out;
}

// Column c of the result is e_c o_i y for the map P(a) -> P(a+n-1).
Matrix right_multiplier(const TruncatedOperad& p, std::size_t a, std::size_t i, std::size_t n, const Vector& y) {
  Matrix r(p.field(), p.dim(a + n - 1), p.dim(a));
  for (std::size_t c = 0; c < p.dim(a); ++c) {
    const Vector v = p.compose_basis_left(a, c, i, n, y);
    for (std::size_t row = 0; row < v.size(); ++row) r(row, c) = v[row];
  }
  return r;
}

// Column c of the result is y o_i e_c for the map P(k) -> P(m+k-1).
Matrix left_multiplier(const TruncatedOperad& p, std::size_t m, const Vector& y, std::size_t i, std::size_t k) {
  Matrix r(p.field(), p.dim(m + k - 1), p.dim(k));
  for (std::size_t c = 0; c < p.dim(k); ++c) {
    const Vector v = p.compose_basis_right(m, y, i, k, c);
    for (std::size_t row = 0; row < v.size(); ++row) r(row, c) = v[row];
  }
  return r;
}

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  }
  return v;
}

Matrix unflatten(const Field& f, const Vector& v, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
  }
  return m;
}

Subspace kernel_of_stack(const Field& f, std::size_t cols, const std::vector<Matrix>& maps) {
  Matrix stacked(f, 0, cols);
  for (const auto& m : maps) stacked = Matrix::stack(stacked, m);
  return kernel(stacked);
}

}  // namespace

GradedSubset ideal_product(const TruncatedOperad& p, const GradedSubset& i, const GradedSubset& j) {
  check_subset(p, i);
  check_subset(p, j);
  const std::size_t big_n = p.max_arity();
  std::vector<std::vector<Vector>> vecs(big_n + 1);
  for (std::size_t m = 1; m <= big_n; ++m) {
    const auto xs = i.parts[m].basis_vectors();
    if (xs.empty()) continue;
    for (std::size_t n = 1; m + n - 1 <= big_n; ++n) {
      const auto ys = j.parts[n].basis_vectors();
      for (const auto& x : xs) {
        for (const auto& y : ys) {
          for (std::size_t slot = 1; slot <= m; ++slot) vecs[m + n - 1].push_back(p.compose(m, x, slot, n, y));
        }
      }
    }
  }
  return from_vectors(p, vecs, true);
}

GradedSubset bullet_product(const TruncatedOperad& p, const GradedSubset& i, const GradedSubset& j) {
  check_subset(p, i);
  check_subset(p, j);
  const std::size_t big_n = p.max_arity();
  std::vector<std::vector<Vector>> vecs(big_n + 1);
  for (std::size_t m = 1; m <= big_n; ++m) {
    if (i.parts[m].dim() == 0) continue;
    // Spans of partial results, keyed by current arity; slots m..slot+1 are filled.
    std::map<std::size_t, Subspace> level{{m, i.parts[m]}};
    for (std::size_t slot = m; slot >= 1; --slot) {
      std::map<std::size_t, std::vector<Vector>> next;
      for (const auto& [a, sub] : level) {
        for (std::size_t n = 1; a + n - 1 <= big_n; ++n) {
          const auto ys = j.parts[n].basis_vectors();
          for (const auto& v : sub.basis_vectors()) {
            for (const auto& y : ys) next[a + n - 1].push_back(p.compose(a, v, slot, n, y));
          }
        }
      }
      level.clear();
      for (auto& [a, vs] : next) {
        Subspace s = Subspace::span(p.field(), p.dim(a), vs);
        if (s.dim() > 0) level.emplace(a, std::move(s));
      }
    }
    for (const auto& [a, sub] : level) {
      for (auto& v : sub.basis_vectors()) vecs[a].push_back(std::move(v));
    }
  }
  return from_vectors(p, vecs, true);
}

GradedSubset generated_ideal(const TruncatedOperad& p, const GradedSubset& s) {
  check_subset(p, s);
  const std::size_t big_n = p.max_arity();
  GradedSubset cur = s;
  for (std::size_t n = 0; n <= big_n; ++n) cur.parts[n] = sigma_closure(p, n, cur.parts[n]);
  for (;;) {
    std::vector<std::vector<Vector>> vecs(big_n + 1);
    for (std::size_t k = 0; k <= big_n; ++k) vecs[k] = cur.parts[k].basis_vectors();
    for (std::size_t k = 1; k <= big_n; ++k) {
      const auto xs = cur.parts[k].basis_vectors();
      if (xs.empty()) continue;
      for (std::size_t n = 1; k + n - 1 <= big_n; ++n) {
        for (std::size_t b = 0; b < p.dim(n); ++b) {
          const Vector y = unit_vector(p.field(), p.dim(n), b);
          for (const auto& x : xs) {
            for (std::size_t slot = 1; slot <= k; ++slot) vecs[k + n - 1].push_back(p.compose(k, x, slot, n, y));
            for (std::size_t slot = 1; slot <= n; ++slot) vecs[k + n - 1].push_back(p.compose(n, y, slot, k, x));
          }
        }
      }
    }
    GradedSubset next = from_vectors(p, vecs, true);
    if (next.dims() == cur.dims()) return cur;
    cur = std::move(next);
  }
}

std::optional<NonPrimeWitness> find_nonprime_witness(const TruncatedOperad& p) {
  std::vector<std::pair<Homogeneous, GradedSubset>> principal;
  for (std::size_t k = 1; k <= p.max_arity(); ++k) {
    for (std::size_t b = 0; b < p.dim(k); ++b) {
      Homogeneous e{k, unit_vector(p.field(), p.dim(k), b)};
      principal.emplace_back(e, generated_ideal(p, element_subset(p, e)));
    }
  }
  for (const auto& [ei, ii] : principal) {
    for (const auto& [ej, ij] : principal) {
      if (ideal_product(p, ii, ij).is_zero()) return NonPrimeWitness{ei, ej, ii, ij};
    }
  }
  return std::nullopt;
}

namespace {

void check_window(const TruncatedOperad& p, std::size_t w) {
  if (w < 2 || w > p.max_arity()) throw DimensionMismatch("torsion window must satisfy 2 <= w <= max_arity");
}

TorsionReport empty_report(const TruncatedOperad& p, std::size_t w) {
  TorsionReport r;
  r.window = w;
  r.max_grade = p.max_arity();
  r.subsets = zero_subset(p);
  r.determined.assign(p.max_arity() + 1, false);
  return r;
}

}  // namespace

TorsionReport left_torsion(const TruncatedOperad& p, std::size_t w) {
  check_window(p, w);
  const std::size_t big_n = p.max_arity();
  TorsionReport r = empty_report(p, w);
  for (std::size_t k = 1; k <= big_n; ++k) {
    std::vector<Matrix> maps;
    for (std::size_t m = w; m + k - 1 <= big_n; ++m) {
      r.determined[k] = true;
      for (std::size_t b = 0; b < p.dim(m); ++b) {
        const Vector y = unit_vector(p.field(), p.dim(m), b);
        for (std::size_t i = 1; i <= m; ++i) maps.push_back(left_multiplier(p, m, y, i, k));
      }
    }
    r.subsets.parts[k] = r.determined[k] ? kernel_of_stack(p.field(), p.dim(k), maps)
                                         : Subspace::full(p.field(), p.dim(k));
  }
  return r;
}

TorsionReport right_torsion(const TruncatedOperad& p, std::size_t w) {
  check_window(p, w);
  const std::size_t big_n = p.max_arity();
  TorsionReport r = empty_report(p, w);
  for (std::size_t k = 1; k <= big_n; ++k) {
    std::vector<Matrix> maps;
    for (std::size_t n = w; k + n - 1 <= big_n; ++n) {
      r.determined[k] = true;
      for (std::size_t b = 0; b < p.dim(n); ++b) {
        const Vector y = unit_vector(p.field(), p.dim(n), b);
        for (std::size_t i = 1; i <= k; ++i) maps.push_back(right_multiplier(p, k, i, n, y));
      }
    }
    r.subsets.parts[k] = r.determined[k] ? kernel_of_stack(p.field(), p.dim(k), maps)
                                         : Subspace::full(p.field(), p.dim(k));
  }
  return r;
}

TorsionReport bullet_right_torsion(const TruncatedOperad& p, std::size_t w) {
  check_window(p, w);
  const std::size_t big_n = p.max_arity();
  const Field& f = p.field();
  TorsionReport r = empty_report(p, w);
  for (std::size_t k = 1; k <= big_n; ++k) {
    r.determined[k] = k * w <= big_n;
    if (!r.determined[k]) {
      r.subsets.parts[k] = Subspace::full(f, p.dim(k));
      continue;
    }
    // Spans of the maps x -> x o (.., y_{slot+1}, .., y_k), keyed by target arity.
    std::map<std::size_t, Subspace> level{
        {k, Subspace::span(f, p.dim(k) * p.dim(k), {flatten(Matrix::identity(f, p.dim(k)))})}};
    for (std::size_t slot = k; slot >= 1; --slot) {
      std::map<std::size_t, std::vector<Vector>> next;
      for (const auto& [a, sub] : level) {
        for (std::size_t n = w; a + n - 1 <= big_n; ++n) {
          for (std::size_t b = 0; b < p.dim(n); ++b) {
            const Matrix rm = right_multiplier(p, a, slot, n, unit_vector(f, p.dim(n), b));
            for (const auto& flat : sub.basis_vectors()) {
              next[a + n - 1].push_back(flatten(rm * unflatten(f, flat, p.dim(a), p.dim(k))));
            }
          }
        }
      }
      level.clear();
      for (auto& [a, vs] : next) level.emplace(a, Subspace::span(f, p.dim(a) * p.dim(k), vs));
    }
    std::vector<Matrix> maps;
    for (const auto& [a, sub] : level) {
      for (const auto& flat : sub.basis_vectors()) maps.push_back(unflatten(f, flat, p.dim(a), p.dim(k)));
    }
    r.subsets.parts[k] = kernel_of_stack(f, p.dim(k), maps);
  }
  return r;
}

CentralityResult is_central(const TruncatedOperad& p, const Homogeneous& mu) {
  const std::size_t big_n = p.max_arity();
  const std::size_t a = mu.grade;
  if (a < 1 || a > big_n) throw DimensionMismatch("element arity out of range");
  for (std::size_t n = 1; a + n - 1 <= big_n; ++n) {
    for (std::size_t b = 0; b < p.dim(n); ++b) {
      const Vector nu = unit_vector(p.field(), p.dim(n), b);
      for (std::size_t i = 1; i <= a; ++i) {
        const Vector lhs = p.compose(a, mu.coords, i, n, nu);
        for (std::size_t j = 1; j <= n; ++j) {
          if (lhs != p.compose(n, nu, j, a, mu.coords)) {
            std::ostringstream os;
            os << "nu=e" << b << " in arity " << n << ", i=" << i << ", j=" << j;
            return {false, os.str()};
          }
        }
      }
    }
  }
  return {true, {}};
}

CentralSubspace central_subspace(const TruncatedOperad& p, std::size_t a) {
  const std::size_t big_n = p.max_arity();
  if (a < 1 || a > big_n) throw DimensionMismatch("arity out of range");
  std::vector<Matrix> maps;
  for (std::size_t n = 1; a + n - 1 <= big_n; ++n) {
    for (std::size_t b = 0; b < p.dim(n); ++b) {
      const Vector nu = unit_vector(p.field(), p.dim(n), b);
      for (std::size_t i = 1; i <= a; ++i) {
        const Matrix lhs = right_multiplier(p, a, i, n, nu);
        for (std::size_t j = 1; j <= n; ++j) maps.push_back(lhs - left_multiplier(p, n, nu, j, a));
      }
    }
  }
  return {kernel_of_stack(p.field(), p.dim(a), maps), a + 1 <= big_n};
}

std::vector<std::size_t> generator_defect(const TruncatedOperad& p) {
  const std::size_t big_n = p.max_arity();
  std::vector<std::size_t> out(big_n + 1, 0);
  out[1] = p.dim(1);
  for (std::size_t n = 2; n <= big_n; ++n) {
    std::vector<Vector> vecs;
    for (std::size_t m = 2; m < n; ++m) {
      const std::size_t k = n - m + 1;
      for (std::size_t a = 0; a < p.dim(m); ++a) {
        for (std::size_t i = 1; i <= m; ++i) {
          for (std::size_t b = 0; b < p.dim(k); ++b) {
            vecs.push_back(p.composition(m, k, i).column(a * p.dim(k) + b));
          }
        }
      }
    }
    const Subspace s = sigma_closure(p, n, Subspace::span(p.field(), p.dim(n), vecs));
    out[n] = p.dim(n) - s.dim();
  }
  return out;
}

}  // namespace operadkit
