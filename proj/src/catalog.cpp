#include "operadkit/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "operadkit/errors.hpp"
#include "operadkit/functors.hpp"

namespace operadkit {

namespace {

// Operad with dims 0/1 whose compositions send basis (x) basis to basis.
TruncatedOperad one_dimensional(std::size_t max_arity, const Field& field, const std::function<bool(std::size_t)>& live,
                                const Scalar& generator_sign) {
  if (max_arity < 1) throw DimensionMismatch("max_arity must be at least 1");
  OperadData d;
  d.field = field;
  d.max_arity = max_arity;
  d.dims.push_back(0);
  for (std::size_t n = 1; n <= max_arity; ++n) d.dims.push_back(live(n) ? 1 : 0);
  d.identity = Vector{Scalar::one(field)};
  d.actions.resize(max_arity + 1);
  for (std::size_t n = 2; n <= max_arity; ++n) {
    Matrix s(field, d.dims[n], d.dims[n]);
    if (d.dims[n] == 1) s(0, 0) = generator_sign;
    d.actions[n].assign(n - 1, s);
  }
  for (std::size_t m = 1; m <= max_arity; ++m) {
    for (std::size_t n = 1; m + n - 1 <= max_arity; ++n) {
      for (std::size_t i = 1; i <= m; ++i) {
        Matrix c(field, d.dims[m + n - 1], d.dims[m] * d.dims[n]);
        if (c.rows() == 1 && c.cols() == 1) c(0, 0) = Scalar::one(field);
        d.compositions.emplace(CompositionKey{m, n, i}, std::move(c));
      }
    }
  }
  return TruncatedOperad(std::move(d));
}

// Structure constants from a basis-level rule: rule(i, a, j, b) returns
// (row, coefficient) or nothing for a zero product.
using ProductRule =
    std::function<std::optional<std::pair<std::size_t, Scalar>>(std::size_t, std::size_t, std::size_t, std::size_t)>;

AlgebraData from_rule(const Field& field, std::size_t max_degree, std::vector<std::size_t> dims, const ProductRule& rule) {
  AlgebraData d;
  d.field = field;
  d.max_degree = max_degree;
  d.dims = std::move(dims);
  d.unit = Vector{Scalar::one(field)};
  for (std::size_t i = 0; i <= max_degree; ++i) {
    for (std::size_t j = 0; i + j <= max_degree; ++j) {
      Matrix c(field, d.dims[i + j], d.dims[i] * d.dims[j]);
      for (std::size_t a = 0; a < d.dims[i]; ++a) {
        for (std::size_t b = 0; b < d.dims[j]; ++b) {
          if (auto hit = rule(i, a, j, b)) c(hit->first, a * d.dims[j] + b) = hit->second;
        }
      }
      d.products.emplace(ProductKey{i, j}, std::move(c));
    }
  }
  return d;
}

}  // namespace

TruncatedOperad build_com(std::size_t max_arity, const Field& field) {
  return one_dimensional(max_arity, field, [](std::size_t) { return true; }, Scalar::one(field));
}

TruncatedOperad build_ope(std::size_t max_arity, const Field& field) {
  return one_dimensional(max_arity, field, [](std::size_t n) { return n % 2 == 1; }, -Scalar::one(field));
}

GradedAlgebra build_massey_algebra(std::size_t a, std::size_t b, std::size_t max_degree, const Field& field) {
  if (a + b < 1) throw DimensionMismatch("massey algebra needs a + b >= 1");
  using Mono = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;
  std::vector<std::vector<Mono>> basis(max_degree + 1);
  std::vector<std::size_t> alpha(b, 0);
  std::function<void(std::size_t, std::size_t, const std::vector<std::size_t>&)> fill_alpha =
      [&](std::size_t pos, std::size_t left, const std::vector<std::size_t>& s) {
        if (pos + 1 >= b) {
          if (b > 0) alpha[b - 1] = left;
          const std::size_t deg = s.size() + 2 * std::accumulate(alpha.begin(), alpha.end(), std::size_t{0});
          basis[deg].push_back({s, alpha});
          return;
        }
        for (std::size_t e = 0; e <= left; ++e) {
          alpha[pos] = e;
          fill_alpha(pos + 1, left - e, s);
        }
      };
  for (std::size_t mask = 0; mask < (std::size_t{1} << a); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < a; ++k) {
      if (mask >> k & 1) s.push_back(k);
    }
    if (s.size() > max_degree) continue;
    for (std::size_t half = 0; s.size() + 2 * half <= max_degree; ++half) {
      if (b == 0 && half > 0) break;
      fill_alpha(0, half, s);
    }
  }
  std::vector<std::size_t> dims;
  std::vector<std::map<Mono, std::size_t>> index(max_degree + 1);
  for (std::size_t k = 0; k <= max_degree; ++k) {
    std::sort(basis[k].begin(), basis[k].end());
    for (std::size_t r = 0; r < basis[k].size(); ++r) index[k][basis[k][r]] = r;
    dims.push_back(basis[k].size());
  }
  const ProductRule rule = [&](std::size_t i, std::size_t p, std::size_t j,
                               std::size_t q) -> std::optional<std::pair<std::size_t, Scalar>> {
    const auto& [s, al] = basis[i][p];
    const auto& [t, be] = basis[j][q];
    std::size_t inversions = 0;
    for (auto x : s) {
      for (auto y : t) {
        if (x == y) return std::nullopt;
        if (x > y) ++inversions;
      }
    }
    std::vector<std::size_t> u = s;
    u.insert(u.end(), t.begin(), t.end());
    std::sort(u.begin(), u.end());
    std::vector<std::size_t> ga(b);
    for (std::size_t k = 0; k < b; ++k) ga[k] = al[k] + be[k];
    return std::pair{index[i + j].at({u, ga}), Scalar(field, inversions % 2 == 0 ? 1L : -1L)};
  };
  return all_odd_typing(GradedAlgebra(from_rule(field, max_degree, dims, rule)));
}

TruncatedOperad build_massey_operad(std::size_t a, std::size_t b, std::size_t max_arity, const Field& field) {
  if (max_arity < 1) throw DimensionMismatch("max_arity must be at least 1");
  return g_sigma_sign(build_massey_algebra(a, b, max_arity - 1, field));
}

GradedAlgebra build_ex63_algebra(std::size_t max_degree, const Field& field) {
  std::vector<std::size_t> dims{1};
  for (std::size_t i = 1; i <= max_degree; ++i) dims.push_back(i + 1);
  const ProductRule rule = [&](std::size_t i, std::size_t s, std::size_t j,
                               std::size_t t) -> std::optional<std::pair<std::size_t, Scalar>> {
    if (i == 0) return std::pair{t, Scalar::one(field)};
    if (j == 0) return std::pair{s, Scalar::one(field)};
    if (s != 0) return std::nullopt;
    return std::pair{t, Scalar::one(field)};
  };
  return GradedAlgebra(from_rule(field, max_degree, dims, rule));
}

Homogeneous ex63_element(const GradedAlgebra& a, std::size_t i, std::size_t s) {
  if (i < 1 || s < 1 || s > i + 1) throw DimensionMismatch("x_{i,s} needs i >= 1 and 1 <= s <= i+1");
  return {i, unit_vector(a.field(), a.dim(i), s - 1)};
}

GradedAlgebra build_ex64_algebra(std::size_t max_degree, const Field& field) {
  std::vector<std::size_t> dims{1};
  for (std::size_t i = 1; i <= max_degree; ++i) dims.push_back(2);
  // Index 0 is x^k, index 1 is y x^{k-1}.
  const ProductRule rule = [&](std::size_t i, std::size_t p, std::size_t j,
                               std::size_t q) -> std::optional<std::pair<std::size_t, Scalar>> {
    if (i == 0) return std::pair{q, Scalar::one(field)};
    if (j == 0) return std::pair{p, Scalar::one(field)};
    if (q == 1) return std::nullopt;
    return std::pair{p, Scalar::one(field)};
  };
  return GradedAlgebra(from_rule(field, max_degree, dims, rule));
}

TruncatedOperad build_ex64_operad(std::size_t max_arity, const Field& field) {
  if (max_arity < 1) throw DimensionMismatch("max_arity must be at least 1");
  return g_sigma_triv(build_ex64_algebra(max_arity - 1, field));
}

GradedAlgebra build_polynomial(std::size_t generator_degree, std::size_t max_degree, PolyTyping typing,
                               const Field& field) {
  if (generator_degree < 1) throw DimensionMismatch("generator degree must be positive");
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i <= max_degree; ++i) dims.push_back(i % generator_degree == 0 ? 1 : 0);
  const ProductRule rule = [&](std::size_t, std::size_t, std::size_t,
                               std::size_t) -> std::optional<std::pair<std::size_t, Scalar>> {
    return std::pair{std::size_t{0}, Scalar::one(field)};
  };
  GradedAlgebra a(from_rule(field, max_degree, dims, rule));
  switch (typing) {
    case PolyTyping::even:
      return all_even_typing(a);
    case PolyTyping::odd:
      return all_odd_typing(a);
    case PolyTyping::none:
      break;
  }
  return a;
}

}  // namespace operadkit
