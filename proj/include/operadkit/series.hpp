#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace operadkit {

/// Integer polynomial, ascending powers, no trailing zeros (zero is empty).
using IntPoly = std::vector<mpz_class>;

/// numerator / denominator with denominator(0) = 1 and coprime parts.
struct RationalSeries {
  IntPoly numerator;
  IntPoly denominator;

  /// First `count` power-series coefficients.
  std::vector<mpz_class> expand(std::size_t count) const;
  /// "(1 + t) / (1 - t)"; ascending powers.
  std::string to_string() const;

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;
};

std::string poly_to_string(const IntPoly& p);

/// Smallest denominator degree d <= max_order (then smallest numerator
/// degree) such that the recurrence it encodes holds on every coefficient
/// beyond the numerator, with at least d+4 checked equations. The result is
/// reduced and re-expands to every input coefficient. Throws
/// InsufficientData when coeffs.size() < 2*max_order + 4.
std::optional<RationalSeries> rational_fit(const std::vector<mpz_class>& coeffs, std::size_t max_order);
std::optional<RationalSeries> rational_fit(const std::vector<std::size_t>& coeffs, std::size_t max_order);

/// Order of the pole at t = 1. Cyclotomic factors of order <= 60 are
/// divided out of the denominator; anything left over throws
/// NonPolynomialGrowth.
std::size_t gk_estimate(const RationalSeries& s);

/// Heuristic only: least-squares slope of log(partial sum) against log(n)
/// over the upper half of the data. Returns nullopt with fewer than four
/// positive partial sums.
std::optional<double> gk_heuristic(const std::vector<std::size_t>& coeffs);

}  // namespace operadkit
