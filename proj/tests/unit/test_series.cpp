#include <gtest/gtest.h>

#include <random>

#include "operadkit/algebra.hpp"
#include "operadkit/catalog.hpp"
#include "operadkit/errors.hpp"
#include "operadkit/series.hpp"

namespace operadkit {
namespace {

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

IntPoly add(IntPoly a, const IntPoly& b) {
  a.resize(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

IntPoly one_minus_t_to(std::size_t d) {
  IntPoly p(d + 1, 0);
  p[0] = 1;
  p[d] = -1;
  return p;
}

std::vector<std::size_t> fib_like(std::size_t n) {
  std::vector<std::size_t> c{1, 1};
  while (c.size() < n) c.push_back(c[c.size() - 1] + c[c.size() - 2]);
  return c;
}

TEST(Series, Examples) {
  const auto f = rational_fit(std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 2, 2, 2, 2}, 2);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->to_string(), "(1 + t) / (1 - t)");
  EXPECT_EQ(gk_estimate(*f), 1u);

  const auto g = rational_fit(std::vector<std::size_t>(12, 1), 3);
  ASSERT_TRUE(g);
  EXPECT_EQ(g->numerator, (IntPoly{1}));
  EXPECT_EQ(g->denominator, (IntPoly{1, -1}));

  // 1/(1-t)^2 has coefficients n+1.
  std::vector<std::size_t> lin;
  for (std::size_t n = 0; n < 12; ++n) lin.push_back(n + 1);
  const auto h = rational_fit(lin, 3);
  ASSERT_TRUE(h);
  EXPECT_EQ(h->denominator, (IntPoly{1, -2, 1}));
  EXPECT_EQ(gk_estimate(*h), 2u);
}

TEST(Series, PolynomialDataFitsOverOne) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    std::vector<std::size_t> c(12, 0);
    for (std::size_t k = 0; k <= 3; ++k) c[k] = 1 + rng() % 9;
    const auto f = rational_fit(c, 4);
    ASSERT_TRUE(f);
    EXPECT_EQ(f->denominator, (IntPoly{1}));
    EXPECT_EQ(f->numerator.size(), 4u);
    EXPECT_EQ(gk_estimate(*f), 0u);
  }
}

TEST(Series, ReExpandsEveryCoefficient) {
  for (std::size_t n : {8u, 10u, 14u}) {
    const auto c = fib_like(n);
    const auto f = rational_fit(c, 2);
    ASSERT_TRUE(f);
    const auto e = f->expand(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) EXPECT_EQ(e[k], c[k]);
    EXPECT_THROW(gk_estimate(*f), NonPolynomialGrowth);
  }
  EXPECT_FALSE(rational_fit(fib_like(12), 1));
}

TEST(Series, LateBreakReturnsNone) {
  std::vector<std::size_t> c(10, 1);
  c.back() = 5;
  EXPECT_FALSE(rational_fit(c, 1));
}

TEST(Series, InsufficientData) {
  EXPECT_THROW(rational_fit(std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 2}, 2), InsufficientData);
  EXPECT_NO_THROW(rational_fit(std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 2, 2}, 2));
}

TEST(Series, CyclotomicDenominators) {
  // 1/((1-t)(1-t^3)) grows linearly.
  const IntPoly den = mul(one_minus_t_to(1), one_minus_t_to(3));
  RationalSeries s{{1}, den};
  const auto c = s.expand(20);
  std::vector<mpz_class> coeffs(c.begin(), c.end());
  const auto f = rational_fit(coeffs, 4);
  ASSERT_TRUE(f);
  EXPECT_EQ(mul(f->numerator, den), mul(IntPoly{1}, f->denominator));
  EXPECT_EQ(gk_estimate(*f), 2u);
}

TEST(Series, FreeGPermMatchesClosedForm) {
  for (const auto& degs : std::vector<std::vector<std::size_t>>{{1}, {1, 1}, {1, 2}, {2, 3}, {1, 1, 1}}) {
    IntPoly den{1}, gens;
    for (std::size_t d : degs) {
      den = mul(den, one_minus_t_to(d));
      IntPoly td(d + 1, 0);
      td[d] = 1;
      gens = add(gens, td);
    }
    const IntPoly num = add(den, gens);
    std::size_t order = 0;
    for (std::size_t d : degs) order += d;
    const auto h = hilbert(free_gperm(degs, 2 * order + 8));
    const auto f = rational_fit(h, order);
    ASSERT_TRUE(f);
    // Equal as rational functions.
    EXPECT_EQ(mul(f->numerator, den), mul(num, f->denominator));
    EXPECT_EQ(gk_estimate(*f), degs.size());
  }
}

TEST(Series, ToString) {
  EXPECT_EQ(poly_to_string({1, 0, -3}), "1 - 3t^2");
  EXPECT_EQ(poly_to_string({}), "0");
  EXPECT_EQ((RationalSeries{{1, 0, 1}, {1, -2, 1}}).to_string(), "(1 + t^2) / (1 - 2t + t^2)");
}

TEST(Series, Heuristic) {
  std::vector<std::size_t> c(40, 2);
  c[0] = 1;
  const auto g = gk_heuristic(c);
  ASSERT_TRUE(g);
  EXPECT_NEAR(*g, 1.0, 0.15);
  std::vector<std::size_t> lin;
  for (std::size_t n = 0; n < 40; ++n) lin.push_back(n + 1);
  EXPECT_NEAR(*gk_heuristic(lin), 2.0, 0.3);
  EXPECT_FALSE(gk_heuristic({1, 1}));
}

}  // namespace
}  // namespace operadkit
