#include "operadkit/series.hpp"

#include <cmath>
#include <sstream>

#include "operadkit/errors.hpp"
#include "operadkit/linalg.hpp"

namespace operadkit {

namespace {

using QPoly = std::vector<mpq_class>;

template <class P>
void trim(P& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Long division over Q; divisor nonzero.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const mpq_class c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= c * b[k];
    trim(a);
  }
  trim(q);
  return {q, a};
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Exact division of integer polynomials by a monic divisor; nullopt when
// the remainder is nonzero.
std::optional<IntPoly> divide_exact(IntPoly a, const IntPoly& monic) {
  trim(a);
  if (a.size() < monic.size()) return std::nullopt;
  IntPoly q(a.size() - monic.size() + 1);
  while (a.size() >= monic.size()) {
    const std::size_t shift = a.size() - monic.size();
    const mpz_class c = a.back();
    q[shift] = c;
    for (std::size_t k = 0; k < monic.size(); ++k) a[shift + k] -= c * monic[k];
    trim(a);
  }
  if (!a.empty()) return std::nullopt;
  trim(q);
  return q;
}

std::vector<IntPoly> cyclotomic_polynomials(std::size_t max_k) {
  std::vector<IntPoly> phi(max_k + 1);
  for (std::size_t k = 1; k <= max_k; ++k) {
    IntPoly p(k + 1);
    p[0] = -1;
    p[k] = 1;
    for (std::size_t d = 1; d < k; ++d) {
      if (k % d == 0) p = *divide_exact(p, phi[d]);
    }
    phi[k] = p;
  }
  return phi;
}

std::size_t strip(IntPoly& p, const IntPoly& factor) {
  std::size_t count = 0;
  for (;;) {
    auto q = divide_exact(p, factor);
    if (!q) return count;
    p = std::move(*q);
    ++count;
  }
}

constexpr std::size_t kMaxCyclotomic = 60;

}  // namespace

std::vector<mpz_class> RationalSeries::expand(std::size_t count) const {
  std::vector<mpz_class> out(count);
  for (std::size_t n = 0; n < count; ++n) {
    mpz_class v = n < numerator.size() ? numerator[n] : mpz_class(0);
    for (std::size_t k = 1; k < denominator.size() && k <= n; ++k) v -= denominator[k] * out[n - k];
    out[n] = v;
  }
  return out;
}

std::string poly_to_string(const IntPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (sgn(p[k]) == 0) continue;
    mpz_class mag = abs(p[k]);
    if (first) {
      if (sgn(p[k]) < 0) os << "-";
    } else {
      os << (sgn(p[k]) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << "t";
    if (k >= 2) os << "^" << k;
  }
  if (first) os << "0";
  return os.str();
}

std::string RationalSeries::to_string() const {
  return "(" + poly_to_string(numerator) + ") / (" + poly_to_string(denominator) + ")";
}

std::optional<RationalSeries> rational_fit(const std::vector<mpz_class>& coeffs, std::size_t max_order) {
  const std::size_t len = coeffs.size();
  if (len < 2 * max_order + 4) {
    throw InsufficientData("rational_fit needs at least " + std::to_string(2 * max_order + 4) + " coefficients, got " +
                           std::to_string(len));
  }
  const Field q = Field::rationals();
  for (std::size_t d = 0; d <= max_order; ++d) {
    for (std::size_t e = 0; e + d + 5 <= len; ++e) {
      // Equations n = e+1..len-1: sum_{k=1..d} q_k a_{n-k} = -a_n.
      const std::size_t rows = len - 1 - e;
      Matrix m(q, rows, d);
      Vector rhs(rows);
      for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t n = e + 1 + r;
        rhs[r] = Scalar(q, mpq_class(-coeffs[n]));
        for (std::size_t k = 1; k <= d; ++k) {
          if (k <= n) m(r, k - 1) = Scalar(q, mpq_class(coeffs[n - k]));
        }
      }
      std::optional<Vector> sol;
      if (d == 0) {
        if (is_zero(rhs)) sol = Vector{};
      } else {
        sol = solve(m, rhs);
      }
      if (!sol) continue;
      QPoly den{mpq_class(1)};
      for (std::size_t k = 0; k < d; ++k) den.push_back((*sol)[k].value());
      QPoly num(e + 1);
      for (std::size_t n = 0; n <= e; ++n) {
        for (std::size_t k = 0; k <= d && k <= n; ++k) num[n] += den[k] * coeffs[n - k];
      }
      trim(num);
      trim(den);
      const QPoly g = gcd(num.empty() ? den : num, den);
      if (!num.empty()) num = divmod(num, g).first;
      den = divmod(den, g).first;
      const mpq_class lead = den[0];
      RationalSeries s;
      bool integral = true;
      for (auto& c : num) {
        c /= lead;
        if (c.get_den() != 1) integral = false;
        s.numerator.push_back(c.get_num());
      }
      for (auto& c : den) {
        c /= lead;
        if (c.get_den() != 1) integral = false;
        s.denominator.push_back(c.get_num());
      }
      if (!integral) continue;
      if (s.expand(len) != coeffs) continue;
      return s;
    }
  }
  return std::nullopt;
}

std::optional<RationalSeries> rational_fit(const std::vector<std::size_t>& coeffs, std::size_t max_order) {
  std::vector<mpz_class> z;
  z.reserve(coeffs.size());
  for (auto c : coeffs) z.emplace_back(static_cast<unsigned long>(c));
  return rational_fit(z, max_order);
}

std::size_t gk_estimate(const RationalSeries& s) {
  static const std::vector<IntPoly> phi = cyclotomic_polynomials(kMaxCyclotomic);
  IntPoly den = s.denominator;
  IntPoly num = s.numerator;
  trim(den);
  trim(num);
  const std::size_t pole = strip(den, phi[1]);
  for (std::size_t k = 2; k <= kMaxCyclotomic; ++k) strip(den, phi[k]);
  if (den.size() != 1 || abs(den[0]) != 1) {
    throw NonPolynomialGrowth("denominator " + poly_to_string(s.denominator) +
                              " has a factor that is not cyclotomic of order <= 60");
  }
  const std::size_t zero = num.empty() ? pole : strip(num, phi[1]);
  return pole > zero ? pole - zero : 0;
}

std::optional<double> gk_heuristic(const std::vector<std::size_t>& coeffs) {
  std::vector<double> xs, ys;
  double partial = 0;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    partial += static_cast<double>(coeffs[n]);
    if (n >= coeffs.size() / 2 && n >= 1 && partial > 0) {
      xs.push_back(std::log(static_cast<double>(n)));
      ys.push_back(std::log(partial));
    }
  }
  if (xs.size() < 4) return std::nullopt;
  double mx = 0, my = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    mx += xs[k];
    my += ys[k];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxy = 0, sxx = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sxy += (xs[k] - mx) * (ys[k] - my);
    sxx += (xs[k] - mx) * (xs[k] - mx);
  }
  if (sxx == 0) return std::nullopt;
  return sxy / sxx;
}

}  // namespace operadkit
