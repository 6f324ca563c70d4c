#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace operadkit {

/// Runtime field descriptor: the rationals (characteristic 0) or GF(p).
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws DimensionMismatch unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  /// "Q" or "Fp:<p>".
  static Field parse(std::string_view text);

  std::uint32_t characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) : characteristic_(p) {}
  std::uint32_t characteristic_ = 0;
};

/// Exact scalar in Q or GF(p). GF(p) values are kept as integers in [0, p).
///
/// A characteristic-0 scalar with an integral value (or a denominator prime
/// to p) combines with GF(p) scalars by reduction, so default-constructed
/// zeros and small integer literals work in every field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Field& field, long value);
  Scalar(const Field& field, const mpq_class& value);
  /// Parses "a", "-a" or "a/b"; throws ParseError on malformed input.
  static Scalar parse(const Field& field, std::string_view text);

  static Scalar zero(const Field& field) { return Scalar(field, 0L); }
  static Scalar one(const Field& field) { return Scalar(field, 1L); }

  Field field() const;
  const mpq_class& value() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  Scalar inverse() const;
  /// "p/q" (or "p" when integral).
  std::string to_string() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void reduce();
  void adopt(const Scalar& other);

  mpq_class value_{0};
  std::uint32_t modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace operadkit
