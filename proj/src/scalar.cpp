#include "operadkit/scalar.hpp"

#include <charconv>

#include "operadkit/errors.hpp"

namespace operadkit {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) {
    throw DimensionMismatch("field characteristic " + std::to_string(p) + " is not a supported prime");
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.starts_with("Fp:")) {
    std::uint32_t p = 0;
    const auto rest = text.substr(3);
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
    if (ec == std::errc() && ptr == rest.data() + rest.size()) {
      try {
        return prime(p);
      } catch (const DimensionMismatch& e) {
        throw ParseError("field", e.what());
      }
    }
  }
  throw ParseError("field", "expected \"Q\" or \"Fp:<prime>\", got \"" + std::string(text) + "\"");
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(characteristic_);
}

Scalar::Scalar(const Field& field, long value) : value_(value), modulus_(field.characteristic()) {
  reduce();
}

Scalar::Scalar(const Field& field, const mpq_class& value)
    : value_(value), modulus_(field.characteristic()) {
  reduce();
}

Scalar Scalar::parse(const Field& field, std::string_view text) {
  mpq_class q;
  const std::string s(text);
  bool ok = !s.empty() && s.find_first_not_of("-+/0123456789") == std::string::npos &&
            q.set_str(s, 10) == 0;
  if (ok) {
    if (q.get_den() == 0) ok = false;
  }
  if (!ok) throw ParseError("scalar", "malformed scalar \"" + s + "\"");
  q.canonicalize();
  return Scalar(field, q);
}

Field Scalar::field() const {
  return Field(modulus_);
}

void Scalar::reduce() {
  if (modulus_ == 0) return;
  const mpz_class p(modulus_);
  mpz_class den = value_.get_den();
  mpz_class num = value_.get_num();
  if (den != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) {
      throw FieldMismatch("denominator not invertible in Fp:" + std::to_string(modulus_));
    }
    num *= inv;
  }
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  value_ = mpq_class(r);
}

void Scalar::adopt(const Scalar& other) {
  if (modulus_ == other.modulus_) return;
  if (modulus_ == 0) {
    modulus_ = other.modulus_;
    reduce();
    return;
  }
  if (other.modulus_ != 0) {
    throw FieldMismatch("combining scalars from Fp:" + std::to_string(modulus_) + " and Fp:" +
                        std::to_string(other.modulus_));
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  adopt(o);
  if (o.modulus_ == modulus_) {
    value_ += o.value_;
  } else {
    Scalar tmp = o;
    tmp.adopt(*this);
    value_ += tmp.value_;
  }
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  adopt(o);
  if (o.modulus_ == modulus_) {
    value_ *= o.value_;
  } else {
    Scalar tmp = o;
    tmp.adopt(*this);
    value_ *= tmp.value_;
  }
  reduce();
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.value_ = -r.value_;
  r.reduce();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  Scalar r = *this;
  if (modulus_ == 0) {
    r.value_ = 1 / value_;
    return r;
  }
  mpz_class inv;
  const mpz_class p(modulus_);
  mpz_class v = value_.get_num();
  mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  r.value_ = mpq_class(inv);
  return r;
}

std::string Scalar::to_string() const { return value_.get_str(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ == b.modulus_) return a.value_ == b.value_;
  Scalar x = a;
  x.adopt(b);
  Scalar y = b;
  y.adopt(x);
  return x.value_ == y.value_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace operadkit
