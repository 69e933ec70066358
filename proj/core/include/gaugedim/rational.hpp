#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace gaugedim {

using BigInt = mpz_class;

// Exact rational, always stored normalized (gcd(num, den) = 1, den > 0).
// Backed by GMP's mpq; this wrapper pins the normalization invariant and the
// "num/den" wire format used throughout the tool.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: deliberate implicit from integer
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  const BigInt num() const { return v_.get_num(); }
  const BigInt den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  BigInt floor() const;
  BigInt ceil() const;

  // Serializes as "num/den", denominator always explicit ("1/1", "-3/4").
  std::string to_string() const;
  // Parses "num/den" or a bare integer "num". Throws std::invalid_argument.
  static Rational from_string(const std::string& s);

  double to_double() const { return v_.get_d(); }

 private:
  mpq_class v_;
};

// Exact ceil(r * l) for r >= 0 and integer l >= 0.
BigInt ceil_mul(const Rational& r, const BigInt& l);
std::int64_t ceil_mul_i64(const Rational& r, std::int64_t l);

// Exact floor(x) helpers for raw integers.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt pow2(unsigned long e);
std::int64_t to_i64(const BigInt& v);

}  // namespace gaugedim
