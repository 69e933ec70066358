#pragma once

#include <string>

#include <mpfr.h>

#include "gaugedim/rational.hpp"

namespace gaugedim {

// Working precision (bits) for directed-rounding evaluation. Exact rational
// and integer arithmetic never rounds; this only controls how tightly
// irrational quantities (2^x, log2, q^alpha) are enclosed.
int working_precision();
void set_working_precision(int bits);

// Closed interval [lo, hi] of MPFR numbers, all operations rounded outward.
// Every irrational number this project reports travels through one of these,
// so a printed bound is a true bound regardless of precision settings.
class RealInterval {
 public:
  RealInterval();                      // [0, 0]
  RealInterval(const RealInterval& o);
  RealInterval(RealInterval&& o) noexcept;
  RealInterval& operator=(const RealInterval& o);
  RealInterval& operator=(RealInterval&& o) noexcept;
  ~RealInterval();

  static RealInterval zero() { return RealInterval(); }
  static RealInterval from_rational(const Rational& r);
  static RealInterval from_bigint(const BigInt& z);
  static RealInterval from_int(long v);
  // 2^e for rational e (irrational unless e is an integer).
  static RealInterval exp2_of(const Rational& e);
  // log2(z) for integer z >= 1.
  static RealInterval log2_of(const BigInt& z);
  // base^expo for integer base >= 1 and rational expo (any sign).
  static RealInterval power(const BigInt& base, const Rational& expo);

  RealInterval operator+(const RealInterval& o) const;
  RealInterval operator-(const RealInterval& o) const;
  RealInterval operator*(const RealInterval& o) const;
  RealInterval operator/(const RealInterval& o) const;  // o must not straddle 0
  RealInterval& operator+=(const RealInterval& o) { return *this = *this + o; }

  RealInterval scale(const Rational& c) const;  // c * [lo, hi]

  bool definitely_le(const Rational& r) const;  // hi <= r
  bool definitely_ge(const Rational& r) const;  // lo >= r
  bool definitely_lt(const RealInterval& o) const;  // hi < o.lo
  bool definitely_gt(const RealInterval& o) const;  // lo > o.hi
  // -1 if hi < 0, +1 if lo > 0, 0 if the interval straddles or touches zero.
  int sign() const;

  double lo_double() const;
  double hi_double() const;
  // Exact dyadic rationals equal to the stored endpoints.
  Rational lo_rational() const;
  Rational hi_rational() const;
  // Decimal endpoint strings, rounded outward, `digits` significant digits.
  std::string lo_string(int digits = 17) const;
  std::string hi_string(int digits = 17) const;

 private:
  mpfr_t lo_;
  mpfr_t hi_;
  void init();
};

}  // namespace gaugedim
