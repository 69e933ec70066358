#pragma once

#include <compare>
#include <optional>
#include <string>

#include "gaugedim/rational.hpp"

namespace gaugedim {

// A nonnegative real stored in the log domain: either exactly zero, or
// 2^(-E) with E an exact rational. Comparison of two values is the reversed
// comparison of their exponents, so gauge values at dyadic scales compare
// exactly without any rounding.
class Log2Value {
 public:
  Log2Value() : exponent_(Rational(0)) {}  // 2^0 = 1
  static Log2Value zero() { return Log2Value(std::nullopt); }
  static Log2Value pow2_neg(Rational exponent) { return Log2Value(std::move(exponent)); }

  bool is_zero() const { return !exponent_.has_value(); }
  // Exponent E of 2^(-E); throws for the exact zero.
  const Rational& exponent() const;

  Log2Value operator*(const Log2Value& o) const;

  std::strong_ordering operator<=>(const Log2Value& o) const;
  bool operator==(const Log2Value& o) const { return (*this <=> o) == 0; }

  std::string to_string() const;  // "0" or "2^-(num/den)"

 private:
  explicit Log2Value(std::optional<Rational> e) : exponent_(std::move(e)) {}
  std::optional<Rational> exponent_;
};

// Three-way compare consistent with the real values; -1, 0, +1.
int log2_compare(const Log2Value& a, const Log2Value& b);

}  // namespace gaugedim
