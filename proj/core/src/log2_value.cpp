#include "gaugedim/log2_value.hpp"

#include <stdexcept>

namespace gaugedim {

const Rational& Log2Value::exponent() const {
  if (!exponent_) throw std::domain_error("Log2Value: exact zero has no exponent");
  return *exponent_;
}

Log2Value Log2Value::operator*(const Log2Value& o) const {
  if (is_zero() || o.is_zero()) return zero();
  return pow2_neg(*exponent_ + *o.exponent_);
}

std::strong_ordering Log2Value::operator<=>(const Log2Value& o) const {
  if (is_zero() && o.is_zero()) return std::strong_ordering::equal;
  if (is_zero()) return std::strong_ordering::less;
  if (o.is_zero()) return std::strong_ordering::greater;
  // 2^-a vs 2^-b: larger exponent means smaller value.
  if (*exponent_ < *o.exponent_) return std::strong_ordering::greater;
  if (*exponent_ > *o.exponent_) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string Log2Value::to_string() const {
  if (is_zero()) return "0";
  return "2^-(" + exponent_->to_string() + ")";
}

int log2_compare(const Log2Value& a, const Log2Value& b) {
  auto c = a <=> b;
  if (c < 0) return -1;
  if (c > 0) return 1;
  return 0;
}

}  // namespace gaugedim
