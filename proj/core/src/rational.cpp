#include "gaugedim/rational.hpp"

#include <limits>
#include <stdexcept>

namespace gaugedim {

Rational::Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

BigInt Rational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

std::string Rational::to_string() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(s));
    }
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: malformed rational '" + s + "'");
  }
}

BigInt ceil_mul(const Rational& r, const BigInt& l) {
  if (r.sign() < 0) throw std::invalid_argument("ceil_mul: negative multiplier");
  return ceil_div(r.num() * l, r.den());
}

std::int64_t ceil_mul_i64(const Rational& r, std::int64_t l) {
  return to_i64(ceil_mul(r, BigInt(static_cast<long>(l))));
}

BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

std::int64_t to_i64(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("BigInt does not fit in int64");
  return static_cast<std::int64_t>(v.get_si());
}

}  // namespace gaugedim
