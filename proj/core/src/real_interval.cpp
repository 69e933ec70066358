#include "gaugedim/real_interval.hpp"

#include <cassert>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace gaugedim {

namespace {
int g_precision = 128;
}

int working_precision() { return g_precision; }

void set_working_precision(int bits) {
  if (bits < 16 || bits > (1 << 22))
    throw std::invalid_argument("working precision out of range [16, 2^22]");
  g_precision = bits;
}

void RealInterval::init() {
  mpfr_init2(lo_, static_cast<mpfr_prec_t>(g_precision));
  mpfr_init2(hi_, static_cast<mpfr_prec_t>(g_precision));
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval() { init(); }

RealInterval::RealInterval(const RealInterval& o) {
  mpfr_init2(lo_, mpfr_get_prec(o.lo_));
  mpfr_init2(hi_, mpfr_get_prec(o.hi_));
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& o) noexcept {
  mpfr_init2(lo_, mpfr_get_prec(o.lo_));
  mpfr_init2(hi_, mpfr_get_prec(o.hi_));
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

RealInterval& RealInterval::operator=(const RealInterval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
    mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

RealInterval& RealInterval::operator=(RealInterval&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  return *this;
}

RealInterval::~RealInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

RealInterval RealInterval::from_rational(const Rational& r) {
  RealInterval v;
  mpfr_set_q(v.lo_, r.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(v.hi_, r.raw().get_mpq_t(), MPFR_RNDU);
  return v;
}

RealInterval RealInterval::from_bigint(const BigInt& z) {
  RealInterval v;
  mpfr_set_z(v.lo_, z.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(v.hi_, z.get_mpz_t(), MPFR_RNDU);
  return v;
}

RealInterval RealInterval::from_int(long x) {
  RealInterval v;
  mpfr_set_si(v.lo_, x, MPFR_RNDD);
  mpfr_set_si(v.hi_, x, MPFR_RNDU);
  return v;
}

RealInterval RealInterval::exp2_of(const Rational& e) {
  RealInterval t = from_rational(e);
  RealInterval v;
  mpfr_exp2(v.lo_, t.lo_, MPFR_RNDD);
  mpfr_exp2(v.hi_, t.hi_, MPFR_RNDU);
  return v;
}

RealInterval RealInterval::log2_of(const BigInt& z) {
  if (z < 1) throw std::domain_error("log2_of: argument must be >= 1");
  RealInterval t = from_bigint(z);
  RealInterval v;
  mpfr_log2(v.lo_, t.lo_, MPFR_RNDD);
  mpfr_log2(v.hi_, t.hi_, MPFR_RNDU);
  return v;
}

RealInterval RealInterval::power(const BigInt& base, const Rational& expo) {
  if (base < 1) throw std::domain_error("power: base must be >= 1");
  if (base == 1) return from_int(1);
  RealInterval lg = log2_of(base);  // >= 0
  RealInterval prod = lg.scale(expo);
  RealInterval v;
  mpfr_exp2(v.lo_, prod.lo_, MPFR_RNDD);
  mpfr_exp2(v.hi_, prod.hi_, MPFR_RNDU);
  return v;
}

RealInterval RealInterval::operator+(const RealInterval& o) const {
  RealInterval v;
  mpfr_add(v.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(v.hi_, hi_, o.hi_, MPFR_RNDU);
  return v;
}

RealInterval RealInterval::operator-(const RealInterval& o) const {
  RealInterval v;
  mpfr_sub(v.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(v.hi_, hi_, o.lo_, MPFR_RNDU);
  return v;
}

RealInterval RealInterval::operator*(const RealInterval& o) const {
  // General interval product: outward min/max of the four corner products.
  RealInterval v;
  mpfr_t c;
  mpfr_init2(c, static_cast<mpfr_prec_t>(g_precision));
  bool first = true;
  const mpfr_srcptr as[2] = {lo_, hi_};
  const mpfr_srcptr bs[2] = {o.lo_, o.hi_};
  for (auto a : as) {
    for (auto b : bs) {
      mpfr_mul(c, a, b, MPFR_RNDD);
      if (first || mpfr_cmp(c, v.lo_) < 0) mpfr_set(v.lo_, c, MPFR_RNDD);
      mpfr_mul(c, a, b, MPFR_RNDU);
      if (first || mpfr_cmp(c, v.hi_) > 0) mpfr_set(v.hi_, c, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(c);
  return v;
}

RealInterval RealInterval::operator/(const RealInterval& o) const {
  if (mpfr_sgn(o.lo_) <= 0 && mpfr_sgn(o.hi_) >= 0)
    throw std::domain_error("RealInterval: division by interval containing 0");
  RealInterval v;
  mpfr_t c;
  mpfr_init2(c, static_cast<mpfr_prec_t>(g_precision));
  bool first = true;
  const mpfr_srcptr as[2] = {lo_, hi_};
  const mpfr_srcptr bs[2] = {o.lo_, o.hi_};
  for (auto a : as) {
    for (auto b : bs) {
      mpfr_div(c, a, b, MPFR_RNDD);
      if (first || mpfr_cmp(c, v.lo_) < 0) mpfr_set(v.lo_, c, MPFR_RNDD);
      mpfr_div(c, a, b, MPFR_RNDU);
      if (first || mpfr_cmp(c, v.hi_) > 0) mpfr_set(v.hi_, c, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(c);
  return v;
}

RealInterval RealInterval::scale(const Rational& c) const {
  return *this * from_rational(c);
}

bool RealInterval::definitely_le(const Rational& r) const {
  return mpfr_cmp_q(hi_, r.raw().get_mpq_t()) <= 0;
}

bool RealInterval::definitely_ge(const Rational& r) const {
  return mpfr_cmp_q(lo_, r.raw().get_mpq_t()) >= 0;
}

bool RealInterval::definitely_lt(const RealInterval& o) const {
  return mpfr_cmp(hi_, o.lo_) < 0;
}

bool RealInterval::definitely_gt(const RealInterval& o) const {
  return mpfr_cmp(lo_, o.hi_) > 0;
}

int RealInterval::sign() const {
  if (mpfr_sgn(hi_) < 0) return -1;
  if (mpfr_sgn(lo_) > 0) return 1;
  return 0;
}

double RealInterval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double RealInterval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

namespace {
Rational mpfr_to_rational(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return Rational(0);
  if (!mpfr_number_p(x)) throw std::domain_error("RealInterval endpoint not finite");
  mpz_class mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
  // value = mant * 2^e
  if (e >= 0) {
    mpz_class shifted = mant << static_cast<unsigned long>(e);
    return Rational(shifted);
  }
  return Rational(mant, pow2(static_cast<unsigned long>(-e)));
}

std::string mpfr_to_string(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
  char buf[256];
  std::string fmt = "%." + std::to_string(digits) + (rnd == MPFR_RNDD ? "RDg" : "RUg");
  mpfr_snprintf(buf, sizeof(buf), fmt.c_str(), x);
  return std::string(buf);
}
}  // namespace

Rational RealInterval::lo_rational() const { return mpfr_to_rational(lo_); }
Rational RealInterval::hi_rational() const { return mpfr_to_rational(hi_); }

std::string RealInterval::lo_string(int digits) const {
  return mpfr_to_string(lo_, digits, MPFR_RNDD);
}
std::string RealInterval::hi_string(int digits) const {
  return mpfr_to_string(hi_, digits, MPFR_RNDU);
}

}  // namespace gaugedim
