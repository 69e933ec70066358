#include "gaugedim/dyadic_interval.hpp"

#include <stdexcept>

namespace gaugedim {

DyadicInterval::DyadicInterval(BigInt i, std::int64_t n) : index(std::move(i)), depth(n) {
  if (n < 0) throw std::invalid_argument("DyadicInterval: negative depth");
  if (index < 0 || index >= pow2(static_cast<unsigned long>(n)))
    throw std::invalid_argument("DyadicInterval: index out of [0, 2^n)");
}

std::string DyadicInterval::to_string() const {
  return "{i=" + index.get_str() + ", n=" + std::to_string(depth) + "}";
}

DyadicInterval pi_map(const BitWord& w) {
  BigInt i = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    i <<= 1;
    if (w[k]) i += 1;
  }
  return DyadicInterval(i, static_cast<std::int64_t>(w.size()));
}

BitWord pi_inverse(const DyadicInterval& iv) {
  BitWord w;
  for (std::int64_t k = iv.depth - 1; k >= 0; --k) {
    w.push_back(mpz_tstbit(iv.index.get_mpz_t(), static_cast<mp_bitcnt_t>(k)) ? 1 : 0);
  }
  return w;
}

}  // namespace gaugedim
