#pragma once

#include <cstdint>
#include <string>

#include "gaugedim/bitword.hpp"
#include "gaugedim/rational.hpp"

namespace gaugedim {

// Half-open dyadic interval [i * 2^-n, (i+1) * 2^-n) inside [0,1].
struct DyadicInterval {
  BigInt index;        // 0 <= index < 2^depth
  std::int64_t depth;  // n >= 0

  DyadicInterval(BigInt i, std::int64_t n);

  Rational left() const { return Rational(index, pow2(static_cast<unsigned long>(depth))); }
  Rational right() const {
    return Rational(index + 1, pow2(static_cast<unsigned long>(depth)));
  }
  Rational width() const { return Rational(1, pow2(static_cast<unsigned long>(depth))); }

  bool operator==(const DyadicInterval& o) const {
    return index == o.index && depth == o.depth;
  }

  std::string to_string() const;  // "[i*2^-n, (i+1)*2^-n)" rendered as i and n
};

// The binary-expansion map: word w of length n maps to the depth-n dyadic
// interval whose left endpoint is sum over set bits k of 2^-(k+1). Bit
// positions are 0-based, so the image lands in [0,1) and the image of the
// cylinder [w] is exactly this interval.
DyadicInterval pi_map(const BitWord& w);

// Inverse of pi_map: the length-n word of the interval's left endpoint.
BitWord pi_inverse(const DyadicInterval& iv);

}  // namespace gaugedim
