#include "gaugedim/bitword.hpp"

#include <stdexcept>

namespace gaugedim {

BitWord BitWord::prefix(std::size_t n) const {
  if (n > bits_.size()) throw std::out_of_range("BitWord::prefix: length exceeds word");
  return BitWord(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + n));
}

bool BitWord::is_prefix_of(const BitWord& o) const {
  if (size() > o.size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (bits_[i] != o.bits_[i]) return false;
  return true;
}

std::string BitWord::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

BitWord BitWord::from_string(const std::string& s) {
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c == '0') bits.push_back(0);
    else if (c == '1') bits.push_back(1);
    else throw std::invalid_argument("BitWord: invalid character in bit string");
  }
  return BitWord(std::move(bits));
}

}  // namespace gaugedim
