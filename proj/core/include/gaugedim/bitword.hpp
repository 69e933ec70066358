#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gaugedim {

// Finite word over {0,1}. Bit positions are 0-based from the left.
class BitWord {
 public:
  BitWord() = default;
  explicit BitWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  void push_back(std::uint8_t b) { bits_.push_back(b ? 1 : 0); }
  void set(std::size_t i, std::uint8_t b) { bits_[i] = b ? 1 : 0; }

  BitWord prefix(std::size_t n) const;
  bool is_prefix_of(const BitWord& o) const;

  // ASCII string of '0'/'1'. from_string rejects any other character.
  std::string to_string() const;
  static BitWord from_string(const std::string& s);

  bool operator==(const BitWord& o) const { return bits_ == o.bits_; }

  const std::vector<std::uint8_t>& bits() const { return bits_; }

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace gaugedim
