#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace graykit {

/// Fixed-length 0/1 word, up to 64 positions.
///
/// Positions are 1-based with position 1 leftmost.  Position 1 is stored in
/// the most significant of the `size()` low bits of the backing word, so for
/// equal lengths the integer order of `value()` is the lexicographic order of
/// the strings.
class Bitstring {
 public:
  static constexpr int kMaxSize = 64;

  constexpr Bitstring() = default;
  constexpr Bitstring(std::uint64_t value, int size) : bits_(value), size_(size) {
    if (size < 0 || size > kMaxSize) throw std::length_error("Bitstring: size out of range");
    bits_ &= mask(size);
  }

  static Bitstring from_string(std::string_view s) {
    if (s.size() > static_cast<std::size_t>(kMaxSize))
      throw std::length_error("Bitstring: string longer than 64");
    std::uint64_t v = 0;
    for (char ch : s) {
      if (ch != '0' && ch != '1') throw std::invalid_argument("Bitstring: expected only 0/1 characters");
      v = (v << 1) | static_cast<std::uint64_t>(ch == '1');
    }
    return Bitstring(v, static_cast<int>(s.size()));
  }

  /// k copies of the given bit.
  static Bitstring repeat(bool bit, int k) { return Bitstring(bit ? mask(k) : 0, k); }

  constexpr int size() const { return size_; }
  constexpr bool empty() const { return size_ == 0; }
  constexpr std::uint64_t value() const { return bits_; }

  /// Number of 1-bits.
  int level() const { return std::popcount(bits_); }

  bool operator[](int pos) const { return (bits_ >> (size_ - pos)) & 1u; }

  Bitstring with_flipped(int pos) const {
    check_pos(pos);
    return Bitstring(bits_ ^ (std::uint64_t{1} << (size_ - pos)), size_);
  }
  Bitstring with_bit(int pos, bool bit) const {
    check_pos(pos);
    const std::uint64_t m = std::uint64_t{1} << (size_ - pos);
    return Bitstring(bit ? (bits_ | m) : (bits_ & ~m), size_);
  }

  /// `len` characters starting at 1-based position `pos`.
  Bitstring substr(int pos, int len) const {
    if (pos < 1 || len < 0 || pos - 1 + len > size_) throw std::out_of_range("Bitstring::substr");
    return Bitstring(bits_ >> (size_ - (pos - 1) - len), len);
  }

  Bitstring& append(bool bit) {
    if (size_ == kMaxSize) throw std::length_error("Bitstring: append overflow");
    bits_ = (bits_ << 1) | static_cast<std::uint64_t>(bit);
    ++size_;
    return *this;
  }
  Bitstring& append(const Bitstring& other) {
    if (size_ + other.size_ > kMaxSize) throw std::length_error("Bitstring: append overflow");
    bits_ = other.size_ == 64 ? other.bits_ : ((bits_ << other.size_) | other.bits_);
    size_ += other.size_;
    return *this;
  }

  std::string str() const {
    std::string s(static_cast<std::size_t>(size_), '0');
    for (int i = 1; i <= size_; ++i)
      if ((*this)[i]) s[static_cast<std::size_t>(i - 1)] = '1';
    return s;
  }

  friend Bitstring operator+(Bitstring a, const Bitstring& b) { return a.append(b); }

  friend constexpr bool operator==(const Bitstring&, const Bitstring&) = default;
  friend constexpr std::strong_ordering operator<=>(const Bitstring& a, const Bitstring& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  static constexpr std::uint64_t mask(int k) {
    return k >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
  }
  void check_pos(int pos) const {
    if (pos < 1 || pos > size_) throw std::out_of_range("Bitstring: position out of range");
  }

  std::uint64_t bits_ = 0;
  int size_ = 0;
};

inline Bitstring operator""_bits(const char* s, std::size_t len) {
  return Bitstring::from_string(std::string_view(s, len));
}

/// Number of positions in which two equal-length words differ.
inline int hamming_distance(const Bitstring& a, const Bitstring& b) {
  if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
  return std::popcount(a.value() ^ b.value());
}

/// 1-based position of the single differing bit, or 0 if the distance is not 1.
inline int flipped_position(const Bitstring& a, const Bitstring& b) {
  const std::uint64_t diff = a.value() ^ b.value();
  if (a.size() != b.size() || std::popcount(diff) != 1) return 0;
  return a.size() - std::countr_zero(diff);
}

}  // namespace graykit

template <>
struct std::hash<graykit::Bitstring> {
  std::size_t operator()(const graykit::Bitstring& b) const noexcept {
    return std::hash<std::uint64_t>{}(b.value() * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(b.size()));
  }
};
