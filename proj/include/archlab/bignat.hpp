#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace archlab {

/// Arbitrary-precision natural number. Limbs are base 2^32, little-endian,
/// with no trailing zero limbs (zero is the empty limb vector).
class BigNat {
 public:
  BigNat() = default;
  explicit BigNat(std::uint64_t v);

  /// Parses a non-empty string of decimal digits.
  static BigNat from_decimal(std::string_view digits);
  std::string to_decimal() const;

  bool is_zero() const { return limbs_.empty(); }
  bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }
  std::size_t bit_length() const;
  bool bit(std::size_t i) const;

  std::strong_ordering operator<=>(const BigNat& rhs) const;
  bool operator==(const BigNat& rhs) const = default;

  BigNat& operator+=(const BigNat& rhs);
  BigNat& operator-=(const BigNat& rhs);  // requires *this >= rhs
  friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
  friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }
  friend BigNat operator*(const BigNat& a, const BigNat& b);

  BigNat& shift_left(std::size_t bits);
  BigNat& shift_right(std::size_t bits);

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<BigNat, BigNat> divmod(const BigNat& num, const BigNat& den);
  static BigNat gcd(BigNat a, BigNat b);

  /// Value as uint64; requires bit_length() <= 64.
  std::uint64_t to_u64() const;

 private:
  std::vector<std::uint32_t> limbs_;

  void trim();
  void mul_small_add(std::uint32_t mul, std::uint32_t add);
  std::uint32_t divrem_small(std::uint32_t div);
  std::size_t trailing_zero_bits() const;
};

}  // namespace archlab
