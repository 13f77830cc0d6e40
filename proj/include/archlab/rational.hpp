#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "archlab/bignat.hpp"

namespace archlab {

/// Exact rational number in canonical reduced form: denominator positive,
/// gcd(|numerator|, denominator) = 1, and zero is 0/1 with no sign. Because
/// values are always canonical, structural equality is value equality.
class Rational {
 public:
  Rational() : neg_(false), num_(), den_(1) {}

  static Rational from_int(std::int64_t v);
  /// Builds num/den from small integers; den must be nonzero.
  static Rational ratio(std::int64_t num, std::int64_t den);
  static Rational make(bool negative, BigNat num, BigNat den);

  /// Grammar: `[-]digits` or `[-]digits/digits`, denominator nonzero.
  /// Throws MalformedRational or ZeroDenominator.
  static Rational parse(std::string_view text);
  /// Canonical text; integers render without "/1". Round-trips via parse().
  std::string str() const;

  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.is_zero() ? 0 : (neg_ ? -1 : 1); }
  bool negative() const { return neg_; }
  const BigNat& num_magnitude() const { return num_; }
  const BigNat& den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  Rational operator-() const;

  std::strong_ordering operator<=>(const Rational& rhs) const;
  bool operator==(const Rational& rhs) const = default;

 private:
  Rational(bool neg, BigNat num, BigNat den)
      : neg_(neg), num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  bool neg_;
  BigNat num_;
  BigNat den_;
};

}  // namespace archlab
