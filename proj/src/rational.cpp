#include "archlab/rational.hpp"

#include "archlab/errors.hpp"

namespace archlab {

void Rational::normalize() {
  if (num_.is_zero()) {
    neg_ = false;
    den_ = BigNat(1);
    return;
  }
  BigNat g = BigNat::gcd(num_, den_);
  if (g != BigNat(1)) {
    num_ = BigNat::divmod(num_, g).first;
    den_ = BigNat::divmod(den_, g).first;
  }
}

Rational Rational::from_int(std::int64_t v) {
  bool neg = v < 0;
  std::uint64_t mag = neg ? 0ull - static_cast<std::uint64_t>(v)
                          : static_cast<std::uint64_t>(v);
  return Rational(neg, BigNat(mag), BigNat(1));
}

Rational Rational::ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ZeroDenominator(std::to_string(num) + "/0");
  bool neg = (num < 0) != (den < 0);
  std::uint64_t nmag = num < 0 ? 0ull - static_cast<std::uint64_t>(num)
                               : static_cast<std::uint64_t>(num);
  std::uint64_t dmag = den < 0 ? 0ull - static_cast<std::uint64_t>(den)
                               : static_cast<std::uint64_t>(den);
  return make(neg, BigNat(nmag), BigNat(dmag));
}

Rational Rational::make(bool negative, BigNat num, BigNat den) {
  if (den.is_zero()) throw ZeroDenominator(num.to_decimal() + "/0");
  Rational r(negative, std::move(num), std::move(den));
  r.normalize();
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::string_view rest = text;
  bool neg = false;
  if (!rest.empty() && rest.front() == '-') {
    neg = true;
    rest.remove_prefix(1);
  }
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::size_t slash = rest.find('/');
  if (slash == std::string_view::npos) {
    if (!digits(rest)) throw MalformedRational(std::string(text));
    return make(neg, BigNat::from_decimal(rest), BigNat(1));
  }
  std::string_view num = rest.substr(0, slash);
  std::string_view den = rest.substr(slash + 1);
  if (!digits(num) || !digits(den)) throw MalformedRational(std::string(text));
  BigNat d = BigNat::from_decimal(den);
  if (d.is_zero()) throw ZeroDenominator(std::string(text));
  return make(neg, BigNat::from_decimal(num), std::move(d));
}

std::string Rational::str() const {
  std::string out;
  if (neg_) out += '-';
  out += num_.to_decimal();
  if (den_ != BigNat(1)) {
    out += '/';
    out += den_.to_decimal();
  }
  return out;
}

Rational operator+(const Rational& a, const Rational& b) {
  BigNat lhs = a.num_ * b.den_;
  BigNat rhs = b.num_ * a.den_;
  BigNat den = a.den_ * b.den_;
  if (a.neg_ == b.neg_)
    return Rational::make(a.neg_, lhs + rhs, std::move(den));
  if (lhs >= rhs) return Rational::make(a.neg_, lhs - rhs, std::move(den));
  return Rational::make(b.neg_, rhs - lhs, std::move(den));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::make(a.neg_ != b.neg_, a.num_ * b.num_, a.den_ * b.den_);
}

Rational Rational::operator-() const {
  if (is_zero()) return *this;
  return Rational(!neg_, num_, den_);
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const {
  int sa = sign(), sb = rhs.sign();
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;
  // same nonzero sign: cross-multiply magnitudes
  std::strong_ordering mag = (num_ * rhs.den_) <=> (rhs.num_ * den_);
  if (sa > 0) return mag;
  if (mag == std::strong_ordering::less) return std::strong_ordering::greater;
  if (mag == std::strong_ordering::greater) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

}  // namespace archlab
