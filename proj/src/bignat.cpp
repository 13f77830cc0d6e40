#include "archlab/bignat.hpp"

#include <cassert>
#include <stdexcept>

namespace archlab {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigNat::BigNat(std::uint64_t v) {
  if (v != 0) limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
  if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

void BigNat::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigNat::bit_length() const {
  if (limbs_.empty()) return 0;
  std::uint32_t top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 32;
  while (top != 0) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool BigNat::bit(std::size_t i) const {
  std::size_t limb = i / 32;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (i % 32)) & 1u;
}

std::strong_ordering BigNat::operator<=>(const BigNat& rhs) const {
  if (limbs_.size() != rhs.limbs_.size())
    return limbs_.size() <=> rhs.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
  }
  return std::strong_ordering::equal;
}

BigNat& BigNat::operator+=(const BigNat& rhs) {
  if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t sum = carry + limbs_[i];
    if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(sum & 0xffffffffu);
    carry = sum >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigNat& BigNat::operator-=(const BigNat& rhs) {
  assert(*this >= rhs);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(limbs_[i]) - borrow;
    if (i < rhs.limbs_.size()) diff -= rhs.limbs_[i];
    if (diff < 0) {
      diff += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<std::uint32_t>(diff);
  }
  trim();
  return *this;
}

BigNat operator*(const BigNat& a, const BigNat& b) {
  BigNat out;
  if (a.is_zero() || b.is_zero()) return out;
  out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      std::uint64_t cur = out.limbs_[i + j] + carry +
                          static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j];
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    out.limbs_[i + b.limbs_.size()] += static_cast<std::uint32_t>(carry);
  }
  out.trim();
  return out;
}

BigNat& BigNat::shift_left(std::size_t bits) {
  if (is_zero() || bits == 0) return *this;
  std::size_t limb_shift = bits / 32;
  std::size_t bit_shift = bits % 32;
  limbs_.insert(limbs_.begin(), limb_shift, 0);
  if (bit_shift != 0) {
    std::uint32_t carry = 0;
    for (std::size_t i = limb_shift; i < limbs_.size(); ++i) {
      std::uint32_t next = limbs_[i] >> (32 - bit_shift);
      limbs_[i] = (limbs_[i] << bit_shift) | carry;
      carry = next;
    }
    if (carry) limbs_.push_back(carry);
  }
  return *this;
}

BigNat& BigNat::shift_right(std::size_t bits) {
  std::size_t limb_shift = bits / 32;
  std::size_t bit_shift = bits % 32;
  if (limb_shift >= limbs_.size()) {
    limbs_.clear();
    return *this;
  }
  limbs_.erase(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(limb_shift));
  if (bit_shift != 0) {
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint32_t high =
          (i + 1 < limbs_.size()) ? limbs_[i + 1] << (32 - bit_shift) : 0;
      limbs_[i] = (limbs_[i] >> bit_shift) | high;
    }
  }
  trim();
  return *this;
}

std::pair<BigNat, BigNat> BigNat::divmod(const BigNat& num, const BigNat& den) {
  if (den.is_zero()) throw std::invalid_argument("BigNat::divmod by zero");
  BigNat quot, rem;
  if (num < den) return {quot, num};
  std::size_t nbits = num.bit_length();
  quot.limbs_.assign((nbits + 31) / 32, 0);
  for (std::size_t i = nbits; i-- > 0;) {
    rem.shift_left(1);
    if (num.bit(i)) {
      if (rem.limbs_.empty()) rem.limbs_.push_back(0);
      rem.limbs_[0] |= 1u;
    }
    if (rem >= den) {
      rem -= den;
      quot.limbs_[i / 32] |= (1u << (i % 32));
    }
  }
  quot.trim();
  rem.trim();
  return {quot, rem};
}

std::size_t BigNat::trailing_zero_bits() const {
  assert(!is_zero());
  std::size_t count = 0;
  std::size_t limb = 0;
  while (limbs_[limb] == 0) {
    count += 32;
    ++limb;
  }
  std::uint32_t v = limbs_[limb];
  while ((v & 1u) == 0) {
    ++count;
    v >>= 1;
  }
  return count;
}

BigNat BigNat::gcd(BigNat a, BigNat b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::size_t za = a.trailing_zero_bits();
  std::size_t zb = b.trailing_zero_bits();
  std::size_t shift = std::min(za, zb);
  a.shift_right(za);
  b.shift_right(zb);
  // both odd from here on
  while (true) {
    if (a > b) std::swap(a, b);
    b -= a;
    if (b.is_zero()) break;
    b.shift_right(b.trailing_zero_bits());
  }
  a.shift_left(shift);
  return a;
}

void BigNat::mul_small_add(std::uint32_t mul, std::uint32_t add) {
  std::uint64_t carry = add;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * mul + carry;
    limbs_[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
    carry = cur >> 32;
  }
  while (carry) {
    limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
    carry >>= 32;
  }
  trim();
}

std::uint32_t BigNat::divrem_small(std::uint32_t div) {
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / div);
    rem = cur % div;
  }
  trim();
  return static_cast<std::uint32_t>(rem);
}

BigNat BigNat::from_decimal(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("BigNat: empty digit string");
  BigNat out;
  for (char c : digits) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("BigNat: non-digit character");
    out.mul_small_add(10, static_cast<std::uint32_t>(c - '0'));
  }
  return out;
}

std::string BigNat::to_decimal() const {
  if (is_zero()) return "0";
  BigNat work = *this;
  std::string out;
  while (!work.is_zero()) {
    std::uint32_t chunk = work.divrem_small(1000000000u);
    if (work.is_zero()) {
      out = std::to_string(chunk) + out;
    } else {
      std::string part = std::to_string(chunk);
      out = std::string(9 - part.size(), '0') + part + out;
    }
  }
  return out;
}

std::uint64_t BigNat::to_u64() const {
  if (bit_length() > 64) throw std::overflow_error("BigNat::to_u64");
  std::uint64_t v = 0;
  if (!limbs_.empty()) v = limbs_[0];
  if (limbs_.size() > 1) v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
  return v;
}

}  // namespace archlab
