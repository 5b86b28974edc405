#include "bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace dt {

BigUint::BigUint(std::uint64_t v) {
  while (v) {
    limbs_.push_back(static_cast<std::uint32_t>(v));
    v >>= 32;
  }
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::pow2(unsigned k) {
  BigUint r;
  r.limbs_.assign(k / 32 + 1, 0);
  r.limbs_.back() = 1u << (k % 32);
  return r;
}

BigUint& BigUint::operator+=(const BigUint& o) {
  if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
    limbs_[i] = static_cast<std::uint32_t>(s);
    carry = s >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigUint BigUint::operator+(const BigUint& o) const {
  BigUint r = *this;
  r += o;
  return r;
}

BigUint BigUint::operator*(const BigUint& o) const {
  if (is_zero() || o.is_zero()) return BigUint();
  BigUint r;
  r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
      std::uint64_t cur = r.limbs_[i + j] +
                          static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j] + carry;
      r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    r.limbs_[i + o.limbs_.size()] += static_cast<std::uint32_t>(carry);
  }
  r.trim();
  return r;
}

std::strong_ordering BigUint::operator<=>(const BigUint& o) const {
  if (limbs_.size() != o.limbs_.size())
    return limbs_.size() <=> o.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
  }
  return std::strong_ordering::equal;
}

BigUint BigUint::half() const {
  BigUint r = *this;
  std::uint32_t carry = 0;
  for (std::size_t i = r.limbs_.size(); i-- > 0;) {
    std::uint32_t next = r.limbs_[i] & 1u;
    r.limbs_[i] = (r.limbs_[i] >> 1) | (carry << 31);
    carry = next;
  }
  r.trim();
  return r;
}

std::size_t BigUint::bit_length() const {
  if (limbs_.empty()) return 0;
  std::uint32_t top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 32;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

std::string BigUint::to_decimal() const {
  if (limbs_.empty()) return "0";
  std::vector<std::uint32_t> work = limbs_;
  std::string digits;
  while (!work.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    for (int d = 0; d < 9; ++d) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigUint BigUint::from_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty decimal string");
  BigUint r;
  BigUint ten(10);
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad decimal digit");
    r = r * ten + BigUint(static_cast<std::uint64_t>(c - '0'));
  }
  return r;
}

BigUint isqrt(const BigUint& v) {
  if (v.is_zero()) return BigUint();
  BigUint lo(0), hi = BigUint::pow2(static_cast<unsigned>(v.bit_length() / 2 + 1));
  // invariant: lo^2 <= v < hi^2
  while (true) {
    BigUint sum = lo + hi;
    BigUint mid = sum.half();
    if (mid == lo) return lo;
    if (mid * mid <= v)
      lo = mid;
    else
      hi = mid;
  }
}

}  // namespace dt
