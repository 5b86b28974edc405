#ifndef DOMINOTILE_BIGINT_HPP
#define DOMINOTILE_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace dt {

// Arbitrary-precision nonnegative integer. Little-endian base-2^32 limbs
// with no leading zero limb; zero is the empty limb vector. Supports exactly
// the arithmetic tiling counts need: addition, multiplication, powers of
// two, halving, integer square root, decimal I/O.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t v);

  static BigUint pow2(unsigned k);
  static BigUint from_decimal(const std::string& text);

  BigUint& operator+=(const BigUint& o);
  BigUint operator+(const BigUint& o) const;
  BigUint operator*(const BigUint& o) const;

  bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
  std::strong_ordering operator<=>(const BigUint& o) const;

  bool is_zero() const { return limbs_.empty(); }
  bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }
  BigUint half() const;  // floor division by 2

  std::string to_decimal() const;
  std::size_t bit_length() const;

 private:
  void trim();
  std::vector<std::uint32_t> limbs_;
};

// Floor of the square root.
BigUint isqrt(const BigUint& v);

}  // namespace dt

#endif
