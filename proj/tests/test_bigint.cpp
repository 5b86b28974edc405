#include <doctest.h>

#include <cstdint>
#include <random>

#include "bigint.hpp"

using dt::BigUint;

TEST_CASE("small values round-trip through decimal") {
  CHECK(BigUint(0).to_decimal() == "0");
  CHECK(BigUint(1).to_decimal() == "1");
  CHECK(BigUint(999999999).to_decimal() == "999999999");
  CHECK(BigUint(1000000000).to_decimal() == "1000000000");
  CHECK(BigUint(12988816).to_decimal() == "12988816");
  CHECK(BigUint::from_decimal("258584046368") == BigUint(258584046368ull));
}

TEST_CASE("arithmetic agrees with a 64-bit reference on random inputs") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t a = rng() >> 1;  // keep sums inside 64 bits
    std::uint64_t b = rng() >> 1;
    CHECK(BigUint(a) + BigUint(b) == BigUint(a + b));
  }
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t a = rng() & 0xffffffffull;
    std::uint64_t b = rng() & 0xffffffffull;
    CHECK(BigUint(a) * BigUint(b) == BigUint(a * b));
    CHECK((BigUint(a) <=> BigUint(b)) == (a <=> b));
    CHECK(BigUint(a).half() == BigUint(a / 2));
    CHECK(BigUint(a).is_odd() == ((a & 1) == 1));
  }
}

TEST_CASE("multi-limb multiplication is exact") {
  BigUint a = BigUint::from_decimal("123456789012345678901234567890");
  BigUint b = BigUint::from_decimal("987654321098765432109876543210");
  CHECK((a * b).to_decimal() ==
        "121932631137021795226185032733622923332237463801111263526900");
  CHECK(BigUint::pow2(100).to_decimal() == "1267650600228229401496703205376");
}

TEST_CASE("isqrt is the floor square root") {
  for (std::uint64_t v : {0ull, 1ull, 2ull, 3ull, 4ull, 15ull, 16ull, 17ull, 12988816ull}) {
    BigUint r = dt::isqrt(BigUint(v));
    CHECK(r * r <= BigUint(v));
    BigUint next = r + BigUint(1);
    CHECK(BigUint(v) < next * next);
  }
  CHECK(dt::isqrt(BigUint(12988816)) == BigUint(3604));
  BigUint big = BigUint::from_decimal("123456789012345678901234567890");
  BigUint r = dt::isqrt(big);
  CHECK(r * r <= big);
  CHECK(big < (r + BigUint(1)) * (r + BigUint(1)));
}
