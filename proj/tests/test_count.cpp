#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "count.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "region.hpp"

using namespace dt;

TEST_CASE("counts on pinned small cases") {
  CHECK(count_tilings(rectangle(1, 2)) == BigUint(1));
  CHECK(count_tilings(rectangle(1, 3)) == BigUint(0));  // odd area
  CHECK(count_tilings(rectangle(2, 2)) == BigUint(2));
  CHECK(count_tilings(rectangle(2, 3)) == BigUint(3));
  CHECK(count_tilings(rectangle(3, 4)) == BigUint(11));
  CHECK(count_tilings(rectangle(4, 4)) == BigUint(36));
  CHECK(count_tilings(rectangle(8, 8)) == BigUint(12988816));
  CHECK(count_tilings(Region()) == BigUint(1));  // one empty tiling
  for (int m = 1; m <= 3; ++m) CHECK(count_tilings(holey_square(m, m + 1)) == BigUint(2));
}

TEST_CASE("parity on pinned cases") {
  for (int k = 1; k <= 5; ++k) CHECK(parity_tilings(rectangle(k, k + 1)) == 1);
  CHECK(parity_tilings(rectangle(2, 2)) == 0);
  CHECK(parity_tilings(Region()) == 1);
  CHECK(parity_tilings(rectangle(1, 3)) == 0);
}

namespace {

// A tiling must cover every region cell exactly once with edge-adjacent
// pairs.
bool valid_tiling(const Region& r, const Tiling& t) {
  std::vector<Cell> covered;
  for (const Domino& d : t) {
    int gap = std::abs(d.a.x - d.b.x) + std::abs(d.a.y - d.b.y);
    if (gap != 1) return false;
    if (!r.contains(d.a) || !r.contains(d.b)) return false;
    covered.push_back(d.a);
    covered.push_back(d.b);
  }
  std::sort(covered.begin(), covered.end());
  if (std::adjacent_find(covered.begin(), covered.end()) != covered.end()) return false;
  return covered == r.cells();
}

}  // namespace

TEST_CASE("enumeration oracle") {
  auto e = enumerate_tilings(rectangle(2, 3), 1000);
  CHECK(e.tilings.size() == 3);
  CHECK(!e.truncated);
  for (const Tiling& t : e.tilings) {
    CHECK(t.size() == 3);
    CHECK(valid_tiling(rectangle(2, 3), t));
  }
  // tilings are pairwise distinct
  auto sorted_tilings = e.tilings;
  for (Tiling& t : sorted_tilings) std::sort(t.begin(), t.end());
  std::sort(sorted_tilings.begin(), sorted_tilings.end());
  CHECK(std::adjacent_find(sorted_tilings.begin(), sorted_tilings.end()) ==
        sorted_tilings.end());

  CHECK(enumerate_tilings(holey_square(1, 2), 1000).tilings.size() == 2);
  CHECK(enumerate_tilings(rectangle(1, 1), 1000).tilings.empty());

  auto capped = enumerate_tilings(rectangle(2, 6), 3);
  CHECK(capped.tilings.size() == 3);
  CHECK(capped.truncated);

  CHECK_THROWS_AS(enumerate_tilings(rectangle(5, 6), 10), LimitError);  // 30 > 28 cells
}

TEST_CASE("matching-count oracle") {
  CHECK(count_via_matching(rectangle(3, 4)) == BigUint(11));
  CHECK(count_via_matching(rectangle(1, 3)) == BigUint(0));
  Region two_dominoes = Region::from_cells({{0, 0}, {0, 1}, {4, 4}, {5, 4}});
  CHECK(count_via_matching(two_dominoes) == BigUint(1));
  CHECK_THROWS_AS(count_via_matching(rectangle(5, 8)), LimitError);  // 40 > 36 cells
}

TEST_CASE("the three counters agree on a randomized corpus") {
  std::mt19937 rng(11);
  int checked = 0;
  while (checked < 60) {
    Region r = random_region(rng, 24);
    if (r.size() > 24) continue;
    ++checked;
    BigUint dp = count_tilings(r);
    CHECK(dp == count_via_matching(r));
    CHECK(BigUint(enumerate_tilings(r, 100000).tilings.size()) == dp);
    CHECK(parity_tilings(r) == (dp.is_odd() ? 1 : 0));
  }
}

TEST_CASE("multiplicativity over far-apart components") {
  Region a = rectangle(2, 3);
  Region b = rectangle(2, 2).translated({40, 0});
  Region both = a.united_with(b);
  CHECK(count_tilings(both) == count_tilings(a) * count_tilings(b));
  // the union's bounding box is 42 wide; decomposition keeps each profile
  // narrow enough for the default guard
  CHECK(both.bounds().width() > kDefaultWidthLimit);
}

TEST_CASE("color imbalance forces zero") {
  // an L of 4 cells with 3 of one color
  Region l = Region::from_cells({{0, 0}, {1, 0}, {2, 0}, {0, 1}});
  (void)l;
  Region t = Region::from_cells({{0, 0}, {1, 0}, {2, 0}, {1, 1}});
  CHECK(!color_balanced(t));
  CHECK(count_tilings(t) == BigUint(0));
  CHECK(parity_tilings(t) == 0);
}

TEST_CASE("2 x n strip recurrence") {
  std::vector<BigUint> f(13);
  for (int n = 1; n <= 12; ++n) f[n] = count_tilings(rectangle(2, n));
  for (int n = 3; n <= 12; ++n) CHECK(f[n] == f[n - 1] + f[n - 2]);
  for (int n = 1; n <= 8; ++n)
    CHECK(BigUint(enumerate_tilings(rectangle(2, n), 100000).tilings.size()) == f[n]);
}

TEST_CASE("profile width guard") {
  CHECK_THROWS_AS(count_tilings(rectangle(21, 30)), LimitError);
  try {
    count_tilings(rectangle(21, 30));
  } catch (const LimitError& e) {
    CHECK(std::string(e.what()).find("21") != std::string::npos);
  }
  // override widens the guard
  CHECK(count_tilings(rectangle(21, 2), 21) == count_tilings(rectangle(2, 21)));
  CHECK_THROWS_AS(parity_tilings(rectangle(22, 22)), LimitError);
}
