#include <doctest.h>

#include <algorithm>
#include <climits>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

#include "corner.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "region.hpp"

using namespace dt;

namespace {

// Frame-independent identity of a corner, for set comparisons across
// symmetries: p plus the unordered pair of leg rays.
using Ray = std::tuple<int, int, int, int>;
std::tuple<int, Ray, Ray> key_of(const StCorner& c) {
  Cell sd = sym_offset(c.frame.orient, {-1, 0});
  Cell td = sym_offset(c.frame.orient, {0, 1});
  Ray a{c.apex().x, c.apex().y, sd.x, sd.y};
  Ray b{c.t_leg_base().x, c.t_leg_base().y, td.x, td.y};
  if (b < a) std::swap(a, b);
  return {c.p, a, b};
}

}  // namespace

TEST_CASE("rectangle corners") {
  auto corners = find_corners(rectangle(3, 5));
  REQUIRE(corners.size() == 4);
  for (const StCorner& c : corners) {
    CHECK(c.p == 1);
    CHECK(std::min(c.s, c.t) == 3);
    CHECK(std::max(c.s, c.t) == 5);
    CHECK(is_walled_at(rectangle(3, 5), c, CornerSide::S));
    CHECK(is_walled_at(rectangle(3, 5), c, CornerSide::T));
    CHECK(is_complete_up_to(rectangle(3, 5), c, 3));
    CHECK(max_completeness(rectangle(3, 5), c) == 3);
  }
}

TEST_CASE("single cell has four corners") {
  auto corners = find_corners(rectangle(1, 1));
  CHECK(corners.size() == 4);
  for (const StCorner& c : corners) {
    CHECK(c.s == 1);
    CHECK(c.t == 1);
    CHECK(c.p == 1);
  }
}

TEST_CASE("staircase corner of the t family") {
  Region t = t_region(2, 5, 4);
  auto corners = find_corners(t);
  bool found_p4 = false;
  for (const StCorner& c : corners) {
    if (c.p == 4) {
      found_p4 = true;
      CHECK(std::min(c.s, c.t) == 2);
      CHECK(std::max(c.s, c.t) == 5);
    }
    CHECK(c.p != 2);  // the long staircase admits no shallower reading
    CHECK(c.p != 3);
  }
  CHECK(found_p4);
}

TEST_CASE("staircases with missing connectors are not corners") {
  // two bars meeting only diagonally: no ({2,2};2)-corner without the
  // connector cell
  Region bars = Region::from_cells({{0, 0}, {1, 0}, {2, 1}, {2, 2}});
  for (const StCorner& c : find_corners(bars)) CHECK(c.p == 1);
  Region with_connector = Region::from_cells({{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}});
  bool p2 = false;
  for (const StCorner& c : find_corners(with_connector)) p2 |= c.p == 2;
  CHECK(p2);
}

TEST_CASE("extract_strip sizes and contents") {
  Region r = rectangle(4, 5);
  auto corners = find_corners(r);
  REQUIRE(!corners.empty());
  Strip s = extract_strip(r, corners[0], 2, 3);
  CHECK(s.size() == 4);  // 2 + 3 - 1

  Region t = t_region(2, 5, 4);
  for (const StCorner& c : find_corners(t)) {
    if (c.p == 4) {
      Strip st = extract_strip(t, c, 2, 2);
      CHECK(st.size() == 9);  // 2 + 2 + 2*4 - 3
    }
  }

  CHECK_THROWS_AS(extract_strip(r, corners[0], 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(extract_strip(r, corners[0], corners[0].s + 1, 1), std::invalid_argument);

  // a corner whose frame no longer matches the region reports the missing cell
  StCorner stale = corners[0];
  Region chopped = r.without({stale.apex()});
  CHECK_THROWS_AS(extract_strip(chopped, stale, stale.s, stale.t), NotApplicableError);
}

TEST_CASE("strip size law on random corners") {
  std::mt19937 rng(5);
  int done = 0;
  while (done < 20) {
    Region r = random_region(rng, 24);
    auto corners = find_corners(r);
    for (const StCorner& c : corners) {
      int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(c.s));
      int j = 1 + static_cast<int>(rng() % static_cast<unsigned>(c.t));
      Strip s = extract_strip(r, c, i, j);
      CHECK(static_cast<int>(s.size()) == i + j + 2 * c.p - 3);
      for (std::size_t q = 1; q < s.size(); ++q) {
        int d = std::abs(s[q].x - s[q - 1].x) + std::abs(s[q].y - s[q - 1].y);
        CHECK(d == 1);  // consecutive strip cells are edge-adjacent
      }
      ++done;
      if (done >= 20) break;
    }
  }
}

TEST_CASE("the three complete-up-to-3 local shapes, and nothing else") {
  // host corner with legs 4 and 4 at the origin, opening up and right
  std::vector<Cell> legs;
  for (int i = 0; i < 4; ++i) {
    legs.push_back({i, 0});
    legs.push_back({0, i});
  }
  auto with = [&](std::vector<Cell> extra) {
    extra.insert(extra.end(), legs.begin(), legs.end());
    return Region::from_cells(extra);
  };
  auto corner_of = [&](const Region& r) {
    for (const StCorner& c : find_corners(r))
      if (std::min(c.s, c.t) == 4 && std::max(c.s, c.t) == 4 && c.p == 1 &&
          c.apex() == Cell{0, 0})
        return c;
    REQUIRE(false);
    return StCorner{};
  };

  Region bare = with({});
  CHECK(is_complete_up_to(bare, corner_of(bare), 3));

  Region middle = with({{1, 1}});
  CHECK(is_complete_up_to(middle, corner_of(middle), 3));

  Region full = with({{1, 1}, {2, 1}, {1, 2}});
  CHECK(is_complete_up_to(full, corner_of(full), 3));

  // deviating in one examined cell breaks completeness
  for (std::vector<Cell> bad :
       {std::vector<Cell>{{2, 1}}, {{1, 2}}, {{2, 1}, {1, 1}}, {{1, 1}, {1, 2}},
        std::vector<Cell>{{2, 1}, {1, 2}}}) {
    Region r = with(bad);
    CHECK(!is_complete_up_to(r, corner_of(r), 3));
  }
}

TEST_CASE("completeness on the pruned half region") {
  // the corner driving the factorization argument: legs 2n and 2n+1,
  // complete up to 2n, walled at 2n, for (m, n) = (1, 2)
  Region hp = half_region_pruned(1, 3);
  bool found = false;
  for (const StCorner& c : find_corners(hp)) {
    if (std::min(c.s, c.t) == 4 && std::max(c.s, c.t) == 5 && c.p == 1) {
      found = true;
      CHECK(is_complete_up_to(hp, c, 4));
      CHECK(is_walled_at(hp, c, CornerSide::S));
    }
  }
  CHECK(found);
}

TEST_CASE("completeness is monotone in k") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Region r = random_region(rng, 24);
    for (const StCorner& c : find_corners(r)) {
      int limit = std::min(c.s, c.t);
      bool ok = true;
      for (int k = 1; k <= limit; ++k) {
        bool now = is_complete_up_to(r, c, k);
        if (!ok) CHECK(!now);  // once false, false for all larger k
        ok = now;
      }
      CHECK(max_completeness(r, c) >= 1);
    }
  }
}

TEST_CASE("completeness rejects k out of range") {
  Region r = rectangle(3, 5);
  auto corners = find_corners(r);
  CHECK_THROWS_AS(is_complete_up_to(r, corners[0], 0), std::invalid_argument);
  CHECK_THROWS_AS(is_complete_up_to(r, corners[0], 4), std::invalid_argument);
}

TEST_CASE("walls") {
  // an L: two full rows of four, a two-cell column on the left
  Region l = Region::from_cells(
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {0, 2}, {1, 2}});
  // The ({2,2};1)-corner at (3,1): its leg running left along the low arm's
  // top edge ends in the concave step at x=1, so that side is not walled;
  // the leg running down the right edge ends at the region corner, walled.
  bool found = false;
  for (const StCorner& c : find_corners(l)) {
    if (c.apex() != Cell{3, 1} || c.p != 1) continue;
    REQUIRE(c.s == 2);
    REQUIRE(c.t == 2);
    found = true;
    bool s_points_left = sym_offset(c.frame.orient, {-1, 0}) == Cell{-1, 0};
    CHECK(is_walled_at(l, c, s_points_left ? CornerSide::T : CornerSide::S));
    CHECK(!is_walled_at(l, c, s_points_left ? CornerSide::S : CornerSide::T));
  }
  CHECK(found);
  // every rectangle corner is walled on both sides
  for (const StCorner& c : find_corners(rectangle(2, 4))) {
    CHECK(is_walled_at(rectangle(2, 4), c, CornerSide::S));
    CHECK(is_walled_at(rectangle(2, 4), c, CornerSide::T));
  }
}

TEST_CASE("swapped frames name the same corner") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    Region r = random_region(rng, 20);
    for (const StCorner& c : find_corners(r)) {
      StCorner tw = c.swapped();
      CHECK(tw.s == c.t);
      CHECK(tw.t == c.s);
      CHECK(key_of(tw) == key_of(c));
      auto redetect = corner_at(r, tw.frame.a0, tw.frame.orient, tw.p);
      REQUIRE(redetect.has_value());
      CHECK(redetect->s == tw.s);
      CHECK(redetect->t == tw.t);
    }
  }
}

TEST_CASE("detection commutes with the eight symmetries") {
  std::mt19937 rng(31);
  std::vector<Region> samples = {rectangle(2, 4), t_region(2, 3, 2), half_region(1, 2)};
  for (int i = 0; i < 6; ++i) samples.push_back(random_region(rng, 18));
  for (const Region& r : samples) {
    auto base = find_corners(r);
    for (int gi = 0; gi < kSymCount; ++gi) {
      Sym g = static_cast<Sym>(gi);
      Region tr = r.transformed(g);
      // transformed() normalizes; recreate the same shift for cells
      Cell mn{INT_MAX, INT_MAX};
      for (const Cell& c : r.cells()) {
        Cell im = sym_cell(g, c);
        mn.x = std::min(mn.x, im.x);
        mn.y = std::min(mn.y, im.y);
      }
      std::set<std::tuple<int, Ray, Ray>> expect;
      for (const StCorner& c : base) {
        // map both leg rays through g and the normalizing shift
        auto map_cell = [&](Cell cc) { return sym_cell(g, cc) - mn; };
        auto map_dir = [&](Cell d) { return sym_offset(g, d); };
        Cell sd = sym_offset(c.frame.orient, {-1, 0});
        Cell td = sym_offset(c.frame.orient, {0, 1});
        Cell a = map_cell(c.apex()), b = map_cell(c.t_leg_base());
        Cell da = map_dir(sd), db = map_dir(td);
        Ray ra{a.x, a.y, da.x, da.y}, rb{b.x, b.y, db.x, db.y};
        if (rb < ra) std::swap(ra, rb);
        expect.insert({c.p, ra, rb});
      }
      std::set<std::tuple<int, Ray, Ray>> got;
      for (const StCorner& c : find_corners(tr)) got.insert(key_of(c));
      CHECK(got == expect);
    }
  }
}
