#include <doctest.h>

#include <random>
#include <stdexcept>

#include "count.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "reduce.hpp"
#include "region.hpp"

using namespace dt;

namespace {

StCorner pick_corner(const Region& r, int s, int t, int p = 1) {
  for (const StCorner& c : find_corners(r)) {
    for (const StCorner& cand : {c, c.swapped()}) {
      if (cand.s == s && cand.t == t && cand.p == p) return cand;
    }
  }
  REQUIRE(false);
  return {};
}

}  // namespace

TEST_CASE("open split on the 2x3 rectangle") {
  Region r = rectangle(2, 3);

  StCorner c23 = pick_corner(r, 2, 3);
  SUBCASE("k = 1: the two dominoes covering the corner cell") {
    OpenSplit split = reduce_open(r, c23, 1);
    REQUIRE(split.a.has_value());
    REQUIRE(split.b.has_value());
    CHECK(split.a->size() == 4);
    CHECK(split.b->size() == 4);
    int pa = parity_tilings(*split.a), pb = parity_tilings(*split.b);
    CHECK((pa ^ pb) == 1);
    CHECK(((pa == 1 && pb == 0) || (pa == 0 && pb == 1)));
    // cross-check the remainders by brute force
    CHECK(BigUint(enumerate_tilings(*split.a, 100).tilings.size()).is_odd() == (pa == 1));
    CHECK(BigUint(enumerate_tilings(*split.b, 100).tilings.size()).is_odd() == (pb == 1));
  }
  SUBCASE("k = 2: one term overshoots and vanishes") {
    OpenSplit split = reduce_open(r, c23, 2);
    CHECK(split.parity() == parity_tilings(r));
    CHECK((!split.a.has_value() || !split.b.has_value()));
  }
  SUBCASE("k out of range") {
    CHECK_THROWS_AS(reduce_open(r, c23, 3), std::invalid_argument);
    CHECK_THROWS_AS(reduce_open(r, c23, 0), std::invalid_argument);
  }
}

TEST_CASE("open splits hold on staircase-cornered regions") {
  // structured complement to the random sweep: the t/d families carry
  // genuine p >= 2 corners
  std::vector<Region> hosts;
  for (int k = 1; k <= 3; ++k)
    for (int p = 2; p <= 3; ++p) {
      hosts.push_back(t_region(k, k + 1, p));
      hosts.push_back(t_region(k, 2 * k, p));
      hosts.push_back(d_region(k, k + 1, p));
    }
  int deep = 0;
  for (const Region& r : hosts) {
    int pr = parity_tilings(r);
    for (const StCorner& c : find_corners(r)) {
      if (c.p >= 2) ++deep;
      int kc = max_completeness(r, c);
      for (int k = c.p > 1 ? 2 : 1; k <= kc; ++k)
        CHECK(reduce_open(r, c, k).parity() == pr);
    }
  }
  CHECK(deep > 0);
}

TEST_CASE("each removed strip has even size 2(k+p)-2") {
  std::mt19937 rng(41);
  int done = 0;
  while (done < 200) {
    Region r = random_region(rng, 24);
    for (const StCorner& c : find_corners(r)) {
      int kc = max_completeness(r, c);
      for (int k = c.p > 1 ? 2 : 1; k <= kc; ++k) {
        OpenSplit split = reduce_open(r, c, k);
        CHECK(static_cast<int>(split.strip_a.size()) == 2 * (k + c.p) - 2);
        CHECK(static_cast<int>(split.strip_b.size()) == 2 * (k + c.p) - 2);
        ++done;
      }
    }
  }
}

TEST_CASE("wall reduction carries the pruned half region down one level") {
  // the factorization step: the pruned half at (m, n+1) reduces to the half
  // at (m, n) reflected across the diagonal
  Region hp = half_region_pruned(1, 3);
  StCorner c = pick_corner(hp, 4, 5);
  REQUIRE(is_walled_at(hp, c, CornerSide::S));
  WallResult w = reduce_wall(hp, c);
  CHECK(w.remainder == half_region(1, 2).transformed(Sym::Transpose));
  CHECK(parity_tilings(w.remainder) == parity_tilings(hp));
}

TEST_CASE("the half-region reduction chain holds at every level") {
  // the corner with legs 2n and 2n+1 on the pruned half at (m, n+1) is
  // complete up to 2n, walled at 2n, and peeling it leaves the half at
  // (m, n) reflected across the diagonal
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m < n; ++m) {
      Region hp = half_region_pruned(m, n + 1);
      StCorner c = pick_corner(hp, 2 * n, 2 * n + 1);
      CHECK(is_complete_up_to(hp, c, 2 * n));
      CHECK(is_walled_at(hp, c, CornerSide::S));
      WallResult w = reduce_wall(hp, c);
      CHECK(w.remainder == half_region(m, n).transformed(Sym::Transpose));
    }
}

TEST_CASE("wall reduction peels a rectangle") {
  Region r = rectangle(3, 4);
  StCorner c = pick_corner(r, 3, 4);
  WallResult w = reduce_wall(r, c);
  CHECK(w.remainder == rectangle(2, 3));
  CHECK(static_cast<int>(w.strip.size()) == 3 + 4 - 1);
}

TEST_CASE("wall preconditions") {
  Region r = rectangle(3, 4);
  StCorner c = pick_corner(r, 3, 4);
  // a swapped frame has s > t and is rejected
  CHECK_THROWS_AS(reduce_wall(r, c.swapped()), PreconditionError);
  // a frame from another region is rejected
  CHECK_THROWS_AS(reduce_wall(rectangle(4, 5), c), PreconditionError);
  // a double-walled square corner defers to the evenness certificate
  Region sq = rectangle(2, 2);
  StCorner csq = pick_corner(sq, 2, 2);
  CHECK_THROWS_AS(reduce_wall(sq, csq), PreconditionError);
}

TEST_CASE("double-wall evenness certificates") {
  SUBCASE("t family, square staircase top") {
    Region t = t_region(2, 2, 2);
    bool certified = false;
    for (const StCorner& c : find_corners(t)) {
      if (even_applicable(t, c)) {
        even_by_double_wall(t, c);
        certified = true;
      }
    }
    CHECK(certified);
    CHECK(parity_tilings(t) == 0);
    CHECK(enumerate_tilings(t, 100000).tilings.size() % 2 == 0);
  }
  SUBCASE("d family") {
    Region d = d_region(3, 3, 2);
    bool certified = false;
    for (const StCorner& c : find_corners(d))
      if (even_applicable(d, c)) certified = true;
    CHECK(certified);
    CHECK(parity_tilings(d) == 0);
  }
  SUBCASE("2x2 square") {
    Region sq = rectangle(2, 2);
    StCorner c = pick_corner(sq, 2, 2);
    even_by_double_wall(sq, c);
    CHECK(count_tilings(sq) == BigUint(2));
  }
  SUBCASE("rejects a single-walled corner") {
    Region r = rectangle(2, 3);
    CHECK_THROWS_AS(even_by_double_wall(r, pick_corner(r, 2, 3)), PreconditionError);
  }
}

TEST_CASE("wall-greedy traces") {
  SUBCASE("pruned halves reduce to odd parity") {
    for (int n : {2, 3, 4}) {
      ReductionTrace tr = reduce_wall_greedy(half_region_pruned(1, n), "hprime");
      CHECK(tr.claimed_parity == 1);
      CHECK(verify_trace(half_region_pruned(1, n), serialize_trace(tr)).pass);
    }
  }
  SUBCASE("empty region yields the empty trace with parity 1") {
    ReductionTrace tr = reduce_wall_greedy(Region(), "empty");
    CHECK(tr.steps.empty());
    CHECK(tr.claimed_parity == 1);
    REQUIRE(tr.terminals.size() == 1);
    CHECK(tr.terminals[0].second == TerminalKind::Empty);
  }
  SUBCASE("deterministic across runs") {
    Region r = half_region_pruned(2, 4);
    std::string a = serialize_trace(reduce_wall_greedy(r, "x"));
    std::string b = serialize_trace(reduce_wall_greedy(r, "x"));
    CHECK(a == b);
  }
  SUBCASE("double-wall regions certify even immediately") {
    ReductionTrace tr = reduce_wall_greedy(rectangle(2, 2), "sq");
    REQUIRE(!tr.steps.empty());
    CHECK(tr.steps.back().kind == StepKind::Even);
    CHECK(tr.claimed_parity == 0);
  }
  SUBCASE("wall-greedy preserves the oracle parity") {
    std::mt19937 rng(53);
    for (int i = 0; i < 40; ++i) {
      Region r = random_region(rng, 22);
      ReductionTrace tr = reduce_wall_greedy(r, "rnd");
      CHECK(tr.claimed_parity == parity_tilings(r));
      CHECK(verify_trace(r, serialize_trace(tr)).pass);
    }
  }
}

TEST_CASE("scripted traces validate step by step") {
  Region r = rectangle(3, 4);
  StCorner c = pick_corner(r, 3, 4);
  std::vector<ScriptStep> script{{StepKind::Wall, c.apex(), c.frame.orient, c.p, 0}};
  ReductionTrace tr = reduce_scripted(r, script, "rect:3,4");
  CHECK(tr.regions.back() == rectangle(2, 3));
  CHECK(tr.claimed_parity == 1);

  // a step that names a non-existent corner reports its index
  std::vector<ScriptStep> bad{{StepKind::Wall, {9, 9}, Sym::Identity, 1, 0}};
  try {
    reduce_scripted(r, bad, "rect:3,4");
    CHECK(false);
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("step 1") != std::string::npos);
  }
}

TEST_CASE("scripted open steps branch and recombine by parity") {
  Region r = rectangle(2, 4);
  StCorner c = pick_corner(r, 2, 4);
  std::vector<ScriptStep> script{{StepKind::Open, c.apex(), c.frame.orient, c.p, 1}};
  ReductionTrace tr = reduce_scripted(r, script, "rect:2,4");
  CHECK(tr.claimed_parity == parity_tilings(r));
  CHECK(verify_trace(r, serialize_trace(tr)).pass);
}

TEST_CASE("trace round trip and tampering") {
  Region r = half_region_pruned(1, 3);
  ReductionTrace tr = reduce_wall_greedy(r, "hprime:1,3");
  std::string text = serialize_trace(tr);

  TraceCheck ok = verify_trace(r, text);
  CHECK(ok.pass);

  SUBCASE("perturbing one removed cell fails at that step") {
    std::string bad = text;
    std::size_t pos = bad.find("removed=[(");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos + 10, bad.find(',', pos + 10) - pos - 10, "99");
    TraceCheck check = verify_trace(r, bad);
    CHECK(!check.pass);
    REQUIRE(!check.lines.empty());
    CHECK(check.lines[0].find("FAIL") != std::string::npos);
  }
  SUBCASE("claiming a wall where none exists fails") {
    std::string forged =
        "start forged\n"
        "step 1: wall apex=(1,1) orient=0 s=2 t=2 p=1 k=2 removed=[(1,1)]\n"
        "parity 0\n";
    TraceCheck check = verify_trace(rectangle(3, 3), forged);
    CHECK(!check.pass);
  }
  SUBCASE("wrong footer parity fails") {
    std::string bad = text;
    bad.replace(bad.rfind("parity 1"), 8, "parity 0");
    CHECK(!verify_trace(r, bad).pass);
  }
  SUBCASE("malformed text is reported, not crashed on") {
    CHECK(!verify_trace(r, "nonsense").pass);
    CHECK(!verify_trace(r, "start x\nstep 1: wobble\nparity 0\n").pass);
  }
}

TEST_CASE("trace_step_cells reads back the removed cells") {
  Region r = rectangle(3, 4);
  ReductionTrace tr = reduce_wall_greedy(r, "rect:3,4");
  REQUIRE(!tr.steps.empty());
  std::string text = serialize_trace(tr);
  CHECK(trace_step_cells(text, 1) == tr.steps[0].removed);
  CHECK_THROWS_AS(trace_step_cells(text, 99), std::invalid_argument);
  CHECK_THROWS_AS(trace_step_cells("garbage", 1), ParseError);
}
