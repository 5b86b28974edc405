#ifndef DOMINOTILE_FAMILIES_HPP
#define DOMINOTILE_FAMILIES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "count.hpp"
#include "reduce.hpp"
#include "region.hpp"
#include "report.hpp"

namespace dt {

// Exact verification of the holey-square factorization for one (m, n):
// #full = 2^(n-m) * (#half)^2, with #half odd and #half = #pruned.
struct HoleyReport {
  int m = 0, n = 0;
  BigUint full, half, pruned;
  bool factor_ok = false, odd_ok = false, prune_ok = false;
  bool pass() const { return factor_ok && odd_ok && prune_ok; }
};
HoleyReport verify_holey(int m, int n, int width_limit = kDefaultWidthLimit);
HoleyReport verify_holey_odd(int m, int n, int width_limit = kDefaultWidthLimit);

std::vector<CaseResult> verify_holey_sweep(int max_n, bool odd,
                                           int width_limit = kDefaultWidthLimit);

enum class Side { Left, Top, Right, Bottom };
const char* side_name(Side s);

// One application of the strip-removal schedule that carries the rectangle
// with sides kn and (k+1)n down to the next smaller case: s_len cells leave
// the s_side and s_len + 1 the adjacent t_side.
struct ScheduleRow {
  int app = 0;
  Side s_side = Side::Left;
  long long s_len = 0;
  Side t_side = Side::Top;
  long long t_len = 0;
};

// The 2k-row removal schedule (empty for n = 1, where the descent switches
// to peeling one corner strip per step instead).
std::vector<ScheduleRow> rect_schedule(int k, int n);

struct RectReport {
  int k = 0, n = 0;
  std::vector<CaseResult> cases;
  ReductionTrace trace;
  bool pass() const { return all_pass(cases); }
};

// Replays the schedule on the kn x (k+1)n rectangle, validating every strip
// removal as a wall reduction and the final remainder; cross-checks the odd
// parity with the counting oracle when the rectangle fits the width guard.
RectReport verify_rect(int k, int n, int width_limit = kDefaultWidthLimit);

// Closed-form parities of the staircase families. The variant index picks
// the j column (k, k+1, k+2, 2k-1, 2k, 2k+1, 2k+2 for T; the first four and
// 2k+1 for D). Arguments outside a variant's domain raise
// std::invalid_argument.
inline constexpr int kTFamilyVariants = 7;
inline constexpr int kDFamilyVariants = 5;
int t_parity_claim(int k, int p, int variant);
int d_parity_claim(int k, int p, int variant);
Region t_family_region(int k, int p, int variant);
Region d_family_region(int k, int p, int variant);

std::vector<CaseResult> verify_family_t(int max_k, int max_p,
                                        int width_limit = kDefaultWidthLimit);
std::vector<CaseResult> verify_family_d(int max_k, int max_p,
                                        int width_limit = kDefaultWidthLimit);

// Random-region soundness sweep for the reductions: every valid (corner, k)
// open split and every applicable wall/even reduction is compared against
// the parity oracle. Each trial is a region that admitted at least one
// check.
std::vector<CaseResult> verify_theorem(int trials, std::uint32_t seed,
                                       int width_limit = kDefaultWidthLimit);

// Connected random polyomino with between 4 and max_cells cells, grown from
// a seed cell; deterministic in the generator state.
Region random_region(std::mt19937& rng, int max_cells);

}  // namespace dt

#endif
