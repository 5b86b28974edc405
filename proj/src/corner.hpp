#ifndef DOMINOTILE_CORNER_HPP
#define DOMINOTILE_CORNER_HPP

#include <optional>
#include <vector>

#include "region.hpp"

namespace dt {

// Frame of reference locating a corner inside a region. The frame maps a
// canonical picture onto the grid: local offsets are rotated/reflected by
// `orient` about the anchor cell a0.
//
// Canonical picture, local coordinates, region up and to the left:
//
//   s-leg        cells (-r, 0) for 0 <= r < s, boundary below
//   staircase    connectors (r, r+1) for 0 <= r < p-1,
//                unit steps (r, r) for 1 <= r < p-1
//   t-leg        cells (p-1, p-1+q) for 0 <= q < t, boundary on the right
//
// a0 is the inner end of the s-leg. For p = 1 the t-leg starts on a0 itself
// and the corner is the ordinary convex corner at that cell.
struct CornerFrame {
  Cell a0;
  Sym orient = Sym::Identity;
  Cell to_world(Cell local) const { return a0 + sym_offset(orient, local); }
};

// A located ({s,t};p)-corner. s and t are the maximal bounding segment
// lengths for this frame. Each physical corner has exactly two frames (the
// legs can trade roles); find_corners reports the one with s <= t.
struct StCorner {
  int s = 0, t = 0, p = 1;
  CornerFrame frame;

  Cell apex() const { return frame.a0; }
  Cell t_leg_base() const { return frame.to_world({p - 1, p - 1}); }
  StCorner swapped() const;  // the same corner with leg roles exchanged
};

enum class CornerSide { S, T };

// Detects the corner with the given inner end, orientation and staircase
// depth, if the region has one; s and t are computed maximal.
std::optional<StCorner> corner_at(const Region& r, Cell a0, Sym orient, int p);

// Every maximal corner of the region, one frame per physical corner
// (s <= t, ties broken by orientation index), ordered lexicographically by
// apex then orientation then p.
std::vector<StCorner> find_corners(const Region& r);

// Cells of the ({i,j};p)-strip hugging the corner: i cells along the s-side,
// j along the t-side, plus the staircase between them. Ordered from the
// s-side outer end to the t-side outer end; consecutive cells are
// edge-adjacent. Purely geometric: cells may fall outside the region when
// i = s+1 or j = t+1 (one-cell overshoot past a leg).
std::vector<Cell> strip_cells(const CornerFrame& f, int p, int i, int j);
std::vector<Cell> strip_cells(const StCorner& c, int i, int j);

using Strip = std::vector<Cell>;

// strip_cells with validation: requires 1 <= i <= s, 1 <= j <= t and every
// cell present in the region (NotApplicableError naming the first absent
// cell otherwise).
Strip extract_strip(const Region& r, const StCorner& c, int i, int j);

// Whether the leg on the given side ends in another convex corner at its
// far endpoint (the cell continuing the leg beyond the segment is absent).
bool is_walled_at(const Region& r, const StCorner& c, CornerSide side);

// The inductive completeness condition licensing the parity reductions:
// for each i in 2..k, the ({i,i};p)-strip C is examined; if either cell
// flanking the ends of C is present the full adjacent ({i-1,i-1};p)-strip
// must be present too, and the corner left after removing C must be
// complete up to i-2. k must lie in [1, min(s,t)]; k = 1 is vacuously true.
bool is_complete_up_to(const Region& r, const StCorner& c, int k);

// Largest k for which is_complete_up_to holds.
int max_completeness(const Region& r, const StCorner& c);

}  // namespace dt

#endif
