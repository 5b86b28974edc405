#ifndef DOMINOTILE_COUNT_HPP
#define DOMINOTILE_COUNT_HPP

#include <cstddef>
#include <vector>

#include "bigint.hpp"
#include "region.hpp"

namespace dt {

// Default cap on the profile width of the broken-profile dynamic program.
inline constexpr int kDefaultWidthLimit = 20;
// Hard cell-count guards for the two exhaustive oracles.
inline constexpr int kEnumerateCellLimit = 28;
inline constexpr int kMatchingCellLimit = 36;

// Exact number of domino tilings. The region is split into connected
// components and each component is scanned across its narrower axis; that
// width must not exceed width_limit (LimitError otherwise, naming the
// width). Zero for odd cell counts and checkerboard-imbalanced regions; the
// empty region has one (empty) tiling.
BigUint count_tilings(const Region& r, int width_limit = kDefaultWidthLimit);

// count_tilings mod 2, computed with the same scan over GF(2) instead of big
// integers.
int parity_tilings(const Region& r, int width_limit = kDefaultWidthLimit);

struct Domino {
  Cell a, b;  // a < b, edge-adjacent
  auto operator<=>(const Domino&) const = default;
};
using Tiling = std::vector<Domino>;

struct Enumeration {
  std::vector<Tiling> tilings;
  bool truncated = false;
};

// Exhaustive enumeration of all tilings (an independent oracle). Guarded at
// kEnumerateCellLimit cells; at most `cap` tilings are materialized, with
// the truncated flag set when more exist.
Enumeration enumerate_tilings(const Region& r, std::size_t cap);

// Second independent oracle: recursive perfect-matching count on the dual
// adjacency with memoization on the remaining-cell set. Guarded at
// kMatchingCellLimit cells.
BigUint count_via_matching(const Region& r);

// True when black and white cells balance under checkerboard coloring.
bool color_balanced(const Region& r);

}  // namespace dt

#endif
