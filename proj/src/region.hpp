#ifndef DOMINOTILE_REGION_HPP
#define DOMINOTILE_REGION_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cell.hpp"

namespace dt {

struct Box {
  int min_x = 0, min_y = 0, max_x = -1, max_y = -1;  // inclusive; empty when max < min
  int width() const { return max_x - min_x + 1; }
  int height() const { return max_y - min_y + 1; }
};

// A finite set of unit cells. Immutable value type; every operation returns
// a new region. Cells are kept sorted by (x, y). Regions are compared by
// their normalized cell sets (translated so min x = min y = 0): two regions
// are the same shape regardless of where they sit on the grid.
class Region {
 public:
  Region() = default;
  static Region from_cells(std::vector<Cell> cells);

  bool contains(Cell c) const;
  int size() const { return static_cast<int>(cells_.size()); }
  bool empty() const { return cells_.empty(); }
  const std::vector<Cell>& cells() const { return cells_; }
  Box bounds() const { return box_; }

  Region translated(Cell offset) const;
  Region normalized() const;
  Region transformed(Sym g) const;  // applies g about the origin, then normalizes
  Region without(const std::vector<Cell>& remove) const;  // invalid_argument on absent cell
  Region united_with(const Region& o) const;
  bool intersects(const Region& o) const;

  bool operator==(const Region& o) const;

  std::vector<Region> components() const;
  bool is_connected() const;  // empty region counts as connected

  // Edges of the dual grid graph: one entry per unordered pair of
  // edge-adjacent cells, lexicographically ordered.
  std::vector<std::pair<Cell, Cell>> dual_edges() const;

 private:
  std::vector<Cell> cells_;
  Box box_;
};

// Region builders. All of them produce normalized regions and throw
// std::invalid_argument on parameters outside their stated domain.
Region rectangle(int rows, int cols);
Region holey_square(int m, int n);       // 2n x 2n square, centered 2m x 2m hole
Region holey_square_odd(int m, int n);   // (2n+1) square, centered (2m+1) hole
Region half_region(int m, int n);        // lower half of holey_square under the jagged cut
Region half_region_pruned(int m, int n);  // half_region minus its forced bottom-right domino
Region half_region_odd(int m, int n);
Region half_region_odd_pruned(int m, int n);
Region t_region(int i, int j, int p);
Region d_region(int i, int j, int p);

// The two bottom-rightmost cells (maximal x among cells of minimal y).
std::vector<Cell> bottom_right_pair(const Region& r);

// ASCII grid format: '#' cell present, '.' cell absent, one row per line,
// top line is the highest row. Leading/trailing blank lines are ignored;
// rows must all have the same width. emit produces the normalized region.
Region parse_region(std::string_view text);
std::string emit_region(const Region& r);

// emit_region with an optional set of cells drawn as 'x' (used to overlay
// removed strips on a picture). Overlay cells outside the region are drawn
// over the bounding box when they fall inside it.
std::string render_region(const Region& r, const std::vector<Cell>& overlay);

}  // namespace dt

#endif
