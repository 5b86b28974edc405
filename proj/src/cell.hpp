#ifndef DOMINOTILE_CELL_HPP
#define DOMINOTILE_CELL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string_view>

namespace dt {

// Unit cell on the integer grid. Cell (x,y) spans [x,x+1] x [y,y+1]; the
// cell is addressed by its lower-left corner.
struct Cell {
  int x = 0;
  int y = 0;
  auto operator<=>(const Cell&) const = default;
};

inline Cell operator+(Cell a, Cell b) { return {a.x + b.x, a.y + b.y}; }
inline Cell operator-(Cell a, Cell b) { return {a.x - b.x, a.y - b.y}; }

// The eight symmetries of the square (dihedral group of order 8).
enum class Sym : std::uint8_t {
  Identity = 0,
  Rot90 = 1,   // counterclockwise
  Rot180 = 2,
  Rot270 = 3,
  MirrorX = 4,  // reflect across a vertical axis
  MirrorY = 5,  // reflect across a horizontal axis
  Transpose = 6,      // reflect across y = x
  AntiTranspose = 7,  // reflect across y = -x
};

inline constexpr int kSymCount = 8;

namespace detail {
// Row-major 2x2 matrices for each symmetry, acting on points.
inline constexpr std::array<std::array<int, 4>, kSymCount> kSymMatrix = {{
    {1, 0, 0, 1},    // Identity
    {0, -1, 1, 0},   // Rot90
    {-1, 0, 0, -1},  // Rot180
    {0, 1, -1, 0},   // Rot270
    {-1, 0, 0, 1},   // MirrorX
    {1, 0, 0, -1},   // MirrorY
    {0, 1, 1, 0},    // Transpose
    {0, -1, -1, 0},  // AntiTranspose
}};
}  // namespace detail

// Linear action on relative offsets (used when a symmetry is applied about
// the center of an anchor cell).
inline Cell sym_offset(Sym g, Cell o) {
  const auto& m = detail::kSymMatrix[static_cast<int>(g)];
  return {m[0] * o.x + m[1] * o.y, m[2] * o.x + m[3] * o.y};
}

// Action on absolute cells: the plane transform about the origin lattice
// point. A cell maps to the cell covered by the image of its unit square,
// hence the -1 shift on negated coordinates.
inline Cell sym_cell(Sym g, Cell c) {
  const auto& m = detail::kSymMatrix[static_cast<int>(g)];
  Cell r{m[0] * c.x + m[1] * c.y, m[2] * c.x + m[3] * c.y};
  if (m[0] + m[1] < 0) --r.x;
  if (m[2] + m[3] < 0) --r.y;
  return r;
}

Sym sym_compose(Sym a, Sym b);  // apply b first, then a
Sym sym_inverse(Sym g);
std::string_view sym_name(Sym g);

}  // namespace dt

#endif
