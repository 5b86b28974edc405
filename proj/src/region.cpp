#include "region.hpp"

#include <algorithm>
#include <stdexcept>

#include "errors.hpp"

namespace dt {

namespace {

Box compute_box(const std::vector<Cell>& cells) {
  Box b;
  if (cells.empty()) return b;
  b.min_x = b.max_x = cells[0].x;
  b.min_y = b.max_y = cells[0].y;
  for (const Cell& c : cells) {
    b.min_x = std::min(b.min_x, c.x);
    b.max_x = std::max(b.max_x, c.x);
    b.min_y = std::min(b.min_y, c.y);
    b.max_y = std::max(b.max_y, c.y);
  }
  return b;
}

}  // namespace

Region Region::from_cells(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  Region r;
  r.box_ = compute_box(cells);
  r.cells_ = std::move(cells);
  return r;
}

bool Region::contains(Cell c) const {
  if (c.x < box_.min_x || c.x > box_.max_x || c.y < box_.min_y || c.y > box_.max_y)
    return false;
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

Region Region::translated(Cell offset) const {
  std::vector<Cell> out;
  out.reserve(cells_.size());
  for (const Cell& c : cells_) out.push_back(c + offset);
  return from_cells(std::move(out));
}

Region Region::normalized() const {
  if (cells_.empty()) return Region();
  return translated({-box_.min_x, -box_.min_y});
}

Region Region::transformed(Sym g) const {
  std::vector<Cell> out;
  out.reserve(cells_.size());
  for (const Cell& c : cells_) out.push_back(sym_cell(g, c));
  return from_cells(std::move(out)).normalized();
}

Region Region::without(const std::vector<Cell>& remove) const {
  std::vector<Cell> sorted = remove;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const Cell& c : sorted) {
    if (!contains(c))
      throw std::invalid_argument("remove_cells: cell (" + std::to_string(c.x) + "," +
                                  std::to_string(c.y) + ") not in region");
  }
  std::vector<Cell> out;
  out.reserve(cells_.size() - sorted.size());
  std::set_difference(cells_.begin(), cells_.end(), sorted.begin(), sorted.end(),
                      std::back_inserter(out));
  return from_cells(std::move(out));
}

Region Region::united_with(const Region& o) const {
  std::vector<Cell> out = cells_;
  out.insert(out.end(), o.cells_.begin(), o.cells_.end());
  return from_cells(std::move(out));
}

bool Region::intersects(const Region& o) const {
  const Region& small = size() <= o.size() ? *this : o;
  const Region& big = size() <= o.size() ? o : *this;
  for (const Cell& c : small.cells())
    if (big.contains(c)) return true;
  return false;
}

bool Region::operator==(const Region& o) const {
  if (cells_.size() != o.cells_.size()) return false;
  if (cells_.empty()) return true;
  Cell da{box_.min_x, box_.min_y}, db{o.box_.min_x, o.box_.min_y};
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] - da != o.cells_[i] - db) return false;
  }
  return true;
}

std::vector<Region> Region::components() const {
  std::vector<Region> out;
  std::vector<char> seen(cells_.size(), 0);
  for (std::size_t start = 0; start < cells_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> stack{start};
    std::vector<Cell> comp;
    seen[start] = 1;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      comp.push_back(cells_[i]);
      const Cell c = cells_[i];
      const Cell nbrs[4] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
      for (const Cell& n : nbrs) {
        auto it = std::lower_bound(cells_.begin(), cells_.end(), n);
        if (it != cells_.end() && *it == n) {
          std::size_t j = static_cast<std::size_t>(it - cells_.begin());
          if (!seen[j]) {
            seen[j] = 1;
            stack.push_back(j);
          }
        }
      }
    }
    out.push_back(from_cells(std::move(comp)));
  }
  return out;
}

bool Region::is_connected() const { return components().size() <= 1; }

std::vector<std::pair<Cell, Cell>> Region::dual_edges() const {
  std::vector<std::pair<Cell, Cell>> out;
  for (const Cell& c : cells_) {
    Cell right{c.x + 1, c.y}, up{c.x, c.y + 1};
    if (contains(right)) out.emplace_back(c, right);
    if (contains(up)) out.emplace_back(c, up);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Region rectangle(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("rectangle: dimensions must be >= 1");
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(rows) * cols);
  for (int y = 0; y < rows; ++y)
    for (int x = 0; x < cols; ++x) cells.push_back({x, y});
  return Region::from_cells(std::move(cells));
}

Region holey_square(int m, int n) {
  if (m < 0 || n <= m) throw std::invalid_argument("holey_square: need n > m >= 0");
  std::vector<Cell> cells;
  for (int y = 0; y < 2 * n; ++y)
    for (int x = 0; x < 2 * n; ++x) {
      bool in_hole = x >= n - m && x < n + m && y >= n - m && y < n + m;
      if (!in_hole) cells.push_back({x, y});
    }
  return Region::from_cells(std::move(cells));
}

Region holey_square_odd(int m, int n) {
  if (m < 0 || n <= m) throw std::invalid_argument("holey_square_odd: need n > m >= 0");
  std::vector<Cell> cells;
  for (int y = 0; y <= 2 * n; ++y)
    for (int x = 0; x <= 2 * n; ++x) {
      bool in_hole = x >= n - m && x <= n + m && y >= n - m && y <= n + m;
      if (!in_hole) cells.push_back({x, y});
    }
  return Region::from_cells(std::move(cells));
}

namespace {

// Column-wise height of the jagged cut through the 2n x 2n square: the cut
// is the polyline made of the segments [2t,2t+2] x {2n-(2t+1)} joined by
// {2n-2t} x [2t-1,2t+1]. Cells strictly below it form the lower half.
int even_cut_height(int n, int x) { return 2 * n - 1 - 2 * (x / 2); }

// Odd-square analogue. The profile is antisymmetric, h(x) + h(2n-x) = 2n+1,
// so the two halves are congruent under 180-degree rotation; the center
// column's step passes through the hole.
int odd_cut_height(int n, int x) {
  if (x < n) return 2 * n - 2 * (x / 2);
  if (x == n) return n;
  return 2 * n + 1 - odd_cut_height(n, 2 * n - x);
}

Region lower_half(int m, int n, bool odd) {
  int side = odd ? 2 * n + 1 : 2 * n;
  std::vector<Cell> cells;
  for (int x = 0; x < side; ++x) {
    int h = odd ? odd_cut_height(n, x) : even_cut_height(n, x);
    for (int y = 0; y < h; ++y) {
      bool in_hole = odd ? (x >= n - m && x <= n + m && y >= n - m && y <= n + m)
                         : (x >= n - m && x < n + m && y >= n - m && y < n + m);
      if (!in_hole) cells.push_back({x, y});
    }
  }
  return Region::from_cells(std::move(cells));
}

}  // namespace

Region half_region(int m, int n) {
  if (m < 0 || n <= m) throw std::invalid_argument("half_region: need n > m >= 0");
  return lower_half(m, n, false);
}

Region half_region_odd(int m, int n) {
  if (m < 0 || n <= m) throw std::invalid_argument("half_region_odd: need n > m >= 0");
  return lower_half(m, n, true);
}

std::vector<Cell> bottom_right_pair(const Region& r) {
  if (r.size() < 2) throw std::invalid_argument("bottom_right_pair: region too small");
  int min_y = r.bounds().min_y;
  std::vector<Cell> row;
  for (const Cell& c : r.cells())
    if (c.y == min_y) row.push_back(c);
  std::sort(row.begin(), row.end());
  if (row.size() < 2) throw std::invalid_argument("bottom_right_pair: bottom row too short");
  return {row[row.size() - 2], row[row.size() - 1]};
}

Region half_region_pruned(int m, int n) {
  Region h = half_region(m, n);
  return h.without(bottom_right_pair(h));
}

Region half_region_odd_pruned(int m, int n) {
  Region h = half_region_odd(m, n);
  return h.without(bottom_right_pair(h));
}

namespace {

// Rows listed bottom-up, each centered on the common axis of width `full`.
Region from_row_widths(const std::vector<int>& widths, int full) {
  std::vector<Cell> cells;
  for (std::size_t y = 0; y < widths.size(); ++y) {
    int w = widths[y];
    int x0 = (full - w) / 2;
    for (int x = x0; x < x0 + w; ++x) cells.push_back({x, static_cast<int>(y)});
  }
  return Region::from_cells(std::move(cells));
}

}  // namespace

Region t_region(int i, int j, int p) {
  if (i < 1 || j < 1 || p < 1) throw std::invalid_argument("t_region: need i,j,p >= 1");
  int full = j + 2 * (p - 1);
  std::vector<int> widths;
  for (int r = 0; r < i; ++r) widths.push_back(full);
  for (int q = 1; q < p; ++q) widths.push_back(full - 2 * q);
  return from_row_widths(widths, full);
}

Region d_region(int i, int j, int p) {
  if (i < 1 || j < 1 || p < 1) throw std::invalid_argument("d_region: need i,j,p >= 1");
  int full = j + 2 * (p - 1);
  std::vector<int> widths;
  for (int q = p - 1; q >= 1; --q) widths.push_back(full - 2 * q);
  for (int r = 0; r < i; ++r) widths.push_back(full);
  for (int q = 1; q < p; ++q) widths.push_back(full - 2 * q);
  return from_row_widths(widths, full);
}

Region parse_region(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) lines.push_back(cur);

  // Strip leading and trailing blank lines but remember the offset for
  // error positions.
  std::size_t first = 0, last = lines.size();
  auto is_blank = [](const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
  };
  while (first < last && is_blank(lines[first])) ++first;
  while (last > first && is_blank(lines[last - 1])) --last;
  if (first == last) throw ParseError(1, 1, "no rows");

  std::size_t width = 0;
  std::vector<std::string> rows;
  for (std::size_t i = first; i < last; ++i) {
    std::string row = lines[i];
    while (!row.empty() && (row.back() == '\r' || row.back() == ' ')) row.pop_back();
    if (i == first) width = row.size();
    if (row.size() != width)
      throw ParseError(static_cast<int>(i + 1), static_cast<int>(row.size() + 1),
                       "ragged row");
    rows.push_back(std::move(row));
  }

  std::vector<Cell> cells;
  int height = static_cast<int>(rows.size());
  for (int r = 0; r < height; ++r) {
    for (std::size_t cidx = 0; cidx < rows[r].size(); ++cidx) {
      char ch = rows[r][cidx];
      if (ch == '#') {
        cells.push_back({static_cast<int>(cidx), height - 1 - r});
      } else if (ch != '.') {
        throw ParseError(static_cast<int>(first + r + 1), static_cast<int>(cidx + 1),
                         std::string("unexpected character '") + ch + "'");
      }
    }
  }
  return Region::from_cells(std::move(cells));
}

std::string emit_region(const Region& r) { return render_region(r, {}); }

std::string render_region(const Region& r, const std::vector<Cell>& overlay) {
  Region n = r.normalized();
  Cell shift{0, 0};
  if (!r.empty()) shift = {-r.bounds().min_x, -r.bounds().min_y};
  std::vector<Cell> marks;
  for (const Cell& c : overlay) marks.push_back(c + shift);
  std::sort(marks.begin(), marks.end());
  if (n.empty()) return "";
  Box b = n.bounds();
  std::string out;
  out.reserve(static_cast<std::size_t>((b.width() + 1) * b.height()));
  for (int y = b.max_y; y >= 0; --y) {
    for (int x = 0; x <= b.max_x; ++x) {
      Cell c{x, y};
      bool marked = std::binary_search(marks.begin(), marks.end(), c);
      out.push_back(marked ? 'x' : (n.contains(c) ? '#' : '.'));
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace dt
