#include "corner.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "errors.hpp"

namespace dt {

StCorner StCorner::swapped() const {
  StCorner o;
  o.s = t;
  o.t = s;
  o.p = p;
  o.frame.a0 = frame.to_world({p - 1, p - 1});
  o.frame.orient = sym_compose(frame.orient, Sym::AntiTranspose);
  return o;
}

std::optional<StCorner> corner_at(const Region& r, Cell a0, Sym orient, int p) {
  if (p < 1) return std::nullopt;
  CornerFrame f{a0, orient};
  auto in = [&](int u, int v) { return r.contains(f.to_world({u, v})); };

  // Staircase cells present, the diagonal just outside it absent.
  if (!in(0, 0)) return std::nullopt;
  for (int q = 0; q < p - 1; ++q) {
    if (!in(q, q + 1)) return std::nullopt;       // connector
    if (q >= 1 && !in(q, q)) return std::nullopt;  // unit step
  }
  if (p >= 2 && !in(p - 1, p - 1)) return std::nullopt;  // t-leg base
  for (int q = 0; q < p; ++q)
    if (in(q + 1, q)) return std::nullopt;

  // Maximal bounded runs along both legs.
  int s = 0;
  while (in(-s, 0) && !in(-s, -1)) ++s;
  int t = 0;
  while (in(p - 1, p - 1 + t) && !in(p, p - 1 + t)) ++t;
  if (s < 1 || t < 1) return std::nullopt;
  if (p >= 2 && (s < 2 || t < 2)) return std::nullopt;
  return StCorner{s, t, p, f};
}

namespace {

// Identity of the physical corner independent of which leg plays the s
// role: the two (endpoint, outward direction) leg rays, unordered.
using LegRay = std::tuple<int, int, int, int>;
using CornerKey = std::tuple<int, LegRay, LegRay>;

CornerKey corner_key(const StCorner& c) {
  Cell sd = sym_offset(c.frame.orient, {-1, 0});
  Cell td = sym_offset(c.frame.orient, {0, 1});
  LegRay a{c.apex().x, c.apex().y, sd.x, sd.y};
  LegRay b{c.t_leg_base().x, c.t_leg_base().y, td.x, td.y};
  if (b < a) std::swap(a, b);
  return {c.p, a, b};
}

}  // namespace

std::vector<StCorner> find_corners(const Region& r) {
  std::vector<StCorner> out;
  if (r.empty()) return out;
  Box b = r.bounds();
  const int p_cap = std::max(b.width(), b.height()) + 1;
  std::map<CornerKey, StCorner> seen;
  for (int oi = 0; oi < kSymCount; ++oi) {
    Sym g = static_cast<Sym>(oi);
    for (const Cell& a0 : r.cells()) {
      for (int p = 1; p <= p_cap; ++p) {
        // A probe failing at depth p can still succeed deeper (the t-run is
        // cut short by the continuation of a longer staircase), so every p
        // up to the cap is tried.
        auto c = corner_at(r, a0, g, p);
        if (!c) continue;
        if (c->s > c->t) continue;  // the swapped twin is reported instead
        if (c->s == c->t) {
          StCorner tw = c->swapped();
          if (static_cast<int>(tw.frame.orient) < static_cast<int>(c->frame.orient))
            continue;
        }
        seen.emplace(corner_key(*c), *c);
      }
    }
  }
  for (auto& [key, c] : seen) out.push_back(c);
  std::sort(out.begin(), out.end(), [](const StCorner& a, const StCorner& b) {
    return std::tuple(a.apex().x, a.apex().y, static_cast<int>(a.frame.orient), a.p) <
           std::tuple(b.apex().x, b.apex().y, static_cast<int>(b.frame.orient), b.p);
  });
  return out;
}

std::vector<Cell> strip_cells(const CornerFrame& f, int p, int i, int j) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(i + j + 2 * p - 3));
  for (int r = i - 1; r >= 0; --r) cells.push_back(f.to_world({-r, 0}));
  for (int q = 0; q < p - 1; ++q) {
    cells.push_back(f.to_world({q, q + 1}));                       // connector
    if (q + 1 <= p - 2) cells.push_back(f.to_world({q + 1, q + 1}));  // unit step
  }
  // For p = 1 the t-leg base coincides with a0, already emitted.
  for (int q = (p == 1 ? 1 : 0); q < j; ++q) cells.push_back(f.to_world({p - 1, p - 1 + q}));
  return cells;
}

std::vector<Cell> strip_cells(const StCorner& c, int i, int j) {
  return strip_cells(c.frame, c.p, i, j);
}

Strip extract_strip(const Region& r, const StCorner& c, int i, int j) {
  if (i < 1 || i > c.s || j < 1 || j > c.t)
    throw std::invalid_argument("extract_strip: need 1 <= i <= s and 1 <= j <= t");
  Strip cells = strip_cells(c, i, j);
  for (const Cell& cell : cells) {
    if (!r.contains(cell))
      throw NotApplicableError("extract_strip: cell (" + std::to_string(cell.x) + "," +
                               std::to_string(cell.y) + ") not in region");
  }
  return cells;
}

bool is_walled_at(const Region& r, const StCorner& c, CornerSide side) {
  Cell beyond = side == CornerSide::S ? c.frame.to_world({-c.s, 0})
                                      : c.frame.to_world({c.p - 1, c.p - 1 + c.t});
  return !r.contains(beyond);
}

namespace {

// Item (3) of the completeness definition requires the examined subregion's
// dual to be a grid-graph patch. In a plain cell-set model two coordinate-
// adjacent cells are always dual-adjacent (there are no slits), so the
// check holds by construction; it is kept as an explicit hook for models
// with severable adjacencies.
bool examined_is_grid_patch(const Region&, const std::vector<Cell>&) { return true; }

bool complete_rec(const Region& r, const StCorner& c, int k);

bool i_complete(const Region& r, const StCorner& c, int i) {
  const CornerFrame& f = c.frame;
  std::vector<Cell> C = strip_cells(c, i, i);
  for (const Cell& cell : C)
    if (!r.contains(cell)) return false;

  // Flanking cells beside the two ends of C, off the corner's legs.
  Cell x = f.to_world({-(i - 1), 1});
  Cell y = f.to_world({c.p - 2, c.p - 2 + i});
  std::vector<Cell> examined = C;
  if (r.contains(x) || r.contains(y)) {
    CornerFrame inner{f.to_world({-1, 1}), f.orient};
    for (const Cell& cell : strip_cells(inner, c.p, i - 1, i - 1)) {
      if (!r.contains(cell)) return false;
      examined.push_back(cell);
    }
  }
  if (!examined_is_grid_patch(r, examined)) return false;

  // The corner left by removing C must itself be complete up to i-2.
  Region rest = r.without(C);
  auto next = corner_at(rest, f.to_world({-1, 1}), f.orient, c.p);
  if (next && i - 2 >= 2 && i - 2 <= std::min(next->s, next->t)) {
    if (!complete_rec(rest, *next, i - 2)) return false;
  }
  return true;
}

bool complete_rec(const Region& r, const StCorner& c, int k) {
  for (int i = 3; i <= k; ++i)
    if (!i_complete(r, c, i)) return false;
  return true;
}

}  // namespace

bool is_complete_up_to(const Region& r, const StCorner& c, int k) {
  if (k < 1 || k > std::min(c.s, c.t))
    throw std::invalid_argument("is_complete_up_to: k out of range [1, min(s,t)]");
  if (k == 1) return true;
  return complete_rec(r, c, k);
}

int max_completeness(const Region& r, const StCorner& c) {
  int limit = std::min(c.s, c.t);
  int best = limit >= 2 ? 2 : 1;
  for (int k = 3; k <= limit; ++k) {
    if (!i_complete(r, c, k))
      break;
    best = k;
  }
  return best;
}

}  // namespace dt
