#include "count.hpp"

#include <algorithm>
#include <unordered_map>

#include "errors.hpp"

namespace dt {

namespace {

// Accumulator over GF(2) with the same interface as BigUint where the DP
// needs it, so both counters share one transition routine.
struct Gf2 {
  bool v = false;
  Gf2& operator+=(const Gf2& o) {
    v ^= o.v;
    return *this;
  }
  bool is_zero() const { return !v; }
};

template <class W>
W one_weight();
template <>
BigUint one_weight<BigUint>() { return BigUint(1); }
template <>
Gf2 one_weight<Gf2>() { return Gf2{true}; }

// Broken-profile scan of a single connected component. The component is
// normalized and transposed if needed so the x-extent is the narrow axis.
// Cells are processed in row-major order; mask bit x means "this frontier
// cell is already covered by an earlier domino".
template <class W>
W profile_count(const Region& component, int width_limit) {
  Region r = component.normalized();
  Box b = r.bounds();
  if (b.width() > b.height()) {
    r = r.transformed(Sym::Transpose);
    b = r.bounds();
  }
  const int w = b.width();
  const int h = b.height();
  if (w > width_limit)
    throw LimitError("profile width " + std::to_string(w) + " exceeds limit " +
                     std::to_string(width_limit));

  std::vector<char> present(static_cast<std::size_t>(w) * h, 0);
  for (const Cell& c : r.cells()) present[static_cast<std::size_t>(c.y) * w + c.x] = 1;
  auto at = [&](int x, int y) {
    return x >= 0 && x < w && y >= 0 && y < h &&
           present[static_cast<std::size_t>(y) * w + x];
  };

  std::unordered_map<std::uint32_t, W> states;
  states.emplace(0u, one_weight<W>());
  std::unordered_map<std::uint32_t, W> next;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      next.clear();
      const std::uint32_t bit = 1u << x;
      auto add = [&](std::uint32_t m, const W& wgt) {
        auto [it, fresh] = next.emplace(m, wgt);
        if (!fresh) it->second += wgt;
      };
      for (auto& [mask, wgt] : states) {
        const bool covered = mask & bit;
        if (!at(x, y)) {
          add(mask, wgt);  // absent cell: frontier slot stays empty
        } else if (covered) {
          add(mask & ~bit, wgt);
        } else {
          if (at(x, y + 1)) add(mask | bit, wgt);  // vertical, covers (x, y+1)
          if (x + 1 < w && at(x + 1, y) && !(mask & (bit << 1)))
            add(mask | (bit << 1), wgt);  // horizontal, covers (x+1, y)
        }
      }
      states.swap(next);
    }
  }
  auto it = states.find(0u);
  return it == states.end() ? W() : it->second;
}

}  // namespace

bool color_balanced(const Region& r) {
  int diff = 0;
  for (const Cell& c : r.cells()) diff += ((c.x + c.y) & 1) ? 1 : -1;
  return diff == 0;
}

BigUint count_tilings(const Region& r, int width_limit) {
  if (r.empty()) return BigUint(1);
  if (r.size() % 2 || !color_balanced(r)) return BigUint(0);
  BigUint total(1);
  for (const Region& comp : r.components()) {
    BigUint c = profile_count<BigUint>(comp, width_limit);
    if (c.is_zero()) return BigUint(0);
    total = total * c;
  }
  return total;
}

int parity_tilings(const Region& r, int width_limit) {
  if (r.empty()) return 1;
  if (r.size() % 2 || !color_balanced(r)) return 0;
  for (const Region& comp : r.components()) {
    if (profile_count<Gf2>(comp, width_limit).is_zero()) return 0;
  }
  return 1;
}

Enumeration enumerate_tilings(const Region& r, std::size_t cap) {
  if (r.size() > kEnumerateCellLimit)
    throw LimitError("enumerate_tilings: " + std::to_string(r.size()) +
                     " cells exceeds guard of " + std::to_string(kEnumerateCellLimit));
  Enumeration out;
  if (r.size() % 2) return out;
  const auto& cells = r.cells();
  const int n = r.size();
  if (n == 0) {
    out.tilings.push_back({});
    return out;
  }

  // neighbor indices per cell
  std::vector<std::vector<int>> nbr(n);
  for (int i = 0; i < n; ++i) {
    const Cell c = cells[i];
    const Cell cand[4] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
    for (const Cell& d : cand) {
      auto it = std::lower_bound(cells.begin(), cells.end(), d);
      if (it != cells.end() && *it == d) nbr[i].push_back(static_cast<int>(it - cells.begin()));
    }
  }

  std::uint32_t covered = 0;
  Tiling current;
  bool done = false;
  auto rec = [&](auto&& self, int from) -> void {
    if (done) return;
    int i = from;
    while (i < n && (covered & (1u << i))) ++i;
    if (i == n) {
      if (out.tilings.size() == cap) {
        out.truncated = true;
        done = true;
        return;
      }
      out.tilings.push_back(current);
      return;
    }
    for (int j : nbr[i]) {
      if (covered & (1u << j)) continue;
      covered |= (1u << i) | (1u << j);
      Cell a = cells[i], b = cells[j];
      current.push_back(a < b ? Domino{a, b} : Domino{b, a});
      self(self, i + 1);
      current.pop_back();
      covered &= ~((1u << i) | (1u << j));
      if (done) return;
    }
  };
  rec(rec, 0);
  return out;
}

BigUint count_via_matching(const Region& r) {
  if (r.size() > kMatchingCellLimit)
    throw LimitError("count_via_matching: " + std::to_string(r.size()) +
                     " cells exceeds guard of " + std::to_string(kMatchingCellLimit));
  if (r.size() % 2) return BigUint(0);
  if (r.empty()) return BigUint(1);
  const auto& cells = r.cells();
  const int n = r.size();
  std::vector<std::vector<int>> nbr(n);
  for (int i = 0; i < n; ++i) {
    const Cell c = cells[i];
    const Cell cand[4] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
    for (const Cell& d : cand) {
      auto it = std::lower_bound(cells.begin(), cells.end(), d);
      if (it != cells.end() && *it == d) nbr[i].push_back(static_cast<int>(it - cells.begin()));
    }
  }
  std::unordered_map<std::uint64_t, BigUint> memo;
  auto rec = [&](auto&& self, std::uint64_t covered) -> BigUint {
    if (covered == (n == 64 ? ~0ull : (1ull << n) - 1)) return BigUint(1);
    auto it = memo.find(covered);
    if (it != memo.end()) return it->second;
    int i = 0;
    while (covered & (1ull << i)) ++i;
    BigUint total(0);
    for (int j : nbr[i]) {
      if (covered & (1ull << j)) continue;
      total += self(self, covered | (1ull << i) | (1ull << j));
    }
    memo.emplace(covered, total);
    return total;
  };
  return rec(rec, 0);
}

}  // namespace dt
