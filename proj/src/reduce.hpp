#ifndef DOMINOTILE_REDUCE_HPP
#define DOMINOTILE_REDUCE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corner.hpp"
#include "count.hpp"
#include "region.hpp"

namespace dt {

// Two-term parity split at a corner complete up to k:
//   parity(R) = parity(R minus ({k,k+1};p)-strip)
//             ^ parity(R minus ({k+1,k};p)-strip)
// A strip that does not fit inside R contributes parity 0; its slot is left
// empty and the cells are recorded anyway.
struct OpenSplit {
  std::optional<Region> a, b;
  std::vector<Cell> strip_a, strip_b;
  int parity(int width_limit = kDefaultWidthLimit) const;
};
OpenSplit reduce_open(const Region& r, const StCorner& c, int k);

// Single-term reduction at a corner walled at s (s <= t): removing the
// ({s,s+1};p)-strip with s cells along the walled side preserves parity.
struct WallResult {
  Region remainder;
  std::vector<Cell> strip;
};
WallResult reduce_wall(const Region& r, const StCorner& c);

// Certificate that the region has an ({s,s};p)-corner complete up to s and
// walled on both sides, forcing an even tiling count.
struct EvenCertificate {
  StCorner corner;
};
EvenCertificate even_by_double_wall(const Region& r, const StCorner& c);

// Non-throwing qualification probes for the two reductions above.
bool wall_applicable(const Region& r, const StCorner& c);
bool even_applicable(const Region& r, const StCorner& c);

enum class StepKind { Open, Wall, Even };

struct ReductionStep {
  StepKind kind = StepKind::Wall;
  StCorner corner;
  int k = 0;                   // open: split level; wall/even: s
  std::vector<Cell> removed;   // cells actually removed (both strips for open)
  bool a_zero = false, b_zero = false;  // open: vanished terms
  int target = 0;              // region index the step applied to
  int child_a = -1, child_b = -1;       // result region indices (-1 = none)
};

enum class TerminalKind { Empty, ColorImbalance, EvenCertified, Remainder };

struct ReductionTrace {
  std::string start_label;
  std::vector<Region> regions;  // regions[0] is the start
  std::vector<ReductionStep> steps;
  std::vector<std::pair<int, TerminalKind>> terminals;  // region index, reason
  int claimed_parity = 0;
};

// Repeatedly applies even_by_double_wall / reduce_wall at the
// lexicographically first qualifying corner until the region is empty,
// color-imbalanced, or has no qualifying corner. Terminal parities come
// from parity_tilings.
ReductionTrace reduce_wall_greedy(const Region& r, const std::string& label,
                                  int width_limit = kDefaultWidthLimit);

// A fully explicit scripted step: the corner is looked up by frame and the
// stated parameters must match exactly.
struct ScriptStep {
  StepKind kind = StepKind::Wall;
  Cell apex;
  Sym orient = Sym::Identity;
  int p = 1;
  int k = 0;
};

// Applies the given steps in order. Each step targets the first active
// region whose corner matches; a precondition failure raises
// PreconditionError naming the step index.
ReductionTrace reduce_scripted(const Region& r, const std::vector<ScriptStep>& script,
                               const std::string& label,
                               int width_limit = kDefaultWidthLimit);

// Line format:
//   start <label>
//   step <n>: <open|wall|even> apex=(x,y) orient=<0..7> s=<s> t=<t> p=<p>
//        k=<k> removed=[(x,y),...]
//   parity <0|1>
std::string serialize_trace(const ReductionTrace& t);

struct TraceCheck {
  bool pass = false;
  std::vector<std::string> lines;  // one CASE line per step plus the parity claim
};

// Re-validates a serialized trace against its start region: every step's
// corner, preconditions and removed cells are recomputed, the parity
// identity is checked against parity_tilings for steps small enough, and
// the footer parity claim is recomputed from the terminal regions.
TraceCheck verify_trace(const Region& start, std::string_view trace_text,
                        int width_limit = kDefaultWidthLimit);

// The removed cells recorded by the 1-based step of a serialized trace.
// Throws ParseError on malformed text, std::invalid_argument on a bad step
// number.
std::vector<Cell> trace_step_cells(std::string_view trace_text, int step);

}  // namespace dt

#endif
