#include "reduce.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace dt {

namespace {

bool all_in(const Region& r, const std::vector<Cell>& cells) {
  for (const Cell& c : cells)
    if (!r.contains(c)) return false;
  return true;
}

// The corner must describe the region it is applied to; a stale or tampered
// frame is a precondition failure, not undefined behavior.
void require_genuine(const Region& r, const StCorner& c, const char* who) {
  auto found = corner_at(r, c.frame.a0, c.frame.orient, c.p);
  if (!found || found->s != c.s || found->t != c.t)
    throw PreconditionError(std::string(who) + ": corner does not match the region");
}

}  // namespace

bool wall_applicable(const Region& r, const StCorner& c) {
  if (c.s > c.t) return false;
  if (!is_walled_at(r, c, CornerSide::S)) return false;
  if (!is_complete_up_to(r, c, c.s)) return false;
  return all_in(r, strip_cells(c, c.s, c.s + 1));
}

bool even_applicable(const Region& r, const StCorner& c) {
  return c.s == c.t && is_walled_at(r, c, CornerSide::S) &&
         is_walled_at(r, c, CornerSide::T) && is_complete_up_to(r, c, c.s);
}

int OpenSplit::parity(int width_limit) const {
  int pa = a ? parity_tilings(*a, width_limit) : 0;
  int pb = b ? parity_tilings(*b, width_limit) : 0;
  return pa ^ pb;
}

OpenSplit reduce_open(const Region& r, const StCorner& c, int k) {
  if (k < 1 || k > std::min(c.s, c.t))
    throw std::invalid_argument("reduce_open: k out of range [1, min(s,t)]");
  if (c.p > 1 && k < 2)
    throw std::invalid_argument("reduce_open: k = 1 is only available for p = 1");
  require_genuine(r, c, "reduce_open");
  if (!is_complete_up_to(r, c, k))
    throw PreconditionError("reduce_open: corner is not complete up to " + std::to_string(k));

  OpenSplit out;
  out.strip_a = strip_cells(c, k, k + 1);
  out.strip_b = strip_cells(c, k + 1, k);
  if (all_in(r, out.strip_a)) out.a = r.without(out.strip_a);
  if (all_in(r, out.strip_b)) out.b = r.without(out.strip_b);
  return out;
}

WallResult reduce_wall(const Region& r, const StCorner& c) {
  require_genuine(r, c, "reduce_wall");
  if (c.s > c.t) throw PreconditionError("reduce_wall: needs s <= t");
  if (!is_walled_at(r, c, CornerSide::S))
    throw PreconditionError("reduce_wall: corner is not walled at s");
  if (!is_complete_up_to(r, c, c.s))
    throw PreconditionError("reduce_wall: corner is not complete up to s");
  std::vector<Cell> strip = strip_cells(c, c.s, c.s + 1);
  if (!all_in(r, strip))
    throw PreconditionError(
        "reduce_wall: strip leaves the region (double wall; use even_by_double_wall)");
  return {r.without(strip), std::move(strip)};
}

EvenCertificate even_by_double_wall(const Region& r, const StCorner& c) {
  require_genuine(r, c, "even_by_double_wall");
  if (c.s != c.t) throw PreconditionError("even_by_double_wall: needs s = t");
  if (!is_walled_at(r, c, CornerSide::S) || !is_walled_at(r, c, CornerSide::T))
    throw PreconditionError("even_by_double_wall: corner is not walled on both sides");
  if (!is_complete_up_to(r, c, c.s))
    throw PreconditionError("even_by_double_wall: corner is not complete up to s");
  return {c};
}

namespace {

TerminalKind classify_terminal(const Region& r) {
  if (r.empty()) return TerminalKind::Empty;
  if (r.size() % 2 || !color_balanced(r)) return TerminalKind::ColorImbalance;
  return TerminalKind::Remainder;
}

int trace_parity(const ReductionTrace& t, const std::vector<int>& live, int width_limit) {
  int parity = 0;
  for (int id : live) parity ^= parity_tilings(t.regions[id], width_limit);
  return parity;  // even-certified terminals contribute 0 and are not live
}

}  // namespace

ReductionTrace reduce_wall_greedy(const Region& r, const std::string& label,
                                  int width_limit) {
  ReductionTrace tr;
  tr.start_label = label;
  tr.regions.push_back(r);
  int cur = 0;
  while (true) {
    const Region R = tr.regions[cur];
    if (R.empty() || R.size() % 2 || !color_balanced(R)) {
      tr.terminals.emplace_back(cur, classify_terminal(R));
      break;
    }
    bool advanced = false;
    bool certified = false;
    for (const StCorner& c : find_corners(R)) {
      if (even_applicable(R, c)) {
        ReductionStep st;
        st.kind = StepKind::Even;
        st.corner = c;
        st.k = c.s;
        st.target = cur;
        tr.steps.push_back(st);
        tr.terminals.emplace_back(cur, TerminalKind::EvenCertified);
        certified = true;
        break;
      }
      const StCorner* pick = nullptr;
      StCorner swapped = c.swapped();
      if (wall_applicable(R, c))
        pick = &c;
      else if (c.s == c.t && wall_applicable(R, swapped))
        pick = &swapped;
      if (pick) {
        WallResult w = reduce_wall(R, *pick);
        ReductionStep st;
        st.kind = StepKind::Wall;
        st.corner = *pick;
        st.k = pick->s;
        st.removed = w.strip;
        st.target = cur;
        st.child_a = static_cast<int>(tr.regions.size());
        tr.regions.push_back(w.remainder);
        tr.steps.push_back(st);
        cur = st.child_a;
        advanced = true;
        break;
      }
    }
    if (certified) break;
    if (!advanced) {
      tr.terminals.emplace_back(cur, TerminalKind::Remainder);
      break;
    }
  }
  std::vector<int> live;
  for (auto& [id, kind] : tr.terminals)
    if (kind != TerminalKind::EvenCertified) live.push_back(id);
  tr.claimed_parity = trace_parity(tr, live, width_limit);
  return tr;
}

ReductionTrace reduce_scripted(const Region& r, const std::vector<ScriptStep>& script,
                               const std::string& label, int width_limit) {
  ReductionTrace tr;
  tr.start_label = label;
  tr.regions.push_back(r);
  std::vector<int> active{0};
  std::vector<int> even_ids;
  for (std::size_t idx = 0; idx < script.size(); ++idx) {
    const ScriptStep& ss = script[idx];
    int target = -1;
    StCorner corner;
    std::string why;
    for (int id : active) {
      auto c = corner_at(tr.regions[id], ss.apex, ss.orient, ss.p);
      if (!c) continue;
      try {
        switch (ss.kind) {
          case StepKind::Wall:
            reduce_wall(tr.regions[id], *c);
            break;
          case StepKind::Even:
            even_by_double_wall(tr.regions[id], *c);
            break;
          case StepKind::Open:
            reduce_open(tr.regions[id], *c, ss.k);
            break;
        }
      } catch (const std::exception& e) {
        why = e.what();
        continue;
      }
      target = id;
      corner = *c;
      break;
    }
    if (target < 0)
      throw PreconditionError("script step " + std::to_string(idx + 1) + ": " +
                              (why.empty() ? "no active region has the stated corner" : why));

    ReductionStep st;
    st.kind = ss.kind;
    st.corner = corner;
    st.target = target;
    const Region& R = tr.regions[target];
    switch (ss.kind) {
      case StepKind::Wall: {
        WallResult w = reduce_wall(R, corner);
        st.k = corner.s;
        st.removed = w.strip;
        st.child_a = static_cast<int>(tr.regions.size());
        tr.regions.push_back(w.remainder);
        break;
      }
      case StepKind::Even: {
        even_by_double_wall(R, corner);
        st.k = corner.s;
        even_ids.push_back(target);
        break;
      }
      case StepKind::Open: {
        OpenSplit split = reduce_open(R, corner, ss.k);
        st.k = ss.k;
        st.a_zero = !split.a.has_value();
        st.b_zero = !split.b.has_value();
        if (split.a) {
          st.removed.insert(st.removed.end(), split.strip_a.begin(), split.strip_a.end());
          st.child_a = static_cast<int>(tr.regions.size());
          tr.regions.push_back(*split.a);
        }
        if (split.b) {
          st.removed.insert(st.removed.end(), split.strip_b.begin(), split.strip_b.end());
          st.child_b = static_cast<int>(tr.regions.size());
          tr.regions.push_back(*split.b);
        }
        break;
      }
    }
    active.erase(std::find(active.begin(), active.end(), target));
    if (st.child_a >= 0) active.push_back(st.child_a);
    if (st.child_b >= 0) active.push_back(st.child_b);
    std::sort(active.begin(), active.end());
    tr.steps.push_back(st);
  }
  for (int id : active) tr.terminals.emplace_back(id, classify_terminal(tr.regions[id]));
  for (int id : even_ids) tr.terminals.emplace_back(id, TerminalKind::EvenCertified);
  tr.claimed_parity = trace_parity(tr, active, width_limit);
  return tr;
}

namespace {

const char* kind_name(StepKind k) {
  switch (k) {
    case StepKind::Open: return "open";
    case StepKind::Wall: return "wall";
    case StepKind::Even: return "even";
  }
  return "?";
}

}  // namespace

std::string serialize_trace(const ReductionTrace& t) {
  std::ostringstream out;
  out << "start " << t.start_label << "\n";
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const ReductionStep& st = t.steps[i];
    out << "step " << (i + 1) << ": " << kind_name(st.kind) << " apex=(" << st.corner.apex().x
        << "," << st.corner.apex().y << ") orient=" << static_cast<int>(st.corner.frame.orient)
        << " s=" << st.corner.s << " t=" << st.corner.t << " p=" << st.corner.p
        << " k=" << st.k << " removed=[";
    for (std::size_t j = 0; j < st.removed.size(); ++j) {
      if (j) out << ",";
      out << "(" << st.removed[j].x << "," << st.removed[j].y << ")";
    }
    out << "]\n";
  }
  out << "parity " << t.claimed_parity << "\n";
  return out.str();
}

namespace {

struct ParsedStep {
  StepKind kind;
  Cell apex;
  int orient, s, t, p, k;
  std::vector<Cell> removed;
};

struct ParsedTrace {
  std::string label;
  std::vector<ParsedStep> steps;
  int parity = -1;
};

bool parse_trace_text(std::string_view text, ParsedTrace& out, std::string& err) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool saw_start = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.rfind("start ", 0) == 0) {
      out.label = line.substr(6);
      saw_start = true;
      continue;
    }
    if (line.rfind("parity ", 0) == 0) {
      out.parity = std::atoi(line.c_str() + 7);
      continue;
    }
    if (line.rfind("step ", 0) == 0) {
      ParsedStep st{};
      char kind[16] = {0};
      int n = 0, consumed = 0;
      if (std::sscanf(line.c_str(),
                      "step %d: %15s apex=(%d,%d) orient=%d s=%d t=%d p=%d k=%d removed=[%n",
                      &n, kind, &st.apex.x, &st.apex.y, &st.orient, &st.s, &st.t, &st.p,
                      &st.k, &consumed) != 9) {
        err = "malformed step line " + std::to_string(lineno);
        return false;
      }
      std::string ks(kind);
      if (ks == "open")
        st.kind = StepKind::Open;
      else if (ks == "wall")
        st.kind = StepKind::Wall;
      else if (ks == "even")
        st.kind = StepKind::Even;
      else {
        err = "unknown step kind '" + ks + "' on line " + std::to_string(lineno);
        return false;
      }
      const char* rest = line.c_str() + consumed;
      while (*rest && *rest != ']') {
        int cx, cy, used = 0;
        if (std::sscanf(rest, " (%d,%d)%n", &cx, &cy, &used) != 2) {
          err = "malformed removed list on line " + std::to_string(lineno);
          return false;
        }
        st.removed.push_back({cx, cy});
        rest += used;
        if (*rest == ',') ++rest;
      }
      out.steps.push_back(std::move(st));
      continue;
    }
    err = "unrecognized line " + std::to_string(lineno);
    return false;
  }
  if (!saw_start) {
    err = "missing start header";
    return false;
  }
  if (out.parity < 0) {
    err = "missing parity footer";
    return false;
  }
  return true;
}

std::vector<Cell> sorted(std::vector<Cell> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<Cell> trace_step_cells(std::string_view trace_text, int step) {
  ParsedTrace parsed;
  std::string err;
  if (!parse_trace_text(trace_text, parsed, err)) throw ParseError(1, 1, err);
  if (step < 1 || step > static_cast<int>(parsed.steps.size()))
    throw std::invalid_argument("trace has no step " + std::to_string(step));
  return parsed.steps[static_cast<std::size_t>(step - 1)].removed;
}

TraceCheck verify_trace(const Region& start, std::string_view trace_text, int width_limit) {
  TraceCheck out;
  ParsedTrace parsed;
  std::string err;
  if (!parse_trace_text(trace_text, parsed, err)) {
    out.lines.push_back("CASE trace-format expected=parseable got=" + err + " FAIL");
    return out;
  }

  std::vector<Region> regions{start};
  std::vector<int> active{0};
  bool all_ok = true;
  for (std::size_t i = 0; i < parsed.steps.size() && all_ok; ++i) {
    const ParsedStep& ps = parsed.steps[i];
    std::string tag = "CASE trace-step n=" + std::to_string(i + 1);
    if (ps.orient < 0 || ps.orient >= kSymCount) {
      out.lines.push_back(tag + " expected=valid got=bad-orientation FAIL");
      all_ok = false;
      break;
    }
    Sym orient = static_cast<Sym>(ps.orient);

    int target = -1;
    StCorner corner;
    std::string why = "no active region has the stated corner";
    std::vector<Cell> expect_removed;
    std::optional<Region> child_a, child_b;
    for (int id : active) {
      auto c = corner_at(regions[id], ps.apex, orient, ps.p);
      if (!c || c->s != ps.s || c->t != ps.t) continue;
      if (ps.kind != StepKind::Open && ps.k != c->s) continue;  // wall/even record k = s
      try {
        expect_removed.clear();
        child_a.reset();
        child_b.reset();
        switch (ps.kind) {
          case StepKind::Wall: {
            WallResult w = reduce_wall(regions[id], *c);
            expect_removed = w.strip;
            child_a = w.remainder;
            break;
          }
          case StepKind::Even:
            even_by_double_wall(regions[id], *c);
            break;
          case StepKind::Open: {
            OpenSplit split = reduce_open(regions[id], *c, ps.k);
            if (split.a) {
              expect_removed.insert(expect_removed.end(), split.strip_a.begin(),
                                    split.strip_a.end());
              child_a = *split.a;
            }
            if (split.b) {
              expect_removed.insert(expect_removed.end(), split.strip_b.begin(),
                                    split.strip_b.end());
              child_b = *split.b;
            }
            break;
          }
        }
      } catch (const std::exception& e) {
        why = e.what();
        continue;
      }
      target = id;
      corner = *c;
      break;
    }
    if (target < 0) {
      out.lines.push_back(tag + " expected=valid got=" + why + " FAIL");
      all_ok = false;
      break;
    }
    if (sorted(expect_removed) != sorted(ps.removed)) {
      out.lines.push_back(tag + " expected=recomputed-strip got=removed-cells-mismatch FAIL");
      all_ok = false;
      break;
    }

    // Parity identity against the oracle on small regions.
    std::string note;
    if (regions[target].size() <= 24) {
      int parent = parity_tilings(regions[target], width_limit);
      int children = 0;
      if (child_a) children ^= parity_tilings(*child_a, width_limit);
      if (child_b) children ^= parity_tilings(*child_b, width_limit);
      if (ps.kind == StepKind::Even) children = 0;
      if (parent != children) {
        out.lines.push_back(tag + " expected=parity-identity got=mismatch FAIL");
        all_ok = false;
        break;
      }
      note = " parity-checked";
    }

    active.erase(std::find(active.begin(), active.end(), target));
    if (child_a) {
      active.push_back(static_cast<int>(regions.size()));
      regions.push_back(*child_a);
    }
    if (child_b) {
      active.push_back(static_cast<int>(regions.size()));
      regions.push_back(*child_b);
    }
    std::sort(active.begin(), active.end());
    out.lines.push_back(tag + " expected=valid got=valid" + note + " PASS");
  }

  if (all_ok) {
    int computed = 0;
    for (int id : active) computed ^= parity_tilings(regions[id], width_limit);
    bool ok = computed == parsed.parity;
    out.lines.push_back("CASE trace-parity expected=" + std::to_string(parsed.parity) +
                        " got=" + std::to_string(computed) + (ok ? " PASS" : " FAIL"));
    all_ok = ok;
  }
  out.pass = all_ok;
  return out;
}

}  // namespace dt
