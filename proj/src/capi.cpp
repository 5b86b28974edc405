#include "dominotile.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

#include "corner.hpp"
#include "count.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "reduce.hpp"
#include "region.hpp"
#include "report.hpp"

struct dt_region {
  dt::Region impl;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int effective_width_limit(int width_limit) {
  return width_limit > 0 ? width_limit : dt::kDefaultWidthLimit;
}

// Translates whatever the core throws into a status code and the
// thread-local message.
template <class F>
dt_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return DT_OK;
  } catch (const dt::ParseError& e) {
    g_last_error = e.what();
    return DT_ERR_PARSE;
  } catch (const dt::LimitError& e) {
    g_last_error = e.what();
    return DT_ERR_LIMIT;
  } catch (const dt::PreconditionError& e) {
    g_last_error = e.what();
    return DT_ERR_PRECONDITION;
  } catch (const dt::NotApplicableError& e) {
    g_last_error = e.what();
    return DT_ERR_NOT_APPLICABLE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return DT_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DT_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return DT_ERR_INTERNAL;
  }
}

std::vector<long long> parse_int_args(const std::string& args, std::size_t want) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (pos <= args.size()) {
    std::size_t comma = args.find(',', pos);
    std::string tok = args.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (tok.empty() || tok.find_first_not_of("-0123456789") != std::string::npos)
      throw std::invalid_argument("builder spec: bad integer '" + tok + "'");
    out.push_back(std::stoll(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.size() != want)
    throw std::invalid_argument("builder spec: expected " + std::to_string(want) +
                                " arguments, got " + std::to_string(out.size()));
  return out;
}

dt::Region build_from_spec(const std::string& spec) {
  std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("builder spec must look like name:arg,arg");
  std::string name = spec.substr(0, colon);
  std::string args = spec.substr(colon + 1);
  if (name == "rect") {
    auto v = parse_int_args(args, 2);
    return dt::rectangle(static_cast<int>(v[0]), static_cast<int>(v[1]));
  }
  if (name == "holey") {
    auto v = parse_int_args(args, 2);
    return dt::holey_square(static_cast<int>(v[0]), static_cast<int>(v[1]));
  }
  if (name == "holeyodd") {
    auto v = parse_int_args(args, 2);
    return dt::holey_square_odd(static_cast<int>(v[0]), static_cast<int>(v[1]));
  }
  if (name == "half") {
    auto v = parse_int_args(args, 2);
    return dt::half_region(static_cast<int>(v[0]), static_cast<int>(v[1]));
  }
  if (name == "hprime") {
    auto v = parse_int_args(args, 2);
    return dt::half_region_pruned(static_cast<int>(v[0]), static_cast<int>(v[1]));
  }
  if (name == "t") {
    auto v = parse_int_args(args, 3);
    return dt::t_region(static_cast<int>(v[0]), static_cast<int>(v[1]),
                        static_cast<int>(v[2]));
  }
  if (name == "d") {
    auto v = parse_int_args(args, 3);
    return dt::d_region(static_cast<int>(v[0]), static_cast<int>(v[1]),
                        static_cast<int>(v[2]));
  }
  throw std::invalid_argument("unknown builder '" + name + "'");
}

// The rectangle schedule needs (k, n) with rows = kn and cols = (k+1)n.
std::pair<int, int> infer_rect_kn(const dt::Region& r) {
  dt::Box b = r.bounds();
  int rows = b.height(), cols = b.width();
  if (r.size() != rows * cols)
    throw std::invalid_argument("cor42 script needs a full rectangle");
  int n = cols - rows;
  if (n < 1 || rows % n != 0)
    throw std::invalid_argument("cor42 script needs a kn x (k+1)n rectangle");
  return {rows / n, n};
}

}  // namespace

extern "C" {

const char* dt_status_name(dt_status s) {
  switch (s) {
    case DT_OK: return "ok";
    case DT_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case DT_ERR_PARSE: return "parse-error";
    case DT_ERR_LIMIT: return "resource-limit";
    case DT_ERR_PRECONDITION: return "precondition";
    case DT_ERR_NOT_APPLICABLE: return "not-applicable";
    case DT_ERR_INTERNAL: return "internal";
  }
  return "?";
}

const char* dt_last_error(void) { return g_last_error.c_str(); }

void dt_string_free(char* s) { std::free(s); }

dt_status dt_region_build(const char* spec, dt_region** out) {
  return guarded([&] {
    if (!spec || !out) throw std::invalid_argument("null argument");
    *out = new dt_region{build_from_spec(spec)};
  });
}

dt_status dt_region_parse(const char* text, dt_region** out) {
  return guarded([&] {
    if (!text || !out) throw std::invalid_argument("null argument");
    *out = new dt_region{dt::parse_region(text)};
  });
}

dt_status dt_region_emit(const dt_region* r, char** out) {
  return guarded([&] {
    if (!r || !out) throw std::invalid_argument("null argument");
    *out = dup_string(dt::emit_region(r->impl));
  });
}

void dt_region_free(dt_region* r) { delete r; }

int dt_region_cell_count(const dt_region* r) { return r ? r->impl.size() : 0; }

dt_status dt_count(const dt_region* r, int width_limit, char** decimal_out) {
  return guarded([&] {
    if (!r || !decimal_out) throw std::invalid_argument("null argument");
    *decimal_out =
        dup_string(dt::count_tilings(r->impl, effective_width_limit(width_limit)).to_decimal());
  });
}

dt_status dt_parity(const dt_region* r, int width_limit, int* bit_out) {
  return guarded([&] {
    if (!r || !bit_out) throw std::invalid_argument("null argument");
    *bit_out = dt::parity_tilings(r->impl, effective_width_limit(width_limit));
  });
}

dt_status dt_corners(const dt_region* r, int as_json, char** out) {
  return guarded([&] {
    if (!r || !out) throw std::invalid_argument("null argument");
    *out = dup_string(dt::corners_report(r->impl, as_json != 0));
  });
}

dt_status dt_reduce(const dt_region* r, const char* strategy, const char* label,
                    int width_limit, char** trace_out) {
  return guarded([&] {
    if (!r || !strategy || !trace_out) throw std::invalid_argument("null argument");
    std::string lbl = label ? label : "region";
    int wl = effective_width_limit(width_limit);
    std::string strat = strategy;
    dt::ReductionTrace trace;
    if (strat == "wall-greedy") {
      trace = dt::reduce_wall_greedy(r->impl, lbl, wl);
    } else if (strat == "cor42") {
      auto [k, n] = infer_rect_kn(r->impl);
      dt::RectReport rep = dt::verify_rect(k, n, wl);
      if (!rep.pass())
        throw dt::PreconditionError("cor42 schedule did not validate: " +
                                    dt::format_report(rep.cases, false));
      trace = rep.trace;
      trace.start_label = lbl;
    } else {
      throw std::invalid_argument("unknown strategy '" + strat + "'");
    }
    *trace_out = dup_string(dt::serialize_trace(trace));
  });
}

dt_status dt_verify_trace(const dt_region* start, const char* trace_text, int width_limit,
                          char** report_out, int* all_pass) {
  return guarded([&] {
    if (!start || !trace_text || !report_out || !all_pass)
      throw std::invalid_argument("null argument");
    dt::TraceCheck check =
        dt::verify_trace(start->impl, trace_text, effective_width_limit(width_limit));
    std::string text;
    for (const std::string& line : check.lines) text += line + "\n";
    *report_out = dup_string(text);
    *all_pass = check.pass ? 1 : 0;
  });
}

dt_status dt_verify(const char* target, int max_n, int max_k, int max_p, int trials,
                    unsigned int seed, int width_limit, int as_json, char** report_out,
                    int* all_pass) {
  return guarded([&] {
    if (!target || !report_out || !all_pass) throw std::invalid_argument("null argument");
    int wl = effective_width_limit(width_limit);
    std::string t = target;
    std::vector<dt::CaseResult> cases;
    if (t == "holey") {
      cases = dt::verify_holey_sweep(max_n > 0 ? max_n : 5, false, wl);
    } else if (t == "holey-odd") {
      cases = dt::verify_holey_sweep(max_n > 0 ? max_n : 4, true, wl);
    } else if (t == "rect") {
      int mk = max_k > 0 ? max_k : 3;
      int mn = max_n > 0 ? max_n : 3;
      for (int k = 1; k <= mk; ++k)
        for (int n = 1; n <= mn; ++n) {
          dt::RectReport rep = dt::verify_rect(k, n, wl);
          cases.insert(cases.end(), rep.cases.begin(), rep.cases.end());
        }
    } else if (t == "tfamily") {
      cases = dt::verify_family_t(max_k > 0 ? max_k : 4, max_p > 0 ? max_p : 3, wl);
    } else if (t == "dfamily") {
      cases = dt::verify_family_d(max_k > 0 ? max_k : 4, max_p > 0 ? max_p : 3, wl);
    } else if (t == "theorem") {
      cases = dt::verify_theorem(trials > 0 ? trials : 500, seed, wl);
    } else {
      throw std::invalid_argument("unknown verify target '" + t + "'");
    }
    *report_out = dup_string(dt::format_report(cases, as_json != 0));
    *all_pass = dt::all_pass(cases) ? 1 : 0;
  });
}

dt_status dt_render(const dt_region* r, const char* trace_text, int step, char** out) {
  return guarded([&] {
    if (!r || !out) throw std::invalid_argument("null argument");
    std::vector<dt::Cell> overlay;
    if (trace_text) overlay = dt::trace_step_cells(trace_text, step);
    *out = dup_string(dt::render_region(r->impl, overlay));
  });
}

}  // extern "C"
