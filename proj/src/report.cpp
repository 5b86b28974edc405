#include "report.hpp"

#include <sstream>

#include <json.hpp>

#include "corner.hpp"

namespace dt {

bool all_pass(const std::vector<CaseResult>& cases) {
  for (const CaseResult& c : cases)
    if (!c.pass) return false;
  return true;
}

std::string format_report(const std::vector<CaseResult>& cases, bool json) {
  std::ostringstream out;
  int pass = 0;
  for (const CaseResult& c : cases) {
    if (c.pass) ++pass;
    if (json) {
      nlohmann::json j{{"case", c.name},
                       {"params", c.params},
                       {"expected", c.expected},
                       {"got", c.got},
                       {"status", c.pass ? "PASS" : "FAIL"}};
      out << j.dump() << "\n";
    } else {
      out << "CASE " << c.name << " " << c.params << " expected=" << c.expected
          << " got=" << c.got << (c.pass ? " PASS" : " FAIL") << "\n";
    }
  }
  int total = static_cast<int>(cases.size());
  if (json) {
    nlohmann::json j{{"summary",
                      {{"total", total}, {"pass", pass}, {"fail", total - pass}}}};
    out << j.dump() << "\n";
  } else {
    out << "SUMMARY total=" << total << " pass=" << pass << " fail=" << (total - pass)
        << "\n";
  }
  return out.str();
}

std::string corners_report(const Region& r, bool json) {
  std::ostringstream out;
  for (const StCorner& c : find_corners(r)) {
    int complete = max_completeness(r, c);
    bool ws = is_walled_at(r, c, CornerSide::S);
    bool wt = is_walled_at(r, c, CornerSide::T);
    std::string walled = ws && wt ? "both" : ws ? "s" : wt ? "t" : "none";
    if (json) {
      nlohmann::json j{{"apex", {c.apex().x, c.apex().y}},
                       {"orient", static_cast<int>(c.frame.orient)},
                       {"s", c.s},
                       {"t", c.t},
                       {"p", c.p},
                       {"complete_up_to", complete},
                       {"walled", walled}};
      out << j.dump() << "\n";
    } else {
      out << "corner apex=(" << c.apex().x << "," << c.apex().y
          << ") orient=" << static_cast<int>(c.frame.orient) << " s=" << c.s << " t=" << c.t
          << " p=" << c.p << " complete_up_to=" << complete << " walled=" << walled << "\n";
    }
  }
  return out.str();
}

}  // namespace dt
