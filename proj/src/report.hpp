#ifndef DOMINOTILE_REPORT_HPP
#define DOMINOTILE_REPORT_HPP

#include <string>
#include <vector>

#include "region.hpp"

namespace dt {

// One verification case. Rendered as
//   CASE <name> <params> expected=<...> got=<...> PASS|FAIL
// or as a JSON object per line with the same fields.
struct CaseResult {
  std::string name;
  std::string params;
  std::string expected;
  std::string got;
  bool pass = false;
};

bool all_pass(const std::vector<CaseResult>& cases);
std::string format_report(const std::vector<CaseResult>& cases, bool json);

// Deterministic corner listing with completeness and wall annotations.
std::string corners_report(const Region& r, bool json);

}  // namespace dt

#endif
