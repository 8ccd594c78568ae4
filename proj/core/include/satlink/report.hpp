#pragma once

// Rendering of obstruction reports. JSON keys are stable:
// {"pattern", "n", "per_m": [{"m", "linkings", "h1", "eta_order",
//  "condition1", "condition2", "verdict", "checks": [{"name", "pass",
//  "detail"}]}], "aggregate"}. Rationals are "p/q" strings (integers plain).

#include <string>
#include <vector>

#include "satlink/obstruction.hpp"

namespace satlink {

/// Files cross-cover checks under the cover they mention ("...@m=4"); the
/// 2-vs-4 checks go under m=4. Checks with no matching cover are dropped.
void attach_cross_checks(AggregateReport& report, const std::vector<Check>& checks);

/// True if any hard check in the report failed.
bool has_hard_failure(const AggregateReport& report);

std::string to_json(const AggregateReport& report, int indent = 2);
std::string to_json(const std::vector<AggregateReport>& reports, int indent = 2);
std::string to_text(const AggregateReport& report);

}  // namespace satlink
