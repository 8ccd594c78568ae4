#include "satlink/report.hpp"

#include <sstream>

#include <json.hpp>

namespace satlink {

void attach_cross_checks(AggregateReport& report, const std::vector<Check>& checks) {
  for (const Check& c : checks) {
    std::size_t m = 4;
    if (const auto at = c.name.find("@m="); at != std::string::npos) m = std::stoul(c.name.substr(at + 3));
    for (auto& r : report.per_m) {
      if (r.m == m && r.verdict != Verdict::NotApplicable) {
        r.checks.push_back(c);
        break;
      }
    }
  }
}

bool has_hard_failure(const AggregateReport& report) {
  for (const auto& r : report.per_m)
    for (const auto& c : r.checks)
      if (c.hard && !c.pass) return true;
  return false;
}

namespace {

using nlohmann::ordered_json;

ordered_json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return to_string(z);
}

ordered_json report_json(const AggregateReport& report) {
  ordered_json j;
  j["pattern"] = report.pattern;
  j["n"] = report.n;
  j["per_m"] = ordered_json::array();
  for (const auto& r : report.per_m) {
    ordered_json e;
    e["m"] = r.m;
    e["linkings"] = ordered_json::array();
    for (const auto& q : r.linkings) e["linkings"].push_back(to_string(q));
    e["h1"] = integer_json(r.h1_order);
    e["eta_order"] = integer_json(r.eta_order);
    e["condition1"] = r.condition1;
    e["condition2"] = r.condition2;
    e["verdict"] = std::string(to_string(r.verdict));
    e["checks"] = ordered_json::array();
    for (const auto& c : r.checks) e["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["per_m"].push_back(std::move(e));
  }
  j["aggregate"] = std::string(to_string(report.aggregate));
  return j;
}

}  // namespace

std::string to_json(const AggregateReport& report, int indent) { return report_json(report).dump(indent); }

std::string to_json(const std::vector<AggregateReport>& reports, int indent) {
  ordered_json a = ordered_json::array();
  for (const auto& r : reports) a.push_back(report_json(r));
  return a.dump(indent);
}

std::string to_text(const AggregateReport& report) {
  std::ostringstream out;
  out << "pattern " << report.pattern << " (winding " << report.n << ")\n";
  for (const auto& r : report.per_m) {
    out << "  m=" << r.m << ": " << to_string(r.verdict) << '\n';
    if (r.verdict == Verdict::NotApplicable) {
      out << "    " << r.reason1 << '\n';
      continue;
    }
    out << "    lk(eta, t^k eta), k=1.." << r.m - 1 << ":";
    for (const auto& q : r.linkings) out << ' ' << to_string(q);
    out << "\n    |H1| = " << to_string(r.h1_order) << ", order of eta = " << to_string(r.eta_order) << '\n';
    out << "    (1) " << (r.condition1 ? "holds: " : "fails: ") << r.reason1 << '\n';
    out << "    (2) " << (r.condition2 ? "holds: " : "fails: ") << r.reason2 << '\n';
    for (const auto& c : r.checks) {
      out << "    [" << (c.pass ? "ok" : (c.hard ? "FAIL" : "warn")) << "] " << c.name;
      if (!c.pass) out << " -- " << c.detail;
      out << '\n';
    }
  }
  out << "  aggregate: " << to_string(report.aggregate) << '\n';
  return out.str();
}

}  // namespace satlink
