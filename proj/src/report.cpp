#include "twring/report.hpp"

#include <algorithm>
#include <sstream>

namespace twring {

const char* status_name(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::refuted: return "refuted";
    case Status::lower_bound: return "lower-bound";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

ReportItem& Report::add(std::string name, std::string oracle, Status s, std::optional<std::string> claim,
                        std::string anchor) {
  items.push_back(ReportItem{std::move(name), std::move(claim), std::move(oracle), s, std::move(anchor)});
  return items.back();
}

void Report::finalize() {
  std::stable_sort(items.begin(), items.end(), [](const ReportItem& a, const ReportItem& b) { return a.name < b.name; });
}

bool Report::any_refuted() const {
  return std::any_of(items.begin(), items.end(), [](const ReportItem& i) { return i.status == Status::refuted; });
}

std::string Report::table() const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  for (const auto& [k, v] : inputs) os << "  " << k << " = " << v << "\n";
  for (const auto& [k, v] : summary) os << k << ": " << v << "\n";
  size_t w = 4;
  for (const auto& i : items) w = std::max(w, i.name.size());
  for (const auto& i : items) {
    os << "  " << i.name << std::string(w - i.name.size() + 2, ' ') << status_name(i.status) << "  " << i.oracle_value;
    if (i.paper_claim) os << "  [claim: " << *i.paper_claim << "; " << i.anchor << "]";
    if (i.discrepancy) os << "  DISCREPANCY";
    os << "\n";
  }
  if (timing_ms) os << "timing_ms: " << *timing_ms << "\n";
  return os.str();
}

ReportItem& add_check(Report& r, std::string name, bool ok, std::string oracle, std::optional<std::string> claim,
                      std::string anchor) {
  return r.add(std::move(name), std::move(oracle), ok ? Status::verified : Status::refuted, std::move(claim),
               std::move(anchor));
}

}  // namespace twring
