#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace twring {

enum class Status { verified, refuted, lower_bound, inconclusive };
const char* status_name(Status s);

struct ReportItem {
  std::string name;
  std::optional<std::string> paper_claim;
  std::string oracle_value;
  Status status = Status::verified;
  std::string anchor = "oracle";  // provenance of the claim
  bool discrepancy = false;       // oracle disagrees with the published claim
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<ReportItem> items;
  std::optional<double> timing_ms;
  // headline answers, emitted as top-level keys ("true"/"false" and integers become JSON literals)
  std::vector<std::pair<std::string, std::string>> summary;

  ReportItem& add(std::string name, std::string oracle, Status s, std::optional<std::string> claim = std::nullopt,
                  std::string anchor = "oracle");
  // Items sorted by name (stable), so output order is independent of evaluation order.
  void finalize();
  bool any_refuted() const;
  std::string table() const;  // human-readable
};

// verified when equal, refuted otherwise
ReportItem& add_check(Report& r, std::string name, bool ok, std::string oracle,
                      std::optional<std::string> claim = std::nullopt, std::string anchor = "oracle");

}  // namespace twring
