#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2/check.hpp"

namespace g2 {

enum class ReportStatus { pass, fail, value };

std::string to_string(ReportStatus s);
ReportStatus parse_report_status(const std::string& s);

/// A named entry. `passed` is empty for pure values.
struct ReportDetail {
  std::string name;
  std::string value;
  std::optional<bool> passed;
  std::string counterexample;

  friend bool operator==(const ReportDetail&, const ReportDetail&) = default;
};

struct Report {
  std::string command;
  ReportStatus status = ReportStatus::value;
  std::vector<ReportDetail> details;

  void add_value(std::string name, std::string value);
  void add_check(const Check& c);
  /// Sorts details by name and derives the status: value if no detail is a
  /// check, otherwise pass or fail.
  void finalize();
  const ReportDetail* find(const std::string& name) const;

  friend bool operator==(const Report&, const Report&) = default;
};

Report report_from_checks(std::string command, const CheckList& checks);

/// Structured form: {"command", "status", "details": [{"name", "value",
/// "passed"?, "counterexample"?}]}.
std::string to_json(const Report& r, int indent = 2);
/// Throws std::invalid_argument on malformed input.
Report report_from_json(const std::string& text);

std::string to_text(const Report& r);

}  // namespace g2
