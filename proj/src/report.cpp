#include "g2/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace g2 {

using nlohmann::json;

std::string to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::pass: return "pass";
    case ReportStatus::fail: return "fail";
    case ReportStatus::value: return "value";
  }
  return "value";
}

ReportStatus parse_report_status(const std::string& s) {
  if (s == "pass") return ReportStatus::pass;
  if (s == "fail") return ReportStatus::fail;
  if (s == "value") return ReportStatus::value;
  throw std::invalid_argument("unknown report status '" + s + "'");
}

void Report::add_value(std::string name, std::string value) {
  details.push_back({std::move(name), std::move(value), std::nullopt, ""});
}

void Report::add_check(const Check& c) { details.push_back({c.name, c.value, c.passed, c.counterexample}); }

void Report::finalize() {
  std::stable_sort(details.begin(), details.end(),
                   [](const ReportDetail& a, const ReportDetail& b) { return a.name < b.name; });
  bool any_check = false, all_pass = true;
  for (const auto& d : details)
    if (d.passed) {
      any_check = true;
      all_pass = all_pass && *d.passed;
    }
  status = !any_check ? ReportStatus::value : all_pass ? ReportStatus::pass : ReportStatus::fail;
}

const ReportDetail* Report::find(const std::string& name) const {
  for (const auto& d : details)
    if (d.name == name) return &d;
  return nullptr;
}

Report report_from_checks(std::string command, const CheckList& checks) {
  Report r{std::move(command), ReportStatus::value, {}};
  for (const auto& c : checks) r.add_check(c);
  r.finalize();
  return r;
}

std::string to_json(const Report& r, int indent) {
  json details = json::array();
  for (const auto& d : r.details) {
    json e{{"name", d.name}, {"value", d.value}};
    if (d.passed) e["passed"] = *d.passed;
    if (!d.counterexample.empty()) e["counterexample"] = d.counterexample;
    details.push_back(std::move(e));
  }
  const json j{{"command", r.command}, {"status", to_string(r.status)}, {"details", details}};
  return j.dump(indent);
}

Report report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    Report r;
    r.command = j.at("command").get<std::string>();
    r.status = parse_report_status(j.at("status").get<std::string>());
    for (const auto& e : j.at("details")) {
      ReportDetail d;
      d.name = e.at("name").get<std::string>();
      d.value = e.at("value").get<std::string>();
      if (e.contains("passed")) d.passed = e.at("passed").get<bool>();
      if (e.contains("counterexample")) d.counterexample = e.at("counterexample").get<std::string>();
      r.details.push_back(std::move(d));
    }
    return r;
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("malformed report: ") + ex.what());
  }
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << r.command << ": " << to_string(r.status) << '\n';
  for (const auto& d : r.details) {
    if (d.passed)
      os << (*d.passed ? "  PASS " : "  FAIL ") << d.name << " = " << d.value << '\n';
    else
      os << "  " << d.name << " = " << d.value << '\n';
    if (!d.counterexample.empty()) os << "       counterexample: " << d.counterexample << '\n';
  }
  return os.str();
}

}  // namespace g2
