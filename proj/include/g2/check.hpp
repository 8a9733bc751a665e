#pragma once

#include <string>
#include <vector>

namespace g2 {

/// One named verification result. `value` is an exact rendering (rational or
/// form literal); failures carry the first counterexample found.
struct Check {
  std::string name;
  bool passed = true;
  std::string value;
  std::string counterexample;
};

using CheckList = std::vector<Check>;

inline bool all_passed(const CheckList& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

inline const Check* find_check(const CheckList& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace g2
