#pragma once

// Result records shared by all verification routines. Every identity
// instance a check examines is reported, pass or fail, so callers can
// print complete audit trails; failures() filters the violations.

#include <string>
#include <vector>

namespace eulerian {

struct CheckResult {
  std::string name;    // which identity instance, e.g. "symmetry B(6,1)=C(6,4)"
  bool pass = false;
  std::string detail;  // the computed values behind the verdict
};

using CheckReport = std::vector<CheckResult>;

inline CheckReport failures(const CheckReport& report) {
  CheckReport bad;
  for (const auto& r : report)
    if (!r.pass) bad.push_back(r);
  return bad;
}

inline bool all_pass(const CheckReport& report) {
  for (const auto& r : report)
    if (!r.pass) return false;
  return true;
}

}  // namespace eulerian
