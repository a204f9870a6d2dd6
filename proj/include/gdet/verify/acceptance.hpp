#pragma once

// The acceptance suite: criteria 1-8, each a self-contained check that
// reports pass/fail with a short detail line. `gdet selftest` runs 1-7;
// the acceptance test binary runs selftest through the CLI and adds 8.

#include <functional>
#include <string>
#include <vector>

namespace gdet::verify {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Criteria 1-7 need only the library. 8 (parser) is included here too; the
// selftest-exit half of it lives in the acceptance binary.
std::vector<int> all_criteria();
std::string criterion_title(int id);
CriterionResult run_criterion(int id);

// Runs the listed criteria in order, calling on_done after each.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids,
                                            const std::function<void(const CriterionResult&)>& on_done = {});

// "criterion 3 PASS witness regression: 412 values (1.2 s)"
std::string format_result(const CriterionResult& r);

}  // namespace gdet::verify
