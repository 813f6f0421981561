#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace focal {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the release checklist end to end; `quick` restricts to the subset
/// that finishes within a minute. When `progress` is given, one line per
/// criterion is streamed as it finishes.
std::vector<CriterionResult> run_acceptance_suite(bool quick,
                                                  std::ostream* progress);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace focal
