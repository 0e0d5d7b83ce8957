#pragma once

#include <string>
#include <vector>

namespace funcrowd {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the acceptance criteria (all of them, or those whose name contains
/// filter). jobs controls the worker count of the sharded searches.
std::vector<CriterionResult> run_acceptance(int jobs = 1, const std::string& filter = "");

/// Deterministic aggregate report (no timings).
std::string acceptance_report_json(const std::vector<CriterionResult>& results);

}  // namespace funcrowd
