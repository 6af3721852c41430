#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyzcl {

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the full verification table: censuses, pinned ring examples, the
// genus-2 oracle, the property sweeps, and the round-trip checks.
std::vector<CriterionResult> run_acceptance(int threads = 0);

// One line per criterion; returns true iff everything passed.
bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace polyzcl
