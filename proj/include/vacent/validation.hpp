#pragma once
// Paired closed-form / oracle comparisons behind `vacent validate`.
#include <iosfwd>
#include <string>
#include <vector>

namespace vacent::validation {

struct Check {
  std::string name;
  double observed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

enum class Level { fast, full };

struct Options {
  /// Added to the transverse kernel scalar on the closed-form side of the
  /// kernel/mode-sum pair. Nonzero only to prove the suite can fail.
  double tau_trans_offset = 0.0;
};

struct Report {
  std::vector<Check> checks;
  bool all_passed() const;
  std::vector<Check> failures() const;
};

Report run_validation(Level level, const Options& options = {});

/// One line per check, then a summary line.
void print_report(std::ostream& os, const Report& report);

}  // namespace vacent::validation
