#pragma once

// The end-to-end verification suite: twelve exact checks over a fixed grid of
// groups, shared by the `verify` subcommand and the acceptance test binary.

#include <iosfwd>
#include <string>
#include <vector>

#include "reflift/monomial.hpp"

namespace reflift {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// G(1,1,n) for n = 2..6 followed by thirteen further descriptors.
std::vector<GroupDescriptor> acceptance_grid();

/// Runs every criterion in order.  Progress lines go to `log` when given.
std::vector<CriterionResult> run_acceptance(std::ostream* log = nullptr);

/// "[PASS]  3  title  (detail, 0.12s)"
std::string format_result(const CriterionResult& r);

}  // namespace reflift
