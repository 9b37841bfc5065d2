#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace terracini {

struct CriterionResult {
  std::string name;
  bool passed;
  std::string detail;
};

// The tool's verification contract: seven checks covering flagship join
// dimensions, the full classification grid, golden report formats, the
// interpolation golden table, the span/interpolation bridge identity, the
// tangent-space checks, and reproducibility across seeds and primes. Streams
// one line per criterion to out as it completes.
[[nodiscard]] std::vector<CriterionResult> run_acceptance_suite(std::ostream& out);

[[nodiscard]] bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace terracini
