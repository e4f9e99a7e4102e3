#pragma once

#include <string>
#include <vector>

namespace dtvol {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Cross-validation suites behind `dtvol check`. The quick set compares the
/// three polynomial descriptions, the closed and recursive Riley forms, the
/// explicit w-matrix against the matrix product, the two longitude formulas,
/// the figure-eight coincidence J(3,2) = J(2,-2) and the J(2,4) = J(4,2)
/// volume symmetry. `full` adds the volume oracle, the Euclidean angle sweep
/// and the self-consistency runs.
std::vector<CheckResult> run_checks(bool full);

/// Lobachevsky function from the Bernoulli series of the Clausen function.
/// Valid for 0 < theta < pi.
double lobachevsky_series(double theta);

}  // namespace dtvol
