#pragma once

#include <functional>

namespace dtvol {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // absolute error estimate
  int evaluations = 0;
  bool converged = false;
};

/// Globally adaptive 21-point Gauss-Kronrod with the embedded 10-point Gauss
/// rule as error estimate. The panel worst error is bisected until the summed
/// estimate is below `tol`; the panel ending at `b` must additionally reach
/// `b_panel_fraction * tol` (endpoint with square-root behaviour).
QuadResult integrate_gauss_kronrod(const std::function<double(double)>& f, double a, double b, double tol,
                                   double b_panel_fraction = 0.1, int max_panels = 4000);

/// Tanh-sinh (double exponential) rule with level doubling; the error
/// estimate is the change between the last two levels.
QuadResult integrate_tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol,
                               int max_level = 12);

}  // namespace dtvol
