#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dtvol/branch.hpp"

namespace dtvol {

enum class QuadRule { gauss_kronrod, tanh_sinh };

struct VolumeOptions {
  double tol = 1e-9;
  TrackOptions track;
  QuadRule rule = QuadRule::gauss_kronrod;
};

struct VolumeResult {
  KnotParam knot{2, -1};
  double alpha = 0.0;
  std::optional<double> alpha_K;
  double volume = 0.0;
  double quad_error = 0.0;
  std::vector<SeedCandidate> candidates;
  std::vector<std::string> diagnostics;
  /// |log|L|| < 1e-7 at the spot checks above alpha_K.
  bool regime_check_passed = true;
};

/// Requested cone angles below this are integrated from here, with the
/// remaining sliver [0, kMinOmega] extrapolated.
inline constexpr double kMinOmega = 1e-4;

/// log|L| at a branch point; equals half the real length of the longitude.
/// Throws NegativeIntegrand when |L| < 1 - 1e-8; smaller negative rounding is
/// clamped to 0.
double integrand(const KnotParam& knot, const BranchPoint& bp);

/// Vol(X_{J(k,2n)}(alpha)) = integral of log|L| over [alpha, pi] along the
/// geometric branch; the integrand is 0 on [alpha_K, pi].
VolumeResult cone_volume(const KnotParam& knot, double alpha, const VolumeOptions& opts = {});

/// Volumes for sorted alphas from a single branch continuation. Each curve
/// point is consistent with cone_volume to `opts.tol`.
std::vector<VolumeResult> volume_curve(const KnotParam& knot, std::span<const double> alphas,
                                       const VolumeOptions& opts = {});

/// Same, on an already tracked branch (which must start at or below the
/// seed omega of alphas.front()).
std::vector<VolumeResult> volume_curve(const Branch& branch, std::span<const double> alphas,
                                       const VolumeOptions& opts = {});

}  // namespace dtvol
