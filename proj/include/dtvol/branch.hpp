#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dtvol/riley.hpp"
#include "dtvol/words.hpp"

namespace dtvol {

/// M = e^{i omega / 2}.
cplx unit_meridian(double omega);

struct TrackOptions {
  double step = 0.005;     // default continuation step in omega (radians)
  double min_step = 1e-6;  // halving stops here
  PhiForm form = PhiForm::closed;
};

struct BranchPoint {
  double omega = 0.0;
  cplx M;
  cplx z;
  double imcond = 0.0;
};

/// One seed root satisfying the branch condition, followed until it meets its
/// complex conjugate on the real axis.
struct SeedCandidate {
  enum class Status { completed, open, lost };

  cplx z_seed;
  double imcond_seed = 0.0;
  std::optional<double> alpha_end;  // where the root became real
  double volume_estimate = 0.0;     // trapezoid estimate of the volume integral
  Status status = Status::open;
  bool selected = false;
};

const char* to_string(SeedCandidate::Status s);

struct Branch {
  KnotParam knot{2, -1};
  TrackOptions options;
  bool hyperbolic = false;
  std::optional<double> alpha_K;
  /// Strictly increasing omega from the seed up to pi. Points before alpha_K
  /// carry nonreal z; from alpha_K on, z is real.
  std::vector<BranchPoint> points;
  /// Per point: distance from z to the nearest root other than z and conj(z).
  std::vector<double> separation;
  std::vector<SeedCandidate> candidates;
  std::vector<std::string> diagnostics;

  /// Root of the branch at an arbitrary omega in (0, pi], by Newton polishing
  /// from the interpolated track, resolving z versus conj(z) by the branch
  /// condition. Falls back to a full root solve when the polish is not
  /// clearly attached to the track.
  BranchPoint evaluate(double omega) const;
};

/// Seed omega used for a requested lower angle alpha: min(alpha, 0.1),
/// clamped below at 1e-4.
double seed_omega(double alpha);

/// Follows all seed candidates, picks the one with the largest volume and
/// continues it through alpha_K to pi. Returns hyperbolic = false (no points)
/// when the seed polynomial has no nonreal root.
Branch track_branch(const KnotParam& knot, double alpha, const TrackOptions& opts = {});

/// As track_branch, but throws NonHyperbolic / ContinuationAmbiguous.
Branch geometric_branch(const KnotParam& knot, double alpha, const TrackOptions& opts = {});

/// Euclidean angle: where the geometric root meets the real axis.
double find_alpha_K(const KnotParam& knot, const TrackOptions& opts = {});

}  // namespace dtvol
