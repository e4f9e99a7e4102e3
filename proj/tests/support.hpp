#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "dtvol/errors.hpp"

namespace testing {

using dtvol::cplx;

/// Seeded sample generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }

  /// Point in the annulus lo <= |w| <= hi.
  cplx annulus(double lo, double hi) { return std::polar(uniform(lo, hi), uniform(-std::numbers::pi, std::numbers::pi)); }

  /// Point in the disc |w| <= r.
  cplx disc(double r) { return std::polar(r * std::sqrt(uniform(0.0, 1.0)), uniform(-std::numbers::pi, std::numbers::pi)); }

  /// M with |M| in [0.5, 3] and z with |z| <= 3, 2 - z kept away from 0.
  std::pair<cplx, cplx> rep_point() {
    const cplx M = annulus(0.5, 3.0);
    cplx z = disc(3.0);
    while (std::abs(2.0 - z) < 1e-2) z = disc(3.0);
    return {M, z};
  }

 private:
  std::mt19937_64 eng_;
};

inline double rel_diff(cplx a, cplx b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

/// n-point Gauss-Legendre nodes and weights on [-1, 1], Newton on P_n.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  std::vector<double> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-16) break;
    }
    x[static_cast<std::size_t>(i)] = t;
    w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
  return {x, w};
}

/// Lobachevsky function -int_0^theta log|2 sin t| dt, 0 < theta < pi.
/// The logarithmic singularity at 0 is split off analytically:
/// log(2 sin t) = log(2t) + log(sin t / t), and the smooth part goes to
/// composite Gauss-Legendre.
inline double lobachevsky(double theta) {
  const auto [x, w] = gauss_legendre(40);
  const int panels = 16;
  double smooth = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double a = theta * p / panels, b = theta * (p + 1) / panels;
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double t = c + h * x[i];
      smooth += h * w[i] * std::log(std::sin(t) / t);
    }
  }
  const double singular = theta * std::log(2.0 * theta) - theta;
  return -(singular + smooth);
}

/// Volume of the figure-eight complement: two regular ideal tetrahedra.
inline double figure_eight_volume() { return 6.0 * lobachevsky(std::numbers::pi / 3.0); }

}  // namespace testing
