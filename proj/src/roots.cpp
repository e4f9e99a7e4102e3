#include "dtvol/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace dtvol {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct NewtonStep {
  cplx ratio;        // p(z) / p'(z)
  bool at_noise;     // |p(z)| is within the rounding bound of its evaluation
};

/// Newton correction p(z)/p'(z) plus a rounding-level test on |p(z)| against
/// eps * sum |c_i| |z|^i. For |z| > 1 the reversed polynomial is used so
/// Horner does not overflow at high degree.
NewtonStep newton_step(std::span<const cplx> c, cplx z) {
  const int d = static_cast<int>(c.size()) - 1;
  const double noise_factor = 2.0 * kEps;
  if (std::abs(z) <= 1.0) {
    cplx p{}, dp{};
    double bound = 0.0;
    const double az = std::abs(z);
    for (int i = d; i >= 0; --i) {
      dp = dp * z + p;
      p = p * z + c[static_cast<std::size_t>(i)];
      bound = bound * az + std::abs(c[static_cast<std::size_t>(i)]);
    }
    const bool noise = std::abs(p) <= noise_factor * bound;
    if (p == cplx{}) return {{}, true};
    if (dp == cplx{}) return {p * 1e-3, noise};  // nudge off a critical point
    return {p / dp, noise};
  }
  const cplx y = 1.0 / z;
  const double ay = std::abs(y);
  cplx q{}, dq{};
  double bound = 0.0;
  for (int i = 0; i <= d; ++i) {
    dq = dq * y + q;
    q = q * y + c[static_cast<std::size_t>(i)];
    bound = bound * ay + std::abs(c[static_cast<std::size_t>(i)]);
  }
  const bool noise = std::abs(q) <= noise_factor * bound;
  if (q == cplx{}) return {{}, true};
  const cplx denom = y * (static_cast<double>(d) - y * dq / q);
  if (denom == cplx{}) return {z * 1e-3, noise};
  return {1.0 / denom, noise};
}

/// Initial approximations on circles whose radii come from the upper convex
/// hull of (i, log|c_i|), one circle per hull edge.
std::vector<cplx> initial_guesses(std::span<const cplx> c) {
  const int d = static_cast<int>(c.size()) - 1;
  std::vector<double> lg(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    lg[i] = c[i] == cplx{} ? -std::numeric_limits<double>::infinity() : std::log(std::abs(c[i]));

  std::vector<int> hull;
  for (int i = 0; i <= d; ++i) {
    if (std::isinf(lg[static_cast<std::size_t>(i)])) continue;
    while (hull.size() >= 2) {
      const int i1 = hull[hull.size() - 2];
      const int i2 = hull.back();
      const double cross = (i2 - i1) * (lg[static_cast<std::size_t>(i)] - lg[static_cast<std::size_t>(i1)]) -
                           (i - i1) * (lg[static_cast<std::size_t>(i2)] - lg[static_cast<std::size_t>(i1)]);
      if (cross >= 0.0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(i);
  }

  std::vector<cplx> z;
  z.reserve(static_cast<std::size_t>(d));
  const double offset = 0.4;
  // roots at the origin for leading zero coefficients below the first hull point
  const int zero_roots = hull.front();
  for (int i = 0; i < zero_roots; ++i)
    z.push_back(std::polar(1e-3, 2.0 * std::numbers::pi * i / std::max(zero_roots, 1) + offset));
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const int i = hull[h], j = hull[h + 1];
    const int cnt = j - i;
    const double radius =
        std::exp((lg[static_cast<std::size_t>(i)] - lg[static_cast<std::size_t>(j)]) / static_cast<double>(cnt));
    for (int s = 0; s < cnt; ++s) {
      const double theta = 2.0 * std::numbers::pi * s / cnt + offset + 0.7 * static_cast<double>(h);
      z.push_back(std::polar(radius, theta));
    }
  }
  return z;
}

/// Aberth-Ehrlich iteration with Gauss-Seidel updates. `step(z)` returns the
/// Newton correction and whether |p(z)| is already at rounding level. A root
/// also stops once its corrections are small and neither shrinking nor
/// growing, which is where evaluation noise takes over.
template <class StepFn>
void aberth(std::vector<cplx>& z, StepFn step) {
  const std::size_t d = z.size();
  std::vector<bool> done(d, false);
  std::vector<double> prev(d, std::numeric_limits<double>::infinity());
  for (int iter = 0; iter < 500; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < d; ++i) {
      if (done[i]) continue;
      const NewtonStep st = step(z[i]);
      if (st.at_noise) {
        done[i] = true;
        continue;
      }
      cplx sum{};
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      const cplx w = st.ratio / (1.0 - st.ratio * sum);
      z[i] -= w;
      const double aw = std::abs(w);
      const double scale = std::max(1.0, std::abs(z[i]));
      // growing steps are points still separating from a near-coincident start
      if (!(aw > 4.0 * kEps * scale) || (aw <= 1e-7 * scale && aw > 0.5 * prev[i] && aw < 2.0 * prev[i]))
        done[i] = true;
      else
        all_done = false;
      prev[i] = aw;
      if (!std::isfinite(z[i].real()) || !std::isfinite(z[i].imag())) {
        z[i] = std::polar(1.0, 0.3 + static_cast<double>(i));
        prev[i] = std::numeric_limits<double>::infinity();
        done[i] = false;
        all_done = false;
      }
    }
    if (all_done) break;
  }
}

std::vector<cplx> starting_points(const ZPoly& p, std::span<const cplx> guess) {
  if (static_cast<int>(guess.size()) != p.degree()) return initial_guesses(p.coeffs());
  std::vector<cplx> z(guess.begin(), guess.end());
  // separate coincident starting points
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(z[i] - z[j]) <= 1e-12 * std::max(1.0, std::abs(z[i])))
        z[i] += std::polar(1e-9 * std::max(1.0, std::abs(z[i])), 1.0 + static_cast<double>(i));
  return z;
}

void check_degree(const ZPoly& p) {
  if (p.is_zero()) throw InvalidArgument("poly_roots: zero polynomial");
  if (p.degree() < 1) throw InvalidArgument("poly_roots: polynomial has degree < 1");
}

}  // namespace

cplx newton_polish(const ZPoly& p, cplx start, int max_iter, bool* converged) {
  const auto c = p.coeffs();
  cplx z = start;
  bool ok = false;
  double prev_step = std::numeric_limits<double>::infinity();
  for (int i = 0; i < max_iter; ++i) {
    const NewtonStep st = newton_step(c, z);
    const cplx step = st.ratio;
    const double s = std::abs(step);
    if (!std::isfinite(s)) break;
    z -= step;
    if (s <= 4.0 * kEps * std::max(1.0, std::abs(z))) {
      ok = true;
      break;
    }
    // stagnation at rounding level (clustered roots converge linearly)
    if (i > 5 && s >= prev_step && s < 1e-9 * std::max(1.0, std::abs(z))) {
      ok = true;
      break;
    }
    prev_step = s;
  }
  if (converged != nullptr) *converged = ok;
  return z;
}

std::vector<cplx> poly_roots(const ZPoly& p) { return poly_roots(p, {}); }

std::vector<cplx> poly_roots(const ZPoly& p, std::span<const cplx> guess) {
  check_degree(p);
  const auto c = p.coeffs();
  if (p.degree() == 1) return {-c[0] / c[1]};
  std::vector<cplx> z = starting_points(p, guess);
  aberth(z, [c](cplx x) { return newton_step(c, x); });
  for (cplx& r : z) {
    const cplx polished = newton_polish(p, r, 3);
    if (std::abs(p(polished)) <= std::abs(p(r))) r = polished;
  }
  return z;
}

std::vector<cplx> poly_roots(const ZPoly& p, std::span<const cplx> guess, const PolyEvaluator& eval) {
  check_degree(p);
  std::vector<cplx> z = starting_points(p, guess);
  aberth(z, [&eval](cplx x) -> NewtonStep {
    const auto [f, df] = eval(x);
    if (f == cplx{}) return {{}, true};
    if (df == cplx{}) return {f * 1e-3, false};
    return {f / df, false};
  });
  // one Newton step each, kept when it lowers |p|
  for (cplx& r : z) {
    const auto [f, df] = eval(r);
    if (df == cplx{} || f == cplx{}) continue;
    const cplx cand = r - f / df;
    if (std::abs(eval(cand).first) < std::abs(f)) r = cand;
  }
  return z;
}

bool satisfies_backward_bound(const ZPoly& p, cplx root, double rel) {
  const double bound = rel * p.max_abs_coeff() * std::pow(std::max(1.0, std::abs(root)), p.degree());
  return std::abs(p(root)) <= bound;
}

}  // namespace dtvol
