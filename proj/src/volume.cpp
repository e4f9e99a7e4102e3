#include "dtvol/volume.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <sstream>

#include "dtvol/longitude.hpp"
#include "dtvol/quadrature.hpp"

namespace dtvol {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRegimeTol = 1e-7;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

/// Integral of f over [0, h] from samples at h/2 and h, with f(0) extrapolated
/// linearly (Richardson) and the rule difference as error.
std::pair<double, double> sliver_extension(const std::function<double(double)>& f, double h) {
  const double f_half = f(0.5 * h);
  const double f_full = f(h);
  const double f0 = 2.0 * f_half - f_full;
  const double simpson = h / 6.0 * (f0 + 4.0 * f_half + f_full);
  const double midpoint = h * f_half;
  return {simpson, std::abs(simpson - midpoint)};
}

}  // namespace

double integrand(const KnotParam& knot, const BranchPoint& bp) {
  const double absL = std::abs(longitude_L(knot, bp.z, bp.M));
  if (absL < 1.0 - 1e-8)
    throw NegativeIntegrand(knot.name() + ": |L| = " + fmt(absL) + " < 1 at omega = " + fmt(bp.omega) +
                            "; branch selection failed");
  return std::max(0.0, std::log(absL));
}

std::vector<VolumeResult> volume_curve(const Branch& br, std::span<const double> alphas, const VolumeOptions& opts) {
  if (alphas.empty()) throw InvalidArgument("volume_curve: no cone angles given");
  if (!(opts.tol >= 1e-12)) throw InvalidArgument("volume tolerance must be >= 1e-12");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] >= 0.0 && alphas[i] <= kPi)) throw InvalidArgument("cone angle outside [0, pi]: " + fmt(alphas[i]));
    if (i > 0 && alphas[i] < alphas[i - 1]) throw InvalidArgument("volume_curve: cone angles must be sorted");
  }
  if (!br.hyperbolic) throw NonHyperbolic(br.knot.name() + ": trefoil or non-hyperbolic parameters");
  if (br.points.front().omega > seed_omega(alphas.front()) + 1e-15)
    throw InvalidArgument("volume_curve: branch starts above the smallest requested angle");

  const KnotParam knot = br.knot;
  const double top = br.alpha_K.value_or(kPi);
  const std::function<double(double)> f = [&br, top, knot](double w) {
    if (w >= top) return 0.0;
    return integrand(knot, br.evaluate(w));
  };

  const std::size_t n = alphas.size();
  const bool needs_sliver = alphas.front() < kMinOmega;
  const double budget = opts.tol / static_cast<double>(n + (needs_sliver ? 1 : 0));

  std::vector<std::future<QuadResult>> jobs;
  jobs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = std::min(std::max(alphas[i], kMinOmega), top);
    const double hi = i + 1 < n ? std::min(std::max(alphas[i + 1], kMinOmega), top) : top;
    const double end_fraction = hi == top ? 0.1 : 1.0;
    jobs.push_back(std::async(std::launch::async, [&f, lo, hi, budget, end_fraction, rule = opts.rule] {
      if (rule == QuadRule::tanh_sinh) return integrate_tanh_sinh(f, lo, hi, budget);
      return integrate_gauss_kronrod(f, lo, hi, budget, end_fraction);
    }));
  }
  std::vector<QuadResult> segs;
  segs.reserve(n);
  for (auto& j : jobs) segs.push_back(j.get());

  double sliver = 0.0, sliver_err = 0.0;
  if (needs_sliver) std::tie(sliver, sliver_err) = sliver_extension(f, kMinOmega);

  // spot checks in the real-character regime
  bool regime_ok = true;
  std::vector<std::string> diagnostics = br.diagnostics;
  if (br.alpha_K) {
    for (int i = 0; i < 5; ++i) {
      const double w = *br.alpha_K + (kPi - *br.alpha_K) * (i + 0.5) / 5.0;
      const BranchPoint bp = br.evaluate(w);
      const double v = std::log(std::abs(longitude_L(knot, bp.z, bp.M)));
      if (!(std::abs(v) < kRegimeTol)) {
        regime_ok = false;
        diagnostics.push_back("log|L| = " + fmt(v) + " at omega = " + fmt(w) + " above alpha_K");
      }
    }
  }

  std::vector<VolumeResult> out(n);
  double acc = 0.0, acc_err = 0.0;
  for (std::size_t i = n; i-- > 0;) {
    acc += segs[i].value;
    acc_err += segs[i].error;
    VolumeResult& r = out[i];
    r.knot = knot;
    r.alpha = alphas[i];
    r.alpha_K = br.alpha_K;
    r.volume = acc;
    r.quad_error = acc_err;
    if (alphas[i] < kMinOmega) {
      r.volume += sliver;
      r.quad_error += sliver_err;
    }
    r.volume = std::max(0.0, r.volume);
    r.candidates = br.candidates;
    r.diagnostics = diagnostics;
    r.regime_check_passed = regime_ok;
  }
  for (const VolumeResult& r : out)
    if (!(r.quad_error <= opts.tol))
      throw QuadratureNotConverged(knot.name() + ": quadrature error " + fmt(r.quad_error) + " above tolerance at alpha = " +
                                       fmt(r.alpha),
                                   r.volume, r.quad_error);
  return out;
}

std::vector<VolumeResult> volume_curve(const KnotParam& knot, std::span<const double> alphas,
                                       const VolumeOptions& opts) {
  if (alphas.empty()) throw InvalidArgument("volume_curve: no cone angles given");
  const Branch br = geometric_branch(knot, std::max(alphas.front(), 0.0), opts.track);
  return volume_curve(br, alphas, opts);
}

VolumeResult cone_volume(const KnotParam& knot, double alpha, const VolumeOptions& opts) {
  if (!(alpha >= 0.0 && alpha <= kPi)) throw InvalidArgument("cone angle outside [0, pi]: " + fmt(alpha));
  const double a[] = {alpha};
  return volume_curve(knot, a, opts).front();
}

}  // namespace dtvol
