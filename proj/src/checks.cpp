#include "dtvol/checks.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "dtvol/format.hpp"
#include "dtvol/longitude.hpp"
#include "dtvol/riley.hpp"
#include "dtvol/slrep.hpp"
#include "dtvol/volume.hpp"

namespace dtvol {

namespace {

constexpr double kPi = std::numbers::pi;

double rel_diff(cplx a, cplx b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

/// Point with M off the unit circle and z in a disk of radius 3, away from
/// the abelian locus z = 2.
RepPoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    const cplx M = std::polar(0.6 + 1.0 * u(rng), 2.0 * kPi * u(rng));
    const cplx z = std::polar(3.0 * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
    if (std::abs(2.0 - z) > 1e-2) return {M, z};
  }
}

/// Words used by the polynomial comparisons: jk_word(k) for k <= 12 and the
/// two-bridge words with p <= 21.
std::vector<FreeWord> admissible_words() {
  std::vector<FreeWord> words;
  for (int k = 2; k <= 12; ++k) words.push_back(jk_word(k));
  for (int p = 3; p <= 21; p += 2)
    for (int q = -p + 2; q < p; q += 2)
      if (std::gcd(p, q) == 1) words.push_back(twobridge_word({p, q}));
  return words;
}

CheckResult timed(const std::string& name, const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

void check_three_polynomials(CheckResult& r) {
  std::mt19937_64 rng(20240601);
  const std::vector<FreeWord> words = admissible_words();
  double worst = 0.0;
  const int samples = std::max<int>(200, static_cast<int>(words.size()));
  for (int i = 0; i < samples; ++i) {
    const FreeWord& W = words[static_cast<std::size_t>(i) % words.size()];
    const RepPoint pt = random_point(rng);
    const cplx riley = riley_poly_value(W, pt);
    const cplx le = le_poly_value(W, pt);
    const cplx med = mednykh_poly_value(W, pt);
    worst = std::max({worst, rel_diff(riley, le), rel_diff(le, med)});
  }
  r.passed = worst < 1e-10;
  r.detail = std::to_string(samples) + " samples, max relative difference " + sci(worst);
}

void check_closed_recursive(CheckResult& r) {
  std::mt19937_64 rng(77);
  double worst = 0.0;
  for (int k = 2; k <= 9; ++k)
    for (int n = -5; n <= 5; ++n) {
      if (n == 0) continue;
      for (int i = 0; i < 100; ++i) {
        const RepPoint pt = random_point(rng);
        worst = std::max(worst, rel_diff(riley_value(k, n, pt, PhiForm::closed), riley_value(k, n, pt, PhiForm::recursive)));
      }
    }
  r.passed = worst < 1e-10;
  r.detail = "k = 2..9, n = -5..5, max relative difference " + sci(worst);
}

void check_w_matrix(CheckResult& r) {
  std::mt19937_64 rng(4242);
  double worst_entry = 0.0, worst_trace = 0.0, worst_21 = 0.0;
  for (int k = 2; k <= 12; ++k) {
    const FreeWord w = jk_word(k);
    for (int i = 0; i < 50; ++i) {
      const RepPoint pt = random_point(rng);
      const Mat2C a = prop_w_matrix(k, pt);
      const Mat2C b = rho_word(w, pt);
      const double scale = std::max(b.max_abs(), 1e-300);
      worst_entry = std::max(worst_entry, (a - b).max_abs() / scale);
      worst_trace = std::max(worst_trace, rel_diff(b.trace(), riley_coefficients(k, pt).t));
      worst_21 = std::max(worst_21, std::abs(b.e21 - pt.r() * b.e12) / scale);
    }
  }
  r.passed = worst_entry < 1e-10 && worst_trace < 1e-12 && worst_21 < 1e-10;
  r.detail = "entries " + sci(worst_entry) + ", trace " + sci(worst_trace) + ", w21 - (2-z) w12 " + sci(worst_21);
}

void check_longitude(CheckResult& r) {
  std::mt19937_64 rng(99);
  double worst = 0.0;
  for (int k = 2; k <= 9; ++k)
    for (int n = -5; n <= 5; ++n) {
      if (n == 0) continue;
      const KnotParam knot = KnotParam::make(k, n);
      for (int i = 0; i < 20; ++i) {
        const RepPoint pt = random_point(rng);
        worst = std::max(worst, rel_diff(longitude_L(knot, pt.z(), pt.M()), longitude_L_via_w12(knot, pt.z(), pt.M())));
      }
    }
  r.passed = worst < 1e-10;
  r.detail = "max relative difference " + sci(worst);
}

void check_figure_eight_polynomials(CheckResult& r) {
  std::mt19937_64 rng(8);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const RepPoint pt = random_point(rng);
    worst = std::max(worst, rel_diff(riley_closed(3, 1, pt), riley_closed(2, -1, pt)));
  }
  r.passed = worst < 1e-12;
  r.detail = "J(3,2) vs J(2,-2), 50 points, max relative difference " + sci(worst);
}

std::vector<double> alpha_grid(int count, double lo, double hi) {
  std::vector<double> a;
  for (int i = 0; i < count; ++i) a.push_back(lo + (hi - lo) * (i + 0.5) / count);
  return a;
}

double max_curve_gap(const KnotParam& p, const KnotParam& q, const std::vector<double>& alphas,
                     const VolumeOptions& op = {}, const VolumeOptions& oq = {}) {
  const auto a = volume_curve(p, alphas, op);
  const auto b = volume_curve(q, alphas, oq);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i].volume - b[i].volume));
  return worst;
}

void check_symmetry(CheckResult& r, int points) {
  const auto alphas = alpha_grid(points, 0.1, kPi);
  const double gap = max_curve_gap(KnotParam::make(2, 2), KnotParam::make(4, 1), alphas);
  r.passed = gap < 1e-8;
  r.detail = std::to_string(points) + " angles, max |Vol J(2,4) - Vol J(4,2)| = " + sci(gap);
}

void check_figure_eight_volumes(CheckResult& r) {
  const auto alphas = alpha_grid(20, 0.1, kPi);
  const double gap = max_curve_gap(KnotParam::make(3, 1), KnotParam::make(2, -1), alphas);
  r.passed = gap < 1e-8;
  r.detail = "max |Vol J(3,2) - Vol J(2,-2)| = " + sci(gap);
}

void check_volume_oracle(CheckResult& r) {
  const double oracle = 6.0 * lobachevsky_series(kPi / 3.0);
  VolumeOptions opts;
  opts.tol = 1e-9;
  const VolumeResult v = cone_volume(KnotParam::make(2, -1), 0.0, opts);
  const double err = std::abs(v.volume - oracle);
  r.passed = err < 1e-6;
  r.detail = "Vol = " + format_number(v.volume) + ", 6 L(pi/3) = " + format_number(oracle) + ", diff " + sci(err);
}

void check_alpha_K(CheckResult& r) {
  const double a8 = find_alpha_K(KnotParam::make(2, -1));
  bool ok = std::abs(a8 - 2.0 * kPi / 3.0) < 1e-4;
  std::string bad;
  int count = 0;
  for (int k = 2; k <= 9; ++k)
    for (int n = -5; n <= 5; ++n) {
      if (n == 0 || (k == 2 && n == 1)) continue;
      const double a = find_alpha_K(KnotParam::make(k, n));
      ++count;
      if (!(a >= 2.0 * kPi / 3.0 - 1e-4 && a < kPi)) {
        ok = false;
        bad += " " + KnotParam::make(k, n).name();
      }
    }
  r.passed = ok;
  r.detail = "figure-eight alpha_K - 2pi/3 = " + sci(a8 - 2.0 * kPi / 3.0) + ", " + std::to_string(count) +
             " knots" + (bad.empty() ? " in range" : ", out of range:" + bad);
}

void check_trefoil(CheckResult& r) {
  try {
    (void)cone_volume(KnotParam::make(2, 1), 1.0);
    r.passed = false;
    r.detail = "J(2,2) was not rejected";
  } catch (const NonHyperbolic&) {
    r.passed = true;
    r.detail = "J(2,2) reported non-hyperbolic";
  }
}

void check_self_consistency(CheckResult& r) {
  const KnotParam knots[] = {KnotParam::make(2, -1), KnotParam::make(3, 1), KnotParam::make(4, 1),
                             KnotParam::make(5, -1), KnotParam::make(4, -2)};
  double worst = 0.0;
  for (const KnotParam& k : knots) {
    const double base = cone_volume(k, 0.3).volume;
    VolumeOptions ts;
    ts.rule = QuadRule::tanh_sinh;
    VolumeOptions half;
    half.track.step *= 0.5;
    VolumeOptions rec;
    rec.track.form = PhiForm::recursive;
    for (const VolumeOptions& o : {ts, half, rec}) worst = std::max(worst, std::abs(cone_volume(k, 0.3, o).volume - base));
  }
  r.passed = worst < 1e-8;
  r.detail = "5 knots at alpha = 0.3, max deviation " + sci(worst);
}

}  // namespace

double lobachevsky_series(double theta) {
  // the series converges slowly as 2 theta nears 2 pi; L is odd and pi-periodic
  if (theta > 0.5 * kPi) return -lobachevsky_series(kPi - theta);
  // L(theta) = Cl2(2 theta) / 2 with
  // Cl2(x) = x - x log x + sum_k 2 zeta(2k) (x / 2pi)^(2k) x / (2k (2k + 1))
  const double x = 2.0 * theta;
  double sum = x - x * std::log(x);
  const double ratio = x / (2.0 * kPi);
  double pw = 1.0;
  for (int k = 1; k <= 60; ++k) {
    pw *= ratio * ratio;
    double zeta = 0.0;
    constexpr int N = 64;
    for (int j = 1; j < N; ++j) zeta += std::pow(static_cast<double>(j), -2.0 * k);
    // Euler-Maclaurin tail from N on
    const double s2 = 2.0 * k, dn = N;
    zeta += std::pow(dn, 1.0 - s2) / (s2 - 1.0) + 0.5 * std::pow(dn, -s2) + s2 / 12.0 * std::pow(dn, -s2 - 1.0) -
            s2 * (s2 + 1.0) * (s2 + 2.0) / 720.0 * std::pow(dn, -s2 - 3.0);
    const double term = 2.0 * zeta * pw * x / (2.0 * k * (2.0 * k + 1.0));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return 0.5 * sum;
}

std::vector<CheckResult> run_checks(bool full) {
  std::vector<CheckResult> out;
  out.push_back(timed("riley = le = mednykh", check_three_polynomials));
  out.push_back(timed("closed = recursive riley", check_closed_recursive));
  out.push_back(timed("w matrix = product, trace, w21", check_w_matrix));
  out.push_back(timed("longitude formulas agree", check_longitude));
  out.push_back(timed("J(3,2) = J(2,-2) polynomial", check_figure_eight_polynomials));
  out.push_back(timed("J(2,4) = J(4,2) volume", [full](CheckResult& r) { check_symmetry(r, full ? 20 : 5); }));
  if (full) {
    out.push_back(timed("J(3,2) = J(2,-2) volume curve", check_figure_eight_volumes));
    out.push_back(timed("figure-eight volume oracle", check_volume_oracle));
    out.push_back(timed("alpha_K range", check_alpha_K));
    out.push_back(timed("trefoil excluded", check_trefoil));
    out.push_back(timed("self-consistency", check_self_consistency));
  }
  return out;
}

}  // namespace dtvol
