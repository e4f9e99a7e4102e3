#include "dtvol/branch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "dtvol/longitude.hpp"
#include "dtvol/riley.hpp"
#include "dtvol/roots.hpp"

namespace dtvol {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRealTol = 1e-7;
constexpr double kConjTol = 1e-6;
constexpr double kProjectTol = 1e-3;
constexpr double kBisectWidth = 1e-7;
constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_real(cplx z) { return std::abs(z.imag()) <= kRealTol * std::max(1.0, std::abs(z)); }

double scale_of(cplx z) { return std::max(1.0, std::abs(z)); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

ZPoly phi_at(const KnotParam& knot, double omega, PhiForm form) {
  return riley_zpoly(knot.k, knot.n, unit_meridian(omega), form);
}

std::vector<cplx> roots_at(const KnotParam& knot, double omega, PhiForm form, const std::vector<cplx>& warm) {
  const ZPoly p = phi_at(knot, omega, form);
  if (p.degree() < 1)
    throw NumericalFailure("Riley polynomial of " + knot.name() + " is constant at omega = " + fmt(omega));
  const cplx M = unit_meridian(omega);
  return poly_roots(p, warm, [&](cplx z) { return riley_jet(knot.k, knot.n, M, z, form); });
}

std::size_t nearest(const std::vector<cplx>& roots, cplx target, std::size_t exclude = std::size_t(-1)) {
  std::size_t best = std::size_t(-1);
  double dist = kInf;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i == exclude) continue;
    const double d = std::abs(roots[i] - target);
    if (d < dist) {
      dist = d;
      best = i;
    }
  }
  return best;
}

/// On |M| = 1 the Riley polynomial has real coefficients, so conj(z) is a root
/// whenever z is, and imcond(conj z) = -imcond(z) exactly. Returns the member
/// of {z, conj z} satisfying the branch condition imcond <= 0 (ties: Im z < 0).
cplx branch_representative(const KnotParam& knot, cplx z) {
  const double ic = imcond(knot, z);
  if (ic < 0.0) return z;
  if (ic > 0.0) return std::conj(z);
  return z.imag() <= 0.0 ? z : std::conj(z);
}

struct Match {
  enum class Kind { ok, real, ambiguous };
  Kind kind = Kind::ambiguous;
  cplx z;
  double sep = kInf;
};

/// Nearest root to `pred`, with z / conj(z) resolved by the branch condition
/// and uniqueness judged against every root other than the conjugate pair.
Match match_root(const KnotParam& knot, const std::vector<cplx>& roots, cplx pred, cplx z_cur) {
  const std::size_t idx = nearest(roots, pred);
  const cplx zeta = roots[idx];
  if (is_real(zeta)) return {Match::Kind::real, zeta, 0.0};

  // the partner is whichever computed root stands for conj(zeta); near a
  // collision on the real axis both are perturbed, so the test is relative
  // to the pair gap as well
  std::size_t partner = nearest(roots, std::conj(zeta), idx);
  const bool paired = partner != std::size_t(-1) &&
                      std::abs(roots[partner] - std::conj(zeta)) <=
                          std::max(kConjTol * scale_of(zeta), 0.5 * std::abs(zeta.imag()));
  if (!paired) partner = std::size_t(-1);

  const cplx chosen = branch_representative(knot, zeta);

  double sep = kInf;
  for (std::size_t j = 0; j < roots.size(); ++j) {
    if (j == idx || j == partner) continue;
    sep = std::min(sep, std::abs(roots[j] - chosen));
  }
  const bool unique = std::abs(chosen - z_cur) < 0.5 * sep;
  return {unique ? Match::Kind::ok : Match::Kind::ambiguous, chosen, sep};
}

BranchPoint make_point(const KnotParam& knot, double omega, cplx z) {
  return {omega, unit_meridian(omega), z, imcond(knot, z)};
}

cplx predict(const std::vector<BranchPoint>& pts, double omega) {
  const BranchPoint& last = pts.back();
  if (pts.size() < 2) return last.z;
  const BranchPoint& prev = pts[pts.size() - 2];
  const double dw = last.omega - prev.omega;
  if (dw <= 0.0) return last.z;
  return last.z + (last.z - prev.z) * ((omega - last.omega) / dw);
}

double log_abs_L(const KnotParam& knot, const BranchPoint& p) {
  return std::log(std::abs(longitude_L(knot, p.z, p.M)));
}

struct Track {
  SeedCandidate info;
  std::vector<BranchPoint> pts;
  std::vector<double> sep;
  // state just past the crossing, for continuing into the real regime
  cplx z_real;
  std::vector<cplx> roots_real;
};

/// Newton on Phi = dPhi/dz = 0 over real (z, omega), starting near a collision
/// of the conjugate pair on the real axis. Root realness is a poor test this
/// close to a double root; the fold system itself is well conditioned.
std::optional<std::pair<double, double>> refine_fold(const KnotParam& knot, PhiForm form, double w, double x) {
  constexpr double h = 1e-6;
  // Phi and dPhi/dz at x from the Taylor expansion there
  auto jet = [&](double omega) {
    const ZPoly t = riley_taylor(knot.k, knot.n, unit_meridian(omega), cplx{x, 0.0}, form);
    return std::pair{t[0].real(), t.degree() >= 1 ? t[1].real() : 0.0};
  };
  double prev = kInf;
  for (int it = 0; it < 30; ++it) {
    const ZPoly t = riley_taylor(knot.k, knot.n, unit_meridian(w), cplx{x, 0.0}, form);
    const double f = t[0].real();
    const double fz = t.degree() >= 1 ? t[1].real() : 0.0;
    const double fzz = t.degree() >= 2 ? 2.0 * t[2].real() : 0.0;
    const auto [fp, fzp] = jet(w + h);
    const auto [fm, fzm] = jet(w - h);
    const double fw = (fp - fm) / (2.0 * h);
    const double fzw = (fzp - fzm) / (2.0 * h);
    const double det = fz * fzw - fw * fzz;
    if (!(std::abs(det) > 0.0) || !std::isfinite(det)) return std::nullopt;
    const double dx = -(f * fzw - fw * fz) / det;
    const double dw = -(fz * fz - fzz * f) / det;
    x += dx;
    w += dw;
    if (!std::isfinite(x) || !std::isfinite(w)) return std::nullopt;
    const double step = std::abs(dw) + std::abs(dx) / std::max(1.0, std::abs(x));
    if (step <= 1e-15) return std::pair{w, x};
    // stagnation at rounding level
    if (step <= 1e-11 && step >= 0.5 * prev) return std::pair{w, x};
    prev = step;
  }
  return std::nullopt;
}

/// Locates where a track meets the real axis inside (lo, hi]; `z_hi` is the
/// real root observed at hi. Bisection brackets the crossing, the fold system
/// pins it down.
void bisect_crossing(const KnotParam& knot, const TrackOptions& opts, Track& tr, double lo, cplx z_lo, double hi,
                     cplx z_hi, std::vector<cplx> roots_hi, const std::vector<cplx>& warm,
                     std::vector<std::string>& diag) {
  double sep_lo = tr.sep.empty() ? kInf : tr.sep.back();
  const double lo0 = lo, hi0 = hi;
  bool moved_lo = false;
  while (hi - lo > kBisectWidth) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    std::vector<cplx> roots = roots_at(knot, mid, opts.form, warm);
    const Match m = match_root(knot, roots, z_lo, z_lo);
    if (m.kind == Match::Kind::real) {
      hi = mid;
      z_hi = m.z;
      roots_hi = std::move(roots);
    } else {
      if (m.kind == Match::Kind::ambiguous)
        diag.push_back("crossing bisection near omega = " + fmt(mid) + " saw a nearby third root");
      lo = mid;
      z_lo = m.z;
      sep_lo = m.sep;
      moved_lo = true;
    }
  }

  const auto fold = refine_fold(knot, opts.form, 0.5 * (lo + hi), z_lo.real());
  const double slack = 10.0 * kBisectWidth;
  if (fold && fold->first > lo0 - slack && fold->first < hi0 + slack && fold->first <= kPi &&
      std::abs(fold->second - z_lo.real()) <= 0.1 * scale_of(z_lo)) {
    const double wc = fold->first;
    const cplx zc{fold->second, 0.0};
    if (moved_lo && lo < wc) {
      tr.pts.push_back(make_point(knot, lo, z_lo));
      tr.sep.push_back(sep_lo);
    }
    while (!tr.pts.empty() && tr.pts.back().omega >= wc) {
      tr.pts.pop_back();
      tr.sep.pop_back();
    }
    tr.pts.push_back(make_point(knot, wc, zc));
    tr.sep.push_back(sep_lo);
    tr.info.alpha_end = wc;
    tr.z_real = zc;
    tr.roots_real = roots_at(knot, wc, opts.form, roots_hi);
  } else {
    diag.push_back("fold refinement failed near omega = " + fmt(hi) + "; using the bisection bracket");
    if (moved_lo) {
      tr.pts.push_back(make_point(knot, lo, z_lo));
      tr.sep.push_back(sep_lo);
    }
    tr.info.alpha_end = hi;
    tr.z_real = z_hi;
    tr.roots_real = std::move(roots_hi);
  }
  tr.info.status = SeedCandidate::Status::completed;
}

double trapezoid_volume(const KnotParam& knot, const Track& tr, std::vector<std::string>& diag) {
  double vol = 0.0;
  double prev_w = 0.0, prev_f = 0.0;
  bool have_prev = false;
  for (const BranchPoint& p : tr.pts) {
    double f = 0.0;
    try {
      f = log_abs_L(knot, p);
    } catch (const DegenerateLongitude&) {
      diag.push_back("degenerate longitude on a seed candidate at omega = " + fmt(p.omega));
    }
    if (have_prev) vol += 0.5 * (p.omega - prev_w) * (f + prev_f);
    prev_w = p.omega;
    prev_f = f;
    have_prev = true;
  }
  if (have_prev && tr.info.alpha_end) vol += 0.5 * (*tr.info.alpha_end - prev_w) * prev_f;
  return vol;
}

/// Continues a real root from alpha_K to pi. Any real root has |L| = 1, so a
/// late ambiguity among real roots is accepted with a diagnostic.
void track_real_regime(const KnotParam& knot, const TrackOptions& opts, Branch& br, double w, cplx z_start,
                       std::vector<cplx> roots) {
  const cplx z{z_start.real(), 0.0};

  auto sep_of = [&](const std::vector<cplx>& rs, std::size_t idx) {
    double s = kInf;
    for (std::size_t j = 0; j < rs.size(); ++j)
      if (j != idx) s = std::min(s, std::abs(rs[j] - rs[idx]));
    return s;
  };
  // the alpha_K point closing the hyperbolic range doubles as the start here
  if (br.points.empty() || br.points.back().omega < w) {
    br.points.push_back(make_point(knot, w, z));
    br.separation.push_back(sep_of(roots, nearest(roots, z)));
  }
  const std::size_t first = br.points.size() - 1;

  double h = std::min(opts.step, 1e-4);
  bool first_step = true;
  bool reported_nonreal = false;
  while (w < kPi) {
    const double w_new = std::min(w + h, kPi);
    std::vector<cplx> rn = roots_at(knot, w_new, opts.form, roots);
    const std::vector<BranchPoint> tail(br.points.begin() + static_cast<std::ptrdiff_t>(first), br.points.end());
    std::size_t idx = nearest(rn, predict(tail, w_new));
    if (first_step) {
      // of the two roots born at the double root, take the one with larger real part
      const std::size_t other = nearest(rn, z, idx);
      if (other != std::size_t(-1) && rn[other].real() > rn[idx].real()) idx = other;
    }
    const double sep = sep_of(rn, idx);
    const bool unique = std::abs(rn[idx] - br.points.back().z) < 0.5 * sep;
    if (!first_step && !unique && h > opts.min_step) {
      h = std::max(0.5 * h, opts.min_step);
      continue;
    }
    if (!first_step && !unique)
      br.diagnostics.push_back("real-regime tracking accepted an ambiguous match at omega = " + fmt(w_new));
    cplx zn = rn[idx];
    if (is_real(zn)) {
      zn = cplx{zn.real(), 0.0};
    } else if (!reported_nonreal) {
      br.diagnostics.push_back("tracked character is nonreal above alpha_K at omega = " + fmt(w_new));
      reported_nonreal = true;
    }
    br.points.push_back(make_point(knot, w_new, zn));
    br.separation.push_back(sep);
    roots = std::move(rn);
    w = w_new;
    first_step = false;
    h = std::min(opts.step, 2.0 * h);
  }
}

}  // namespace

cplx unit_meridian(double omega) { return std::polar(1.0, 0.5 * omega); }

const char* to_string(SeedCandidate::Status s) {
  switch (s) {
    case SeedCandidate::Status::completed: return "completed";
    case SeedCandidate::Status::open: return "open";
    case SeedCandidate::Status::lost: return "lost";
  }
  return "unknown";
}

double seed_omega(double alpha) { return std::max(std::min(alpha, 0.1), 1e-4); }

Branch track_branch(const KnotParam& knot_in, double alpha, const TrackOptions& opts) {
  const KnotParam knot = KnotParam::make(knot_in.k, knot_in.n);
  if (!(alpha > 0.0 && alpha <= kPi) && alpha != 0.0)
    throw InvalidArgument("cone angle must lie in (0, pi], got " + fmt(alpha));
  if (!(opts.step > 0.0) || !(opts.min_step > 0.0) || opts.min_step > opts.step)
    throw InvalidArgument("continuation step must satisfy 0 < min_step <= step");

  Branch br;
  br.knot = knot;
  br.options = opts;

  const double w0 = seed_omega(alpha);
  std::vector<cplx> roots = roots_at(knot, w0, opts.form, {});

  std::vector<Track> tracks;
  for (const cplx& r : roots) {
    if (std::abs(roots[nearest(roots, std::conj(r))] - std::conj(r)) > kConjTol * scale_of(r))
      br.diagnostics.push_back("seed roots are not conjugate-symmetric near z = " + fmt(r.real()) + (r.imag() < 0 ? "" : "+") +
                               fmt(r.imag()) + "i");
    if (is_real(r)) continue;
    const double ic = imcond(knot, r);
    const auto [A, B] = longitude_pair(knot, r);
    const double tie = 1e-12 * std::max(std::abs(A) * std::abs(B), 1e-300);
    const bool qualifies = ic < -tie || (std::abs(ic) <= tie && r.imag() < 0.0);
    if (!qualifies) continue;
    Track tr;
    tr.info.z_seed = r;
    tr.info.imcond_seed = ic;
    tr.pts.push_back(make_point(knot, w0, r));
    double sep = kInf;
    for (const cplx& s : roots)
      if (s != r && std::abs(s - std::conj(r)) > kConjTol * scale_of(r)) sep = std::min(sep, std::abs(s - r));
    tr.sep.push_back(sep);
    tracks.push_back(std::move(tr));
  }
  if (tracks.empty()) {
    br.hyperbolic = false;
    br.diagnostics.push_back("no nonreal root of the Riley polynomial at the seed omega = " + fmt(w0));
    return br;
  }
  br.hyperbolic = true;

  double w = w0;
  double h = opts.step;
  while (w < kPi) {
    bool any_open = false;
    for (const Track& t : tracks) any_open = any_open || t.info.status == SeedCandidate::Status::open;
    if (!any_open) break;

    const double w_new = std::min(w + h, kPi);
    std::vector<cplx> rn = roots_at(knot, w_new, opts.form, roots);
    std::vector<Match> matches(tracks.size());
    bool any_ambiguous = false;
    for (std::size_t i = 0; i < tracks.size(); ++i) {
      if (tracks[i].info.status != SeedCandidate::Status::open) continue;
      matches[i] = match_root(knot, rn, predict(tracks[i].pts, w_new), tracks[i].pts.back().z);
      any_ambiguous = any_ambiguous || matches[i].kind == Match::Kind::ambiguous;
    }
    if (any_ambiguous && h > opts.min_step) {
      h = std::max(0.5 * h, opts.min_step);
      continue;
    }
    for (std::size_t i = 0; i < tracks.size(); ++i) {
      Track& tr = tracks[i];
      if (tr.info.status != SeedCandidate::Status::open) continue;
      const Match& m = matches[i];
      switch (m.kind) {
        case Match::Kind::ambiguous:
          tr.info.status = SeedCandidate::Status::lost;
          br.diagnostics.push_back("seed candidate lost: no unique continuation at omega = " + fmt(w_new));
          break;
        case Match::Kind::real:
          bisect_crossing(knot, opts, tr, w, tr.pts.back().z, w_new, m.z, rn, roots, br.diagnostics);
          break;
        case Match::Kind::ok:
          tr.pts.push_back(make_point(knot, w_new, m.z));
          tr.sep.push_back(m.sep);
          break;
      }
    }
    roots = std::move(rn);
    w = w_new;
    if (!any_ambiguous) h = std::min(opts.step, 2.0 * h);
  }

  std::size_t best = 0;
  for (std::size_t i = 0; i < tracks.size(); ++i) {
    tracks[i].info.volume_estimate = trapezoid_volume(knot, tracks[i], br.diagnostics);
    if (tracks[i].info.volume_estimate > tracks[best].info.volume_estimate) best = i;
  }
  tracks[best].info.selected = true;
  for (const Track& t : tracks) br.candidates.push_back(t.info);

  Track& geo = tracks[best];
  if (geo.info.status == SeedCandidate::Status::lost)
    throw ContinuationAmbiguous("geometric branch of " + knot.name() +
                                " could not be continued uniquely at the minimum step");
  br.points = std::move(geo.pts);
  br.separation = std::move(geo.sep);
  if (geo.info.status == SeedCandidate::Status::completed) {
    br.alpha_K = geo.info.alpha_end;
    track_real_regime(knot, opts, br, *geo.info.alpha_end, geo.z_real, std::move(geo.roots_real));
  } else {
    br.diagnostics.push_back("geometric root stayed nonreal up to pi");
  }
  return br;
}

Branch geometric_branch(const KnotParam& knot, double alpha, const TrackOptions& opts) {
  Branch br = track_branch(knot, alpha, opts);
  if (!br.hyperbolic)
    throw NonHyperbolic(knot.name() + ": Riley polynomial has only real roots at the seed " +
                        "(trefoil or non-hyperbolic parameters)");
  return br;
}

double find_alpha_K(const KnotParam& knot, const TrackOptions& opts) {
  const Branch br = geometric_branch(knot, 0.1, opts);
  if (!br.alpha_K) throw NumericalFailure(knot.name() + ": geometric root never became real on (0, pi]");
  if (*br.alpha_K < 2.0 * kPi / 3.0 - 0.05)
    throw NumericalFailure(knot.name() + ": geometric root became real at omega = " + fmt(*br.alpha_K) +
                           ", below the admissible range for alpha_K");
  return *br.alpha_K;
}

BranchPoint Branch::evaluate(double omega) const {
  if (points.empty()) throw NumericalFailure("branch has no points");
  if (!(omega > 0.0 && omega <= kPi)) throw InvalidArgument("branch evaluation outside (0, pi]: " + fmt(omega));

  const bool real_regime = alpha_K && omega >= *alpha_K;
  // indices [lo_idx, hi_idx) of the regime's sample points
  const auto k_it = alpha_K ? std::lower_bound(points.begin(), points.end(), *alpha_K,
                                               [](const BranchPoint& p, double w) { return p.omega < w; })
                            : points.end();
  const std::size_t k_idx = static_cast<std::size_t>(k_it - points.begin());
  std::size_t lo_idx = real_regime ? k_idx : 0;
  // the alpha_K point closes the hyperbolic range as its right end
  std::size_t hi_idx = real_regime ? points.size() : std::min(points.size(), k_idx + 1);

  const auto begin = points.begin() + static_cast<std::ptrdiff_t>(lo_idx);
  const auto end = points.begin() + static_cast<std::ptrdiff_t>(hi_idx);
  auto it = std::upper_bound(begin, end, omega, [](double w, const BranchPoint& p) { return w < p.omega; });
  std::size_t right = static_cast<std::size_t>(it - points.begin());
  if (right == lo_idx) right = lo_idx + 1;
  if (right >= hi_idx) right = hi_idx - 1;
  std::size_t left = right - 1;
  if (hi_idx - lo_idx < 2) left = right = lo_idx;

  const BranchPoint& pl = points[left];
  const BranchPoint& pr = points[right];
  cplx guess = pl.z;
  if (right != left) guess = pl.z + (pr.z - pl.z) * ((omega - pl.omega) / (pr.omega - pl.omega));
  // the alpha_K point's own separation is to its conjugate partner
  const double sep = real_regime ? std::min(separation[left], separation[right]) : separation[left];

  // Newton on the expansion about the guess; near the double root at alpha_K
  // this is much less noisy than the monomial form
  const ZPoly local = riley_taylor(knot.k, knot.n, unit_meridian(omega), guess, options.form);
  bool converged = false;
  cplx z = guess;
  if (local.degree() >= 1) z = guess + newton_polish(local, cplx{}, 60, &converged);
  if (!real_regime) z = branch_representative(knot, z);

  const double drift = std::min(std::abs(z - guess), std::abs(std::conj(z) - guess));
  if (!converged || !(drift <= 0.25 * sep)) {
    const std::vector<cplx> roots = poly_roots(phi_at(knot, omega, options.form));
    if (real_regime) {
      z = roots[nearest(roots, guess)];
    } else {
      const Match m = match_root(knot, roots, guess, guess);
      z = m.z;
    }
  }
  // above alpha_K the characters are real; what is left of Im z next to the
  // double root is rounding
  if (real_regime && std::abs(z.imag()) <= kProjectTol * scale_of(z)) z = cplx{z.real(), 0.0};
  return make_point(knot, omega, z);
}

}  // namespace dtvol
