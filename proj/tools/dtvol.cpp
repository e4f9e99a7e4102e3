// dtvol: Riley polynomials, branch tracking and cone-manifold volumes of
// double twist knots J(k, 2n).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>

#include <CLI11.hpp>

#include "dtvol/branch.hpp"
#include "dtvol/cache.hpp"
#include "dtvol/checks.hpp"
#include "dtvol/format.hpp"
#include "dtvol/riley.hpp"
#include "dtvol/roots.hpp"
#include "dtvol/volume.hpp"

using namespace dtvol;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNonHyperbolic = 3;
constexpr int kExitNumerical = 4;

constexpr double kPi = std::numbers::pi;

struct Output {
  std::string stdout_text;
  std::map<std::string, std::string> files;
};

struct Common {
  int k = 0;
  int n = 0;
  std::string form = "closed";
  double step = 0.005;
  bool no_cache = false;
};

PhiForm parse_form(const std::string& s) { return s == "recursive" ? PhiForm::recursive : PhiForm::closed; }

TrackOptions track_options(const Common& c) {
  TrackOptions t;
  t.step = c.step;
  t.form = parse_form(c.form);
  return t;
}

ojson base_params(const Common& c) {
  ojson p;
  p["k"] = c.k;
  p["n"] = c.n;
  p["form"] = c.form;
  p["step"] = c.step;
  return p;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidArgument("cannot open '" + path + "' for writing");
  out << text;
  if (!out.flush()) throw NumericalFailure("write to '" + path + "' failed");
}

void emit(const Output& out) {
  for (const auto& [path, text] : out.files) write_file(path, text);
  std::cout << out.stdout_text << std::flush;
}

/// Runs `compute` unless an identical earlier run is in the cache. Only
/// successful runs are stored; errors are always recomputed.
void run_cached(const std::string& command, const ojson& params, bool no_cache, const std::function<Output()>& compute) {
  const nlohmann::json key_params = nlohmann::json::parse(params.dump());
  const ResultCache cache(ResultCache::default_dir());
  if (!no_cache) {
    if (auto rec = cache.load(command, key_params, kVersion)) {
      emit({rec->stdout_text, rec->files});
      return;
    }
  }
  const auto t0 = std::chrono::steady_clock::now();
  const Output out = compute();
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(out);
  if (!no_cache) {
    RunRecord rec{command, key_params, kVersion, out.stdout_text, out.files, 0, wall};
    if (!cache.store(rec)) std::cerr << "dtvol: warning: could not write cache entry in " << cache.dir() << "\n";
  }
}

void add_knot_options(CLI::App* cmd, Common& c, bool tracking) {
  cmd->add_option("-k", c.k, "first twist parameter, k >= 2")->required();
  cmd->add_option("-n", c.n, "half the second twist parameter, n != 0 (knot J(k, 2n))")->required();
  cmd->add_option("--form", c.form, "Riley polynomial form")
      ->check(CLI::IsMember({"closed", "recursive"}))
      ->capture_default_str();
  if (tracking) {
    cmd->add_option("--step", c.step, "continuation step in omega")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_flag("--no-cache", c.no_cache, "do not read or write the result cache");
  }
}

void warn_conditioning(int k, int n, cplx M, PhiForm form) {
  if (auto w = conditioning_warning(k, n, riley_zpoly(k, n, M, form))) std::cerr << "dtvol: warning: " << *w << "\n";
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> v;
  if (count == 1) return {lo};
  for (int i = 0; i < count; ++i) v.push_back(i + 1 == count ? hi : lo + (hi - lo) * i / (count - 1));
  return v;
}

std::string default_branch_path(const std::string& curve_path) {
  std::filesystem::path p(curve_path);
  return (p.parent_path() / (p.stem().string() + "_branch.csv")).string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cone-manifold volumes of double twist knots J(k, 2n)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  // riley
  Common riley_c;
  std::string riley_M = "1,0";
  bool riley_zpoly_flag = false;
  std::vector<std::string> riley_z;
  auto* riley = app.add_subcommand("riley", "Riley polynomial coefficients in z, or values at given z");
  add_knot_options(riley, riley_c, false);
  riley->add_option("--M", riley_M, "meridian eigenvalue as re,im")->capture_default_str();
  riley->add_flag("--zpoly", riley_zpoly_flag, "print coefficients, constant term first (default)");
  riley->add_option("--z", riley_z, "evaluate at these points (re,im)")->allow_extra_args(false);

  // roots
  Common roots_c;
  std::string roots_M;
  double roots_omega = -1.0;
  auto* roots = app.add_subcommand("roots", "all roots in z of the Riley polynomial");
  add_knot_options(roots, roots_c, false);
  auto* roots_M_opt = roots->add_option("--M", roots_M, "meridian eigenvalue as re,im");
  roots->add_option("--omega", roots_omega, "cone angle; uses M = exp(i omega / 2)")->excludes(roots_M_opt);

  // volume
  Common vol_c;
  double vol_alpha = 0.0, vol_tol = 1e-9;
  std::string vol_curve, vol_branch, vol_rule = "gk";
  int vol_samples = 50;
  auto* volume = app.add_subcommand("volume", "cone-manifold volume at one angle (optionally a curve)");
  add_knot_options(volume, vol_c, true);
  volume->add_option("--alpha", vol_alpha, "cone angle in [0, pi]; below 1e-4 uses the limit extension")
      ->capture_default_str();
  volume->add_option("--tol", vol_tol, "absolute quadrature tolerance, >= 1e-12")->capture_default_str();
  auto* curve_opt = volume->add_option("--curve", vol_curve, "also write alpha,volume,quad_error over [alpha, pi]");
  volume->add_option("--samples", vol_samples, "rows of the curve CSV")->check(CLI::Range(1, 100000))->needs(curve_opt)
      ->capture_default_str();
  volume->add_option("--branch", vol_branch, "branch CSV path (default: <curve>_branch.csv with --curve)");
  volume->add_option("--rule", vol_rule, "quadrature rule")->check(CLI::IsMember({"gk", "tanh-sinh"}))->capture_default_str();

  // curve
  Common curve_c;
  double curve_from = 0.0, curve_to = kPi, curve_tol = 1e-9;
  int curve_samples = 50;
  std::string curve_out, curve_branch;
  auto* curve = app.add_subcommand("curve", "volume curve as CSV (alpha, volume, quad_error)");
  add_knot_options(curve, curve_c, true);
  curve->add_option("--from", curve_from, "smallest angle")->capture_default_str();
  curve->add_option("--to", curve_to, "largest angle")->capture_default_str();
  curve->add_option("--samples", curve_samples, "number of angles")->check(CLI::Range(1, 100000))->capture_default_str();
  curve->add_option("--tol", curve_tol, "absolute quadrature tolerance per point")->capture_default_str();
  curve->add_option("-o,--output", curve_out, "CSV path (default: stdout)");
  curve->add_option("--branch", curve_branch, "also write the tracked branch as CSV");

  // alpha-k
  Common ak_c;
  std::string ak_branch;
  auto* alpha_k = app.add_subcommand("alpha-k", "Euclidean angle where the geometric character becomes real");
  add_knot_options(alpha_k, ak_c, true);
  alpha_k->add_option("--branch", ak_branch, "also write the tracked branch as CSV");

  // check
  bool check_full = false, check_quick = false;
  auto* check = app.add_subcommand("check", "run the cross-validation suites");
  auto* quick_flag = check->add_flag("--quick", check_quick, "polynomial identities and one symmetry (default)");
  check->add_flag("--full", check_full, "also volume oracle, alpha_K sweep, self-consistency")->excludes(quick_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*riley) {
      const KnotParam knot = KnotParam::make(riley_c.k, riley_c.n);
      const cplx M = parse_complex(riley_M);
      if (M == cplx{}) throw InvalidArgument("M must be nonzero");
      const PhiForm form = parse_form(riley_c.form);
      warn_conditioning(knot.k, knot.n, M, form);
      ojson out = ojson::array();
      if (!riley_z.empty() && !riley_zpoly_flag) {
        for (const std::string& s : riley_z) out.push_back(complex_json(riley_value(knot.k, knot.n, RepPoint(M, parse_complex(s)), form)));
      } else {
        const ZPoly phi = riley_zpoly(knot.k, knot.n, M, form);
        for (const cplx& c : phi.coeffs()) out.push_back(complex_json(c));
      }
      std::cout << dump_json(out) << "\n";
    } else if (*roots) {
      const KnotParam knot = KnotParam::make(roots_c.k, roots_c.n);
      cplx M{1.0, 0.0};
      if (!roots_M.empty()) M = parse_complex(roots_M);
      if (roots_omega >= 0.0) M = unit_meridian(roots_omega);
      if (M == cplx{}) throw InvalidArgument("M must be nonzero");
      const PhiForm form = parse_form(roots_c.form);
      warn_conditioning(knot.k, knot.n, M, form);
      const ZPoly p = riley_zpoly(knot.k, knot.n, M, form);
      std::vector<cplx> rs = poly_roots(p, {}, [&](cplx z) { return riley_jet(knot.k, knot.n, M, z, form); });
      std::sort(rs.begin(), rs.end(), [](cplx a, cplx b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); });
      ojson out = ojson::array();
      for (const cplx& r : rs) out.push_back(complex_json(r));
      std::cout << dump_json(out) << "\n";
    } else if (*volume) {
      const KnotParam knot = KnotParam::make(vol_c.k, vol_c.n);
      ojson params = base_params(vol_c);
      params["alpha"] = vol_alpha;
      params["tol"] = vol_tol;
      params["rule"] = vol_rule;
      params["curve"] = vol_curve;
      params["samples"] = vol_curve.empty() ? 0 : vol_samples;
      params["branch"] = vol_branch;
      run_cached("volume", params, vol_c.no_cache, [&] {
        VolumeOptions opts;
        opts.tol = vol_tol;
        opts.track = track_options(vol_c);
        opts.rule = vol_rule == "tanh-sinh" ? QuadRule::tanh_sinh : QuadRule::gauss_kronrod;
        if (!(vol_alpha >= 0.0 && vol_alpha <= kPi)) throw InvalidArgument("--alpha must lie in [0, pi]");
        const Branch br = geometric_branch(knot, vol_alpha, opts.track);
        Output out;
        std::vector<VolumeResult> rows;
        if (!vol_curve.empty()) {
          rows = volume_curve(br, linspace(vol_alpha, kPi, vol_samples), opts);
          out.files[vol_curve] = curve_csv(rows);
          out.files[vol_branch.empty() ? default_branch_path(vol_curve) : vol_branch] = branch_csv(br);
        } else {
          const double a[] = {vol_alpha};
          rows = volume_curve(br, a, opts);
          if (!vol_branch.empty()) out.files[vol_branch] = branch_csv(br);
        }
        out.stdout_text = dump_json(to_json(rows.front()), 2) + "\n";
        return out;
      });
    } else if (*curve) {
      const KnotParam knot = KnotParam::make(curve_c.k, curve_c.n);
      if (!(curve_from >= 0.0 && curve_from <= curve_to && curve_to <= kPi))
        throw InvalidArgument("need 0 <= --from <= --to <= pi");
      ojson params = base_params(curve_c);
      params["from"] = curve_from;
      params["to"] = curve_to;
      params["samples"] = curve_samples;
      params["tol"] = curve_tol;
      params["output"] = curve_out;
      params["branch"] = curve_branch;
      run_cached("curve", params, curve_c.no_cache, [&] {
        VolumeOptions opts;
        opts.tol = curve_tol;
        opts.track = track_options(curve_c);
        const Branch br = geometric_branch(knot, curve_from, opts.track);
        const std::string csv = curve_csv(volume_curve(br, linspace(curve_from, curve_to, curve_samples), opts));
        Output out;
        if (curve_out.empty())
          out.stdout_text = csv;
        else
          out.files[curve_out] = csv;
        if (!curve_branch.empty()) out.files[curve_branch] = branch_csv(br);
        return out;
      });
    } else if (*alpha_k) {
      const KnotParam knot = KnotParam::make(ak_c.k, ak_c.n);
      ojson params = base_params(ak_c);
      params["branch"] = ak_branch;
      run_cached("alpha-k", params, ak_c.no_cache, [&] {
        const Branch br = geometric_branch(knot, 0.1, track_options(ak_c));
        if (!br.alpha_K) throw NumericalFailure(knot.name() + ": geometric root never became real on (0, pi]");
        ojson j;
        j["k"] = knot.k;
        j["n"] = knot.n;
        j["alpha_K"] = *br.alpha_K;
        j["candidates"] = ojson::array();
        for (const SeedCandidate& c : br.candidates) j["candidates"].push_back(to_json(c));
        Output out;
        out.stdout_text = dump_json(j, 2) + "\n";
        if (!ak_branch.empty()) out.files[ak_branch] = branch_csv(br);
        return out;
      });
    } else if (*check) {
      const auto results = run_checks(check_full);
      bool all = true;
      std::size_t width = 0;
      for (const CheckResult& r : results) width = std::max(width, r.name.size());
      for (const CheckResult& r : results) {
        all = all && r.passed;
        std::printf("%-4s  %-*s  %7.2fs  %s\n", r.passed ? "PASS" : "FAIL", static_cast<int>(width), r.name.c_str(),
                    r.seconds, r.detail.c_str());
      }
      std::printf("%s\n", all ? "all checks passed" : "some checks FAILED");
      return all ? kExitOk : kExitCheckFailed;
    }
  } catch (const NonHyperbolic& e) {
    std::cerr << "dtvol: non-hyperbolic: " << e.what() << "\n";
    return kExitNonHyperbolic;
  } catch (const InvalidArgument& e) {
    std::cerr << "dtvol: usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const QuadratureNotConverged& e) {
    std::cerr << "dtvol: numerical failure: " << e.what() << " (best estimate " << format_number(e.estimate())
              << ", error " << format_number(e.error()) << ")\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "dtvol: numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}
