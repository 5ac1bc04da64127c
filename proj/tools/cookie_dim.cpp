#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cookiedim/boxdim.hpp"
#include "cookiedim/config.hpp"
#include "cookiedim/dimension.hpp"
#include "cookiedim/errors.hpp"
#include "cookiedim/scenarios.hpp"
#include "cookiedim/svg.hpp"
#include "cookiedim/sweep.hpp"
#include "cookiedim/thermo.hpp"
#include "cookiedim/toml_lite.hpp"

namespace {

using namespace cookiedim;

std::string g12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::filesystem::path ensure_out_dir(const std::string& dir) {
  std::filesystem::path p(dir);
  std::error_code ec;
  std::filesystem::create_directories(p, ec);
  if (ec) throw ConfigError("cannot create output directory " + dir);
  return p;
}

std::ofstream open_csv(const std::filesystem::path& p) {
  std::ofstream out(p);
  if (!out) throw ConfigError("cannot write " + p.string());
  return out;
}

int cmd_moran(const std::vector<double>& ratios) {
  RootResult r = moran_dimension(ratios);
  std::printf("moran root        %s\n", g12(r.root).c_str());
  std::printf("residual          %s\n", g12(r.residual).c_str());
  std::printf("error radius      %s\n", g12(r.error_radius).c_str());
  if (r.clamped_at_one)
    std::printf("note: ratios sum above 1 at s = 1; root clamped\n");
  return 0;
}

// depth for a non-affine stationary run honoring a pressure tolerance
std::int64_t stationary_depth_for(const CookieCutter& F, double tol,
                                  std::int64_t word_cap, bool allow_fallback) {
  std::int64_t capped = capped_depth(F.branch_count(), word_cap);
  if (!(tol > 0.0) || F.all_affine()) return capped;
  ContractionProfile prof = contraction_profile(F);
  auto need = static_cast<std::int64_t>(
      std::ceil(prof.cKappa / (tol * std::log(prof.lambda))));
  if (need <= capped) return std::max<std::int64_t>(need, 1);
  if (!allow_fallback)
    throw DepthCapError(
        "system '" + F.label() + "' needs depth " + std::to_string(need) +
        " for tolerance " + g12(tol) + " but the cap allows only " +
        std::to_string(capped) + "; pass --allow-fallback to accept the "
        "coarser radius");
  return capped;
}

int cmd_dim(const std::string& config, std::vector<std::int64_t> horizons,
            std::int64_t word_cap, double tol, bool allow_fallback,
            const std::string& out_dir) {
  nlohmann::json doc = parse_toml_file(config);
  SystemFamily fam = load_system_family(doc);

  if (!has_sequence(doc)) {
    std::printf("stationary systems: %d\n", fam.size());
    double min_single = 1.0;
    for (int j = 0; j < fam.size(); ++j) {
      const CookieCutter& F = fam.system(j);
      std::int64_t depth =
          stationary_depth_for(F, tol, word_cap, allow_fallback);
      DimensionEstimate d = stationary_dimension(F, depth, word_cap);
      min_single = std::min(min_single, d.value);
      std::printf("  %-12s dim %s +/- %s  (depth %lld)\n",
                  (F.label().empty() ? ("system" + std::to_string(j)).c_str()
                                     : F.label().c_str()),
                  g12(d.value).c_str(), g12(d.error_radius).c_str(),
                  static_cast<long long>(d.depth));
    }
    if (fam.size() == 2) {
      CookieCutter pair = compose_systems(
          {&fam.system(0), &fam.system(1)},
          fam.system(0).label() + "*" + fam.system(1).label());
      std::int64_t depth =
          stationary_depth_for(pair, tol, word_cap, allow_fallback);
      DimensionEstimate dp = stationary_dimension(pair, depth, word_cap);
      std::printf("  %-12s dim %s +/- %s  (depth %lld)\n",
                  pair.label().c_str(), g12(dp.value).c_str(),
                  g12(dp.error_radius).c_str(),
                  static_cast<long long>(dp.depth));
      std::printf("composed pair vs best single system: %s %s %s\n",
                  g12(dp.value).c_str(),
                  dp.value < min_single ? "<" : ">=",
                  g12(min_single).c_str());
    }
    return 0;
  }

  SymbolSequence seq = load_sequence(doc);
  if (seq.alphabet_size() > fam.size())
    throw ConfigError("sequence uses " + std::to_string(seq.alphabet_size()) +
                      " letters but only " + std::to_string(fam.size()) +
                      " systems are defined");
  if (horizons.empty()) {
    for (std::int64_t e : seq.block_ends()) horizons.push_back(e);
  }
  EstimateOptions opt;
  opt.word_cap = word_cap;
  opt.allow_fallback = allow_fallback;
  EstimateOutcome out = dimension_estimates(fam, seq, horizons, opt);

  std::printf("%14s  %-14s  %-12s  %s\n", "n", "root", "radius", "route");
  for (const HorizonPoint& pt : out.trace)
    std::printf("%14lld  %-14s  %-12s  %s\n", static_cast<long long>(pt.n),
                g12(pt.root.root).c_str(),
                g12(pt.root.error_radius).c_str(),
                route_name(pt.route).c_str());
  std::printf("hausdorff  %s +/- %s\n", g12(out.hausdorff.value).c_str(),
              g12(out.hausdorff.error_radius).c_str());
  std::printf("upper_box  %s +/- %s\n", g12(out.upper_box.value).c_str(),
              g12(out.upper_box.error_radius).c_str());

  if (!out_dir.empty()) {
    auto dir = ensure_out_dir(out_dir);
    std::ofstream csv = open_csv(dir / "horizons.csv");
    csv << "n,root,error_radius,route\n";
    for (const HorizonPoint& pt : out.trace)
      csv << pt.n << "," << g12(pt.root.root) << ","
          << g12(pt.root.error_radius) << "," << route_name(pt.route) << "\n";
    std::printf("wrote %s\n", (dir / "horizons.csv").string().c_str());
  }
  return 0;
}

int cmd_verify(const std::string& id) {
  scenarios::VerifyReport rep = scenarios::run_verify(id);
  std::printf("verify %s\n", rep.id.c_str());
  for (const scenarios::VerifyCheck& c : rep.checks)
    std::printf("  [%s] %s: %s %s %s\n", c.pass ? "PASS" : "FAIL",
                c.name.c_str(), g12(c.measured).c_str(), c.relation.c_str(),
                g12(c.bound).c_str());
  std::printf("%s (%.2f s)\n", rep.summary.c_str(), rep.seconds);
  std::printf("verdict: %s\n", rep.passed() ? "PASS" : "FAIL");
  return rep.passed() ? 0 : 1;
}

int cmd_sweep(const std::string& config, int grid_override,
              double threshold_override, std::int64_t word_cap,
              const std::string& out_dir) {
  SweepSpec spec = load_sweep_file(config);
  if (grid_override > 0) spec.grid_size = grid_override;
  if (threshold_override > 0.0) spec.threshold = threshold_override;
  SweepOptions so;
  so.threshold = spec.threshold;
  so.word_cap_per_point = word_cap;
  SweepResult res = sweep(spec.family, spec.grid_size, so);

  std::printf("sweep over [%s, %s], %zu points, %zu systems\n",
              g12(spec.family.a_lo).c_str(), g12(spec.family.a_hi).c_str(),
              res.grid.size(), res.dims.size());
  if (!res.skipped.empty())
    std::printf("skipped %zu invalid parameter(s), first at a = %s\n",
                res.skipped.size(), g12(res.skipped.front()).c_str());
  if (res.kinks.empty()) {
    std::printf("kinks: none above threshold %s\n",
                g12(spec.threshold).c_str());
  } else {
    std::printf("kinks (threshold %s):\n", g12(spec.threshold).c_str());
    for (const Kink& k : res.kinks)
      std::printf("  a = %-14s left slope %-14s right slope %s\n",
                  g12(k.parameter).c_str(), g12(k.left_slope).c_str(),
                  g12(k.right_slope).c_str());
  }

  if (!out_dir.empty()) {
    auto dir = ensure_out_dir(out_dir);
    std::ofstream csv = open_csv(dir / "sweep.csv");
    csv << "a";
    for (std::size_t j = 0; j < res.dims.size(); ++j)
      csv << ",dim_" << (j + 1);
    csv << ",min_env,max_env\n";
    for (std::size_t i = 0; i < res.grid.size(); ++i) {
      csv << g12(res.grid[i]);
      for (std::size_t j = 0; j < res.dims.size(); ++j)
        csv << "," << g12(res.dims[j][i].value);
      csv << "," << g12(res.min_envelope[i]) << ","
          << g12(res.max_envelope[i]) << "\n";
    }

    LinePlot plot("stationary dimension vs parameter", "a", "dimension");
    const char* palette[] = {"#7f7f7f", "#8c564b", "#9467bd", "#2ca02c",
                             "#bcbd22", "#17becf"};
    for (std::size_t j = 0; j < res.dims.size(); ++j) {
      std::vector<double> ys;
      for (const DimensionEstimate& d : res.dims[j]) ys.push_back(d.value);
      std::string name = spec.family.systems[j].label.empty()
                             ? "system " + std::to_string(j + 1)
                             : spec.family.systems[j].label;
      plot.add_series(res.grid, ys, palette[j % 6], 1.2, name);
    }
    plot.add_series(res.grid, res.min_envelope, "#d62728", 3.0,
                    "min envelope");
    plot.add_series(res.grid, res.max_envelope, "#1f77b4", 3.0,
                    "max envelope");
    double step = res.grid.size() > 1 ? res.grid[1] - res.grid[0] : 1.0;
    for (const Kink& k : res.kinks) {
      auto idx = static_cast<std::size_t>(std::clamp(
          std::lround((k.parameter - res.grid.front()) / step), 0L,
          static_cast<long>(res.grid.size() - 1)));
      plot.add_marker(k.parameter, res.min_envelope[idx], "#000000");
    }
    plot.write((dir / "sweep.svg").string());
    std::printf("wrote %s and %s\n", (dir / "sweep.csv").string().c_str(),
                (dir / "sweep.svg").string().c_str());
  }
  return 0;
}

int cmd_boxdim(const std::string& config, std::int64_t depth,
               std::vector<double> eps, std::int64_t word_cap,
               const std::string& out_dir) {
  nlohmann::json doc = parse_toml_file(config);
  SystemFamily fam = load_system_family(doc);

  SymbolSequence seq = [&] {
    if (has_sequence(doc)) return load_sequence(doc);
    if (fam.size() != 1)
      throw ConfigError(
          "boxdim needs a [sequence] table when several systems are defined");
    return block_sequence({{{0}, depth}}, 1);
  }();
  if (seq.length() < depth)
    throw ConfigError("sequence shorter than the requested depth");

  if (eps.empty()) {
    ContractionProfile prof = contraction_profile(fam);
    eps = default_eps_schedule(prof.bigL, depth);
  }
  std::sort(eps.begin(), eps.end(), std::greater<>());

  BoxRegression reg = box_dimension_regression(fam, seq, depth, eps, word_cap);
  std::printf("%-14s  %10s  %s\n", "eps", "boxes", "fit residual");
  for (const BoxFitPoint& p : reg.points)
    std::printf("%-14s  %10lld  %s\n", g12(p.epsilon).c_str(),
                static_cast<long long>(p.count), g12(p.residual).c_str());
  std::printf("box dimension  %s +/- %s  (depth %lld)\n",
              g12(reg.estimate.value).c_str(),
              g12(reg.estimate.error_radius).c_str(),
              static_cast<long long>(depth));

  if (fam.size() == 1 && !has_sequence(doc)) {
    DimensionEstimate ref = stationary_dimension(fam.system(0), depth, word_cap);
    std::printf("tree-root reference  %s +/- %s\n", g12(ref.value).c_str(),
                g12(ref.error_radius).c_str());
  }

  if (!out_dir.empty()) {
    auto dir = ensure_out_dir(out_dir);
    std::ofstream csv = open_csv(dir / "boxdim.csv");
    csv << "eps,count,log_inv_eps,log_count,residual\n";
    for (const BoxFitPoint& p : reg.points)
      csv << g12(p.epsilon) << "," << p.count << "," << g12(p.log_inv_eps)
          << "," << g12(p.log_count) << "," << g12(p.residual) << "\n";
    std::printf("wrote %s\n", (dir / "boxdim.csv").string().c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cookie-dim: dimension estimates for interval iterated-function "
      "systems, stationary or driven by a symbol sequence"};
  app.require_subcommand(1);

  std::vector<double> ratios;
  auto* moran =
      app.add_subcommand("moran", "root s of sum(ratio_i^s) = 1");
  moran->add_option("ratios", ratios, "contraction ratios in (0,1)")
      ->required()
      ->expected(-1);

  std::string config, out_dir, verify_id;
  std::vector<std::int64_t> horizons;
  std::int64_t word_cap = kDefaultWordCap;
  double tol = 0.0;
  bool allow_fallback = false;

  auto* dim = app.add_subcommand(
      "dim", "stationary dimensions, or hausdorff/upper box estimates along "
             "a driving sequence");
  dim->add_option("config", config, "TOML config file")
      ->required()
      ->check(CLI::ExistingFile);
  dim->add_option("--horizons", horizons,
                  "prefix lengths to evaluate (default: block ends)")
      ->delimiter(',');
  dim->add_option("--depth-cap", word_cap,
                  "largest number of refinement intervals enumerated");
  dim->add_option("--tol", tol,
                  "target error radius for non-affine stationary runs");
  dim->add_flag("--allow-fallback", allow_fallback,
                "accept frequency-approximation roots or coarser radii when "
                "the cap is too small");
  dim->add_option("--out", out_dir, "directory for CSV output");

  auto* verify = app.add_subcommand(
      "verify", "run a built-in scenario and report each bound");
  std::string ids_help;
  for (const std::string& id : cookiedim::scenarios::verify_ids())
    ids_help += (ids_help.empty() ? "" : ", ") + id;
  verify->add_option("id", verify_id, "one of: " + ids_help)->required();

  int grid_override = 0;
  double threshold_override = 0.0;
  std::int64_t sweep_cap = std::int64_t{1} << 14;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "per-parameter stationary dimensions with min/max envelopes "
               "and kink detection");
  sweep_cmd->add_option("config", config, "TOML sweep file")
      ->required()
      ->check(CLI::ExistingFile);
  sweep_cmd->add_option("--grid", grid_override, "number of grid points");
  sweep_cmd->add_option("--threshold", threshold_override,
                        "slope-jump detection threshold");
  sweep_cmd->add_option("--depth-cap", sweep_cap,
                        "per-point interval budget for non-affine systems");
  sweep_cmd->add_option("--out", out_dir, "directory for CSV/SVG output");

  std::int64_t box_depth = 10;
  std::vector<double> eps;
  auto* boxdim = app.add_subcommand(
      "boxdim", "grid-cover regression estimate of the dimension");
  boxdim->add_option("config", config, "TOML config file")
      ->required()
      ->check(CLI::ExistingFile);
  boxdim->add_option("--depth", box_depth, "refinement depth");
  boxdim->add_option("--eps", eps, "cover scales (default: geometric)")
      ->delimiter(',');
  boxdim->add_option("--depth-cap", word_cap,
                     "largest number of refinement intervals enumerated");
  boxdim->add_option("--out", out_dir, "directory for CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(moran)) return cmd_moran(ratios);
    if (app.got_subcommand(dim))
      return cmd_dim(config, horizons, word_cap, tol, allow_fallback,
                     out_dir);
    if (app.got_subcommand(verify)) return cmd_verify(verify_id);
    if (app.got_subcommand(sweep_cmd))
      return cmd_sweep(config, grid_override, threshold_override, sweep_cap,
                       out_dir);
    if (app.got_subcommand(boxdim))
      return cmd_boxdim(config, box_depth, eps, word_cap, out_dir);
  } catch (const DepthCapError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
