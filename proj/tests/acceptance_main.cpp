// Acceptance gate: one line per criterion, [PASS]/[FAIL], exit code equal to
// the number of failing criteria.  Seeds are fixed so reruns are identical.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "cookiedim/boxdim.hpp"
#include "cookiedim/dimension.hpp"
#include "cookiedim/scenarios.hpp"
#include "cookiedim/sweep.hpp"
#include "cookiedim/thermo.hpp"

using namespace cookiedim;

namespace {

int g_failures = 0;

std::string g6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void report(int id, bool pass, const std::string& detail) {
  if (!pass) ++g_failures;
  std::printf("[%s] criterion %2d: %s\n", pass ? "PASS" : "FAIL", id,
              detail.c_str());
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// branch i occupies [i*w + 0.1w, i*w + 0.1w + ratio] with ratio < 0.8w,
// so images are disjoint with honest gaps for any draw
CookieCutter random_affine_system(std::mt19937& rng) {
  int bc = 2 + static_cast<int>(rng() % 2);
  double w = 1.0 / bc;
  std::uniform_real_distribution<double> ratio_dist(0.2 * w, 0.8 * w);
  std::vector<ContractingMap> branches;
  for (int i = 0; i < bc; ++i)
    branches.push_back(ContractingMap::affine(ratio_dist(rng), i * w + 0.1 * w));
  return CookieCutter(std::move(branches));
}

void criterion_moran_closed_forms() {
  auto t0 = std::chrono::steady_clock::now();
  RootResult thirds = moran_dimension({1.0 / 3, 1.0 / 3});
  double t_thirds = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  RootResult mixed = moran_dimension({0.5, 0.25});
  double t_mixed = seconds_since(t0);

  double d1 = std::fabs(thirds.root - std::log(2.0) / std::log(3.0));
  double golden = std::log((1.0 + std::sqrt(5.0)) / 2.0) / std::log(2.0);
  double d2 = std::fabs(mixed.root - golden);
  bool pass = d1 <= 1e-10 && d2 <= 1e-10 && t_thirds < 1e-3 && t_mixed < 1e-3;
  report(1, pass,
         "moran closed forms within 1e-10 (deviations " + g6(d1) + ", " +
             g6(d2) + "), runtimes " + g6(t_thirds * 1e3) + " ms and " +
             g6(t_mixed * 1e3) + " ms (< 1 ms each)");
}

void criterion_affine_multiplicativity() {
  std::mt19937 rng(20260823u);
  double worst = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    SystemFamily fam({random_affine_system(rng)});
    std::vector<int> one(1, 0), ten(10, 0);
    for (double s : {0.0, 0.5, 1.0}) {
      double z1 = partition_function(fam, one, s, PartitionRoute::Enumerate);
      double zn = partition_function(fam, ten, s, PartitionRoute::Enumerate);
      double ref = std::pow(z1, 10.0);
      worst = std::max(worst, std::fabs(zn - ref) / ref);
    }
  }
  report(2, worst <= 1e-9,
         "affine partition functions multiply, |Z_10 - Z_1^10|/Z_1^10 <= "
         "1e-9 over 5 random systems x 3 exponents (worst " +
             g6(worst) + ")");
}

void criterion_slope_sandwich() {
  std::mt19937 rng(617402u);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst_slack = 1.0;  // most negative margin against either bound
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<CookieCutter> systems;
    int k = 1 + static_cast<int>(rng() % 2);
    for (int j = 0; j < k; ++j) systems.push_back(random_affine_system(rng));
    SystemFamily fam(std::move(systems));
    ContractionProfile prof = contraction_profile(fam);
    std::vector<int> letters;
    int n = 2 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i)
      letters.push_back(static_cast<int>(rng() % k));
    double s = 0.9 * unif(rng);
    double r = 0.01 + (1.0 - s - 0.01) * unif(rng) * 0.5;
    double p0 = pressure(fam, letters, s).value;
    double p1 = pressure(fam, letters, s + r).value;
    double upper = p0 - r * std::log(prof.lambda);
    double lower = p0 - r * std::log(prof.bigL);
    worst_slack = std::min({worst_slack, upper - p1, p1 - lower});
  }
  report(3, worst_slack >= -1e-9,
         "pressure slopes stay between -log(bigL) and -log(lambda) over 100 "
         "random cases (worst margin " +
             g6(worst_slack) + " >= -1e-9)");
}

void criterion_verify(int id, const std::string& scenario, double time_limit) {
  scenarios::VerifyReport rep = scenarios::run_verify(scenario);
  bool pass = rep.passed();
  std::string detail = "scenario " + scenario + ": " + rep.summary;
  int failing = 0;
  for (const auto& c : rep.checks)
    if (!c.pass) ++failing;
  if (failing > 0) {
    detail += "; " + std::to_string(failing) + " of " +
              std::to_string(rep.checks.size()) + " checks fail:";
    for (const auto& c : rep.checks)
      if (!c.pass)
        detail += " [" + c.name + " " + g6(c.measured) + " !" + c.relation +
                  " " + g6(c.bound) + "]";
  }
  detail += "; " + g6(rep.seconds) + " s";
  if (time_limit > 0.0) {
    detail += " (limit " + g6(time_limit) + " s)";
    pass = pass && rep.seconds < time_limit;
  }
  report(id, pass, detail);
}

void criterion_box_oracle() {
  auto t0 = std::chrono::steady_clock::now();

  std::vector<double> eps3, eps4, eps20;
  for (int k = 2; k <= 8; ++k) eps3.push_back(std::pow(3.0, -k));
  for (int k = 2; k <= 7; ++k) eps4.push_back(std::pow(4.0, -k));
  for (int k = 2; k <= 7; ++k) eps20.push_back(std::pow(20.0, -k));

  BoxRegression thirds =
      box_dimension_regression(scenarios::middle_thirds(), 10, eps3);
  double d_thirds =
      std::fabs(thirds.estimate.value - std::log(2.0) / std::log(3.0));

  BoxRegression quarter =
      box_dimension_regression(scenarios::quarter_system(), 10, eps4);
  double d_quarter = std::fabs(quarter.estimate.value - 0.5);

  SystemFamily fam = scenarios::moebius_reflection_pair(0.001);
  CookieCutter pair =
      compose_systems({&fam.system(0), &fam.system(1)}, "F0*F1");
  DimensionEstimate pair_root = stationary_dimension(pair, 10);
  BoxRegression pair_box = box_dimension_regression(pair, 10, eps20);
  double d_pair = std::fabs(pair_box.estimate.value - pair_root.value);

  double secs = seconds_since(t0);
  bool pass =
      d_thirds <= 0.02 && d_quarter <= 0.02 && d_pair <= 0.05 && secs < 30.0;
  report(9, pass,
         "box-counting slopes match tree roots: thirds " +
             g6(thirds.estimate.value) + " (diff " + g6(d_thirds) +
             " <= 0.02), quarter " + g6(quarter.estimate.value) + " (diff " +
             g6(d_quarter) + " <= 0.02), composed pair " +
             g6(pair_box.estimate.value) + " vs " + g6(pair_root.value) +
             " (diff " + g6(d_pair) + " <= 0.05); " + g6(secs) +
             " s (limit 30 s)");
}

void criterion_kink_location() {
  auto t0 = std::chrono::steady_clock::now();
  SweepResult res = sweep(scenarios::crossing_moran_families(), 201);
  double secs = seconds_since(t0);
  double cell = (0.35 - 0.2) / 200.0;
  bool one = res.kinks.size() == 1;
  double dev = one ? std::fabs(res.kinks[0].parameter - 4.0 / 15.0) : 1.0;
  bool signs =
      one && res.kinks[0].left_slope > 0.0 && res.kinks[0].right_slope < 0.0;
  bool pass = one && dev <= cell && signs && secs < 5.0;
  report(10, pass,
         "min-envelope kink: " + std::to_string(res.kinks.size()) +
             " kink(s), location off the curve crossing by " + g6(dev) +
             " (<= one grid cell " + g6(cell) +
             "), slopes flip from positive to negative; " + g6(secs) +
             " s (limit 5 s)");
}

void criterion_root_map_properties() {
  std::vector<CookieCutter> systems;
  systems.push_back(CookieCutter(
      {ContractingMap::affine(1.0 / 3, 0.0), ContractingMap::affine(1.0 / 3, 2.0 / 3)}));
  systems.push_back(CookieCutter(
      {ContractingMap::affine(0.25, 0.0), ContractingMap::affine(0.25, 0.75)}));
  systems.push_back(CookieCutter(
      {ContractingMap::affine(0.2, 0.0), ContractingMap::affine(0.2, 0.8)}));
  SystemFamily fam(std::move(systems));

  double dim_min = std::log(2.0) / std::log(5.0);
  double dim_max = std::log(2.0) / std::log(3.0);
  // sup over s in [0,1] of |P_j(s)|, attained at an endpoint (linear in s)
  double M = 0.0;
  for (double a : {1.0 / 3, 0.25, 0.2})
    M = std::max({M, std::log(2.0), std::fabs(std::log(2.0 * a))});
  double lip = M / std::log(3.0);

  std::mt19937 rng(555001u);
  std::uniform_real_distribution<double> unif(1e-12, 1.0);
  std::vector<std::vector<double>> alphas;
  std::vector<double> roots;
  bool bracketed = true;
  for (int i = 0; i < 50; ++i) {
    std::vector<double> w(3);
    double sum = 0.0;
    for (double& x : w) {
      x = -std::log(unif(rng));
      sum += x;
    }
    for (double& x : w) x /= sum;
    // make the simplex constraint exact to the last ulp
    w[0] += 1.0 - (w[0] + w[1] + w[2]);
    RootResult r = root_map(fam, make_simplex(w), 1e-10);
    bracketed = bracketed && r.root >= dim_min - 1e-9 &&
                r.root <= dim_max + 1e-9;
    alphas.push_back(w);
    roots.push_back(r.root);
  }
  double worst_excess = 0.0;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      double l1 = 0.0;
      for (int t = 0; t < 3; ++t)
        l1 += std::fabs(alphas[i][t] - alphas[j][t]);
      double excess = std::fabs(roots[i] - roots[j]) - lip * l1;
      worst_excess = std::max(worst_excess, excess);
    }
  bool pass = bracketed && worst_excess <= 1e-9;
  report(11, pass,
         "root map over 50 random simplex points: all roots inside [" +
             g6(dim_min) + ", " + g6(dim_max) +
             "], pairwise Lipschitz within M/log(lambda) = " + g6(lip) +
             " per unit l1 (worst excess " + g6(worst_excess) + ")");
}

}  // namespace

int main() {
  std::printf("acceptance gate: 11 criteria\n");
  criterion_moran_closed_forms();
  criterion_affine_multiplicativity();
  criterion_slope_sandwich();
  criterion_verify(4, "lemma-quasi", 30.0);
  criterion_verify(5, "prop-combine", 0.0);
  criterion_verify(6, "thm-main-affine", 5.0);
  criterion_verify(7, "ex61", 60.0);
  criterion_verify(8, "ex62", 0.0);
  criterion_box_oracle();
  criterion_kink_location();
  criterion_root_map_properties();
  std::printf("acceptance: %d of 11 criteria pass, %d fail\n",
              11 - g_failures, g_failures);
  return g_failures;
}
