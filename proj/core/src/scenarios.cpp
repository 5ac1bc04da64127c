#include "cookiedim/scenarios.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "cookiedim/dimension.hpp"
#include "cookiedim/errors.hpp"
#include "cookiedim/thermo.hpp"

namespace cookiedim::scenarios {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

VerifyCheck check(std::string name, double measured, std::string relation,
                  double bound) {
  VerifyCheck c;
  c.name = std::move(name);
  c.measured = measured;
  c.relation = std::move(relation);
  c.bound = bound;
  if (c.relation == "<=")
    c.pass = measured <= bound;
  else if (c.relation == "<")
    c.pass = measured < bound;
  else if (c.relation == ">")
    c.pass = measured > bound;
  else
    throw DomainError("unknown relation " + c.relation);
  return c;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

}  // namespace

bool VerifyReport::passed() const {
  for (const VerifyCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

CookieCutter middle_thirds() {
  return CookieCutter({ContractingMap::affine(1.0 / 3.0, 0.0),
                       ContractingMap::affine(1.0 / 3.0, 2.0 / 3.0)},
                      "thirds");
}

CookieCutter quarter_system() {
  return CookieCutter({ContractingMap::affine(0.25, 0.0),
                       ContractingMap::affine(0.25, 0.75)},
                      "quarter");
}

SystemFamily thirds_and_quarter() {
  return SystemFamily({middle_thirds(), quarter_system()});
}

SystemFamily moebius_reflection_pair(double eps) {
  // expanding branch fixing 0 with derivative 1 + eps and reaching 1 at 1/20;
  // its inverse is the left contracting branch of F0
  ContractingMap g = moebius_from_constraints(0.0, 0.0, 1.0 + eps, 0.05, 1.0);
  ContractingMap f_left = invert_on_image(g);
  ContractingMap f_right = ContractingMap::affine(0.05, 0.95);
  CookieCutter F0({f_left, f_right}, "F0");
  CookieCutter F1({reflect(f_right), reflect(f_left)}, "F1");
  return SystemFamily({F0, F1});
}

ParametricFamily crossing_moran_families() {
  ParametricFamily fam;
  fam.a_lo = 0.2;
  fam.a_hi = 0.35;
  SystemTemplate ratio_a;
  ratio_a.label = "ratio-a";
  ratio_a.branches = {
      BranchTemplate{false, {Poly{{0.0, 1.0}}, Poly{{0.0}}}},
      BranchTemplate{false, {Poly{{0.0, 1.0}}, Poly{{1.0, -1.0}}}},
  };
  SystemTemplate ratio_split;
  ratio_split.label = "ratio-split";
  ratio_split.branches = {
      BranchTemplate{false, {Poly{{0.4, -0.5}}, Poly{{0.0}}}},
      BranchTemplate{false, {Poly{{0.4, -0.5}}, Poly{{0.6, 0.5}}}},
  };
  fam.systems = {std::move(ratio_a), std::move(ratio_split)};
  return fam;
}

const std::vector<std::string>& verify_ids() {
  static const std::vector<std::string> ids = {
      "ex61", "ex62", "thm-main-affine", "lemma-quasi", "prop-combine"};
  return ids;
}

VerifyReport run_verify(const std::string& id) {
  if (id == "ex61") return verify_moebius_pair_separation();
  if (id == "ex62") return verify_grouped_blocks_estimate();
  if (id == "thm-main-affine") return verify_min_max_envelope_affine();
  if (id == "lemma-quasi") return verify_split_defect_bound();
  if (id == "prop-combine") return verify_frequency_combination_bound();
  throw ConfigError("unknown verify id '" + id + "'");
}

VerifyReport verify_split_defect_bound() {
  Stopwatch watch;
  VerifyReport rep;
  rep.id = "lemma-quasi";
  SystemFamily fam = moebius_reflection_pair(0.001);

  std::mt19937 rng(617401u);
  std::uniform_int_distribution<int> len_dist(3, 12);
  std::uniform_int_distribution<int> letter_dist(0, fam.size() - 1);
  const double s_values[] = {0.3, 0.5, 0.7};

  double worst_ratio = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    int n = len_dist(rng);
    std::vector<int> letters(static_cast<std::size_t>(n));
    for (int& c : letters) c = letter_dist(rng);
    std::uniform_int_distribution<int> split_dist(1, n - 1);
    int m = split_dist(rng);
    for (double s : s_values) {
      ApproximationReport r = quasi_additivity_check(fam, letters, m, s);
      if (r.theoretical > 0.0)
        worst_ratio = std::max(worst_ratio, r.measured / r.theoretical);
      rep.checks.push_back(check("defect[n=" + std::to_string(n) +
                                     ",m=" + std::to_string(m) +
                                     ",s=" + num(s) + "]",
                                 r.measured, "<=", r.theoretical));
    }
  }
  rep.summary = "quasi-additivity defect over 20 random splits, worst "
                "measured/bound ratio " +
                num(worst_ratio);
  rep.seconds = watch.seconds();
  return rep;
}

VerifyReport verify_frequency_combination_bound() {
  Stopwatch watch;
  VerifyReport rep;
  rep.id = "prop-combine";
  SystemFamily fam = moebius_reflection_pair(0.001);

  // twelve-letter prefixes with exactly 0, 1, 2, 3 switches
  const std::vector<std::vector<Block>> specs = {
      {{{0}, 12}},
      {{{0}, 6}, {{1}, 6}},
      {{{0}, 4}, {{1}, 4}, {{0}, 4}},
      {{{0}, 3}, {{1}, 3}, {{0}, 3}, {{1}, 3}},
  };
  const double s_values[] = {0.3, 0.5, 0.7};

  double worst_ratio = 0.0;
  for (std::size_t kappa = 0; kappa < specs.size(); ++kappa) {
    SymbolSequence seq(specs[kappa], fam.size());
    for (double s : s_values) {
      ApproximationReport r = combine_error(fam, seq, 12, s);
      if (r.theoretical > 0.0)
        worst_ratio = std::max(worst_ratio, r.measured / r.theoretical);
      rep.checks.push_back(check("combine[switches=" + std::to_string(kappa) +
                                     ",s=" + num(s) + "]",
                                 r.measured, "<=", r.theoretical));
    }
  }
  rep.summary = "frequency-combination error at n=12, worst measured/bound "
                "ratio " +
                num(worst_ratio);
  rep.seconds = watch.seconds();
  return rep;
}

VerifyReport verify_min_max_envelope_affine() {
  Stopwatch watch;
  VerifyReport rep;
  rep.id = "thm-main-affine";
  SystemFamily fam = thirds_and_quarter();

  // blocks alternate the two systems with lengths 4^j
  SymbolSequence seq =
      rule_sequence({{0}, {1}}, GrowthRule::Geometric, 4.0, 10, 2);
  std::vector<std::int64_t> horizons = seq.block_ends();
  EstimateOutcome out = dimension_estimates(fam, seq, horizons);

  const double dim_min = 0.5;                          // quarter system
  const double dim_max = std::log(2.0) / std::log(3.0);  // thirds
  rep.checks.push_back(check("(hausdorff " + num(out.hausdorff.value) +
                                 ") - (min dim 0.5)",
                             std::fabs(out.hausdorff.value - dim_min),
                             "<=", 0.02));
  rep.checks.push_back(check("(upper box " + num(out.upper_box.value) +
                                 ") - (max dim " + num(dim_max) + ")",
                             std::fabs(out.upper_box.value - dim_max),
                             "<=", 0.02));
  rep.summary = "horizons to n=" + std::to_string(horizons.back()) +
                ": hausdorff " + num(out.hausdorff.value) + ", upper box " +
                num(out.upper_box.value) + "; targets 0.5 and " +
                num(dim_max);
  rep.seconds = watch.seconds();
  return rep;
}

VerifyReport verify_moebius_pair_separation() {
  Stopwatch watch;
  VerifyReport rep;
  rep.id = "ex61";
  SystemFamily fam = moebius_reflection_pair(0.001);
  CookieCutter pair =
      compose_systems({&fam.system(0), &fam.system(1)}, "F0*F1");

  DimensionEstimate d8 = stationary_dimension(pair, 8);
  DimensionEstimate d10 = stationary_dimension(pair, 10);
  DimensionEstimate dF0 = stationary_dimension(fam.system(0));

  const double half_ref = 1.0 / 2.01;
  const double log_ref = std::log(4.0) / std::log(20.0);
  rep.checks.push_back(check(
      "|pair dim(depth 8) - pair dim(depth 10)| vs combined radii",
      std::fabs(d8.value - d10.value), "<=",
      d8.error_radius + d10.error_radius));
  rep.checks.push_back(
      check("pair dim depth 8 = " + num(d8.value), d8.value, "<", half_ref));
  rep.checks.push_back(
      check("pair dim depth 10 = " + num(d10.value), d10.value, "<", half_ref));
  rep.checks.push_back(check("pair dim depth 8 vs log4/log20", d8.value, "<",
                             log_ref));
  rep.checks.push_back(check("pair dim depth 10 vs log4/log20", d10.value, "<",
                             log_ref));
  rep.checks.push_back(check("single-system dim = " + num(dF0.value) +
                                 " (depth " + std::to_string(dF0.depth) + ")",
                             dF0.value, ">", half_ref));
  rep.summary = "pair dims " + num(d8.value) + " / " + num(d10.value) +
                " (radii " + num(d8.error_radius) + " / " +
                num(d10.error_radius) + "), single-system dim " +
                num(dF0.value) + " +/- " + num(dF0.error_radius);
  rep.seconds = watch.seconds();
  return rep;
}

VerifyReport verify_grouped_blocks_estimate() {
  Stopwatch watch;
  VerifyReport rep;
  rep.id = "ex62";
  SystemFamily fam = moebius_reflection_pair(0.001);

  // pair blocks cycling (00), (11), (01), block j holding 4^j pairs
  const std::vector<std::vector<int>> pair_words = {{0, 0}, {1, 1}, {0, 1}};
  std::vector<Block> blocks;
  std::int64_t reps = 1;
  for (int j = 1; j <= 10; ++j) {
    reps *= 4;
    blocks.push_back({pair_words[static_cast<std::size_t>((j - 1) % 3)], reps});
  }
  SymbolSequence seq(blocks, fam.size());

  GroupedSequence grouped = group_letters(seq, 2, fam);
  std::vector<std::int64_t> horizons = grouped.sequence.block_ends();
  EstimateOutcome out =
      dimension_estimates(grouped.family, grouped.sequence, horizons);

  CookieCutter pair =
      compose_systems({&fam.system(0), &fam.system(1)}, "F0*F1");
  DimensionEstimate dpair = stationary_dimension(pair, 10);
  DimensionEstimate dF0 = stationary_dimension(fam.system(0));

  rep.checks.push_back(check("(hausdorff " + num(out.hausdorff.value) +
                                 ") - (pair dim " + num(dpair.value) + ")",
                             std::fabs(out.hausdorff.value - dpair.value),
                             "<=", 0.02));
  rep.checks.push_back(check("hausdorff vs single-system dim - 0.01",
                             out.hausdorff.value, "<", dF0.value - 0.01));
  rep.summary = "grouped horizons to n=" + std::to_string(horizons.back()) +
                ": hausdorff " + num(out.hausdorff.value) + ", upper box " +
                num(out.upper_box.value) + "; pair dim " + num(dpair.value) +
                ", single-system dim " + num(dF0.value);
  rep.seconds = watch.seconds();
  return rep;
}

}  // namespace cookiedim::scenarios
