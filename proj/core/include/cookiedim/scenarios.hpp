#pragma once

#include <string>
#include <vector>

#include "cookiedim/sequence.hpp"
#include "cookiedim/sweep.hpp"
#include "cookiedim/system.hpp"

namespace cookiedim::scenarios {

CookieCutter middle_thirds();
CookieCutter quarter_system();

// two affine systems with dimensions log2/log3 and 1/2
SystemFamily thirds_and_quarter();

// mirror pair of systems on [0,1]: F0 has a fractional-linear branch fixing 0
// with inverse derivative 1/(1+eps) there and the affine branch x/20 + 19/20;
// F1 is the reflection x -> 1 - F0(1 - x) with branches listed left to right
SystemFamily moebius_reflection_pair(double eps);

// two affine Moran families over a in [0.2, 0.35], ratios (a, a) and
// (0.4 - a/2, 0.4 - a/2); their dimension curves cross at a = 4/15
ParametricFamily crossing_moran_families();

struct VerifyCheck {
  std::string name;
  double measured = 0.0;
  std::string relation;  // "<=", "<", ">"
  double bound = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::string id;
  std::string summary;
  std::vector<VerifyCheck> checks;
  double seconds = 0.0;
  bool passed() const;
};

const std::vector<std::string>& verify_ids();

// dispatch by scenario id; unknown ids raise ConfigError
VerifyReport run_verify(const std::string& id);

// id lemma-quasi: random splits of random words, measured quasi-additivity
// defect against the distortion budget cKappa * |s|
VerifyReport verify_split_defect_bound();

// id prop-combine: prefixes with 0..3 letter switches, measured distance of
// the prefix pressure from the frequency-weighted stationary pressures
VerifyReport verify_frequency_combination_bound();

// id thm-main-affine: block-driven pair of affine systems, finite-horizon
// hausdorff/upper box estimates against the min/max stationary dimensions
VerifyReport verify_min_max_envelope_affine();

// id ex61: dimension of the composed-pair system versus both reference
// constants and the single-system dimension
VerifyReport verify_moebius_pair_separation();

// id ex62: grouped pair-block sequence, hausdorff estimate against the
// composed-pair dimension and the single-system dimension
VerifyReport verify_grouped_blocks_estimate();

}  // namespace cookiedim::scenarios
