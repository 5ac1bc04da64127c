#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cookiedim/sequence.hpp"
#include "cookiedim/system.hpp"
#include "cookiedim/thermo.hpp"

namespace cookiedim {

enum class DimKind {
  hausdorff_liminf,
  upper_box_limsup,
  stationary,
  moran,
  box_counting,
};

struct DimensionEstimate {
  double value = 0.0;
  DimKind kind = DimKind::stationary;
  std::int64_t depth = 0;
  double error_radius = 0.0;
};

enum class Route {
  exact_enumeration,       // depth-first interval sums
  affine_factorized,       // per-letter factorization, exact at any horizon
  frequency_approximation  // weighted stationary pressures
};

std::string route_name(Route r);

struct ApproximationReport {
  std::int64_t n = 0;
  double measured = 0.0;
  double theoretical = 0.0;
};

struct EstimateOptions {
  std::int64_t word_cap = kDefaultWordCap;
  // word budget for the stationary pressure curves backing the
  // frequency-approximation fallback
  std::int64_t stationary_word_cap = std::int64_t{1} << 18;
  bool allow_fallback = true;
};

// certified root of P_{c1...cn} for the prefix of seq; affine systems take
// the factorized path at any horizon, others enumerate within the cap
RootResult prefix_root(const SystemFamily& fam, const SymbolSequence& seq,
                       std::int64_t n,
                       std::int64_t word_cap = kDefaultWordCap);

struct HorizonPoint {
  std::int64_t n = 0;
  RootResult root;
  Route route = Route::exact_enumeration;
};

struct EstimateOutcome {
  DimensionEstimate hausdorff;
  DimensionEstimate upper_box;
  std::vector<HorizonPoint> trace;
};

// prefix roots over the horizon schedule; the liminf/limsup proxies are the
// inf/sup over the tail half of the schedule
EstimateOutcome dimension_estimates(const SystemFamily& fam,
                                    const SymbolSequence& seq,
                                    const std::vector<std::int64_t>& horizons,
                                    const EstimateOptions& opt = {});

// stationary Bowen root of one system at the given depth (capped), with the
// convergence term cKappa*s/(n log lambda) folded into the radius
DimensionEstimate stationary_dimension(const CookieCutter& F,
                                       std::int64_t depth = 0,
                                       std::int64_t word_cap = kDefaultWordCap);

// measured |log Z_{c1..cn} - log Z_{c1..cm} - log Z_{c(m+1)..cn}| against
// the distortion bound cKappa*|s|
ApproximationReport quasi_additivity_check(const SystemFamily& fam,
                                           const std::vector<int>& letters,
                                           int m, double s,
                                           std::int64_t word_cap = kDefaultWordCap);

// measured |P_{c1..cn}(s) - sum_j Freq_{n,j} P_{F_j}(s)| against
// (2 kappa_n + k) cKappa |s| / n plus the stationary tolerances
ApproximationReport combine_error(const SystemFamily& fam,
                                  const SymbolSequence& seq, std::int64_t n,
                                  double s, const EstimateOptions& opt = {});

// all component intervals of the depth-n refinement, sorted by left endpoint
std::vector<WordInterval> cantor_intervals(const SystemFamily& fam,
                                           const SymbolSequence& seq,
                                           std::int64_t n,
                                           std::int64_t word_cap = kDefaultWordCap);

}  // namespace cookiedim
