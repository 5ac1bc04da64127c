#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cookiedim/system.hpp"

namespace cookiedim {

inline constexpr std::int64_t kDefaultWordCap = std::int64_t{1} << 22;
inline constexpr double kRootBracket = 1e-10;

struct PressureEvaluation {
  double s = 0.0;
  double value = 0.0;
  std::int64_t depth = 0;
  // distance to the depth->infinity limit; only meaningful for stationary
  // pressure, where it is cKappa*|s|/depth (0 for affine systems)
  double error_bound = 0.0;
  bool error_bound_valid = false;
};

struct SimplexPoint {
  std::vector<double> weights;
};
SimplexPoint make_simplex(std::vector<double> weights);

struct RootResult {
  double root = 0.0;
  double residual = 0.0;      // pressure value at the returned root
  double error_radius = 0.0;  // >= |residual| / log(lambda)
  bool clamped_at_one = false;
};

enum class PartitionRoute {
  Auto,       // affine fast path when available, else enumeration
  Enumerate,  // force depth-first endpoint composition
};

// Z_{c1...cn}(s), the sum of interval lengths raised to the power s
double partition_function(const SystemFamily& fam,
                          const std::vector<int>& letters, double s,
                          PartitionRoute route = PartitionRoute::Auto,
                          std::int64_t word_cap = kDefaultWordCap);

// (1/n) log Z; carries no limit claim for general letter prefixes
PressureEvaluation pressure(const SystemFamily& fam,
                            const std::vector<int>& letters, double s,
                            PartitionRoute route = PartitionRoute::Auto,
                            std::int64_t word_cap = kDefaultWordCap);

struct StationaryOptions {
  std::int64_t word_cap = kDefaultWordCap;
  // when the depth needed for the requested tolerance exceeds the cap,
  // report the best achievable bound instead of throwing
  bool allow_fallback = false;
};

// stationary pressure of a single system: exact for affine; otherwise
// evaluated at the smallest depth whose convergence bound cKappa*|s|/n
// meets tol, reported in error_bound
PressureEvaluation stationary_pressure(const CookieCutter& F, double s,
                                       double tol,
                                       const StationaryOptions& opt = {});

// unique s >= 0 with sum ratios[i]^s = 1
RootResult moran_dimension(const std::vector<double>& ratios);

// zero of P_{c1...cn} on [0,1], bisected to bracket width 1e-10; the error
// radius converts the residual through the uniform slope bound log(lambda)
RootResult bowen_root(const SystemFamily& fam, const std::vector<int>& letters,
                      std::int64_t word_cap = kDefaultWordCap);

struct RootMapOptions {
  std::int64_t word_cap = kDefaultWordCap;
  bool allow_fallback = true;
};

// zero of sum_j alpha_j P_{F_j}(s); per-term stationary tolerance tol/k
RootResult root_map(const SystemFamily& fam, const SimplexPoint& alpha,
                    double tol, const RootMapOptions& opt = {});

// reusable stationary pressure curve: lengths (or affine ratios) are
// computed once, then value(s) is cheap enough for bisection loops
class StationaryPressureCurve {
 public:
  StationaryPressureCurve(const CookieCutter& F, std::int64_t depth,
                          std::int64_t word_cap = kDefaultWordCap);
  double value(double s) const;
  std::int64_t depth() const { return depth_; }
  bool affine_exact() const { return affine_; }

 private:
  bool affine_ = false;
  std::int64_t depth_ = 1;
  std::vector<double> log_ratios_;   // affine: log|a_i| per branch
  std::vector<double> log_lengths_;  // otherwise: per depth-n word
};

// largest depth n with branch_count^n <= word_cap (at least 1)
std::int64_t capped_depth(int branch_count, std::int64_t word_cap);

// bisection for a continuous strictly decreasing g on [0,1]; the error
// radius is max(bracket, |g(root)|/slope_lower); roots outside [0,1] clamp
RootResult bisect_decreasing(const std::function<double(double)>& g,
                             double bracket, double slope_lower);

}  // namespace cookiedim
