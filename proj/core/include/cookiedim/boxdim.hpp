#pragma once

#include <cstdint>
#include <vector>

#include "cookiedim/dimension.hpp"
#include "cookiedim/sequence.hpp"
#include "cookiedim/system.hpp"

namespace cookiedim {

struct CoverCount {
  double epsilon = 0.0;
  std::int64_t count = 0;
};

// grid boxes are half open, [m*eps, (m+1)*eps); the point 1.0 lands in box
// floor(1/eps), so covering [0,1] with eps = 1/4 takes 5 boxes
CoverCount cover_count(const std::vector<WordInterval>& intervals,
                       double epsilon);

struct BoxFitPoint {
  double epsilon = 0.0;
  std::int64_t count = 0;
  double log_inv_eps = 0.0;
  double log_count = 0.0;
  double residual = 0.0;
};

struct BoxRegression {
  DimensionEstimate estimate;
  std::vector<BoxFitPoint> points;
};

// least-squares slope of log N(eps) against log(1/eps) over the schedule;
// every eps must be >= bigL^(-n) so the depth-n intervals resolve scale eps
BoxRegression box_dimension_regression(const SystemFamily& fam,
                                       const SymbolSequence& seq,
                                       std::int64_t depth,
                                       const std::vector<double>& eps_schedule,
                                       std::int64_t word_cap = kDefaultWordCap);

// convenience for a single stationary system, constant sequence at depth n
BoxRegression box_dimension_regression(const CookieCutter& F, std::int64_t depth,
                                       const std::vector<double>& eps_schedule,
                                       std::int64_t word_cap = kDefaultWordCap);

// six geometric points ending at bigL^(-depth+2)
std::vector<double> default_eps_schedule(double bigL, std::int64_t depth,
                                         int points = 6);

}  // namespace cookiedim
