#include "cookiedim/boxdim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cookiedim/errors.hpp"

namespace cookiedim {

CoverCount cover_count(const std::vector<WordInterval>& intervals,
                       double epsilon) {
  if (!(epsilon > 0.0) || epsilon > 1.0)
    throw DomainError("cover_count: epsilon must lie in (0, 1]");
  CoverCount cc;
  cc.epsilon = epsilon;
  // intervals arrive sorted and disjoint, so occupied box ranges are merged
  // with a single sweep
  std::int64_t prev_hi = -1;
  bool any = false;
  for (const WordInterval& iv : intervals) {
    auto k_lo = static_cast<std::int64_t>(std::floor(iv.left / epsilon));
    auto k_hi = static_cast<std::int64_t>(std::floor(iv.right / epsilon));
    std::int64_t lo = any ? std::max(k_lo, prev_hi + 1) : k_lo;
    if (!any || k_hi > prev_hi) {
      if (k_hi >= lo) cc.count += k_hi - lo + 1;
      prev_hi = k_hi;
      any = true;
    }
  }
  return cc;
}

BoxRegression box_dimension_regression(const SystemFamily& fam,
                                       const SymbolSequence& seq,
                                       std::int64_t depth,
                                       const std::vector<double>& eps_schedule,
                                       std::int64_t word_cap) {
  if (eps_schedule.size() < 2)
    throw DomainError("box regression needs at least two scales");
  for (std::size_t i = 0; i < eps_schedule.size(); ++i) {
    double e = eps_schedule[i];
    if (!(e > 0.0) || e > 1.0)
      throw DomainError("eps schedule values must lie in (0, 1]");
    if (i > 0 && e >= eps_schedule[i - 1])
      throw DomainError("eps schedule must be strictly decreasing");
  }
  ContractionProfile prof = contraction_profile(fam);
  double eps_floor = std::pow(prof.bigL, -static_cast<double>(depth));
  if (eps_schedule.back() < eps_floor * (1.0 - 1e-9))
    throw DomainError("eps schedule too fine for depth " +
                      std::to_string(depth) + ": finest scale " +
                      std::to_string(eps_schedule.back()) +
                      " is below the interval resolution " +
                      std::to_string(eps_floor));

  std::vector<WordInterval> intervals =
      cantor_intervals(fam, seq, depth, word_cap);

  BoxRegression out;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (double e : eps_schedule) {
    CoverCount cc = cover_count(intervals, e);
    BoxFitPoint p;
    p.epsilon = e;
    p.count = cc.count;
    p.log_inv_eps = std::log(1.0 / e);
    p.log_count = std::log(static_cast<double>(cc.count));
    out.points.push_back(p);
    sx += p.log_inv_eps;
    sy += p.log_count;
    sxx += p.log_inv_eps * p.log_inv_eps;
    sxy += p.log_inv_eps * p.log_count;
  }
  auto m = static_cast<double>(out.points.size());
  double denom = m * sxx - sx * sx;
  if (!(denom > 0.0))
    throw DomainError("degenerate eps schedule for regression");
  double slope = (m * sxy - sx * sy) / denom;
  double intercept = (sy - slope * sx) / m;
  double max_resid = 0.0;
  for (BoxFitPoint& p : out.points) {
    p.residual = p.log_count - (intercept + slope * p.log_inv_eps);
    max_resid = std::max(max_resid, std::fabs(p.residual));
  }
  out.estimate.value = slope;
  out.estimate.kind = DimKind::box_counting;
  out.estimate.depth = depth;
  out.estimate.error_radius =
      max_resid + 1.0 / std::log(1.0 / eps_schedule.back());
  return out;
}

BoxRegression box_dimension_regression(const CookieCutter& F,
                                       std::int64_t depth,
                                       const std::vector<double>& eps_schedule,
                                       std::int64_t word_cap) {
  SystemFamily self({F});
  SymbolSequence constant = block_sequence({{{0}, depth}}, 1);
  return box_dimension_regression(self, constant, depth, eps_schedule,
                                  word_cap);
}

std::vector<double> default_eps_schedule(double bigL, std::int64_t depth,
                                         int points) {
  if (points < 2) throw DomainError("eps schedule needs at least two points");
  if (depth < 3)
    throw DomainError("depth too small for the default eps schedule");
  std::int64_t last = depth - 2;
  std::int64_t first = std::max<std::int64_t>(1, last - points + 1);
  std::vector<double> eps;
  for (std::int64_t k = first; k <= last; ++k)
    eps.push_back(std::pow(bigL, -static_cast<double>(k)));
  return eps;
}

}  // namespace cookiedim
