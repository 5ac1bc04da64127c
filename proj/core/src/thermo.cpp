#include "cookiedim/thermo.hpp"

#include <algorithm>
#include <cmath>

#include "cookiedim/enumerate.hpp"
#include "cookiedim/errors.hpp"

namespace cookiedim {

namespace {

bool letters_all_affine(const SystemFamily& fam,
                        const std::vector<int>& letters) {
  for (int c : letters)
    if (!fam.system(c).all_affine()) return false;
  return true;
}

// log sum_i |a_i|^s for one affine system
double affine_level_log_z(const CookieCutter& F, double s) {
  double z = 0.0;
  for (const auto& b : F.branches())
    z += std::pow(std::fabs(b.affine_coeffs().a), s);
  return std::log(z);
}

}  // namespace

RootResult bisect_decreasing(const std::function<double(double)>& g,
                             double bracket, double slope_lower) {
  RootResult r;
  double g0 = g(0.0);
  if (g0 <= 0.0) {
    r.root = 0.0;
    r.residual = g0;
    r.error_radius = std::max(bracket, std::fabs(g0) / slope_lower);
    return r;
  }
  double g1 = g(1.0);
  if (g1 > 0.0) {
    r.root = 1.0;
    r.residual = g1;
    r.clamped_at_one = true;
    r.error_radius = std::max(bracket, std::fabs(g1) / slope_lower);
    return r;
  }
  double lo = 0.0, hi = 1.0;
  while (hi - lo > bracket) {
    double mid = 0.5 * (lo + hi);
    if (g(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  r.root = 0.5 * (lo + hi);
  r.residual = g(r.root);
  r.error_radius = std::max(hi - lo, std::fabs(r.residual) / slope_lower);
  return r;
}

SimplexPoint make_simplex(std::vector<double> weights) {
  if (weights.empty()) throw DomainError("empty simplex point");
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw DomainError("simplex weights must be >= 0");
    sum += w;
  }
  if (std::fabs(sum - 1.0) > 1e-12)
    throw DomainError("simplex weights must sum to 1");
  return SimplexPoint{std::move(weights)};
}

double partition_function(const SystemFamily& fam,
                          const std::vector<int>& letters, double s,
                          PartitionRoute route, std::int64_t word_cap) {
  if (letters.empty()) throw DomainError("partition function needs n >= 1");
  if (route == PartitionRoute::Auto && letters_all_affine(fam, letters)) {
    // Z factors through the levels: prod_m sum_i |a_{c_m,i}|^s
    double log_z = 0.0;
    for (int c : letters) log_z += affine_level_log_z(fam.system(c), s);
    return std::exp(log_z);
  }
  check_word_cap(fam, letters, word_cap);
  double z = 0.0;
  for_each_leaf(fam, letters, [&](double, double, double len) {
    z += std::pow(len, s);
  });
  return z;
}

PressureEvaluation pressure(const SystemFamily& fam,
                            const std::vector<int>& letters, double s,
                            PartitionRoute route, std::int64_t word_cap) {
  PressureEvaluation p;
  p.s = s;
  p.depth = static_cast<std::int64_t>(letters.size());
  p.value = std::log(partition_function(fam, letters, s, route, word_cap)) /
            static_cast<double>(p.depth);
  return p;
}

std::int64_t capped_depth(int branch_count, std::int64_t word_cap) {
  if (branch_count < 1) throw DomainError("branch count must be >= 1");
  if (branch_count == 1) return 64;  // single word at any depth
  std::int64_t n = 0;
  std::int64_t words = 1;
  while (words <= word_cap / branch_count) {
    words *= branch_count;
    ++n;
  }
  return std::max<std::int64_t>(n, 1);
}

StationaryPressureCurve::StationaryPressureCurve(const CookieCutter& F,
                                                 std::int64_t depth,
                                                 std::int64_t word_cap)
    : affine_(F.all_affine()), depth_(depth) {
  if (depth < 1) throw DomainError("curve depth must be >= 1");
  if (affine_) {
    for (const auto& b : F.branches())
      log_ratios_.push_back(std::log(std::fabs(b.affine_coeffs().a)));
    return;
  }
  SystemFamily self({F});
  std::vector<int> letters(static_cast<std::size_t>(depth), 0);
  log_lengths_ = collect_lengths(self, letters, word_cap);
  for (double& l : log_lengths_) l = std::log(l);
}

double StationaryPressureCurve::value(double s) const {
  if (affine_) {
    double z = 0.0;
    for (double lr : log_ratios_) z += std::exp(s * lr);
    return std::log(z);
  }
  double z = 0.0;
  for (double ll : log_lengths_) z += std::exp(s * ll);
  return std::log(z) / static_cast<double>(depth_);
}

PressureEvaluation stationary_pressure(const CookieCutter& F, double s,
                                       double tol,
                                       const StationaryOptions& opt) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  PressureEvaluation p;
  p.s = s;
  if (F.all_affine()) {
    StationaryPressureCurve curve(F, 1);
    p.value = curve.value(s);
    p.depth = 1;
    p.error_bound = 0.0;
    p.error_bound_valid = true;
    return p;
  }
  ContractionProfile prof = contraction_profile(F);
  std::int64_t cap = capped_depth(F.branch_count(), opt.word_cap);
  std::int64_t need = static_cast<std::int64_t>(
      std::ceil(prof.cKappa * std::fabs(s) / tol));
  need = std::max<std::int64_t>(need, 1);
  if (need > cap && !opt.allow_fallback)
    throw DepthCapError(
        "stationary pressure needs depth " + std::to_string(need) +
        " for tolerance " + std::to_string(tol) + ", cap allows " +
        std::to_string(cap) + "; pass allow_fallback for best effort");
  std::int64_t n = std::min(need, cap);
  StationaryPressureCurve curve(F, n, opt.word_cap);
  p.value = curve.value(s);
  p.depth = n;
  p.error_bound = prof.cKappa * std::fabs(s) / static_cast<double>(n);
  p.error_bound_valid = true;
  return p;
}

RootResult moran_dimension(const std::vector<double>& ratios) {
  if (ratios.empty()) throw DomainError("moran_dimension: empty ratio list");
  double sum = 0.0, rmax = 0.0;
  for (double r : ratios) {
    if (!(r > 0.0 && r < 1.0))
      throw DomainError("moran_dimension: ratios must lie in (0,1)");
    sum += r;
    rmax = std::max(rmax, r);
  }
  if (sum > 1.0 + 1e-12)
    throw DomainError("moran_dimension: ratios sum to more than 1");
  auto g = [&](double s) {
    double z = 0.0;
    for (double r : ratios) z += std::pow(r, s);
    return std::log(z);
  };
  return bisect_decreasing(g, 1e-12, std::log(1.0 / rmax));
}

RootResult bowen_root(const SystemFamily& fam, const std::vector<int>& letters,
                      std::int64_t word_cap) {
  if (letters.empty()) throw DomainError("bowen_root needs n >= 1");
  ContractionProfile prof = contraction_profile(fam);
  const double n = static_cast<double>(letters.size());
  if (letters_all_affine(fam, letters)) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(fam.size()), 0);
    for (int c : letters) ++counts[static_cast<std::size_t>(c)];
    auto g = [&](double s) {
      double acc = 0.0;
      for (int j = 0; j < fam.size(); ++j)
        if (counts[static_cast<std::size_t>(j)] > 0)
          acc += static_cast<double>(counts[static_cast<std::size_t>(j)]) *
                 affine_level_log_z(fam.system(j), s);
      return acc / n;
    };
    return bisect_decreasing(g, kRootBracket, std::log(prof.lambda));
  }
  std::vector<double> lens = collect_lengths(fam, letters, word_cap);
  for (double& l : lens) l = std::log(l);
  auto g = [&](double s) {
    double z = 0.0;
    for (double ll : lens) z += std::exp(s * ll);
    return std::log(z) / n;
  };
  return bisect_decreasing(g, kRootBracket, std::log(prof.lambda));
}

RootResult root_map(const SystemFamily& fam, const SimplexPoint& alpha,
                    double tol, const RootMapOptions& opt) {
  if (static_cast<int>(alpha.weights.size()) != fam.size())
    throw DomainError("simplex point size does not match family size");
  make_simplex(alpha.weights);  // re-validate
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const double per_term_tol = tol / static_cast<double>(fam.size());

  // build one curve per positively weighted system; vertex points reduce to
  // the stationary root of that system
  std::vector<int> active;
  for (int j = 0; j < fam.size(); ++j)
    if (alpha.weights[static_cast<std::size_t>(j)] > 0.0) active.push_back(j);

  std::vector<StationaryPressureCurve> curves;
  double tol_term = 0.0;
  double lambda_min = 0.0;
  for (int j : active) {
    const CookieCutter& F = fam.system(j);
    ContractionProfile prof = contraction_profile(F);
    lambda_min = (lambda_min == 0.0) ? prof.lambda
                                     : std::min(lambda_min, prof.lambda);
    if (F.all_affine()) {
      curves.emplace_back(F, 1);
      continue;
    }
    std::int64_t cap = capped_depth(F.branch_count(), opt.word_cap);
    // tolerance request uses |s| <= 1 on the root search interval
    std::int64_t need = static_cast<std::int64_t>(
        std::ceil(prof.cKappa / per_term_tol));
    need = std::max<std::int64_t>(need, 1);
    if (need > cap && !opt.allow_fallback)
      throw DepthCapError("root_map: stationary depth " +
                          std::to_string(need) + " exceeds cap " +
                          std::to_string(cap));
    std::int64_t n = std::min(need, cap);
    curves.emplace_back(F, n, opt.word_cap);
    tol_term += alpha.weights[static_cast<std::size_t>(j)] * prof.cKappa /
                static_cast<double>(n);
  }

  auto g = [&](double s) {
    double acc = 0.0;
    for (std::size_t i = 0; i < active.size(); ++i)
      acc += alpha.weights[static_cast<std::size_t>(active[i])] *
             curves[i].value(s);
    return acc;
  };
  RootResult r = bisect_decreasing(g, kRootBracket, std::log(lambda_min));
  // fold the stationary evaluation tolerances into the certified radius
  r.error_radius = std::max(
      r.error_radius,
      (std::fabs(r.residual) + tol_term) / std::log(lambda_min));
  return r;
}

}  // namespace cookiedim
