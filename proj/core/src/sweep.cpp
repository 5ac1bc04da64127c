#include "cookiedim/sweep.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cookiedim/errors.hpp"
#include "cookiedim/thermo.hpp"

namespace cookiedim {

double Poly::operator()(double a) const {
  double v = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * a + *it;
  return v;
}

SystemFamily instantiate(const ParametricFamily& family, double a) {
  if (family.systems.empty())
    throw ConfigError("parametric family has no systems");
  if (a < family.a_lo || a > family.a_hi)
    throw DomainError("parameter " + std::to_string(a) +
                      " outside the family range");
  std::vector<CookieCutter> systems;
  for (const SystemTemplate& st : family.systems) {
    std::vector<ContractingMap> branches;
    for (const BranchTemplate& bt : st.branches) {
      if (bt.moebius) {
        if (bt.coeffs.size() != 4)
          throw ConfigError("moebius branch template needs 4 coefficients");
        branches.push_back(ContractingMap::moebius_full(
            bt.coeffs[0](a), bt.coeffs[1](a), bt.coeffs[2](a),
            bt.coeffs[3](a)));
      } else {
        if (bt.coeffs.size() != 2)
          throw ConfigError("affine branch template needs 2 coefficients");
        branches.push_back(
            ContractingMap::affine(bt.coeffs[0](a), bt.coeffs[1](a)));
      }
    }
    try {
      systems.emplace_back(std::move(branches), st.label);
    } catch (const Error& e) {
      throw InvalidSystemError("system '" + st.label + "' invalid at a = " +
                               std::to_string(a) + ": " + e.what());
    }
  }
  return SystemFamily(std::move(systems));
}

std::vector<Kink> kink_detect(const std::vector<double>& grid,
                              const std::vector<double>& envelope,
                              double threshold) {
  if (grid.size() != envelope.size())
    throw DomainError("grid and envelope sizes differ");
  if (grid.size() < 3) throw DomainError("kink detection needs >= 3 points");
  if (!(threshold > 0.0)) throw DomainError("threshold must be > 0");
  const std::size_t m = grid.size();
  double h = (grid.back() - grid.front()) / static_cast<double>(m - 1);
  for (std::size_t i = 1; i < m; ++i)
    if (std::fabs(grid[i] - grid[i - 1] - h) > 1e-9 * std::fabs(h) + 1e-15)
      throw DomainError("kink detection expects a uniform grid");

  std::vector<bool> flagged(m, false);
  for (std::size_t i = 1; i + 1 < m; ++i) {
    double sl = (envelope[i] - envelope[i - 1]) / (grid[i] - grid[i - 1]);
    double sr = (envelope[i + 1] - envelope[i]) / (grid[i + 1] - grid[i]);
    if (std::isfinite(sl) && std::isfinite(sr) &&
        std::fabs(sr - sl) >= threshold)
      flagged[i] = true;
  }

  std::vector<Kink> kinks;
  std::size_t i = 1;
  while (i + 1 < m) {
    if (!flagged[i]) {
      ++i;
      continue;
    }
    std::size_t p = i, q = i;
    while (q + 2 < m && flagged[q + 1]) ++q;
    // secant lines just outside the run lie on the unbroken pieces; their
    // intersection interpolates the crossing of the two underlying curves
    double sl = (envelope[p] - envelope[p - 1]) / (grid[p] - grid[p - 1]);
    double sr = (envelope[q + 1] - envelope[q]) / (grid[q + 1] - grid[q]);
    Kink k;
    k.left_slope = sl;
    k.right_slope = sr;
    if (std::fabs(sl - sr) > 0.0) {
      double x = (envelope[q] - envelope[p] + sl * grid[p] - sr * grid[q]) /
                 (sl - sr);
      k.parameter =
          std::min(std::max(x, grid[p - 1]), grid[q + 1]);
    } else {
      k.parameter = 0.5 * (grid[p] + grid[q]);
    }
    kinks.push_back(k);
    i = q + 1;
  }
  return kinks;
}

SweepResult sweep(const ParametricFamily& family, int grid_size,
                  const SweepOptions& opt) {
  if (grid_size < 3) throw DomainError("sweep needs grid_size >= 3");
  const double nan = std::numeric_limits<double>::quiet_NaN();
  SweepResult out;
  out.grid.resize(static_cast<std::size_t>(grid_size));
  for (int i = 0; i < grid_size; ++i)
    out.grid[static_cast<std::size_t>(i)] =
        family.a_lo + (family.a_hi - family.a_lo) * static_cast<double>(i) /
                          static_cast<double>(grid_size - 1);

  const std::size_t k = family.systems.size();
  out.dims.assign(k, std::vector<DimensionEstimate>(
                         static_cast<std::size_t>(grid_size)));
  out.min_envelope.assign(static_cast<std::size_t>(grid_size), nan);
  out.max_envelope.assign(static_cast<std::size_t>(grid_size), nan);

  for (std::size_t i = 0; i < out.grid.size(); ++i) {
    double a = out.grid[i];
    try {
      SystemFamily fam = instantiate(family, a);
      double lo = nan, hi = nan;
      for (std::size_t j = 0; j < k; ++j) {
        DimensionEstimate est = stationary_dimension(
            fam.system(static_cast<int>(j)), 0, opt.word_cap_per_point);
        out.dims[j][i] = est;
        if (!(est.value >= lo)) lo = est.value;  // NaN-safe first assignment
        if (!(est.value <= hi)) hi = est.value;
      }
      out.min_envelope[i] = lo;
      out.max_envelope[i] = hi;
    } catch (const InvalidSystemError&) {
      out.skipped.push_back(a);
      for (std::size_t j = 0; j < k; ++j)
        out.dims[j][i] = {nan, DimKind::stationary, 0, nan};
    }
  }

  double step = out.grid.size() > 1 ? out.grid[1] - out.grid[0] : 0.0;
  out.kinks = kink_detect(out.grid, out.min_envelope, opt.threshold);
  for (const Kink& km : kink_detect(out.grid, out.max_envelope, opt.threshold)) {
    bool dup = false;
    for (const Kink& k0 : out.kinks)
      if (std::fabs(k0.parameter - km.parameter) <= step) dup = true;
    if (!dup) out.kinks.push_back(km);
  }
  return out;
}

}  // namespace cookiedim
