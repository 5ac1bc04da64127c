#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cookiedim/dimension.hpp"
#include "cookiedim/system.hpp"

namespace cookiedim {

// polynomial in the sweep parameter, coeffs[i] * a^i
struct Poly {
  std::vector<double> coeffs;
  double operator()(double a) const;
};

// parameter-dependent branch; affine templates carry {slope, offset},
// moebius templates carry {a, b, c, d} of (a x + b) / (c x + d)
struct BranchTemplate {
  bool moebius = false;
  std::vector<Poly> coeffs;
};

struct SystemTemplate {
  std::string label;
  std::vector<BranchTemplate> branches;
};

struct ParametricFamily {
  std::vector<SystemTemplate> systems;
  double a_lo = 0.0;
  double a_hi = 1.0;
};

// evaluates every coefficient polynomial at a and validates the result
SystemFamily instantiate(const ParametricFamily& family, double a);

struct Kink {
  double parameter = 0.0;
  double left_slope = 0.0;
  double right_slope = 0.0;
};

// flags interior grid points whose one-sided secant slopes differ by at
// least threshold, merges consecutive flags into one kink, and refines the
// location by intersecting the secant lines just outside the flagged run
std::vector<Kink> kink_detect(const std::vector<double>& grid,
                              const std::vector<double>& envelope,
                              double threshold);

struct SweepOptions {
  double threshold = 0.05;
  std::int64_t word_cap_per_point = std::int64_t{1} << 14;
};

struct SweepResult {
  std::vector<double> grid;
  // dims[j][i]: stationary dimension of system j at grid point i; skipped
  // points carry NaN values
  std::vector<std::vector<DimensionEstimate>> dims;
  std::vector<double> min_envelope;
  std::vector<double> max_envelope;
  std::vector<Kink> kinks;
  std::vector<double> skipped;  // parameters where instantiation failed
};

SweepResult sweep(const ParametricFamily& family, int grid_size,
                  const SweepOptions& opt = {});

}  // namespace cookiedim
