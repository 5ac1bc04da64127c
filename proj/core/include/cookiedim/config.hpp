#pragma once

#include <string>

#include "cookiedim/sequence.hpp"
#include "cookiedim/sweep.hpp"
#include "cookiedim/system.hpp"
#include "json.hpp"

namespace cookiedim {

// [[system]] tables, each with [[system.branch]] entries; branch kinds:
//   affine               slope, offset
//   moebius              either p,q,r for p*x/(q*x+r) or full a,b,c,d
//   moebius_constraints  x0, y0, d0, x1, y1
//   reflect_of           of = index of an earlier branch in the same system
SystemFamily load_system_family(const nlohmann::json& doc);

bool has_sequence(const nlohmann::json& doc);

// [sequence] table: either letters = [...], or [[sequence.block]] entries
// with word/repeat, or a [sequence.rule] table with words, growth, gamma,
// j_max; alphabet is optional and defaults to max letter + 1
SymbolSequence load_sequence(const nlohmann::json& doc);

struct SweepSpec {
  ParametricFamily family;
  int grid_size = 201;
  double threshold = 0.05;
};

// range = [lo, hi], grid, threshold, and [[family]] tables whose branch
// coefficients are polynomial coefficient lists in the parameter
SweepSpec load_sweep(const nlohmann::json& doc);

SystemFamily load_system_family_file(const std::string& path);
SweepSpec load_sweep_file(const std::string& path);

}  // namespace cookiedim
