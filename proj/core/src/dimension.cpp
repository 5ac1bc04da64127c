#include "cookiedim/dimension.hpp"

#include <algorithm>
#include <cmath>

#include "cookiedim/enumerate.hpp"
#include "cookiedim/errors.hpp"

namespace cookiedim {

namespace {

bool family_all_affine(const SystemFamily& fam) { return fam.all_affine(); }

RootResult affine_frequency_root(const SystemFamily& fam,
                                 const SequenceStats& st, double log_lambda) {
  // exact for affine systems: P_{c1..cn}(s) = sum_j Freq_j log sum_i a_ji^s
  std::vector<std::vector<double>> log_ratios(
      static_cast<std::size_t>(fam.size()));
  for (int j = 0; j < fam.size(); ++j)
    for (const auto& b : fam.system(j).branches())
      log_ratios[static_cast<std::size_t>(j)].push_back(
          std::log(std::fabs(b.affine_coeffs().a)));
  auto g = [&](double s) {
    double acc = 0.0;
    for (int j = 0; j < fam.size(); ++j) {
      if (st.counts[static_cast<std::size_t>(j)] == 0) continue;
      double z = 0.0;
      for (double lr : log_ratios[static_cast<std::size_t>(j)])
        z += std::exp(s * lr);
      acc += st.frequencies[static_cast<std::size_t>(j)] * std::log(z);
    }
    return acc;
  };
  return bisect_decreasing(g, kRootBracket, log_lambda);
}

// exact enumeration materializes the prefix and walks the word tree, so both
// the letter count and the product of branch counts must stay within the cap
bool exact_route_feasible(const SequenceStats& st, const SystemFamily& fam,
                          std::int64_t n, std::int64_t word_cap) {
  if (n > word_cap) return false;
  double bits = 0.0;
  for (int j = 0; j < fam.size(); ++j)
    bits += static_cast<double>(st.counts[static_cast<std::size_t>(j)]) *
            std::log2(static_cast<double>(fam.system(j).branch_count()));
  return bits <= std::log2(static_cast<double>(word_cap));
}

}  // namespace

std::string route_name(Route r) {
  switch (r) {
    case Route::exact_enumeration:
      return "exact";
    case Route::affine_factorized:
      return "affine-exact";
    case Route::frequency_approximation:
      return "freq-approx";
  }
  return "?";
}

RootResult prefix_root(const SystemFamily& fam, const SymbolSequence& seq,
                       std::int64_t n, std::int64_t word_cap) {
  if (family_all_affine(fam)) {
    ContractionProfile prof = contraction_profile(fam);
    return affine_frequency_root(fam, stats(seq, n), std::log(prof.lambda));
  }
  return bowen_root(fam, seq.prefix(n), word_cap);
}

DimensionEstimate stationary_dimension(const CookieCutter& F,
                                       std::int64_t depth,
                                       std::int64_t word_cap) {
  SystemFamily self({F});
  if (F.all_affine()) {
    std::vector<double> ratios;
    for (const auto& b : F.branches())
      ratios.push_back(std::fabs(b.affine_coeffs().a));
    RootResult r = moran_dimension(ratios);
    return {r.root, DimKind::stationary, 1, r.error_radius};
  }
  if (depth <= 0) depth = capped_depth(F.branch_count(), word_cap);
  std::vector<int> letters(static_cast<std::size_t>(depth), 0);
  RootResult r = bowen_root(self, letters, word_cap);
  ContractionProfile prof = contraction_profile(F);
  // distance from the depth-n root to the limiting one, via the Fekete-type
  // pressure bound cKappa*s/n pushed through the slope log(lambda)
  double limit_term = prof.cKappa * r.root /
                      (static_cast<double>(depth) * std::log(prof.lambda));
  return {r.root, DimKind::stationary, depth, r.error_radius + limit_term};
}

EstimateOutcome dimension_estimates(const SystemFamily& fam,
                                    const SymbolSequence& seq,
                                    const std::vector<std::int64_t>& horizons,
                                    const EstimateOptions& opt) {
  if (horizons.empty()) throw DomainError("no horizons given");
  for (std::size_t i = 1; i < horizons.size(); ++i)
    if (horizons[i] <= horizons[i - 1])
      throw DomainError("horizons must be strictly increasing");

  EstimateOutcome out;
  const bool affine = family_all_affine(fam);
  ContractionProfile prof = contraction_profile(fam);
  const double log_lambda = std::log(prof.lambda);

  // stationary curves for the fallback route, built once on demand
  std::vector<StationaryPressureCurve> curves;
  std::vector<double> curve_err;
  auto ensure_curves = [&]() {
    if (!curves.empty()) return;
    for (int j = 0; j < fam.size(); ++j) {
      const CookieCutter& F = fam.system(j);
      std::int64_t d = F.all_affine()
                           ? 1
                           : capped_depth(F.branch_count(),
                                          opt.stationary_word_cap);
      curves.emplace_back(F, d, opt.stationary_word_cap);
      ContractionProfile pj = contraction_profile(F);
      curve_err.push_back(F.all_affine() ? 0.0
                                         : pj.cKappa / static_cast<double>(d));
    }
  };

  for (std::int64_t n : horizons) {
    HorizonPoint pt;
    pt.n = n;
    SequenceStats st = stats(seq, n);
    if (affine) {
      pt.route = Route::affine_factorized;
      pt.root = affine_frequency_root(fam, st, log_lambda);
    } else if (exact_route_feasible(st, fam, n, opt.word_cap)) {
      pt.route = Route::exact_enumeration;
      pt.root = bowen_root(fam, seq.prefix(n), opt.word_cap);
    } else if (opt.allow_fallback) {
      pt.route = Route::frequency_approximation;
      ensure_curves();
      auto g = [&](double s) {
        double acc = 0.0;
        for (int j = 0; j < fam.size(); ++j)
          if (st.counts[static_cast<std::size_t>(j)] > 0)
            acc += st.frequencies[static_cast<std::size_t>(j)] *
                   curves[static_cast<std::size_t>(j)].value(s);
        return acc;
      };
      RootResult r = bisect_decreasing(g, kRootBracket, log_lambda);
      // pressure-level defect of the frequency approximation plus the
      // stationary tolerances, converted through the slope bound
      double defect =
          (2.0 * static_cast<double>(st.switch_count) + fam.size()) *
          prof.cKappa * r.root / static_cast<double>(n);
      double stat_tol = 0.0;
      for (int j = 0; j < fam.size(); ++j)
        stat_tol += st.frequencies[static_cast<std::size_t>(j)] *
                    curve_err[static_cast<std::size_t>(j)] * r.root;
      r.error_radius = std::max(
          r.error_radius,
          (std::fabs(r.residual) + defect + stat_tol) / log_lambda);
      pt.root = r;
    } else {
      throw DepthCapError("horizon " + std::to_string(n) +
                          " exceeds the exact-enumeration cap and fallback "
                          "is disabled");
    }
    out.trace.push_back(pt);
  }

  // liminf/limsup proxies over the tail half of the schedule
  std::size_t tail = (out.trace.size() + 1) / 2;
  std::size_t start = out.trace.size() - tail;
  std::size_t arg_min = start, arg_max = start;
  for (std::size_t i = start; i < out.trace.size(); ++i) {
    if (out.trace[i].root.root < out.trace[arg_min].root.root) arg_min = i;
    if (out.trace[i].root.root > out.trace[arg_max].root.root) arg_max = i;
  }
  double spread =
      out.trace[arg_max].root.root - out.trace[arg_min].root.root;
  out.hausdorff = {out.trace[arg_min].root.root, DimKind::hausdorff_liminf,
                   horizons.back(),
                   out.trace[arg_min].root.error_radius + spread};
  out.upper_box = {out.trace[arg_max].root.root, DimKind::upper_box_limsup,
                   horizons.back(),
                   out.trace[arg_max].root.error_radius + spread};
  return out;
}

ApproximationReport quasi_additivity_check(const SystemFamily& fam,
                                           const std::vector<int>& letters,
                                           int m, double s,
                                           std::int64_t word_cap) {
  const int n = static_cast<int>(letters.size());
  if (m < 1 || m >= n)
    throw DomainError("split m must satisfy 1 <= m < n");
  std::vector<int> head(letters.begin(), letters.begin() + m);
  std::vector<int> tail(letters.begin() + m, letters.end());
  double lz_full =
      std::log(partition_function(fam, letters, s, PartitionRoute::Auto, word_cap));
  double lz_head =
      std::log(partition_function(fam, head, s, PartitionRoute::Auto, word_cap));
  double lz_tail =
      std::log(partition_function(fam, tail, s, PartitionRoute::Auto, word_cap));
  ContractionProfile prof = contraction_profile(fam);
  ApproximationReport rep;
  rep.n = n;
  rep.measured = std::fabs(lz_full - (lz_head + lz_tail));
  rep.theoretical = prof.cKappa * std::fabs(s);
  return rep;
}

ApproximationReport combine_error(const SystemFamily& fam,
                                  const SymbolSequence& seq, std::int64_t n,
                                  double s, const EstimateOptions& opt) {
  SequenceStats st = stats(seq, n);
  double p_prefix;
  if (family_all_affine(fam)) {
    p_prefix = 0.0;
    for (int j = 0; j < fam.size(); ++j)
      if (st.counts[static_cast<std::size_t>(j)] > 0) {
        double z = 0.0;
        for (const auto& b : fam.system(j).branches())
          z += std::pow(std::fabs(b.affine_coeffs().a), s);
        p_prefix += st.frequencies[static_cast<std::size_t>(j)] * std::log(z);
      }
  } else {
    p_prefix = pressure(fam, seq.prefix(n), s, PartitionRoute::Auto,
                        opt.word_cap)
                   .value;
  }
  double combo = 0.0;
  double stat_tol = 0.0;
  for (int j = 0; j < fam.size(); ++j) {
    if (st.counts[static_cast<std::size_t>(j)] == 0) continue;
    const CookieCutter& F = fam.system(j);
    std::int64_t d = F.all_affine()
                         ? 1
                         : capped_depth(F.branch_count(),
                                        opt.stationary_word_cap);
    StationaryPressureCurve curve(F, d, opt.stationary_word_cap);
    combo += st.frequencies[static_cast<std::size_t>(j)] * curve.value(s);
    if (!F.all_affine()) {
      ContractionProfile pj = contraction_profile(F);
      stat_tol += st.frequencies[static_cast<std::size_t>(j)] * pj.cKappa *
                  std::fabs(s) / static_cast<double>(d);
    }
  }
  ContractionProfile prof = contraction_profile(fam);
  ApproximationReport rep;
  rep.n = n;
  rep.measured = std::fabs(p_prefix - combo);
  rep.theoretical =
      (2.0 * static_cast<double>(st.switch_count) + fam.size()) *
          prof.cKappa * std::fabs(s) / static_cast<double>(n) +
      stat_tol;
  return rep;
}

std::vector<WordInterval> cantor_intervals(const SystemFamily& fam,
                                           const SymbolSequence& seq,
                                           std::int64_t n,
                                           std::int64_t word_cap) {
  std::vector<int> letters = seq.prefix(n);
  check_word_cap(fam, letters, word_cap);

  std::vector<WordInterval> out;
  out.reserve(static_cast<std::size_t>(word_count(fam, letters, word_cap)));

  // mirror the leaf traversal but keep the branch path to label addresses;
  // the traversal applies letters inside out, so the path maps to the word
  // reversed
  struct Frame {
    double lo, hi, len;
  };
  const std::size_t depth_n = letters.size();
  std::vector<Frame> stack(depth_n + 1);
  std::vector<int> branch(depth_n, 0);
  stack[0] = {0.0, 1.0, 1.0};
  std::size_t depth = 0;
  for (;;) {
    const CookieCutter& F = fam.system(letters[depth_n - 1 - depth]);
    if (branch[depth] < F.branch_count()) {
      Frame f = stack[depth];
      F.branch(branch[depth]).map_interval(f.lo, f.hi, f.len);
      if (depth + 1 == depth_n) {
        WordInterval iv;
        iv.address.letters = letters;
        iv.address.word.resize(depth_n);
        for (std::size_t d = 0; d < depth_n; ++d)
          iv.address.word[depth_n - 1 - d] = branch[d];
        iv.left = f.lo;
        iv.right = f.hi;
        iv.length = f.len;
        out.push_back(std::move(iv));
        ++branch[depth];
      } else {
        stack[depth + 1] = f;
        ++depth;
        branch[depth] = 0;
      }
    } else {
      if (depth == 0) break;
      --depth;
      ++branch[depth];
    }
  }
  std::sort(out.begin(), out.end(),
            [](const WordInterval& a, const WordInterval& b) {
              return a.left < b.left;
            });
  return out;
}

}  // namespace cookiedim
