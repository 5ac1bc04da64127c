#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cookiedim/system.hpp"

namespace cookiedim {

// one run of a repeated word, e.g. ("01", 5) = 0101010101
struct Block {
  std::vector<int> word;
  std::int64_t repeat = 1;
};

enum class GrowthRule { Geometric, Supergeometric };

// a driving sequence given by a finite block spec; stats at horizon n are
// integer arithmetic over block boundaries, nothing is materialized
class SymbolSequence {
 public:
  SymbolSequence(std::vector<Block> blocks, int alphabet_size);

  int alphabet_size() const { return k_; }
  std::int64_t length() const { return total_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  int letter_at(std::int64_t i) const;  // 0-based
  std::vector<int> prefix(std::int64_t n) const;

  // cumulative letter count at the end of each block
  std::vector<std::int64_t> block_ends() const;

 private:
  std::vector<Block> blocks_;
  std::vector<std::int64_t> cum_;  // cumulative lengths, cum_[i] = end of block i
  int k_ = 1;
  std::int64_t total_ = 0;
};

SymbolSequence explicit_sequence(std::vector<int> letters, int alphabet_size);
SymbolSequence block_sequence(std::vector<std::pair<std::vector<int>, std::int64_t>> blocks,
                              int alphabet_size);
// blocks cycle through `words`; block j (1-based) repeats its word
// ceil(gamma^j) times (Geometric) or ceil(gamma^(j^2)) times (Supergeometric)
SymbolSequence rule_sequence(const std::vector<std::vector<int>>& words,
                             GrowthRule growth, double gamma, int j_max,
                             int alphabet_size);

struct SequenceStats {
  std::int64_t n = 0;
  std::int64_t switch_count = 0;            // #{m < n : c_m != c_{m+1}}
  std::vector<std::int64_t> counts;         // per-letter occurrence counts
  std::vector<double> frequencies;          // counts / n
};

SequenceStats stats(const SymbolSequence& seq, std::int64_t n);

struct SwitchRatioPoint {
  std::int64_t n = 0;
  double ratio = 0.0;  // switch_count / n
};
struct SwitchRatioDiagnostic {
  std::vector<SwitchRatioPoint> points;
  // true when the ratio drops by at least a factor 2 from the first decade
  // to the last; a finite-horizon hint, not a limit claim
  bool decreasing_trend = false;
};
SwitchRatioDiagnostic rarely_switching_diagnostic(
    const SymbolSequence& seq, const std::vector<std::int64_t>& horizons);

// per-letter running max of the frequency over the listed horizons
std::vector<double> frequencies_condition_diagnostic(
    const SymbolSequence& seq, const std::vector<std::int64_t>& horizons);

// read the sequence in chunks of block_len and compose the driven systems
// accordingly; the grouped alphabet lists distinct chunks in order of first
// occurrence
struct GroupedSequence {
  SymbolSequence sequence;
  SystemFamily family;
  std::vector<std::vector<int>> alphabet;  // grouped letter -> original chunk
};
GroupedSequence group_letters(const SymbolSequence& seq, int block_len,
                              const SystemFamily& fam);

}  // namespace cookiedim
