#pragma once

#include <cstdint>
#include <vector>

#include "cookiedim/errors.hpp"
#include "cookiedim/system.hpp"

namespace cookiedim {

// number of depth-n cylinder words, saturating at cap+1
inline std::int64_t word_count(const SystemFamily& fam,
                               const std::vector<int>& letters,
                               std::int64_t cap) {
  std::int64_t total = 1;
  for (int c : letters) {
    if (c < 0 || c >= fam.size()) throw DomainError("letter out of range");
    total *= fam.system(c).branch_count();
    if (total > cap) return cap + 1;
  }
  return total;
}

inline void check_word_cap(const SystemFamily& fam,
                           const std::vector<int>& letters, std::int64_t cap) {
  if (word_count(fam, letters, cap) > cap)
    throw DepthCapError("word count exceeds the depth cap (" +
                        std::to_string(cap) + " words)");
}

// depth-first visit of the component intervals of the depth-n refinement,
// keeping O(n) live state; fn(lo, hi, len) is called once per leaf
template <class Fn>
void for_each_leaf(const SystemFamily& fam, const std::vector<int>& letters,
                   Fn&& fn) {
  struct Frame {
    double lo, hi, len;
  };
  const std::size_t n = letters.size();
  if (n == 0) {
    fn(0.0, 1.0, 1.0);
    return;
  }
  std::vector<Frame> stack(n + 1);
  std::vector<int> branch(n, 0);
  stack[0] = {0.0, 1.0, 1.0};
  std::size_t depth = 0;
  for (;;) {
    // build f_{c1,w1} o ... o f_{cn,wn}([0,1]) inside out: tree level d
    // applies a branch of system letters[n-1-d] to the interval built so far
    const CookieCutter& F = fam.system(letters[n - 1 - depth]);
    if (branch[depth] < F.branch_count()) {
      Frame f = stack[depth];
      F.branch(branch[depth]).map_interval(f.lo, f.hi, f.len);
      if (depth + 1 == n) {
        fn(f.lo, f.hi, f.len);
        ++branch[depth];
      } else {
        stack[depth + 1] = f;
        ++depth;
        branch[depth] = 0;
      }
    } else {
      if (depth == 0) return;
      --depth;
      ++branch[depth];
    }
  }
}

inline std::vector<double> collect_lengths(const SystemFamily& fam,
                                           const std::vector<int>& letters,
                                           std::int64_t cap) {
  check_word_cap(fam, letters, cap);
  std::vector<double> lens;
  lens.reserve(static_cast<std::size_t>(word_count(fam, letters, cap)));
  for_each_leaf(fam, letters,
                [&](double, double, double len) { lens.push_back(len); });
  return lens;
}

inline std::vector<std::pair<double, double>> collect_endpoints(
    const SystemFamily& fam, const std::vector<int>& letters,
    std::int64_t cap) {
  check_word_cap(fam, letters, cap);
  std::vector<std::pair<double, double>> spans;
  spans.reserve(static_cast<std::size_t>(word_count(fam, letters, cap)));
  for_each_leaf(fam, letters, [&](double lo, double hi, double) {
    spans.emplace_back(lo, hi);
  });
  return spans;
}

}  // namespace cookiedim
