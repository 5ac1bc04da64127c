#include "cookiedim/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cookiedim/errors.hpp"

namespace cookiedim {

namespace {

void validate_word(const std::vector<int>& word, int k) {
  if (word.empty()) throw ConfigError("empty block word");
  for (int c : word)
    if (c < 0 || c >= k)
      throw ConfigError("letter " + std::to_string(c) +
                        " outside alphabet of size " + std::to_string(k));
}

// switches inside word repeated `repeat` times, plus the wrap boundary
std::int64_t switches_in_run(const std::vector<int>& word,
                             std::int64_t repeat) {
  std::int64_t inner = 0;
  for (std::size_t i = 1; i < word.size(); ++i)
    if (word[i] != word[i - 1]) ++inner;
  std::int64_t wrap = (word.back() != word.front()) ? 1 : 0;
  return inner * repeat + wrap * (repeat - 1);
}

}  // namespace

SymbolSequence::SymbolSequence(std::vector<Block> blocks, int alphabet_size)
    : blocks_(std::move(blocks)), k_(alphabet_size) {
  if (k_ < 1) throw ConfigError("alphabet size must be >= 1");
  if (blocks_.empty()) throw ConfigError("sequence needs at least one block");
  cum_.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    validate_word(b.word, k_);
    if (b.repeat < 1) throw ConfigError("block repeat count must be >= 1");
    std::int64_t len = b.repeat * static_cast<std::int64_t>(b.word.size());
    if (len / b.repeat != static_cast<std::int64_t>(b.word.size()) ||
        total_ > INT64_MAX - len)
      throw ConfigError("sequence length overflows 64-bit range");
    total_ += len;
    cum_.push_back(total_);
  }
}

int SymbolSequence::letter_at(std::int64_t i) const {
  if (i < 0 || i >= total_) throw DomainError("sequence index out of range");
  auto it = std::upper_bound(cum_.begin(), cum_.end(), i);
  std::size_t bi = static_cast<std::size_t>(it - cum_.begin());
  std::int64_t start = (bi == 0) ? 0 : cum_[bi - 1];
  const auto& w = blocks_[bi].word;
  return w[static_cast<std::size_t>((i - start) % static_cast<std::int64_t>(w.size()))];
}

std::vector<int> SymbolSequence::prefix(std::int64_t n) const {
  if (n < 0 || n > total_)
    throw DomainError("prefix length out of range (sequence has " +
                      std::to_string(total_) + " letters)");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  std::int64_t pos = 0;
  for (const auto& b : blocks_) {
    for (std::int64_t r = 0; r < b.repeat && pos < n; ++r)
      for (std::size_t j = 0; j < b.word.size() && pos < n; ++j, ++pos)
        out.push_back(b.word[j]);
    if (pos >= n) break;
  }
  return out;
}

std::vector<std::int64_t> SymbolSequence::block_ends() const { return cum_; }

SymbolSequence explicit_sequence(std::vector<int> letters, int alphabet_size) {
  if (letters.empty()) throw ConfigError("empty sequence");
  std::vector<Block> blocks;
  blocks.push_back(Block{std::move(letters), 1});
  return SymbolSequence(std::move(blocks), alphabet_size);
}

SymbolSequence block_sequence(
    std::vector<std::pair<std::vector<int>, std::int64_t>> blocks,
    int alphabet_size) {
  std::vector<Block> bs;
  bs.reserve(blocks.size());
  for (auto& [w, r] : blocks) bs.push_back(Block{std::move(w), r});
  return SymbolSequence(std::move(bs), alphabet_size);
}

SymbolSequence rule_sequence(const std::vector<std::vector<int>>& words,
                             GrowthRule growth, double gamma, int j_max,
                             int alphabet_size) {
  if (words.empty()) throw ConfigError("rule needs at least one word");
  if (!(gamma > 1.0)) throw ConfigError("growth rate gamma must be > 1");
  if (j_max < 1) throw ConfigError("j_max must be >= 1");
  const bool integral = (gamma == std::floor(gamma));
  std::vector<Block> bs;
  bs.reserve(static_cast<std::size_t>(j_max));
  for (int j = 1; j <= j_max; ++j) {
    std::int64_t e =
        (growth == GrowthRule::Geometric)
            ? j
            : static_cast<std::int64_t>(j) * static_cast<std::int64_t>(j);
    std::int64_t l;
    if (integral) {
      // exact integer powers; the double pow of e.g. 3^36 is off by a few ulps
      std::int64_t g = static_cast<std::int64_t>(gamma);
      l = 1;
      for (std::int64_t t = 0; t < e; ++t) {
        if (l > INT64_MAX / g)
          throw ConfigError("block length overflows 64-bit range at j=" +
                            std::to_string(j));
        l *= g;
      }
    } else {
      double v = std::pow(gamma, static_cast<double>(e));
      if (!(v < 9.0e18))
        throw ConfigError("block length overflows 64-bit range at j=" +
                          std::to_string(j));
      l = static_cast<std::int64_t>(std::ceil(v));
    }
    bs.push_back(Block{words[static_cast<std::size_t>((j - 1) % static_cast<int>(words.size()))], l});
  }
  return SymbolSequence(std::move(bs), alphabet_size);
}

SequenceStats stats(const SymbolSequence& seq, std::int64_t n) {
  if (n < 1) throw DomainError("stats horizon must be >= 1");
  if (n > seq.length())
    throw DomainError("horizon beyond sequence length " +
                      std::to_string(seq.length()));
  SequenceStats st;
  st.n = n;
  st.counts.assign(static_cast<std::size_t>(seq.alphabet_size()), 0);
  std::int64_t pos = 0;
  int prev = -1;  // letter right before the current block
  for (const auto& b : seq.blocks()) {
    if (pos >= n) break;
    const std::int64_t wlen = static_cast<std::int64_t>(b.word.size());
    std::int64_t want = std::min(n - pos, b.repeat * wlen);
    std::int64_t full = want / wlen;
    std::int64_t rest = want % wlen;
    if (full > 0) {
      for (std::size_t j = 0; j < b.word.size(); ++j)
        st.counts[static_cast<std::size_t>(b.word[j])] += full;
      st.switch_count += switches_in_run(b.word, full);
      if (prev >= 0 && prev != b.word.front()) ++st.switch_count;
    }
    if (rest > 0) {
      int before = (full > 0) ? b.word.back() : prev;
      if (before >= 0 && before != b.word.front()) ++st.switch_count;
      for (std::int64_t j = 0; j < rest; ++j) {
        st.counts[static_cast<std::size_t>(b.word[static_cast<std::size_t>(j)])] += 1;
        if (j > 0 && b.word[static_cast<std::size_t>(j)] !=
                         b.word[static_cast<std::size_t>(j - 1)])
          ++st.switch_count;
      }
      prev = b.word[static_cast<std::size_t>(rest - 1)];
    } else {
      prev = b.word.back();
    }
    pos += want;
  }
  st.frequencies.resize(st.counts.size());
  for (std::size_t j = 0; j < st.counts.size(); ++j)
    st.frequencies[j] =
        static_cast<double>(st.counts[j]) / static_cast<double>(n);
  return st;
}

SwitchRatioDiagnostic rarely_switching_diagnostic(
    const SymbolSequence& seq, const std::vector<std::int64_t>& horizons) {
  SwitchRatioDiagnostic d;
  for (std::int64_t n : horizons) {
    SequenceStats st = stats(seq, n);
    d.points.push_back(
        {n, static_cast<double>(st.switch_count) / static_cast<double>(n)});
  }
  if (d.points.size() >= 2) {
    double first = d.points.front().ratio;
    double last = d.points.back().ratio;
    d.decreasing_trend = (first == 0.0 && last == 0.0) || (last * 2.0 <= first);
  }
  return d;
}

std::vector<double> frequencies_condition_diagnostic(
    const SymbolSequence& seq, const std::vector<std::int64_t>& horizons) {
  std::vector<double> running_max(
      static_cast<std::size_t>(seq.alphabet_size()), 0.0);
  for (std::int64_t n : horizons) {
    SequenceStats st = stats(seq, n);
    for (std::size_t j = 0; j < running_max.size(); ++j)
      running_max[j] = std::max(running_max[j], st.frequencies[j]);
  }
  return running_max;
}

GroupedSequence group_letters(const SymbolSequence& seq, int block_len,
                              const SystemFamily& fam) {
  if (block_len < 1) throw DomainError("block_len must be >= 1");
  if (seq.alphabet_size() != fam.size())
    throw DomainError("sequence alphabet and family size differ");
  if (seq.length() % block_len != 0)
    throw DomainError(
        "sequence length is not a multiple of the grouping length");

  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> alphabet;
  auto grouped_letter = [&](const std::vector<int>& chunk) {
    auto it = index.find(chunk);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(alphabet.size());
    index.emplace(chunk, id);
    alphabet.push_back(chunk);
    return id;
  };

  std::vector<Block> gblocks;
  bool aligned = true;
  std::int64_t offset = 0;
  for (const auto& b : seq.blocks()) {
    if (offset % block_len != 0 ||
        static_cast<std::int64_t>(b.word.size()) != block_len) {
      aligned = false;
      break;
    }
    offset += b.repeat * static_cast<std::int64_t>(b.word.size());
  }
  if (aligned) {
    // each block word is exactly one chunk, so the grouped spec is the same
    // block list over the chunk alphabet
    for (const auto& b : seq.blocks())
      gblocks.push_back(Block{{grouped_letter(b.word)}, b.repeat});
  } else {
    constexpr std::int64_t kMaterializeCap = 1 << 24;
    if (seq.length() > kMaterializeCap)
      throw DepthCapError(
          "grouping this sequence requires materializing more than 2^24 "
          "letters; align block words with the grouping length");
    std::vector<int> letters = seq.prefix(seq.length());
    std::vector<int> gletters;
    gletters.reserve(letters.size() / static_cast<std::size_t>(block_len));
    std::vector<int> chunk(static_cast<std::size_t>(block_len));
    for (std::size_t i = 0; i < letters.size();
         i += static_cast<std::size_t>(block_len)) {
      std::copy(letters.begin() + static_cast<std::ptrdiff_t>(i),
                letters.begin() + static_cast<std::ptrdiff_t>(i) + block_len,
                chunk.begin());
      gletters.push_back(grouped_letter(chunk));
    }
    gblocks.push_back(Block{std::move(gletters), 1});
  }

  std::vector<CookieCutter> systems;
  systems.reserve(alphabet.size());
  for (const auto& chunk : alphabet) {
    std::vector<const CookieCutter*> chain;
    std::string label;
    for (int c : chunk) {
      chain.push_back(&fam.system(c));
      if (!label.empty()) label += "*";
      label += fam.system(c).label().empty() ? std::to_string(c)
                                             : fam.system(c).label();
    }
    systems.push_back(compose_systems(chain, label));
  }

  GroupedSequence g{SymbolSequence(std::move(gblocks),
                                   static_cast<int>(alphabet.size())),
                    SystemFamily(std::move(systems)), std::move(alphabet)};
  return g;
}

}  // namespace cookiedim
