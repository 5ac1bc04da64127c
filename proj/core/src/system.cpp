#include "cookiedim/system.hpp"

#include <algorithm>
#include <cmath>

#include "cookiedim/errors.hpp"

namespace cookiedim {

CookieCutter::CookieCutter(std::vector<ContractingMap> branches,
                           std::string label)
    : branches_(std::move(branches)), label_(std::move(label)) {
  if (branches_.empty())
    throw InvalidSystemError("cookie cutter needs at least one branch");
  for (const auto& b : branches_) {
    validate_branch(b);
    if (b.kind() != ContractingMap::Kind::Affine) all_affine_ = false;
  }
  // images must be pairwise disjoint closed intervals, touching endpoints
  // rejected (the Cantor structure needs honest gaps)
  std::vector<std::pair<double, double>> images;
  images.reserve(branches_.size());
  for (int i = 0; i < branch_count(); ++i) images.push_back(branch_image(i));
  std::sort(images.begin(), images.end());
  for (std::size_t i = 1; i < images.size(); ++i) {
    if (!(images[i - 1].second < images[i].first))
      throw InvalidSystemError("branch images overlap or touch in system '" +
                               label_ + "'");
  }
}

const ContractingMap& CookieCutter::branch(int i) const {
  if (i < 0 || i >= branch_count())
    throw DomainError("branch index out of range");
  return branches_[static_cast<std::size_t>(i)];
}

std::pair<double, double> CookieCutter::branch_image(int i) const {
  const ContractingMap& b = branch(i);
  double f0 = b(0.0), f1 = b(1.0);
  return {std::min(f0, f1), std::max(f0, f1)};
}

SystemFamily::SystemFamily(std::vector<CookieCutter> systems)
    : systems_(std::move(systems)) {
  if (systems_.empty())
    throw InvalidSystemError("system family needs at least one system");
  for (const auto& s : systems_)
    if (!s.all_affine()) all_affine_ = false;
}

const CookieCutter& SystemFamily::system(int j) const {
  if (j < 0 || j >= size()) throw DomainError("system index out of range");
  return systems_[static_cast<std::size_t>(j)];
}

namespace {

void fold_branch(const ContractingMap& b, ContractionProfile& p, double& supD,
                 double& infD) {
  DerivRange r = derivative_range(b);
  if (!(r.sup_abs < 1.0))
    throw InvalidSystemError("non-contraction detected: sup|Df| >= 1");
  if (!(r.inf_abs > 0.0))
    throw InvalidSystemError("degenerate branch: inf|Df| = 0");
  supD = std::max(supD, r.sup_abs);
  infD = std::min(infD, r.inf_abs);
  p.cF = std::max(p.cF, log_deriv_lipschitz(b));
}

ContractionProfile finish_profile(ContractionProfile p, double supD,
                                  double infD) {
  p.lambda = 1.0 / supD;
  p.bigL = 1.0 / infD;
  p.tau = 1.0;
  p.cKappa = p.cF / (1.0 - 1.0 / p.lambda);
  return p;
}

}  // namespace

ContractionProfile contraction_profile(const SystemFamily& fam) {
  ContractionProfile p;
  double supD = 0.0, infD = 1.0;
  for (int j = 0; j < fam.size(); ++j)
    for (const auto& b : fam.system(j).branches()) fold_branch(b, p, supD, infD);
  return finish_profile(p, supD, infD);
}

ContractionProfile contraction_profile(const CookieCutter& F) {
  ContractionProfile p;
  double supD = 0.0, infD = 1.0;
  for (const auto& b : F.branches()) fold_branch(b, p, supD, infD);
  return finish_profile(p, supD, infD);
}

WordInterval compose_word(const SystemFamily& fam,
                          const std::vector<int>& letters,
                          const std::vector<int>& word) {
  if (letters.size() != word.size())
    throw DomainError("compose_word: letters and word lengths differ");
  WordInterval iv;
  iv.address.letters = letters;
  iv.address.word = word;
  double lo = 0.0, hi = 1.0, len = 1.0;
  for (std::size_t m = letters.size(); m-- > 0;) {
    int c = letters[m];
    if (c < 0 || c >= fam.size())
      throw DomainError("compose_word: letter out of range");
    const CookieCutter& F = fam.system(c);
    int w = word[m];
    if (w < 0 || w >= F.branch_count())
      throw DomainError("compose_word: branch index out of range");
    F.branch(w).map_interval(lo, hi, len);
  }
  iv.left = lo;
  iv.right = hi;
  iv.length = len;
  return iv;
}

CookieCutter compose_systems(const std::vector<const CookieCutter*>& chain,
                             std::string label) {
  if (chain.empty())
    throw DomainError("compose_systems: empty chain");
  std::vector<ContractingMap> branches;
  std::vector<int> idx(chain.size(), 0);
  for (;;) {
    std::vector<ContractingMap> parts;
    parts.reserve(chain.size());
    for (std::size_t m = 0; m < chain.size(); ++m)
      parts.push_back(chain[m]->branch(idx[m]));
    branches.push_back(ContractingMap::composite(std::move(parts)));
    // lexicographic advance, last position fastest
    std::size_t m = chain.size();
    while (m-- > 0) {
      if (++idx[m] < chain[m]->branch_count()) break;
      idx[m] = 0;
      if (m == 0) return CookieCutter(std::move(branches), std::move(label));
    }
  }
}

}  // namespace cookiedim
