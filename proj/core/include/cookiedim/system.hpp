#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cookiedim/map.hpp"

namespace cookiedim {

// letters index systems in a family, word entries index branches; both 0-based
struct WordAddress {
  std::vector<int> letters;
  std::vector<int> word;
};

struct WordInterval {
  WordAddress address;
  double left = 0.0;
  double right = 1.0;
  // multiplicatively tracked |right-left|; below depth ~25 the endpoint
  // difference can underflow in doubles while this stays accurate
  double length = 1.0;
};

class CookieCutter {
 public:
  explicit CookieCutter(std::vector<ContractingMap> branches,
                        std::string label = "");

  int branch_count() const { return static_cast<int>(branches_.size()); }
  const ContractingMap& branch(int i) const;
  const std::vector<ContractingMap>& branches() const { return branches_; }
  const std::string& label() const { return label_; }
  // closed image interval of branch i
  std::pair<double, double> branch_image(int i) const;
  bool all_affine() const { return all_affine_; }

 private:
  std::vector<ContractingMap> branches_;
  std::string label_;
  bool all_affine_ = true;
};

class SystemFamily {
 public:
  explicit SystemFamily(std::vector<CookieCutter> systems);

  int size() const { return static_cast<int>(systems_.size()); }
  const CookieCutter& system(int j) const;
  bool all_affine() const { return all_affine_; }

 private:
  std::vector<CookieCutter> systems_;
  bool all_affine_ = true;
};

struct ContractionProfile {
  double lambda = 0.0;  // sup|Df| <= 1/lambda over every branch
  double bigL = 0.0;    // inf|Df| >= 1/bigL
  double tau = 1.0;     // Hoelder exponent of Df; 1 for these map classes
  double cF = 0.0;      // Lipschitz constant of log|Df| across branches
  double cKappa = 0.0;  // cF / (1 - lambda^(-tau))
};

ContractionProfile contraction_profile(const SystemFamily& fam);
ContractionProfile contraction_profile(const CookieCutter& F);

// image of [0,1] under f_{c1,w1} o ... o f_{cn,wn}
WordInterval compose_word(const SystemFamily& fam,
                          const std::vector<int>& letters,
                          const std::vector<int>& word);

// the cookie cutter whose branches are all compositions
// f_{chain[0], i0} o f_{chain[1], i1} o ... , enumerated lexicographically
CookieCutter compose_systems(const std::vector<const CookieCutter*>& chain,
                             std::string label);

}  // namespace cookiedim
