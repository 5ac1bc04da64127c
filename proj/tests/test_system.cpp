#include <cmath>
#include <vector>

#include "cookiedim/errors.hpp"
#include "cookiedim/scenarios.hpp"
#include "cookiedim/system.hpp"
#include "doctest.h"

using namespace cookiedim;

namespace {
ContractingMap aff(double a, double b) { return ContractingMap::affine(a, b); }
}  // namespace

TEST_CASE("cookie cutter accepts gapped branch layouts in any order") {
  CHECK_NOTHROW(CookieCutter({aff(1.0 / 3, 0.0), aff(1.0 / 3, 2.0 / 3)}));
  // branch order is free; only the image layout matters
  CHECK_NOTHROW(CookieCutter({aff(1.0 / 3, 2.0 / 3), aff(1.0 / 3, 0.0)}));
  CookieCutter F({aff(0.25, 0.0), aff(0.25, 0.75)}, "quarter");
  CHECK(F.branch_count() == 2);
  CHECK(F.label() == "quarter");
  CHECK(F.all_affine());
  auto img = F.branch_image(1);
  CHECK(img.first == doctest::Approx(0.75));
  CHECK(img.second == doctest::Approx(1.0));
}

TEST_CASE("cookie cutter rejects overlapping or touching branch images") {
  CHECK_THROWS_AS(CookieCutter({aff(0.5, 0.0), aff(0.5, 0.25)}),
                  InvalidSystemError);  // overlap
  CHECK_THROWS_AS(CookieCutter({aff(0.5, 0.0), aff(0.5, 0.5)}),
                  InvalidSystemError);  // touching endpoints
  CHECK_THROWS_AS(CookieCutter({}), InvalidSystemError);
  CHECK_THROWS_AS(SystemFamily({}), InvalidSystemError);
}

TEST_CASE("contraction profile closed forms for the thirds system") {
  ContractionProfile p = contraction_profile(scenarios::middle_thirds());
  CHECK(p.lambda == doctest::Approx(3.0));
  CHECK(p.bigL == doctest::Approx(3.0));
  CHECK(p.tau == doctest::Approx(1.0));
  CHECK(p.cF == doctest::Approx(0.0));
  CHECK(p.cKappa == doctest::Approx(0.0));
}

TEST_CASE("contraction profile of the mirror pair matches hand computation") {
  SystemFamily fam = scenarios::moebius_reflection_pair(0.001);
  REQUIRE(fam.size() == 2);
  ContractionProfile p = contraction_profile(fam);
  // the fractional-linear branch has derivative 1/1.001 at its fixed point 0
  CHECK(p.lambda == doctest::Approx(1.001).epsilon(1e-12));
  CHECK(p.bigL == doctest::Approx(400.0 / 1.001).epsilon(1e-12));
  CHECK(p.cF == doctest::Approx(2.0 * 18.999 / 1.001).epsilon(1e-12));
  // the 1/(1 - 1/lambda) amplification makes the last ulps diverge, so 1e-9
  CHECK(p.cKappa == doctest::Approx(p.cF / (1.0 - 1.0 / 1.001)).epsilon(1e-9));

  // mirror symmetry: each system alone carries the same profile
  ContractionProfile p0 = contraction_profile(fam.system(0));
  ContractionProfile p1 = contraction_profile(fam.system(1));
  CHECK(p0.lambda == doctest::Approx(p1.lambda).epsilon(1e-12));
  CHECK(p0.cKappa == doctest::Approx(p1.cKappa).epsilon(1e-9));
}

TEST_CASE("compose_word matches manual right-to-left composition") {
  SystemFamily fam = scenarios::thirds_and_quarter();
  std::vector<int> letters = {0, 1, 0};
  std::vector<int> word = {1, 0, 1};
  WordInterval iv = compose_word(fam, letters, word);

  // f_{c1,w1} o f_{c2,w2} o f_{c3,w3}([0,1]), innermost applied first
  auto apply = [&](double x) {
    for (int i = 2; i >= 0; --i) x = fam.system(letters[i]).branch(word[i])(x);
    return x;
  };
  CHECK(iv.left == doctest::Approx(apply(0.0)));
  CHECK(iv.right == doctest::Approx(apply(1.0)));
  CHECK(iv.length == doctest::Approx(iv.right - iv.left).epsilon(1e-12));
  CHECK(iv.length == doctest::Approx(1.0 / 36.0).epsilon(1e-12));
  CHECK(iv.address.letters == letters);
  CHECK(iv.address.word == word);
}

TEST_CASE("compose_systems enumerates branch products lexicographically") {
  CookieCutter A = scenarios::middle_thirds();
  CookieCutter B = scenarios::quarter_system();
  CookieCutter AB = compose_systems({&A, &B}, "AB");
  CHECK(AB.label() == "AB");
  CHECK(AB.branch_count() == 4);
  CHECK(AB.all_affine());

  // branch (i0,i1) = A_i0 o B_i1, ordered with i1 fastest
  int k = 0;
  for (int i0 = 0; i0 < 2; ++i0)
    for (int i1 = 0; i1 < 2; ++i1) {
      auto img = AB.branch_image(k++);
      double lo = A.branch(i0)(B.branch(i1)(0.0));
      double hi = A.branch(i0)(B.branch(i1)(1.0));
      CHECK(img.first == doctest::Approx(std::min(lo, hi)));
      CHECK(img.second == doctest::Approx(std::max(lo, hi)));
    }
  CHECK(AB.branch_image(0).first == doctest::Approx(0.0));
  CHECK(AB.branch_image(0).second == doctest::Approx(1.0 / 12.0));

  // composing the mirror pair keeps every product a valid contraction
  SystemFamily pair = scenarios::moebius_reflection_pair(0.001);
  CookieCutter F01 =
      compose_systems({&pair.system(0), &pair.system(1)}, "F0*F1");
  CHECK(F01.branch_count() == 4);
  CHECK_FALSE(F01.all_affine());
}
