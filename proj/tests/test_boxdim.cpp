#include <cmath>
#include <cstdint>
#include <vector>

#include "cookiedim/boxdim.hpp"
#include "cookiedim/errors.hpp"
#include "cookiedim/scenarios.hpp"
#include "doctest.h"

using namespace cookiedim;

namespace {
WordInterval iv(double l, double r) {
  WordInterval w;
  w.left = l;
  w.right = r;
  w.length = r - l;
  return w;
}
}  // namespace

TEST_CASE("cover_count uses half-open grid boxes") {
  // [0,1] at eps = 1/4: boxes 0..3 plus the box holding the point 1.0
  CoverCount c = cover_count({iv(0.0, 1.0)}, 0.25);
  CHECK(c.count == 5);
  CHECK(c.epsilon == doctest::Approx(0.25));

  CHECK(cover_count({}, 0.25).count == 0);

  // two intervals sharing a middle box merge in the sweep
  CoverCount merged = cover_count({iv(0.0, 0.1), iv(0.1001, 0.2)}, 0.1);
  CHECK(merged.count == 3);

  // disjoint boxes accumulate
  CoverCount apart = cover_count({iv(0.0, 0.05), iv(0.5, 0.55)}, 0.1);
  CHECK(apart.count == 2);  // box 0 and box 5

  CHECK_THROWS_AS(cover_count({iv(0.0, 1.0)}, 0.0), DomainError);
  CHECK_THROWS_AS(cover_count({iv(0.0, 1.0)}, 1.5), DomainError);
}

TEST_CASE("quarter system counts are bit-exact powers of two") {
  BoxRegression reg;
  std::vector<double> eps;
  for (int k = 2; k <= 7; ++k) eps.push_back(std::pow(4.0, -k));
  reg = box_dimension_regression(scenarios::quarter_system(), 10, eps);
  REQUIRE(reg.points.size() == 6);
  for (int i = 0; i < 6; ++i) {
    int k = i + 2;
    // dyadic endpoints make every count exact: 2^k clusters, each two boxes
    CHECK(reg.points[i].count == (std::int64_t{1} << (k + 1)));
  }
  CHECK(reg.estimate.value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(reg.estimate.kind == DimKind::box_counting);
  CHECK(reg.estimate.error_radius > 0.0);
}

TEST_CASE("thirds system slope approaches log2/log3") {
  std::vector<double> eps;
  for (int k = 2; k <= 8; ++k) eps.push_back(std::pow(3.0, -k));
  BoxRegression reg =
      box_dimension_regression(scenarios::middle_thirds(), 10, eps);
  CHECK(std::fabs(reg.estimate.value - std::log(2.0) / std::log(3.0)) <= 0.02);
  // residual spread plus the 1/log(1/eps_min) tail term
  CHECK(reg.estimate.error_radius >= 1.0 / std::log(std::pow(3.0, 8.0)));
}

TEST_CASE("driven schedules refuse scales below the resolution floor") {
  CookieCutter F = scenarios::quarter_system();
  // eps below bigL^-depth cannot be resolved by depth-n intervals
  CHECK_THROWS_AS(
      box_dimension_regression(F, 3, {0.25, std::pow(4.0, -5.0)}),
      DomainError);
  // fewer than two scales
  CHECK_THROWS_AS(box_dimension_regression(F, 5, {0.25}), DomainError);
  // schedule must decrease strictly
  CHECK_THROWS_AS(box_dimension_regression(F, 5, {0.25, 0.25}), DomainError);
  // eps outside (0, 1]
  CHECK_THROWS_AS(box_dimension_regression(F, 5, {1.5, 0.25}), DomainError);
}

TEST_CASE("default schedule is geometric and ends at bigL^(2-depth)") {
  std::vector<double> eps = default_eps_schedule(3.0, 10);
  REQUIRE(eps.size() == 6);
  CHECK(eps.front() == doctest::Approx(std::pow(3.0, -3.0)));
  CHECK(eps.back() == doctest::Approx(std::pow(3.0, -8.0)));
  for (std::size_t i = 1; i < eps.size(); ++i) {
    CHECK(eps[i] < eps[i - 1]);
    CHECK(eps[i - 1] / eps[i] == doctest::Approx(3.0));
  }
  // shallow depth clips the schedule instead of crossing eps = 1
  std::vector<double> shallow = default_eps_schedule(3.0, 4);
  CHECK(shallow.front() == doctest::Approx(std::pow(3.0, -1.0)));
  CHECK(shallow.back() == doctest::Approx(std::pow(3.0, -2.0)));
}

TEST_CASE("driven box regression accepts a family plus sequence") {
  SystemFamily fam = scenarios::thirds_and_quarter();
  SymbolSequence seq = block_sequence({{{0}, 4}, {{1}, 4}}, 2);
  std::vector<double> eps;
  for (int k = 2; k <= 5; ++k) eps.push_back(std::pow(4.0, -k));
  BoxRegression reg = box_dimension_regression(fam, seq, 8, eps);
  REQUIRE(reg.points.size() == 4);
  // counts shrink no faster than the scale ratio allows
  for (std::size_t i = 1; i < reg.points.size(); ++i)
    CHECK(reg.points[i].count >= reg.points[i - 1].count);
  CHECK(reg.estimate.value > 0.0);
  CHECK(reg.estimate.value < 1.0);
}
