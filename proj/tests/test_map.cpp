#include <cmath>
#include <vector>

#include "cookiedim/errors.hpp"
#include "cookiedim/map.hpp"
#include "doctest.h"

using namespace cookiedim;

TEST_CASE("affine map evaluates, differentiates, and reports coefficients") {
  ContractingMap f = ContractingMap::affine(0.25, 0.5);
  CHECK(f(0.0) == doctest::Approx(0.5));
  CHECK(f(1.0) == doctest::Approx(0.75));
  CHECK(f.derivative(0.3) == doctest::Approx(0.25));
  CHECK(f.kind() == ContractingMap::Kind::Affine);
  CHECK(f.affine_coeffs().a == doctest::Approx(0.25));
  CHECK_THROWS_AS(f(1.5), DomainError);
  CHECK_THROWS_AS(f(-0.1), DomainError);
}

TEST_CASE("moebius three-coefficient form p*x/(q*x+r)") {
  ContractingMap f = ContractingMap::moebius(1.0, 18.999, 1.001);
  CHECK(f(0.0) == doctest::Approx(0.0));
  CHECK(f(1.0) == doctest::Approx(0.05));
  CHECK(f.derivative(0.0) == doctest::Approx(1.0 / 1.001));
  // Df = p*r/(q*x+r)^2
  CHECK(f.derivative(1.0) == doctest::Approx(1.001 / 400.0));
}

TEST_CASE("moebius_from_constraints fits value, derivative, value") {
  // g(0)=0, g'(0)=2, g(1/2)=1 forces the affine map 2x
  ContractingMap g = moebius_from_constraints(0.0, 0.0, 2.0, 0.5, 1.0);
  CHECK(g(0.25) == doctest::Approx(0.5));
  CHECK(g(0.5) == doctest::Approx(1.0));
  CHECK(g.derivative(0.4) == doctest::Approx(2.0));

  // g(0)=0, g'(0)=2, g(1/2)=1/2 forces 2x/(1+2x)
  ContractingMap h = moebius_from_constraints(0.0, 0.0, 2.0, 0.5, 0.5);
  CHECK(h(0.0) == doctest::Approx(0.0));
  CHECK(h(0.5) == doctest::Approx(0.5));
  CHECK(h.derivative(0.0) == doctest::Approx(2.0));
  CHECK(h(0.25) == doctest::Approx(1.0 / 3.0));

  // a generic fit keeps all three constraints
  ContractingMap m = moebius_from_constraints(0.1, 0.2, 0.5, 0.9, 0.6);
  CHECK(m(0.1) == doctest::Approx(0.2));
  CHECK(m(0.9) == doctest::Approx(0.6));
  CHECK(m.derivative(0.1) == doctest::Approx(0.5));
}

TEST_CASE("invert_on_image round trips affine and moebius maps") {
  ContractingMap a = ContractingMap::affine(0.25, 0.5);
  ContractingMap ainv = invert_on_image(a);
  for (double x : {0.0, 0.3, 0.7, 1.0})
    CHECK(ainv(a(x)) == doctest::Approx(x));

  // expanding germ at 0 with derivative 1.001, sending 0.05 to 1
  ContractingMap g = moebius_from_constraints(0.0, 0.0, 1.001, 0.05, 1.0);
  ContractingMap f = invert_on_image(g);
  CHECK(f.kind() == ContractingMap::Kind::Moebius);
  CHECK(f(0.0) == doctest::Approx(0.0));
  CHECK(f(1.0) == doctest::Approx(0.05));
  CHECK(f.derivative(0.0) == doctest::Approx(1.0 / 1.001));
  for (double y : {0.0, 0.01, 0.03, 0.05})
    CHECK(f(g(y)) == doctest::Approx(y));
  for (double x : {0.0, 0.25, 0.5, 1.0})
    CHECK(g(f(x)) == doctest::Approx(x));

  // folded compositions stay invertible
  ContractingMap comp = ContractingMap::composite({a, f});
  ContractingMap cinv = invert_on_image(comp);
  for (double x : {0.0, 0.4, 1.0})
    CHECK(cinv(comp(x)) == doctest::Approx(x));
}

TEST_CASE("composite folds chains into a single closed-form map") {
  ContractingMap a1 = ContractingMap::affine(0.5, 0.25);
  ContractingMap a2 = ContractingMap::affine(0.3, 0.1);
  ContractingMap aa = ContractingMap::composite({a1, a2});
  // a1(a2(x)) = 0.5*(0.3x + 0.1) + 0.25
  CHECK(aa.kind() == ContractingMap::Kind::Affine);
  CHECK(aa.affine_coeffs().a == doctest::Approx(0.15));
  CHECK(aa.affine_coeffs().b == doctest::Approx(0.3));

  ContractingMap f = ContractingMap::moebius(1.0, 18.999, 1.001);
  ContractingMap chain = ContractingMap::composite({f, a1, f, a2});
  CHECK(chain.kind() == ContractingMap::Kind::Moebius);
  for (double x : {0.0, 0.3, 0.6, 1.0}) {
    double manual = f(a1(f(a2(x))));
    CHECK(chain(x) == doctest::Approx(manual).epsilon(1e-12));
    double dmanual = f.derivative(a1(f(a2(x)))) * a1.derivative(0.0) *
                     f.derivative(a2(x)) * a2.derivative(0.0);
    CHECK(chain.derivative(x) == doctest::Approx(dmanual).epsilon(1e-12));
  }

  ContractingMap single = ContractingMap::composite({f});
  for (double x : {0.0, 0.5, 1.0})
    CHECK(single(x) == doctest::Approx(f(x)).epsilon(1e-12));

  CHECK_THROWS_AS(ContractingMap::composite({}), InvalidSystemError);
}

TEST_CASE("reflect conjugates by x -> 1-x and stays in the variant class") {
  ContractingMap a = ContractingMap::affine(0.3, 0.1);
  ContractingMap m = ContractingMap::moebius(1.0, 2.0, 3.0);
  for (const ContractingMap& f : {a, m}) {
    ContractingMap r = reflect(f);
    CHECK(r.kind() == f.kind());
    ContractingMap rr = reflect(r);
    for (double x : {0.0, 0.2, 0.5, 0.8, 1.0}) {
      CHECK(r(x) == doctest::Approx(1.0 - f(1.0 - x)));
      CHECK(rr(x) == doctest::Approx(f(x)));
      CHECK(r.derivative(x) == doctest::Approx(f.derivative(1.0 - x)));
    }
  }
}

TEST_CASE("map_interval tracks length multiplicatively under deep composites") {
  ContractingMap f = ContractingMap::moebius(1.0, 1.0, 3.0);  // x/(x+3)
  ContractingMap g = ContractingMap::affine(0.5, 0.5);
  double lo = 0.0, hi = 1.0, len = 1.0;
  for (int i = 0; i < 20; ++i) {
    (i % 2 == 0 ? f : g).map_interval(lo, hi, len);
    CHECK(len == doctest::Approx(hi - lo).epsilon(1e-9));
    CHECK(len > 0.0);
  }
  // below ~1e-308 the endpoint difference underflows but len must not
  for (int i = 0; i < 4000; ++i) g.map_interval(lo, hi, len);
  CHECK(len > 0.0);
  CHECK(std::isfinite(std::log(len)));
}

TEST_CASE("derivative_range reads exact bounds off the endpoints") {
  DerivRange ra = derivative_range(ContractingMap::affine(-0.4, 0.9));
  CHECK(ra.inf_abs == doctest::Approx(0.4));
  CHECK(ra.sup_abs == doctest::Approx(0.4));

  // x/(18.999x + 1.001): |Df| decreasing from 1/1.001 to 1.001/400
  ContractingMap f = ContractingMap::moebius(1.0, 18.999, 1.001);
  DerivRange rm = derivative_range(f);
  CHECK(rm.sup_abs == doctest::Approx(1.0 / 1.001));
  CHECK(rm.inf_abs == doctest::Approx(1.001 / 400.0));

  // the composition folds, so the bounds come from the folded map's endpoints
  ContractingMap comp =
      ContractingMap::composite({f, ContractingMap::affine(0.5, 0.25)});
  CHECK(comp.kind() == ContractingMap::Kind::Moebius);
  DerivRange rc = derivative_range(comp);
  CHECK(rc.sup_abs == doctest::Approx(std::fabs(comp.derivative(0.0))));
  CHECK(rc.inf_abs == doctest::Approx(std::fabs(comp.derivative(1.0))));
  CHECK(rc.sup_abs < 0.5 / 1.001 + 1e-12);
  CHECK(rc.inf_abs > 0.5 * 1.001 / 400.0 - 1e-12);
}

TEST_CASE("distortion vanishes for affine maps and is exact for moebius") {
  CHECK(distortion(ContractingMap::affine(0.5, 0.1), 0.0, 1.0) ==
        doctest::Approx(0.0));
  ContractingMap f = ContractingMap::moebius(1.0, 2.0, 3.0);
  double expected = std::fabs(std::log(std::fabs(f.derivative(0.2))) -
                              std::log(std::fabs(f.derivative(0.8))));
  CHECK(distortion(f, 0.2, 0.8) == doctest::Approx(expected));
}

TEST_CASE("log_deriv_lipschitz closed forms") {
  CHECK(log_deriv_lipschitz(ContractingMap::affine(0.5, 0.0)) ==
        doctest::Approx(0.0));
  // 2|c| / min|cx+d| with the minimum at x=0 here
  ContractingMap f = ContractingMap::moebius(1.0, 18.999, 1.001);
  CHECK(log_deriv_lipschitz(f) == doctest::Approx(2.0 * 18.999 / 1.001));
}

TEST_CASE("validate_branch enforces contraction, range, and pole location") {
  CHECK_NOTHROW(validate_branch(ContractingMap::affine(1.0 / 3.0, 0.0)));
  CHECK_NOTHROW(validate_branch(ContractingMap::moebius(1.0, 18.999, 1.001)));
  // |Df| = 1 is not a strict contraction
  CHECK_THROWS_AS(validate_branch(ContractingMap::affine(1.0, 0.0)),
                  InvalidSystemError);
  // degenerate derivative
  CHECK_THROWS_AS(validate_branch(ContractingMap::affine(0.0, 0.2)),
                  InvalidSystemError);
  // image [0.7, 1.2] leaves [0,1]
  CHECK_THROWS_AS(validate_branch(ContractingMap::affine(0.5, 0.7)),
                  InvalidSystemError);
  // pole at x = 1/2
  CHECK_THROWS_AS(validate_branch(ContractingMap::moebius_full(1.0, 0.0, 2.0, -1.0)),
                  InvalidSystemError);
}
