#include "cookiedim/map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cookiedim/errors.hpp"

namespace cookiedim {

namespace {

constexpr double kDomainTol = 1e-9;

void check_domain(double x) {
  if (!(x >= -kDomainTol && x <= 1.0 + kDomainTol))
    throw DomainError("map evaluated outside [0,1]: x=" + std::to_string(x));
}

double det(const MoebiusCoeffs& m) { return m.a * m.d - m.b * m.c; }

}  // namespace

ContractingMap ContractingMap::affine(double a, double b) {
  ContractingMap m;
  m.kind_ = Kind::Affine;
  m.aff_ = {a, b};
  return m;
}

ContractingMap ContractingMap::moebius(double p, double q, double r) {
  return moebius_full(p, 0.0, q, r);
}

ContractingMap ContractingMap::moebius_full(double a, double b, double c,
                                            double d) {
  MoebiusCoeffs co{a, b, c, d};
  if (det(co) == 0.0)
    throw InvalidSystemError("degenerate Moebius map: zero determinant");
  ContractingMap m;
  m.kind_ = Kind::Moebius;
  m.moe_ = co;
  return m;
}

ContractingMap ContractingMap::composite(std::vector<ContractingMap> parts) {
  if (parts.empty())
    throw InvalidSystemError("composite map needs at least one part");
  // fractional-linear maps compose by coefficient-matrix multiplication,
  // with affine parts embedded as [[a,b],[0,1]]; renormalizing each step
  // keeps deep chains away from overflow while leaving the map unchanged
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
  bool all_affine = true;
  for (const ContractingMap& p : parts) {
    double pa, pb, pc, pd;
    if (p.kind_ == Kind::Affine) {
      pa = p.aff_.a;
      pb = p.aff_.b;
      pc = 0.0;
      pd = 1.0;
    } else {
      pa = p.moe_.a;
      pb = p.moe_.b;
      pc = p.moe_.c;
      pd = p.moe_.d;
      all_affine = false;
    }
    double na = a * pa + b * pc;
    double nb = a * pb + b * pd;
    double nc = c * pa + d * pc;
    double nd = c * pb + d * pd;
    double scale = std::max({std::fabs(na), std::fabs(nb), std::fabs(nc),
                             std::fabs(nd)});
    if (!(scale > 0.0))
      throw InvalidSystemError("degenerate composite: zero coefficient matrix");
    a = na / scale;
    b = nb / scale;
    c = nc / scale;
    d = nd / scale;
  }
  // an affine chain keeps c identically zero, so the quotient is affine
  if (all_affine) return affine(a / d, b / d);
  return moebius_full(a, b, c, d);
}

const AffineCoeffs& ContractingMap::affine_coeffs() const {
  if (kind_ != Kind::Affine)
    throw UnsupportedVariantError("not an affine map");
  return aff_;
}

const MoebiusCoeffs& ContractingMap::moebius_coeffs() const {
  if (kind_ != Kind::Moebius)
    throw UnsupportedVariantError("not a Moebius map");
  return moe_;
}

double ContractingMap::operator()(double x) const {
  check_domain(x);
  if (kind_ == Kind::Affine) return aff_.a * x + aff_.b;
  return (moe_.a * x + moe_.b) / (moe_.c * x + moe_.d);
}

double ContractingMap::derivative(double x) const {
  check_domain(x);
  if (kind_ == Kind::Affine) return aff_.a;
  double den = moe_.c * x + moe_.d;
  return det(moe_) / (den * den);
}

void ContractingMap::map_interval(double& lo, double& hi, double& len) const {
  // the tracked length saturates at the smallest normal instead of flushing
  // to zero, so log(len) stays finite at any depth
  constexpr double kLenFloor = std::numeric_limits<double>::min();
  if (kind_ == Kind::Affine) {
    double x0 = aff_.a * lo + aff_.b;
    double x1 = aff_.a * hi + aff_.b;
    lo = std::min(x0, x1);
    hi = std::max(x0, x1);
    len = std::max(len * std::fabs(aff_.a), kLenFloor);
    return;
  }
  double d0 = moe_.c * lo + moe_.d;
  double d1 = moe_.c * hi + moe_.d;
  // exact difference f(hi)-f(lo) = det*(hi-lo)/(d0*d1), free of the
  // catastrophic cancellation of subtracting the two images
  len = std::max(len * std::fabs(det(moe_)) / (std::fabs(d0) * std::fabs(d1)),
                 kLenFloor);
  double x0 = (moe_.a * lo + moe_.b) / d0;
  double x1 = (moe_.a * hi + moe_.b) / d1;
  lo = std::min(x0, x1);
  hi = std::max(x0, x1);
}

std::string ContractingMap::describe() const {
  std::ostringstream os;
  if (kind_ == Kind::Affine) {
    os << aff_.a << "*x + " << aff_.b;
  } else {
    os << "(" << moe_.a << "*x + " << moe_.b << ")/(" << moe_.c << "*x + "
       << moe_.d << ")";
  }
  return os.str();
}

ContractingMap moebius_from_constraints(double x0, double y0, double d0,
                                        double x1, double y1) {
  if (x0 == x1)
    throw ConfigError("moebius_from_constraints: x0 and x1 coincide");
  if (y0 == y1)
    throw ConfigError(
        "moebius_from_constraints: y0 = y1 admits no injective Moebius map");
  // normalize c*x0 + d = 1; then the determinant condition is linear in c
  double slope = (y1 - y0) / (x1 - x0);
  double c = (d0 - slope) / (y1 - y0);
  double a = slope + y1 * c;
  double b = y0 - a * x0;
  double d = 1.0 - c * x0;
  ContractingMap g = ContractingMap::moebius_full(a, b, c, d);
  if (c != 0.0) {
    double pole = -d / c;
    double lo = std::min(x0, x1), hi = std::max(x0, x1);
    if (pole >= lo && pole <= hi)
      throw ConfigError("moebius_from_constraints: pole inside [x0,x1]");
  }
  return g;
}

ContractingMap invert_on_image(const ContractingMap& m) {
  if (m.kind() == ContractingMap::Kind::Affine) {
    const auto& co = m.affine_coeffs();
    if (co.a == 0.0)
      throw InvalidSystemError("cannot invert a constant affine map");
    return ContractingMap::affine(1.0 / co.a, -co.b / co.a);
  }
  const auto& co = m.moebius_coeffs();
  return ContractingMap::moebius_full(co.d, -co.b, -co.c, co.a);
}

ContractingMap reflect(const ContractingMap& m) {
  if (m.kind() == ContractingMap::Kind::Affine) {
    const auto& co = m.affine_coeffs();
    return ContractingMap::affine(co.a, 1.0 - co.a - co.b);
  }
  // 1 - f(1-x) for f = (a x + b)/(c x + d); stays fractional-linear
  const auto& co = m.moebius_coeffs();
  return ContractingMap::moebius_full(co.a - co.c,
                                      co.c + co.d - co.a - co.b, -co.c,
                                      co.c + co.d);
}

double distortion(const ContractingMap& m, double left, double right) {
  if (!(0.0 <= left && left <= right && right <= 1.0 + 1e-12))
    throw DomainError("distortion: [left,right] must lie inside [0,1]");
  if (m.kind() == ContractingMap::Kind::Affine) return 0.0;
  const auto& co = m.moebius_coeffs();
  // log|Df| = log|det| - 2 log|c x + d| is monotone on the branch
  double dl = std::fabs(co.c * left + co.d);
  double dr = std::fabs(co.c * right + co.d);
  return 2.0 * std::fabs(std::log(dr) - std::log(dl));
}

DerivRange derivative_range(const ContractingMap& m) {
  DerivRange r;
  if (m.kind() == ContractingMap::Kind::Affine) {
    r.inf_abs = r.sup_abs = std::fabs(m.affine_coeffs().a);
    return r;
  }
  // |Df| = |det|/(c x + d)^2 is monotone wherever the pole is outside
  double v0 = std::fabs(m.derivative(0.0));
  double v1 = std::fabs(m.derivative(1.0));
  r.inf_abs = std::min(v0, v1);
  r.sup_abs = std::max(v0, v1);
  return r;
}

double log_deriv_lipschitz(const ContractingMap& m) {
  if (m.kind() == ContractingMap::Kind::Affine) return 0.0;
  const auto& co = m.moebius_coeffs();
  if (co.c == 0.0) return 0.0;
  double d0 = co.d;
  double d1 = co.c + co.d;
  if (d0 * d1 <= 0.0) throw InvalidSystemError("Moebius pole inside [0,1]");
  double mn = std::min(std::fabs(d0), std::fabs(d1));
  return 2.0 * std::fabs(co.c) / mn;
}

void validate_branch(const ContractingMap& m) {
  double f0 = m(0.0), f1 = m(1.0);
  if (!(f0 >= -1e-12 && f0 <= 1.0 + 1e-12 && f1 >= -1e-12 &&
        f1 <= 1.0 + 1e-12))
    throw InvalidSystemError("branch image leaves [0,1]: " + m.describe());
  if (m.kind() == ContractingMap::Kind::Moebius) {
    const auto& co = m.moebius_coeffs();
    if (co.c != 0.0) {
      double pole = -co.d / co.c;
      if (pole >= 0.0 && pole <= 1.0)
        throw InvalidSystemError("Moebius pole inside [0,1]: " + m.describe());
    }
  }
  DerivRange r = derivative_range(m);
  if (!(r.inf_abs > 0.0))
    throw InvalidSystemError("branch is not a diffeomorphism: " +
                             m.describe());
  if (!(r.sup_abs < 1.0))
    throw InvalidSystemError("branch is not a strict contraction: " +
                             m.describe());
}

}  // namespace cookiedim
