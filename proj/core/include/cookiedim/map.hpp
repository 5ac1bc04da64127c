#pragma once

#include <string>
#include <vector>

namespace cookiedim {

struct AffineCoeffs {
  double a = 0.0;  // x -> a*x + b
  double b = 0.0;
};

// Full fractional-linear form x -> (a*x + b) / (c*x + d).  The public
// three-coefficient constructor p*x/(q*x + r) covers the common case, but the
// reflected branch 1 - f(1-x) of such a map needs the full form, so that is
// what we store.
struct MoebiusCoeffs {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;
};

class ContractingMap {
 public:
  enum class Kind { Affine, Moebius };

  static ContractingMap affine(double a, double b);
  static ContractingMap moebius(double p, double q, double r);  // p*x/(q*x+r)
  static ContractingMap moebius_full(double a, double b, double c, double d);
  // parts applied right to left: composite({f, g})(x) = f(g(x)); the chain
  // folds into one affine or fractional-linear map by multiplying the
  // coefficient matrices, so every closed form below applies to it
  static ContractingMap composite(std::vector<ContractingMap> parts);

  Kind kind() const { return kind_; }
  const AffineCoeffs& affine_coeffs() const;
  const MoebiusCoeffs& moebius_coeffs() const;

  // value and derivative; x must lie in [0,1]
  double operator()(double x) const;
  double derivative(double x) const;

  // image of [lo,hi] with the length carried multiplicatively; for deep
  // words hi-lo underflows to zero in doubles while the product of
  // per-step ratios keeps full relative precision
  void map_interval(double& lo, double& hi, double& len) const;

  std::string describe() const;

 private:
  ContractingMap() = default;

  Kind kind_ = Kind::Affine;
  AffineCoeffs aff_;
  MoebiusCoeffs moe_;
};

// unique Moebius map g with g(x0) = y0, g'(x0) = d0, g(x1) = y1
ContractingMap moebius_from_constraints(double x0, double y0, double d0,
                                        double x1, double y1);

// inverse restricted to m([0,1]); affine and Moebius only
ContractingMap invert_on_image(const ContractingMap& m);

// x -> 1 - f(1 - x), staying in the same variant class
ContractingMap reflect(const ContractingMap& m);

// oscillation of log|Df| over [left,right]; closed form in both variants
double distortion(const ContractingMap& m, double left, double right);

// |Df| bounds over [0,1], read off at the endpoints (|Df| is monotone for
// both variants once the pole lies outside)
struct DerivRange {
  double inf_abs = 0.0;
  double sup_abs = 0.0;
};
DerivRange derivative_range(const ContractingMap& m);

// Lipschitz constant of log|Df| on [0,1]: 0 for affine, 2|c|/min|c*x+d|
// for Moebius
double log_deriv_lipschitz(const ContractingMap& m);

// invariants required of an IFS branch: endpoints inside [0,1], strict
// contraction 0 < |Df| < 1, Moebius pole outside [0,1]
void validate_branch(const ContractingMap& m);

}  // namespace cookiedim
