#pragma once

#include <optional>

#include "isotwist/poly.hpp"

namespace isotwist {

enum class Family { quadratic, cubic, quartic, sextic };

std::string family_name(Family fam);

// Point with coordinates in F_q(t), or the point at infinity.
class FPoint {
public:
  static FPoint infinity() { return FPoint(); }
  FPoint(RatFunc x, RatFunc y) : inf_(false), x_(std::move(x)), y_(std::move(y)) {}

  bool is_infinity() const { return inf_; }
  const RatFunc& x() const { return x_; }
  const RatFunc& y() const { return y_; }
  // both coordinates polynomial
  bool is_integral() const { return inf_ || (x_.is_poly() && y_.is_poly()); }
  bool is_constant() const {
    return !inf_ && x_.num().is_constant() && x_.is_poly() && y_.num().is_constant() && y_.is_poly();
  }
  bool operator==(const FPoint& o) const;
  bool operator!=(const FPoint& o) const { return !(*this == o); }

private:
  FPoint() : inf_(true) {}
  bool inf_ = false;
  RatFunc x_, y_;
};

// Generalized Weierstrass model Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6
// over F_q(t), together with the substitution X = sx*x, Y = sy*y from a
// family model.
struct GWModel {
  RatFunc a1, a2, a3, a4, a6;
  RatFunc sx, sy;

  bool contains(const FPoint& p) const;
  FPoint to_model(const FPoint& p) const;    // family coords -> GW coords
  FPoint from_model(const FPoint& p) const;  // GW coords -> family coords
};

// One of the four twist families over F_q(t):
//   quadratic: A(t) y^2 = f(x), f a monic cubic over F_q
//   cubic:     y^2 - y = A(t) x^3
//   quartic:   y^2 = x^3 - D(t) x
//   sextic:    y^2 = sign*x^3 + D(t)
class TwistCurve {
public:
  static TwistCurve quadratic(Poly a, Poly f);
  static TwistCurve cubic(Poly a);
  static TwistCurve quartic(Poly d);
  static TwistCurve sextic(Poly d, int sign);

  Family family() const { return fam_; }
  const FieldPtr& field() const { return a_.field(); }
  const Poly& a() const { return a_; }  // A(t) or D(t)
  const Poly& f() const { return f_; }  // cubic in x (quadratic family)
  int sign() const { return sign_; }

  bool contains(const FPoint& p) const;
  GWModel to_weierstrass() const;

  // Descended Frobenius F^e on points: e = 1 for quadratic, 2 otherwise.
  unsigned descent_exponent() const { return fam_ == Family::quadratic ? 1 : 2; }
  FPoint frobenius_step(const FPoint& p) const;
  // Inverse image of p under frobenius_step, if one exists on the curve.
  std::optional<FPoint> frobenius_preimage(const FPoint& p) const;

  bool is_separable(const FPoint& p) const;
  // Separable representative under the curve, and minimal i with
  // frobenius_step^i(root) = p.
  std::pair<FPoint, unsigned> orbit_root(const FPoint& p) const;

private:
  TwistCurve(Family fam, Poly a, Poly f, int sign)
      : fam_(fam), a_(std::move(a)), f_(std::move(f)), sign_(sign) {}
  void check_congruence() const;

  Family fam_;
  Poly a_;
  Poly f_;
  int sign_ = 1;
};

// Chord-tangent addition with the full a1..a6 formulas (valid in char 2, 3).
FPoint point_add(const GWModel& m, const FPoint& p, const FPoint& q);
FPoint point_neg(const GWModel& m, const FPoint& p);

// Supersingularity of the constant curve y^2 = f(x) (odd q) or
// y^2 - y = f(x) (q even) over the coefficient field of f: counts points
// and tests trace = q + 1 - N = 0 mod p.
bool is_supersingular(const Poly& f);

}  // namespace isotwist
