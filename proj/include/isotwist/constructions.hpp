#pragma once

#include "isotwist/additive.hpp"
#include "isotwist/curves.hpp"

namespace isotwist {

// A factory output: curve, point, and the facts the factory claims about it,
// all re-verified at construction time.
struct ConstructedPoint {
  TwistCurve curve;
  FPoint point;
  bool separable;
  std::int64_t deg_x;  // degree of the x-coordinate polynomial
  std::int64_t deg_y;
};

// Q_k = (B^{(q^k-1)/2}, B^{(q^k-3)/4}) with B the expanded trace polynomial
// T^n_k, on (t^{q^n} - t) y^2 = x^3 - x.  Needs q = 3 mod 4, k odd, k | n.
ConstructedPoint main_point_quadratic(const FieldPtr& f, std::uint64_t n, std::uint64_t k);

// S_k = (B^{(q^k-2)/3}, B^{q^k-1}) on y^2 - y = (t^{q^n} - t) x^3.
// Needs q = 2 mod 3, k odd, k | n.
ConstructedPoint main_point_cubic(const FieldPtr& f, std::uint64_t n, std::uint64_t k);

// The Q_k construction for a general A0 with (t^k - 1) | A0, on
// A0(F)(t) y^2 = x^3 - x.  Needs q = 3 mod 4, k odd.
ConstructedPoint general_point_quadratic(const Poly& a0, std::uint64_t k);

// Q(t + a) for a in F_q (same curve) and Q(at) for a in F_q^*
// (on the curve with A replaced by A(at)).
struct TranslatedScaled {
  std::vector<ConstructedPoint> translates;
  std::vector<ConstructedPoint> scales;
};
TranslatedScaled translated_scaled_points(const TwistCurve& c, const FPoint& q);

// 2x2 matrix over F_q with M^t M = I.
struct OrthMatrix {
  elem a, b, c, d;
};

// All of O(2, F_q), lexicographic in the (a, b, c, d) encodings.
std::vector<OrthMatrix> orthogonal_group(const FieldPtr& f);

// (aX+bY)^{q^k+1} + (cX+dY)^{q^k+1} = X^{q^k+1} + Y^{q^k+1} in F_q[X, Y],
// expanded through Frobenius linearity of the q^k-power factor.
bool hermitian_identity_check(const FieldPtr& f, const OrthMatrix& m, std::uint64_t k);

// The tau(n) points of the quartic/sextic twists by t^{q^n + 1} + 1, one per
// divisor k | n, built from the first orthogonal matrix with cd != 0.
struct TauPoints {
  std::vector<ConstructedPoint> points;
  std::string status;  // empty on success
};
TauPoints tau_points(const FieldPtr& f, std::uint64_t n, Family kind);

}  // namespace isotwist
