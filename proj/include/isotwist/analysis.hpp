#pragma once

#include "isotwist/curves.hpp"

namespace isotwist {

// Exhaustive search for polynomial points (F, G) with A G^2 = f(F):
// enumerates F over F_q with deg F in [max(ceil(d/3), lo), min(d-2, hi)],
// F' != 0 and deg F = d mod 2, then solves for G by square-root extraction.
// Both (F, G) and (F, -G) are reported.  Result order is deterministic
// (degree, then coefficient encoding) regardless of the worker count.
std::vector<FPoint> search_integral_points(const Poly& a, const Poly& f,
                                           std::int64_t lo, std::int64_t hi,
                                           unsigned jobs = 1);

// The divisibility and degree-window facts that hold for every polynomial
// point with F' != 0 when deg A is odd and A squarefree.
struct GdfReport {
  bool g_divides_fprime;
  bool deg_lower;  // d <= 3 deg F
  bool deg_upper;  // deg F < d - 1
  std::int64_t deg_f, deg_a;
  bool all() const { return g_divides_fprime && deg_lower && deg_upper; }
};
GdfReport check_gdf(const Poly& a, const Poly& f, const FPoint& p);

// F - alpha_i = N_i S_i^2 per root alpha_i of f, with
// beta_k = (alpha_k - alpha_i)(alpha_k - alpha_j) / A'.
struct FactorStructure {
  std::array<elem, 3> roots;
  std::array<Poly, 3> n, s;
  std::array<elem, 3> beta;
  elem gamma;  // A', a nonzero constant by hypothesis
};

// The three equivalent smallness conditions for a polynomial point:
// (a) 2 deg F <= d - 1, (b) 2 deg G <= deg F - 1, (c) G^2 = beta F' for a
// constant beta.  Their equivalence is asserted.
struct EquivReport {
  bool cond_a, cond_b, cond_c;
  bool consistent;           // all three agree
  elem beta;                 // valid when cond_c
  std::optional<FactorStructure> fs;  // computed when the conditions hold
  bool beta_symmetric;       // beta_1 = beta_2 in the factor structure
  bool iso_arithmetic_progression;  // roots of f in arithmetic progression
};
EquivReport eqiv_conditions(const Poly& a, const Poly& f, const FPoint& p);

// The morphism (s, t) -> (F(t), s G(t)) from the superelliptic curve
// s^2 = A(t) to the constant curve y^2 = f(x).
struct GammaMap {
  RatFunc x;        // F
  RatFunc y_coeff;  // G, the point being (F, s G)
  bool verified;    // A G^2 = f(F)
};
GammaMap gamma_map(const Poly& a, const Poly& f, const FPoint& p);

// Rank of the span of the pullback coefficients Phi_k = beta_k G_k over F_q,
// where F_k' = beta_k G_k^2.  Requires y^2 = f(x) supersingular over F_q.
struct IndependenceReport {
  unsigned rank;
  bool independent;
  std::vector<Poly> phis;
};
IndependenceReport independence_certificate(const Poly& a, const Poly& f,
                                            const std::vector<FPoint>& points);

}  // namespace isotwist
