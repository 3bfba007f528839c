#pragma once

#include <array>
#include <optional>

#include "isotwist/curves.hpp"

namespace isotwist {

using IMat4 = std::array<std::array<std::int64_t, 4>, 4>;

// Four-monomial surface  sum_i c_i prod_j x_j^{a_ij} = 0  in P^3, with
// integer exponent matrix invertible over Q.
struct DelsarteSurface {
  FieldPtr field;
  IMat4 a;
  std::array<elem, 4> c;
};

// Coordinate-wise monomial map (u_j) -> (prod_j u_j^{b_ij}).
struct MonomialMap {
  IMat4 b;
};

// Parametric curve in P^3: four coordinates in F_q(t), not all zero,
// defined up to a common Laurent-monomial factor.
using ParamCurve = std::array<RatFunc, 4>;

// Least positive d with d * A^{-1} * C integral, and that map.
// The returned map satisfies A * B = d * C exactly.
std::pair<std::int64_t, MonomialMap> fermat_cover(const IMat4& a, const IMat4& c);

IMat4 identity_mat4();
IMat4 diag_mat4(std::int64_t d0, std::int64_t d1, std::int64_t d2, std::int64_t d3);

// Applies the monomial map coordinate-wise; errors when a negative exponent
// meets a zero coordinate.
ParamCurve apply_map(const FieldPtr& f, const MonomialMap& m, const ParamCurve& g);

// Clears a common power of t so every coordinate is polynomial and some
// coordinate has a nonzero constant term.  Requires Laurent coordinates
// (denominators are powers of t).
ParamCurve normalize_projective(const ParamCurve& g);

bool same_projective_class(const ParamCurve& g, const ParamCurve& h);

// Symbolic membership: substitutes g into the defining form and checks
// identical vanishing in F_q(t).
bool on_surface(const DelsarteSurface& s, const ParamCurve& g);

// Multisection ([X:Y:Z], t^e) -> section over F_q(u), u = t^e, when every
// exponent of the affine coordinates X/Z, Y/Z is divisible by e.
std::optional<FPoint> substitute_section(const ParamCurve& m);

// One worked surface-and-cover instance: the target four-monomial surface,
// the cover exponent matrix C, input lines on the cover, and the expected
// multisections/sections.
struct DelsarteExample {
  std::string name;
  DelsarteSurface target;
  IMat4 cover_c;          // C in B = d A^{-1} C
  std::int64_t cover_d;   // expected minimal d
  struct Line {
    ParamCurve line;                    // on the cover surface
    ParamCurve multisection;            // expected image, normalized
    std::optional<FPoint> section;      // expected section, if any
  };
  std::vector<Line> lines;
  // Target twist-family curve the sections live on, with an x-coordinate
  // sign reconciling the surface form with the family model.
  std::optional<TwistCurve> section_curve;
  int section_x_sign = 1;
};

const std::vector<DelsarteExample>& delsarte_registry();

}  // namespace isotwist
