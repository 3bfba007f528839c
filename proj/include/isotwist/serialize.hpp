#pragma once

#include <json.hpp>

#include "isotwist/additive.hpp"
#include "isotwist/curves.hpp"

namespace isotwist {

using json = nlohmann::ordered_json;

// Field: {"p": .., "l": .., "modulus": [c0..cl]}
json field_to_json(const FieldPtr& f);
FieldPtr field_from_json(const json& j);

// Element: array of l base-p digits, ascending.
json elem_to_json(const FieldPtr& f, elem a);
elem elem_from_json(const FieldPtr& f, const json& j);

// Poly: array of elements, ascending degree.
json poly_to_json(const Poly& p);
Poly poly_from_json(const FieldPtr& f, const json& j);

// RatFunc: {"num": poly, "den": poly}
json ratfunc_to_json(const RatFunc& r);
RatFunc ratfunc_from_json(const FieldPtr& f, const json& j);

// AdditivePoly: {"q": {"p", "l"}, "fcoeffs": [...]}
json additive_to_json(const AdditivePoly& a);

// Curve: {"family": .., "field": .., "A": poly, "f": poly?, "sign": ..?}
json curve_to_json(const TwistCurve& c);
TwistCurve curve_from_json(const json& j);

// Point: "infinity" or {"x": ratfunc, "y": ratfunc}
json point_to_json(const FPoint& p);
FPoint point_from_json(const FieldPtr& f, const json& j);

}  // namespace isotwist
