#include "isotwist/serialize.hpp"

#include <stdexcept>

namespace isotwist {

json field_to_json(const FieldPtr& f) {
  json j;
  j["p"] = f->p();
  j["l"] = f->l();
  j["modulus"] = f->modulus();
  return j;
}

FieldPtr field_from_json(const json& j) {
  std::uint64_t p = j.at("p").get<std::uint64_t>();
  unsigned l = j.at("l").get<unsigned>();
  if (j.contains("modulus")) {
    return Field::make_with_modulus(p, l, j.at("modulus").get<std::vector<std::uint64_t>>());
  }
  return Field::make(p, l);
}

json elem_to_json(const FieldPtr& f, elem a) { return json(f->digits(a)); }

elem elem_from_json(const FieldPtr& f, const json& j) {
  return f->from_digits(j.get<std::vector<std::uint64_t>>());
}

json poly_to_json(const Poly& p) {
  json j = json::array();
  for (elem c : p.coeffs()) j.push_back(elem_to_json(p.field(), c));
  return j;
}

Poly poly_from_json(const FieldPtr& f, const json& j) {
  std::vector<elem> c;
  for (const auto& e : j) c.push_back(elem_from_json(f, e));
  return Poly(f, std::move(c));
}

json ratfunc_to_json(const RatFunc& r) {
  json j;
  j["num"] = poly_to_json(r.num());
  j["den"] = poly_to_json(r.den());
  return j;
}

RatFunc ratfunc_from_json(const FieldPtr& f, const json& j) {
  return RatFunc(poly_from_json(f, j.at("num")), poly_from_json(f, j.at("den")));
}

json additive_to_json(const AdditivePoly& a) {
  json j;
  j["q"] = {{"p", a.field()->p()}, {"l", a.field()->l()}};
  json fc = json::array();
  for (elem c : a.fcoeffs()) fc.push_back(elem_to_json(a.field(), c));
  j["fcoeffs"] = fc;
  return j;
}

json curve_to_json(const TwistCurve& c) {
  json j;
  j["family"] = family_name(c.family());
  j["field"] = field_to_json(c.field());
  j["A"] = poly_to_json(c.a());
  if (c.family() == Family::quadratic) j["f"] = poly_to_json(c.f());
  if (c.family() == Family::sextic) j["sign"] = c.sign();
  return j;
}

TwistCurve curve_from_json(const json& j) {
  FieldPtr f = field_from_json(j.at("field"));
  std::string fam = j.at("family").get<std::string>();
  Poly a = poly_from_json(f, j.at("A"));
  if (fam == "quadratic") return TwistCurve::quadratic(std::move(a), poly_from_json(f, j.at("f")));
  if (fam == "cubic") return TwistCurve::cubic(std::move(a));
  if (fam == "quartic") return TwistCurve::quartic(std::move(a));
  if (fam == "sextic") return TwistCurve::sextic(std::move(a), j.value("sign", 1));
  throw std::invalid_argument("unknown curve family: " + fam);
}

json point_to_json(const FPoint& p) {
  if (p.is_infinity()) return json("infinity");
  json j;
  j["x"] = ratfunc_to_json(p.x());
  j["y"] = ratfunc_to_json(p.y());
  return j;
}

FPoint point_from_json(const FieldPtr& f, const json& j) {
  if (j.is_string() && j.get<std::string>() == "infinity") return FPoint::infinity();
  return FPoint(ratfunc_from_json(f, j.at("x")), ratfunc_from_json(f, j.at("y")));
}

}  // namespace isotwist
