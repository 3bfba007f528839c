#include <doctest.h>

#include "isotwist/serialize.hpp"

using namespace isotwist;

TEST_CASE("fields round-trip with their moduli") {
  for (const auto& f : {Field::make(3, 1), Field::make(3, 2), Field::make(2, 3)}) {
    json j = field_to_json(f);
    auto g = field_from_json(j);
    CHECK(g->p() == f->p());
    CHECK(g->l() == f->l());
    CHECK(g->modulus() == f->modulus());
  }
  json j = field_to_json(Field::make(3, 2));
  CHECK(j["p"] == 3);
  CHECK(j["l"] == 2);
  CHECK(j["modulus"] == json::array({1, 0, 1}));
}

TEST_CASE("elements serialize as digit arrays") {
  auto f9 = Field::make(3, 2);
  for (elem a = 0; a < 9; ++a) {
    CHECK(elem_from_json(f9, elem_to_json(f9, a)) == a);
  }
  CHECK(elem_to_json(f9, 5) == json::array({2, 1}));  // 5 = 2 + 1*3
  CHECK_THROWS(elem_from_json(f9, json::array({3, 0})));  // digit out of range
}

TEST_CASE("polynomials and rational functions round-trip") {
  auto f3 = Field::make(3, 1);
  Poly p = Poly::from_ints(f3, {1, 0, 2, 1});
  CHECK(poly_from_json(f3, poly_to_json(p)) == p);
  CHECK(poly_to_json(Poly::zero(f3)) == json::array());
  RatFunc r(Poly::from_ints(f3, {0, 1}), Poly::from_ints(f3, {1, 1}));
  json jr = ratfunc_to_json(r);
  CHECK(ratfunc_from_json(f3, jr) == r);
  CHECK(jr.contains("num"));
  CHECK(jr.contains("den"));
}

TEST_CASE("curves of every family round-trip") {
  auto f3 = Field::make(3, 1);
  auto f7 = Field::make(7, 1);
  auto f2 = Field::make(2, 1);
  std::vector<TwistCurve> cs = {
      TwistCurve::quadratic(Poly::from_ints(f3, {0, -1, 0, 1}),
                            Poly::from_ints(f3, {0, -1, 0, 1})),
      TwistCurve::cubic(Poly::monomial(f2, 1, 8) + Poly::x(f2)),
      TwistCurve::quartic(Poly::monomial(f7, 1, 8) + Poly::constant(f7, 1)),
      TwistCurve::sextic(Poly::monomial(f7, 1, 6) + Poly::constant(f7, 1), -1),
  };
  for (const auto& c : cs) {
    json j = curve_to_json(c);
    auto back = curve_from_json(j);
    CHECK(back.family() == c.family());
    CHECK(back.a() == c.a());
    if (c.family() == Family::quadratic) CHECK(back.f() == c.f());
    if (c.family() == Family::sextic) CHECK(back.sign() == c.sign());
  }
}

TEST_CASE("points round-trip including infinity") {
  auto f3 = Field::make(3, 1);
  FPoint p(RatFunc(Poly::from_ints(f3, {0, 0, 1})), RatFunc(Poly::from_ints(f3, {2})));
  CHECK(point_from_json(f3, point_to_json(p)) == p);
  CHECK(point_to_json(FPoint::infinity()) == json("infinity"));
  CHECK(point_from_json(f3, json("infinity")).is_infinity());
}

TEST_CASE("serialization output is deterministic") {
  auto f9 = Field::make(3, 2);
  Poly p(f9, {5, 7, 1});
  CHECK(poly_to_json(p).dump() == poly_to_json(p).dump());
  json a = curve_to_json(TwistCurve::quadratic(Poly::from_ints(f9, {0, -1, 0, 1}),
                                               Poly::from_ints(f9, {0, -1, 0, 1})));
  CHECK(a.dump() == curve_to_json(curve_from_json(a)).dump());
}
