#include <doctest.h>

#include <random>

#include "isotwist/curves.hpp"

using namespace isotwist;

namespace {

FPoint pp(const FieldPtr& f, std::vector<std::int64_t> x, std::vector<std::int64_t> y) {
  return FPoint(RatFunc(Poly::from_ints(f, x)), RatFunc(Poly::from_ints(f, y)));
}

}  // namespace

TEST_CASE("membership matches the defining equations") {
  auto f7 = Field::make(7, 1);
  auto c = TwistCurve::quadratic(Poly::monomial(f7, 1, 7) - Poly::x(f7),
                                 Poly::from_ints(f7, {0, -1, 0, 1}));
  CHECK(c.contains(pp(f7, {0, 0, 0, 1}, {0, 1})));
  CHECK_FALSE(c.contains(pp(f7, {0, 0, 0, 1}, {1, 1})));
  CHECK(c.contains(FPoint::infinity()));

  auto f5 = Field::make(5, 1);
  auto cc = TwistCurve::cubic(Poly::monomial(f5, 1, 5) - Poly::x(f5));
  CHECK(cc.contains(pp(f5, {0, 1}, {0, 0, 0, 0, 1})));
}

TEST_CASE("weierstrass models carry exact substitutions") {
  auto f3 = Field::make(3, 1);
  auto c = TwistCurve::quadratic(Poly::from_ints(f3, {0, -1, 0, 1}),
                                 Poly::from_ints(f3, {0, -1, 0, 1}));
  auto m = c.to_weierstrass();
  // Y^2 = X^3 - A^2 X
  CHECK(m.a1.is_zero());
  CHECK(m.a2.is_zero());
  CHECK(m.a3.is_zero());
  RatFunc A(c.a());
  CHECK(m.a4 == -(A * A));
  CHECK(m.a6.is_zero());

  auto f2 = Field::make(2, 1);
  auto cc = TwistCurve::cubic(Poly::monomial(f2, 1, 8) + Poly::x(f2));
  auto mm = cc.to_weierstrass();
  CHECK(mm.a3 == -RatFunc(cc.a()));
  FPoint s = pp(f2, {1}, {0, 1, 1, 0, 1});
  CHECK(cc.contains(s));
  CHECK(mm.contains(mm.to_model(s)));
  CHECK(mm.from_model(mm.to_model(s)) == s);
}

TEST_CASE("group law basics in characteristics 2, 3 and 7") {
  auto f2 = Field::make(2, 1);
  auto cc = TwistCurve::cubic(Poly::constant(f2, 1));
  auto m2 = cc.to_weierstrass();
  FPoint u1 = pp(f2, {0}, {0}), u2 = pp(f2, {0}, {1});
  CHECK(point_add(m2, u1, u2).is_infinity());
  CHECK(point_add(m2, u1, FPoint::infinity()) == u1);
  CHECK(point_neg(m2, u1) == u2);

  auto f7 = Field::make(7, 1);
  auto cw = TwistCurve::quadratic(Poly::constant(f7, 1), Poly::from_ints(f7, {0, -1, 0, 1}));
  auto m7 = cw.to_weierstrass();
  FPoint t0 = pp(f7, {0}, {0}), t1 = pp(f7, {1}, {0});
  auto sum = point_add(m7, m7.to_model(t0), m7.to_model(t1));
  CHECK(m7.from_model(sum) == pp(f7, {-1}, {0}));
  CHECK_THROWS(point_add(m7, pp(f7, {2}, {1}), m7.to_model(t0)));
}

TEST_CASE("group law is associative on sampled function-field points") {
  auto f7 = Field::make(7, 1);
  auto c = TwistCurve::quadratic(Poly::monomial(f7, 1, 7) - Poly::x(f7),
                                 Poly::from_ints(f7, {0, -1, 0, 1}));
  auto m = c.to_weierstrass();
  FPoint p = m.to_model(pp(f7, {0, 0, 0, 1}, {0, 1}));
  FPoint q = m.to_model(pp(f7, {1, 3, 3, 1}, {1, 1}));  // translate x = (t+1)^3
  CHECK(c.contains(m.from_model(q)));
  FPoint r = m.to_model(pp(f7, {0}, {0}));
  auto lhs = point_add(m, point_add(m, p, q), r);
  auto rhs = point_add(m, p, point_add(m, q, r));
  CHECK(lhs == rhs);
  auto dbl = point_add(m, p, p);
  CHECK(m.contains(dbl));
  CHECK(point_add(m, p, point_neg(m, p)).is_infinity());
}

TEST_CASE("frobenius steps stay on the curve and descend correctly") {
  auto f3 = Field::make(3, 1);
  auto c = TwistCurve::quadratic(Poly::from_ints(f3, {0, -1, 0, 1}),
                                 Poly::from_ints(f3, {0, -1, 0, 1}));
  FPoint p = pp(f3, {0, 1}, {1});
  auto img = c.frobenius_step(p);
  CHECK(img.x() == RatFunc(Poly::monomial(f3, 1, 3)));
  CHECK(img.y() == RatFunc(c.a()));
  CHECK(c.contains(img));
  CHECK(c.frobenius_step(FPoint::infinity()).is_infinity());

  auto f2 = Field::make(2, 1);
  auto cc = TwistCurve::cubic(Poly::monomial(f2, 1, 8) + Poly::x(f2));
  FPoint s = pp(f2, {1}, {0, 1, 1, 0, 1});
  auto s2 = cc.frobenius_step(s);
  CHECK(cc.contains(s2));
  CHECK(s2.x() == RatFunc(cc.a()));  // exponent (q^2-1)/3 = 1
  CHECK(s2.y() == RatFunc(Poly::from_ints(f2, {0, 1, 1, 0, 1}).pow(4)));
}

TEST_CASE("separability criteria and orbit roots") {
  auto f7 = Field::make(7, 1);
  auto c = TwistCurve::quadratic(Poly::monomial(f7, 1, 7) - Poly::x(f7),
                                 Poly::from_ints(f7, {0, -1, 0, 1}));
  FPoint p = pp(f7, {0, 0, 0, 1}, {0, 1});
  CHECK(c.is_separable(p));
  auto p1 = c.frobenius_step(p);
  CHECK_FALSE(c.is_separable(p1));
  auto [root1, i1] = c.orbit_root(p1);
  CHECK(root1 == p);
  CHECK(i1 == 1);
  auto p2 = c.frobenius_step(p1);
  auto [root2, i2] = c.orbit_root(p2);
  CHECK(root2 == p);
  CHECK(i2 == 2);
  CHECK_THROWS(c.is_separable(pp(f7, {0}, {0})));

  auto f2 = Field::make(2, 1);
  auto cc = TwistCurve::cubic(Poly::monomial(f2, 1, 8) + Poly::x(f2));
  FPoint s = pp(f2, {1}, {0, 1, 1, 0, 1});
  CHECK(cc.is_separable(s));  // y' = 1
  CHECK_FALSE(cc.is_separable(cc.frobenius_step(s)));
}

TEST_CASE("supersingularity by point counting") {
  auto f3 = Field::make(3, 1);
  CHECK(is_supersingular(Poly::from_ints(f3, {0, -1, 0, 1})));
  auto f5 = Field::make(5, 1);
  CHECK_FALSE(is_supersingular(Poly::from_ints(f5, {0, -1, 0, 1})));
  auto f2 = Field::make(2, 1);
  CHECK(is_supersingular(Poly::from_ints(f2, {0, 0, 0, 1})));
  CHECK_THROWS(is_supersingular(Poly::from_ints(f5, {0, 0, 2, 1})));  // x^2(x+2): singular
}

TEST_CASE("family constructors reject invalid data") {
  auto f2 = Field::make(2, 1);
  auto f3 = Field::make(3, 1);
  CHECK_THROWS(TwistCurve::quadratic(Poly::x(f2), Poly::from_ints(f2, {0, 1, 0, 1})));
  CHECK_THROWS(TwistCurve::quadratic(Poly::x(f3), Poly::from_ints(f3, {0, 0, 0, 1})));
  CHECK_THROWS(TwistCurve::cubic(Poly::zero(f3)));
  CHECK_THROWS(TwistCurve::sextic(Poly::x(f3), 1));  // char 3 excluded
  CHECK_THROWS(TwistCurve::quartic(Poly::x(f2)));
  // frobenius congruence guards
  auto f7 = Field::make(7, 1);
  auto bad = TwistCurve::cubic(Poly::x(f7));  // 7 = 1 mod 3
  CHECK_THROWS(bad.frobenius_step(pp(f7, {0}, {0})));
}
