#include <doctest.h>

#include "isotwist/analysis.hpp"
#include "isotwist/constructions.hpp"

using namespace isotwist;

namespace {

FPoint pp(const FieldPtr& f, std::vector<std::int64_t> x, std::vector<std::int64_t> y) {
  return FPoint(RatFunc(Poly::from_ints(f, x)), RatFunc(Poly::from_ints(f, y)));
}

}  // namespace

TEST_CASE("exhaustive search over F_3 finds exactly the six linear points") {
  auto f3 = Field::make(3, 1);
  Poly a = Poly::from_ints(f3, {0, -1, 0, 1});
  Poly f = Poly::from_ints(f3, {0, -1, 0, 1});
  auto hits = search_integral_points(a, f, 0, 100);
  // (t + c, ±1) for c in F_3; leading coefficient 2 forces G^2 = 2, impossible
  REQUIRE(hits.size() == 6);
  for (const auto& h : hits) {
    CHECK(h.x().den().is_constant());
    CHECK(h.x().num().deg() == 1);
    CHECK(a * (h.y().num() * h.y().num()) == RatFunc::eval_poly(f, h.x()).num() *
              (h.x().den() * h.x().den() * h.x().den()));
  }
  CHECK(hits[0].x() == RatFunc(Poly::x(f3)));
  bool found_shift = false;
  for (const auto& h : hits) {
    if (h.x() == RatFunc(Poly::from_ints(f3, {1, 1})) &&
        h.y() == RatFunc(Poly::constant(f3, 1))) {
      found_shift = true;
    }
  }
  CHECK(found_shift);
}

TEST_CASE("search results are identical across worker counts") {
  auto f3 = Field::make(3, 1);
  Poly a = Poly::monomial(f3, 1, 9) - Poly::x(f3);
  Poly f = Poly::from_ints(f3, {0, -1, 0, 1});
  auto one = search_integral_points(a, f, 3, 5, 1);
  auto four = search_integral_points(a, f, 3, 5, 4);
  CHECK(one == four);
}

TEST_CASE("search rejects invalid twist data") {
  auto f3 = Field::make(3, 1);
  CHECK_THROWS(search_integral_points(Poly::from_ints(f3, {0, 0, 1}),
                                      Poly::from_ints(f3, {0, -1, 0, 1}), 0, 5));
  CHECK_THROWS(search_integral_points(Poly::from_ints(f3, {0, 0, 0, 1}),  // t^3 not squarefree
                                      Poly::from_ints(f3, {0, -1, 0, 1}), 0, 5));
}

TEST_CASE("divisibility and degree window for known points") {
  auto f7 = Field::make(7, 1);
  Poly a7 = Poly::monomial(f7, 1, 7) - Poly::x(f7);
  Poly f7c = Poly::from_ints(f7, {0, -1, 0, 1});
  auto r = check_gdf(a7, f7c, pp(f7, {0, 0, 0, 1}, {0, 1}));
  CHECK(r.all());
  CHECK(r.deg_f == 3);
  CHECK(r.deg_a == 7);

  auto f3 = Field::make(3, 1);
  Poly a27 = Poly::monomial(f3, 1, 27) - Poly::x(f3);
  Poly f3c = Poly::from_ints(f3, {0, -1, 0, 1});
  FPoint big(RatFunc(Poly::monomial(f3, 1, 13)), RatFunc(Poly::monomial(f3, 1, 6)));
  auto r2 = check_gdf(a27, f3c, big);
  CHECK(r2.all());

  CHECK_THROWS(check_gdf(a27, f3c, pp(f3, {0, 0, 0, 1}, {1})));  // F' = 0
}

TEST_CASE("the three smallness conditions agree and expose the factor structure") {
  auto f7 = Field::make(7, 1);
  Poly a = Poly::monomial(f7, 1, 7) - Poly::x(f7);
  Poly f = Poly::from_ints(f7, {0, -1, 0, 1});
  auto rep = eqiv_conditions(a, f, pp(f7, {0, 0, 0, 1}, {0, 1}));
  CHECK(rep.cond_a);
  CHECK(rep.cond_b);
  CHECK(rep.cond_c);
  CHECK(rep.consistent);
  CHECK(rep.beta == 5);  // F' = 3t^2 = 5 (t)^2... G^2 * beta = t^2 * 5
  REQUIRE(rep.fs.has_value());
  CHECK(rep.fs->gamma == f7->from_int(-1));
  // beta_1 = beta_2 = 5 for the root ordering with alpha_0 = 0
  CHECK(rep.beta_symmetric);
  CHECK(rep.iso_arithmetic_progression);

  // a non-split twist polynomial is rejected
  auto f3 = Field::make(3, 1);
  Poly a27 = Poly::monomial(f3, 1, 27) - Poly::x(f3);
  Poly f3c = Poly::from_ints(f3, {0, -1, 0, 1});
  FPoint big(RatFunc(Poly::monomial(f3, 1, 13)), RatFunc(Poly::monomial(f3, 1, 6)));
  CHECK_THROWS(eqiv_conditions(a27, f3c, big));

  // over F_27 the same polynomial splits, and (t^13, t^6) is borderline small:
  // 2*13 = 26 = d-1, G^2 = t^12 = F' exactly
  auto f27 = Field::make(3, 3);
  Poly a27s = Poly::monomial(f27, 1, 27) - Poly::x(f27);
  Poly fs = Poly::from_ints(f27, {0, -1, 0, 1});
  FPoint big27(RatFunc(Poly::monomial(f27, 1, 13)), RatFunc(Poly::monomial(f27, 1, 6)));
  auto rep2 = eqiv_conditions(a27s, fs, big27);
  CHECK(rep2.consistent);
  CHECK(rep2.cond_a);
  CHECK(rep2.cond_b);
  CHECK(rep2.cond_c);
  CHECK(rep2.beta == 1);
}

TEST_CASE("gamma map reproduces the point on the constant curve") {
  auto f7 = Field::make(7, 1);
  Poly a = Poly::monomial(f7, 1, 7) - Poly::x(f7);
  Poly f = Poly::from_ints(f7, {0, -1, 0, 1});
  auto g = gamma_map(a, f, pp(f7, {0, 0, 0, 1}, {0, 1}));
  CHECK(g.verified);
  CHECK(g.x == RatFunc(Poly::monomial(f7, 1, 3)));
  CHECK(g.y_coeff == RatFunc(Poly::x(f7)));
}

TEST_CASE("independence certificate separates the two trace points") {
  auto f3 = Field::make(3, 1);
  auto q1 = main_point_quadratic(f3, 3, 1);
  auto q3 = main_point_quadratic(f3, 3, 3);
  Poly f = Poly::from_ints(f3, {0, -1, 0, 1});
  auto rep = independence_certificate(q1.curve.a(), f, {q1.point, q3.point});
  CHECK(rep.rank == 2);
  CHECK(rep.independent);
  REQUIRE(rep.phis.size() == 2);
  CHECK(rep.phis[0].is_constant());
  CHECK(rep.phis[1].deg() == 6);
  // single points always have rank 1
  auto solo = independence_certificate(q1.curve.a(), f, {q1.point});
  CHECK(solo.rank == 1);
}
