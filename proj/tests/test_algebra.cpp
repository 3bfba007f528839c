#include <doctest.h>

#include <numeric>
#include <random>

#include "isotwist/poly.hpp"

using namespace isotwist;

namespace {

// independent irreducibility oracle: a monic degree-l polynomial over F_p is
// irreducible iff no monic polynomial of degree 1..l/2 divides it; checked by
// exhaustive trial division over integer coefficient vectors
bool oracle_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& mod) {
  auto f = Field::make(p, 1);
  Poly m(f, std::vector<elem>(mod.begin(), mod.end()));
  unsigned l = static_cast<unsigned>(m.deg());
  for (unsigned d = 1; d <= l / 2; ++d) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < d; ++i) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<elem> c(d + 1, 0);
      std::uint64_t v = idx;
      for (unsigned i = 0; i < d; ++i) { c[i] = v % p; v /= p; }
      c[d] = 1;
      if (m.divisible_by(Poly(f, c))) return false;
    }
  }
  return l >= 1;
}

std::vector<FieldPtr> small_fields() {
  return {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2),
          Field::make(5, 1), Field::make(7, 1), Field::make(3, 2)};
}

Poly random_poly(const FieldPtr& f, std::mt19937& rng, int maxdeg) {
  std::uniform_int_distribution<int> dd(0, maxdeg);
  std::uniform_int_distribution<std::uint64_t> dc(0, f->q() - 1);
  int d = dd(rng);
  std::vector<elem> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = dc(rng);
  return Poly(f, std::move(c));
}

}  // namespace

TEST_CASE("deterministic moduli match the exhaustive-scan oracle") {
  CHECK(Field::make(7, 1)->modulus() == std::vector<std::uint64_t>{0, 1});
  CHECK(Field::make(3, 2)->modulus() == std::vector<std::uint64_t>{1, 0, 1});
  CHECK(Field::make(2, 3)->modulus() == std::vector<std::uint64_t>{1, 1, 0, 1});
  for (auto [p, l] : {std::pair<std::uint64_t, unsigned>{2, 2}, {2, 3}, {2, 4},
                      {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    auto f = Field::make(p, l);
    CHECK(oracle_irreducible(p, f->modulus()));
    // minimality: every lexicographically earlier monic candidate is reducible
    std::uint64_t enc = 0, pw = 1;
    for (unsigned i = 0; i < l; ++i) { enc += f->modulus()[i] * pw; pw *= p; }
    for (std::uint64_t e = 0; e < enc; ++e) {
      std::vector<std::uint64_t> cand(l + 1, 0);
      std::uint64_t v = e;
      for (unsigned i = 0; i < l; ++i) { cand[i] = v % p; v /= p; }
      cand[l] = 1;
      CHECK_FALSE(oracle_irreducible(p, cand));
    }
  }
}

TEST_CASE("field arithmetic laws on every field of order <= 49") {
  for (const auto& f : small_fields()) {
    std::uint64_t q = f->q();
    for (elem a = 0; a < q; ++a) {
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a != 0) {
        CHECK(f->mul(a, f->inv(a)) == 1);
        CHECK(f->pow(a, q - 1) == 1);
      }
      for (elem b = 0; b < q; ++b) {
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        for (elem c = 0; c < std::min<std::uint64_t>(q, 8); ++c) {
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("residues and roots follow the Euler criterion") {
  for (const auto& f : small_fields()) {
    std::uint64_t q = f->q();
    for (unsigned m : {2u, 3u}) {
      std::uint64_t g = std::gcd<std::uint64_t>(m, q - 1);
      for (elem a = 0; a < q; ++a) {
        bool expected = a == 0 || f->pow(a, (q - 1) / g) == 1;
        CHECK(f->is_residue(a, m) == expected);
        auto r = f->mth_root(a, m);
        CHECK(r.has_value() == expected);
        if (r) CHECK(f->pow(*r, m) == a);
      }
    }
  }
}

TEST_CASE("division round-trips and gcd matches the textbook example") {
  auto f3 = Field::make(3, 1);
  CHECK(Poly::from_ints(f3, {-1, 0, 1}).gcd(Poly::from_ints(f3, {0, 1, 1})) ==
        Poly::from_ints(f3, {1, 1}));
  std::mt19937 rng(20240511);
  for (const auto& f : small_fields()) {
    for (int trial = 0; trial < 200; ++trial) {
      Poly a = random_poly(f, rng, 8);
      Poly b = random_poly(f, rng, 5);
      if (b.is_zero()) continue;
      auto [q, r] = a.divrem(b);
      CHECK(q * b + r == a);
      CHECK((r.is_zero() || r.deg() < b.deg()));
      Poly g = a.gcd(b);
      if (!g.is_zero()) {
        CHECK(g.is_monic());
        CHECK(a.divrem(g).second.is_zero());
        CHECK(b.divrem(g).second.is_zero());
      }
    }
  }
}

TEST_CASE("derivative is linear and satisfies the Leibniz rule") {
  std::mt19937 rng(987);
  for (const auto& f : small_fields()) {
    for (int trial = 0; trial < 50; ++trial) {
      Poly a = random_poly(f, rng, 6);
      Poly b = random_poly(f, rng, 6);
      CHECK((a + b).derivative() == a.derivative() + b.derivative());
      CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
  }
}

TEST_CASE("square roots are found exactly when they exist") {
  std::mt19937 rng(5150);
  for (const auto& f : small_fields()) {
    for (int trial = 0; trial < 100; ++trial) {
      Poly s = random_poly(f, rng, 5);
      if (s.is_zero()) continue;
      auto r = (s * s).sqrt();
      REQUIRE(r.has_value());
      CHECK(*r * *r == s * s);
    }
  }
  auto f3 = Field::make(3, 1);
  CHECK_FALSE(Poly::from_ints(f3, {1, 1}).sqrt().has_value());
  auto f7 = Field::make(7, 1);
  // 3 is a non-square mod 7, so 3 t^2 has no square root
  CHECK_FALSE(Poly::from_ints(f7, {0, 0, 3}).sqrt().has_value());
}

TEST_CASE("frobenius-power roots invert exact powers") {
  auto f3 = Field::make(3, 1);
  Poly b = Poly::from_ints(f3, {0, 1, 1});
  auto r = b.pow(3).nth_root_frobenius(3);
  REQUIRE(r.has_value());
  CHECK(*r == b);
  CHECK_FALSE((b.pow(3) + Poly::x(f3)).nth_root_frobenius(3).has_value());
}

TEST_CASE("root enumeration matches naive evaluation") {
  auto f9 = Field::make(3, 2);
  // t^3 - t has exactly the prime subfield as roots inside F_9
  auto r = Poly::from_ints(f9, {0, -1, 0, 1}).roots();
  CHECK(r == std::vector<elem>{0, 1, 2});
  auto f5 = Field::make(5, 1);
  auto r2 = (Poly::from_ints(f5, {-1, 1}) * Poly::from_ints(f5, {-1, 1}) *
             Poly::from_ints(f5, {-2, 1})).roots();
  CHECK(r2 == std::vector<elem>{1, 1, 2});
}

TEST_CASE("rational functions stay normalized") {
  auto f3 = Field::make(3, 1);
  RatFunc r(Poly::from_ints(f3, {0, 1}), Poly::from_ints(f3, {1, 1}));
  CHECK(r.den().is_monic());
  CHECK(r.num().gcd(r.den()).is_constant());
  CHECK(r.pow(-2) * r.pow(2) == RatFunc::constant(f3, 1));
  CHECK(r.derivative() == RatFunc(Poly::constant(f3, 1), Poly::from_ints(f3, {1, 1}).pow(2)));
  RatFunc sum = r + r.inverse();
  CHECK(sum * r == r * r + RatFunc::constant(f3, 1));
}

TEST_CASE("subfield embeddings are ring homomorphisms") {
  auto f3 = Field::make(3, 1);
  auto f27 = Field::make(3, 3);
  Embedding e(f3, f27);
  for (elem a = 0; a < 3; ++a) {
    for (elem b = 0; b < 3; ++b) {
      CHECK(e.map(f3->add(a, b)) == f27->add(e.map(a), e.map(b)));
      CHECK(e.map(f3->mul(a, b)) == f27->mul(e.map(a), e.map(b)));
    }
  }
  auto f2 = Field::make(2, 1);
  auto f8 = Field::make(2, 3);
  Embedding e2(f2, f8);
  CHECK(e2.map(1) == 1);
}
