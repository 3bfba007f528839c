#include "isotwist/constructions.hpp"

#include <stdexcept>

namespace isotwist {

namespace {

std::uint64_t upow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

ConstructedPoint certify(TwistCurve curve, FPoint point) {
  if (!curve.contains(point)) throw std::logic_error("factory produced an off-curve point");
  if (!point.is_integral()) throw std::logic_error("factory produced a non-integral point");
  bool sep = curve.is_separable(point);
  return ConstructedPoint{std::move(curve), point, sep,
                          point.x().num().deg(), point.y().num().deg()};
}

Poly xcubed_minus_x(const FieldPtr& f) { return Poly::from_ints(f, {0, -1, 0, 1}); }

}  // namespace

ConstructedPoint main_point_quadratic(const FieldPtr& f, std::uint64_t n, std::uint64_t k) {
  std::uint64_t q = f->q();
  if (q % 4 != 3) throw std::invalid_argument("main_point_quadratic: needs q = 3 mod 4");
  if (k % 2 == 0 || k == 0 || n % k != 0) {
    throw std::invalid_argument("main_point_quadratic: k must be an odd divisor of n");
  }
  Poly b = trace_poly(f, n, k).expand();
  std::uint64_t qk = upow(q, k);
  FPoint p(RatFunc(b.pow((qk - 1) / 2)), RatFunc(b.pow((qk - 3) / 4)));
  Poly a = Poly::monomial(f, 1, static_cast<std::int64_t>(upow(q, n))) - Poly::x(f);
  return certify(TwistCurve::quadratic(std::move(a), xcubed_minus_x(f)), std::move(p));
}

ConstructedPoint main_point_cubic(const FieldPtr& f, std::uint64_t n, std::uint64_t k) {
  std::uint64_t q = f->q();
  if (q % 3 != 2) throw std::invalid_argument("main_point_cubic: needs q = 2 mod 3");
  if (k % 2 == 0 || k == 0 || n % k != 0) {
    throw std::invalid_argument("main_point_cubic: k must be an odd divisor of n (q^k = 2 mod 3)");
  }
  Poly b = trace_poly(f, n, k).expand();
  std::uint64_t qk = upow(q, k);
  FPoint p(RatFunc(b.pow((qk - 2) / 3)), RatFunc(b.pow(qk - 1)));
  Poly a = Poly::monomial(f, 1, static_cast<std::int64_t>(upow(q, n))) - Poly::x(f);
  return certify(TwistCurve::cubic(std::move(a)), std::move(p));
}

ConstructedPoint general_point_quadratic(const Poly& a0, std::uint64_t k) {
  const auto& f = a0.field();
  std::uint64_t q = f->q();
  if (q % 4 != 3) throw std::invalid_argument("general_point_quadratic: needs q = 3 mod 4");
  if (k % 2 == 0) throw std::invalid_argument("general_point_quadratic: k must be odd");
  Poly b = ap_divisor_witness(a0, k).expand();
  std::uint64_t qk = upow(q, k);
  FPoint p(RatFunc(b.pow((qk - 1) / 2)), RatFunc(b.pow((qk - 3) / 4)));
  Poly a = ap_from_poly(a0).expand();
  return certify(TwistCurve::quadratic(std::move(a), xcubed_minus_x(f)), std::move(p));
}

TranslatedScaled translated_scaled_points(const TwistCurve& c, const FPoint& q) {
  if (c.family() != Family::quadratic) {
    throw std::invalid_argument("translated_scaled_points: quadratic family only");
  }
  if (q.is_infinity() || !q.is_integral()) {
    throw std::invalid_argument("translated_scaled_points: need an affine integral point");
  }
  const auto& f = c.field();
  TranslatedScaled out;
  for (elem a = 0; a < f->q(); ++a) {
    Poly sub = Poly(f, {a, 1});  // t + a
    Poly ca = c.a().compose(sub);
    FPoint p(RatFunc(q.x().num().compose(sub)), RatFunc(q.y().num().compose(sub)));
    out.translates.push_back(certify(TwistCurve::quadratic(std::move(ca), c.f()), std::move(p)));
  }
  for (elem a = 1; a < f->q(); ++a) {
    Poly sub = Poly(f, {0, a});  // a t
    Poly ca = c.a().compose(sub);
    FPoint p(RatFunc(q.x().num().compose(sub)), RatFunc(q.y().num().compose(sub)));
    out.scales.push_back(certify(TwistCurve::quadratic(std::move(ca), c.f()), std::move(p)));
  }
  return out;
}

std::vector<OrthMatrix> orthogonal_group(const FieldPtr& f) {
  std::uint64_t q = f->q();
  if (q * q * q * q > max_scan_size() * max_scan_size()) {
    throw std::runtime_error("orthogonal_group: field exceeds the scan bound");
  }
  std::vector<OrthMatrix> out;
  for (elem a = 0; a < q; ++a)
    for (elem b = 0; b < q; ++b)
      for (elem c = 0; c < q; ++c)
        for (elem d = 0; d < q; ++d) {
          if (f->add(f->mul(a, a), f->mul(c, c)) != 1) continue;
          if (f->add(f->mul(b, b), f->mul(d, d)) != 1) continue;
          if (f->add(f->mul(a, b), f->mul(c, d)) != 0) continue;
          out.push_back(OrthMatrix{a, b, c, d});
        }
  return out;
}

bool hermitian_identity_check(const FieldPtr& f, const OrthMatrix& m, std::uint64_t k) {
  (void)k;  // coefficients of F_q are fixed by every power of Frobenius
  // (aX+bY)^{q^k+1} = (aX^{q^k} + bY^{q^k})(aX + bY); collect the four
  // monomials X^{q^k+1}, X^{q^k}Y, XY^{q^k}, Y^{q^k+1}
  elem cxx = f->add(f->mul(m.a, m.a), f->mul(m.c, m.c));
  elem cxy = f->add(f->mul(m.a, m.b), f->mul(m.c, m.d));
  elem cyx = f->add(f->mul(m.b, m.a), f->mul(m.d, m.c));
  elem cyy = f->add(f->mul(m.b, m.b), f->mul(m.d, m.d));
  return cxx == 1 && cxy == 0 && cyx == 0 && cyy == 1;
}

TauPoints tau_points(const FieldPtr& f, std::uint64_t n, Family kind) {
  std::uint64_t q = f->q();
  if (n % 2 == 0) throw std::invalid_argument("tau_points: n must be odd");
  if (kind == Family::quartic && q % 4 != 3) {
    throw std::invalid_argument("tau_points: quartic kind needs q = 3 mod 4");
  }
  if (kind == Family::sextic && q % 3 != 2) {
    throw std::invalid_argument("tau_points: sextic kind needs q = 2 mod 3");
  }
  if (kind != Family::quartic && kind != Family::sextic) {
    throw std::invalid_argument("tau_points: kind must be quartic or sextic");
  }
  TauPoints out;
  OrthMatrix m{};
  bool found = false;
  for (const auto& cand : orthogonal_group(f)) {
    if (cand.c != 0 && cand.d != 0) { m = cand; found = true; break; }
  }
  if (!found) {
    out.status = "no orthogonal matrix with cd != 0 over F_" + std::to_string(q);
    return out;
  }
  std::uint64_t qn = upow(q, n);
  Poly dpoly = Poly::monomial(f, 1, static_cast<std::int64_t>(qn + 1)) + Poly::constant(f, 1);
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (n % k != 0) continue;
    std::uint64_t qk = upow(q, k);
    std::uint64_t r = (qn + 1) / (qk + 1);
    Poly ctr_d = Poly::monomial(f, m.c, static_cast<std::int64_t>(r)) + Poly::constant(f, m.d);
    Poly atr_b = Poly::monomial(f, m.a, static_cast<std::int64_t>(r)) + Poly::constant(f, m.b);
    if (kind == Family::quartic) {
      Poly x = -ctr_d.pow((qk + 1) / 2);
      Poly y = atr_b.pow((qk + 1) / 2) * ctr_d.pow((qk + 1) / 4);
      out.points.push_back(certify(TwistCurve::quartic(dpoly),
                                   FPoint(RatFunc(std::move(x)), RatFunc(std::move(y)))));
    } else {
      Poly x = -ctr_d.pow((qk + 1) / 3);
      Poly y = atr_b.pow((qk + 1) / 2);
      out.points.push_back(certify(TwistCurve::sextic(dpoly, 1),
                                   FPoint(RatFunc(std::move(x)), RatFunc(std::move(y)))));
    }
  }
  return out;
}

}  // namespace isotwist
