#include "isotwist/curves.hpp"

#include <stdexcept>

namespace isotwist {

namespace {

bool squarefree(const Poly& f) {
  Poly d = f.derivative();
  if (d.is_zero()) return f.is_constant();
  return f.gcd(d).is_constant();
}

std::optional<RatFunc> rf_frobenius_root(const RatFunc& r, std::uint64_t n) {
  auto nr = r.num().nth_root_frobenius(n);
  if (!nr) return std::nullopt;
  auto dr = r.den().nth_root_frobenius(n);
  if (!dr) return std::nullopt;
  return RatFunc(*nr, *dr);
}

}  // namespace

std::string family_name(Family fam) {
  switch (fam) {
    case Family::quadratic: return "quadratic";
    case Family::cubic: return "cubic";
    case Family::quartic: return "quartic";
    case Family::sextic: return "sextic";
  }
  return "?";
}

bool FPoint::operator==(const FPoint& o) const {
  if (inf_ || o.inf_) return inf_ == o.inf_;
  return x_ == o.x_ && y_ == o.y_;
}

TwistCurve TwistCurve::quadratic(Poly a, Poly f) {
  const auto& k = a.field();
  if (k->p() == 2) throw std::invalid_argument("quadratic family needs odd characteristic");
  if (f.deg() != 3 || !f.is_monic()) throw std::invalid_argument("quadratic family needs a monic cubic f");
  if (!squarefree(f)) throw std::invalid_argument("quadratic family needs squarefree f");
  if (a.is_zero() || !squarefree(a)) throw std::invalid_argument("quadratic family needs squarefree nonzero A");
  return TwistCurve(Family::quadratic, std::move(a), std::move(f), 1);
}

TwistCurve TwistCurve::cubic(Poly a) {
  if (a.is_zero()) throw std::invalid_argument("cubic family needs A != 0");
  return TwistCurve(Family::cubic, std::move(a), Poly::zero(a.field()), 1);
}

TwistCurve TwistCurve::quartic(Poly d) {
  if (d.is_zero()) throw std::invalid_argument("quartic family needs D != 0");
  if (d.field()->p() == 2) throw std::invalid_argument("quartic family needs odd characteristic");
  return TwistCurve(Family::quartic, std::move(d), Poly::zero(d.field()), 1);
}

TwistCurve TwistCurve::sextic(Poly d, int sign) {
  if (d.is_zero()) throw std::invalid_argument("sextic family needs D != 0");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sextic sign must be +1 or -1");
  auto p = d.field()->p();
  if (p == 2 || p == 3) throw std::invalid_argument("sextic family needs characteristic > 3");
  return TwistCurve(Family::sextic, std::move(d), Poly::zero(d.field()), sign);
}

bool TwistCurve::contains(const FPoint& p) const {
  if (p.is_infinity()) return true;
  const auto& k = field();
  RatFunc A(a_);
  const RatFunc& x = p.x();
  const RatFunc& y = p.y();
  RatFunc x3 = x * x * x;
  switch (fam_) {
    case Family::quadratic:
      return A * y * y == RatFunc::eval_poly(f_, x);
    case Family::cubic:
      return y * y - y == A * x3;
    case Family::quartic:
      return y * y == x3 - A * x;
    case Family::sextic: {
      RatFunc rhs = sign_ == 1 ? x3 + A : -x3 + A;
      (void)k;
      return y * y == rhs;
    }
  }
  return false;
}

GWModel TwistCurve::to_weierstrass() const {
  const auto& k = field();
  RatFunc zero = RatFunc::zero(k);
  RatFunc one = RatFunc::constant(k, 1);
  RatFunc A(a_);
  GWModel m{zero, zero, zero, zero, zero, one, one};
  switch (fam_) {
    case Family::quadratic: {
      // A y^2 = x^3 + c2 x^2 + c1 x + c0; X = A x, Y = A^2 y
      RatFunc c2 = RatFunc::constant(k, f_.coeff(2));
      RatFunc c1 = RatFunc::constant(k, f_.coeff(1));
      RatFunc c0 = RatFunc::constant(k, f_.coeff(0));
      m.a2 = c2 * A;
      m.a4 = c1 * A * A;
      m.a6 = c0 * A * A * A;
      m.sx = A;
      m.sy = A * A;
      break;
    }
    case Family::cubic:
      // (A y)^2 - A (A y) = (A x)^3
      m.a3 = -A;  // Y^2 + a3 Y = X^3 with a3 = -A
      m.sx = A;
      m.sy = A;
      break;
    case Family::quartic:
      m.a4 = -A;
      break;
    case Family::sextic:
      m.a6 = A;
      if (sign_ == -1) m.sx = -one;  // y^2 = -x^3 + D: X = -x
      break;
  }
  return m;
}

bool GWModel::contains(const FPoint& p) const {
  if (p.is_infinity()) return true;
  const RatFunc& X = p.x();
  const RatFunc& Y = p.y();
  return Y * Y + a1 * X * Y + a3 * Y == X * X * X + a2 * X * X + a4 * X + a6;
}

FPoint GWModel::to_model(const FPoint& p) const {
  if (p.is_infinity()) return p;
  return FPoint(sx * p.x(), sy * p.y());
}

FPoint GWModel::from_model(const FPoint& p) const {
  if (p.is_infinity()) return p;
  return FPoint(p.x() / sx, p.y() / sy);
}

FPoint point_neg(const GWModel& m, const FPoint& p) {
  if (p.is_infinity()) return p;
  return FPoint(p.x(), -p.y() - m.a1 * p.x() - m.a3);
}

FPoint point_add(const GWModel& m, const FPoint& p, const FPoint& q) {
  if (!m.contains(p) || !m.contains(q)) throw std::invalid_argument("point_add: input off-curve");
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const auto& k = p.x().field();
  const RatFunc &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
  RatFunc lam, nu;
  if (x1 == x2) {
    if (y2 == -y1 - m.a1 * x1 - m.a3) return FPoint::infinity();
    // tangent line
    RatFunc three = RatFunc::constant(k, k->from_int(3));
    RatFunc two = RatFunc::constant(k, k->from_int(2));
    RatFunc den = two * y1 + m.a1 * x1 + m.a3;
    lam = (three * x1 * x1 + two * m.a2 * x1 + m.a4 - m.a1 * y1) / den;
    nu = (-(x1 * x1 * x1) + m.a4 * x1 + two * m.a6 - m.a3 * y1) / den;
  } else {
    RatFunc den = x2 - x1;
    lam = (y2 - y1) / den;
    nu = (y1 * x2 - y2 * x1) / den;
  }
  RatFunc x3 = lam * lam + m.a1 * lam - m.a2 - x1 - x2;
  RatFunc y3 = -(lam + m.a1) * x3 - nu - m.a3;
  return FPoint(x3, y3);
}

void TwistCurve::check_congruence() const {
  std::uint64_t q = field()->q();
  switch (fam_) {
    case Family::quadratic:
      return;  // odd characteristic enforced at construction
    case Family::cubic:
      if (q % 3 != 2) throw std::domain_error("cubic family Frobenius needs q = 2 mod 3, got q=" + std::to_string(q));
      return;
    case Family::quartic:
      if (q % 4 != 3) throw std::domain_error("quartic family Frobenius needs q = 3 mod 4, got q=" + std::to_string(q));
      return;
    case Family::sextic:
      if (q % 3 == 0) throw std::domain_error("sextic family Frobenius needs 3 not dividing q, got q=" + std::to_string(q));
      return;
  }
}

FPoint TwistCurve::frobenius_step(const FPoint& p) const {
  check_congruence();
  if (p.is_infinity()) return p;
  std::uint64_t q = field()->q();
  std::uint64_t q2 = q * q;
  RatFunc x, y;
  switch (fam_) {
    case Family::quadratic:
      x = p.x().pow(static_cast<std::int64_t>(q));
      y = RatFunc(a_.pow((q - 1) / 2)) * p.y().pow(static_cast<std::int64_t>(q));
      break;
    case Family::cubic:
      x = RatFunc(a_.pow((q2 - 1) / 3)) * p.x().pow(static_cast<std::int64_t>(q2));
      y = p.y().pow(static_cast<std::int64_t>(q2));
      break;
    case Family::quartic:
      x = RatFunc(a_.pow((q2 - 1) / 2)) * p.x().pow(static_cast<std::int64_t>(q2));
      y = RatFunc(a_.pow(3 * (q2 - 1) / 4)) * p.y().pow(static_cast<std::int64_t>(q2));
      break;
    case Family::sextic:
      x = RatFunc(a_.pow((q2 - 1) / 3)) * p.x().pow(static_cast<std::int64_t>(q2));
      y = RatFunc(a_.pow((q2 - 1) / 2)) * p.y().pow(static_cast<std::int64_t>(q2));
      break;
  }
  FPoint img(std::move(x), std::move(y));
  if (contains(p) && !contains(img)) throw std::logic_error("frobenius_step left the curve");
  return img;
}

std::optional<FPoint> TwistCurve::frobenius_preimage(const FPoint& p) const {
  check_congruence();
  if (p.is_infinity()) return p;
  std::uint64_t q = field()->q();
  std::uint64_t q2 = q * q;
  std::optional<RatFunc> x0, y0;
  switch (fam_) {
    case Family::quadratic:
      x0 = rf_frobenius_root(p.x(), q);
      y0 = rf_frobenius_root(p.y() / RatFunc(a_.pow((q - 1) / 2)), q);
      break;
    case Family::cubic:
      x0 = rf_frobenius_root(p.x() / RatFunc(a_.pow((q2 - 1) / 3)), q2);
      y0 = rf_frobenius_root(p.y(), q2);
      break;
    case Family::quartic:
      x0 = rf_frobenius_root(p.x() / RatFunc(a_.pow((q2 - 1) / 2)), q2);
      y0 = rf_frobenius_root(p.y() / RatFunc(a_.pow(3 * (q2 - 1) / 4)), q2);
      break;
    case Family::sextic:
      x0 = rf_frobenius_root(p.x() / RatFunc(a_.pow((q2 - 1) / 3)), q2);
      y0 = rf_frobenius_root(p.y() / RatFunc(a_.pow((q2 - 1) / 2)), q2);
      break;
  }
  if (!x0 || !y0) return std::nullopt;
  FPoint cand(std::move(*x0), std::move(*y0));
  if (!contains(cand)) return std::nullopt;
  return cand;
}

bool TwistCurve::is_separable(const FPoint& p) const {
  if (p.is_infinity() || p.is_constant()) {
    throw std::invalid_argument("separability is defined for non-constant points");
  }
  if (!contains(p)) throw std::invalid_argument("is_separable: point off-curve");
  switch (fam_) {
    case Family::quadratic:
      return !p.x().derivative().is_zero();
    case Family::cubic:
      if (!p.y().derivative().is_zero()) return true;
      return !frobenius_preimage(p).has_value();
    case Family::quartic:
    case Family::sextic:
      return !frobenius_preimage(p).has_value();
  }
  return false;
}

std::pair<FPoint, unsigned> TwistCurve::orbit_root(const FPoint& p) const {
  if (p.is_infinity() || p.is_constant()) {
    throw std::invalid_argument("orbit_root is defined for non-constant points");
  }
  FPoint cur = p;
  unsigned idx = 0;
  for (;;) {
    auto pre = frobenius_preimage(cur);
    if (!pre || *pre == cur) return {cur, idx};
    cur = *pre;
    ++idx;
    if (idx > 64) throw std::logic_error("orbit_root: descent did not terminate");
  }
}

bool is_supersingular(const Poly& f) {
  const auto& k = f.field();
  std::uint64_t q = k->q(), p = k->p();
  std::uint64_t n = 1;  // point at infinity
  if (p == 2) {
    // y^2 - y = f(x); affine solutions per x: 2 if Tr(f(x)) = 0, else 0
    for (elem x = 0; x < q; ++x) {
      elem c = f.eval(x);
      elem tr = 0, cp = c;
      for (unsigned i = 0; i < k->l(); ++i) {
        tr = k->add(tr, cp);
        cp = k->mul(cp, cp);
      }
      if (tr == 0) n += 2;
    }
  } else {
    if (f.deg() != 3) throw std::invalid_argument("is_supersingular: f must be cubic");
    if (!squarefree(f)) throw std::invalid_argument("is_supersingular: singular cubic");
    for (elem x = 0; x < q; ++x) {
      elem c = f.eval(x);
      if (c == 0) {
        n += 1;
      } else if (k->is_residue(c, 2)) {
        n += 2;
      }
    }
  }
  std::int64_t trace = static_cast<std::int64_t>(q) + 1 - static_cast<std::int64_t>(n);
  return (trace % static_cast<std::int64_t>(p)) == 0;
}

}  // namespace isotwist
