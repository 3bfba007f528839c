#include "isotwist/delsarte.hpp"

#include <numeric>
#include <stdexcept>

namespace isotwist {

namespace {

std::int64_t det3(const std::array<std::array<std::int64_t, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::int64_t cofactor(const IMat4& a, int r, int c) {
  std::array<std::array<std::int64_t, 3>, 3> m{};
  int mi = 0;
  for (int i = 0; i < 4; ++i) {
    if (i == r) continue;
    int mj = 0;
    for (int j = 0; j < 4; ++j) {
      if (j == c) continue;
      m[mi][mj++] = a[i][j];
    }
    ++mi;
  }
  std::int64_t s = ((r + c) % 2 == 0) ? 1 : -1;
  return s * det3(m);
}

std::int64_t det4(const IMat4& a) {
  std::int64_t d = 0;
  for (int j = 0; j < 4; ++j) d += a[0][j] * cofactor(a, 0, j);
  return d;
}

// lowest nonzero exponent
std::int64_t valuation(const Poly& p) {
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i] != 0) return static_cast<std::int64_t>(i);
  }
  throw std::domain_error("valuation of zero");
}

bool is_t_power(const Poly& p, std::int64_t& e) {
  if (p.is_zero()) return false;
  std::int64_t v = valuation(p);
  if (v != p.deg()) return false;
  e = v;
  return true;
}

// t^i -> u^{i/e} when every exponent is divisible by e
std::optional<Poly> compress_exponents(const Poly& p, std::int64_t e) {
  if (p.is_zero()) return p;
  std::vector<elem> c(static_cast<std::size_t>(p.deg() / e) + 1, 0);
  for (std::int64_t i = 0; i <= p.deg(); ++i) {
    elem a = p.coeff(i);
    if (a == 0) continue;
    if (i % e != 0) return std::nullopt;
    c[static_cast<std::size_t>(i / e)] = a;
  }
  return Poly(p.field(), std::move(c));
}

}  // namespace

IMat4 identity_mat4() {
  IMat4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1;
  return m;
}

IMat4 diag_mat4(std::int64_t d0, std::int64_t d1, std::int64_t d2, std::int64_t d3) {
  IMat4 m{};
  m[0][0] = d0; m[1][1] = d1; m[2][2] = d2; m[3][3] = d3;
  return m;
}

std::pair<std::int64_t, MonomialMap> fermat_cover(const IMat4& a, const IMat4& c) {
  std::int64_t det = det4(a);
  if (det == 0) throw std::invalid_argument("fermat_cover: singular exponent matrix");
  // adj(A) * C, so that A^{-1} C = M / det
  IMat4 adj{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) adj[i][j] = cofactor(a, j, i);
  IMat4 m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) m[i][j] += adj[i][k] * c[k][j];
  std::int64_t d = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      std::int64_t g = std::gcd(std::llabs(det), std::llabs(m[i][j]));
      std::int64_t need = std::llabs(det) / (g == 0 ? std::llabs(det) : g);
      d = std::lcm(d, need);
    }
  MonomialMap map{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) map.b[i][j] = d * m[i][j] / det;
  return {d, map};
}

ParamCurve apply_map(const FieldPtr& f, const MonomialMap& m, const ParamCurve& g) {
  ParamCurve out;
  for (int i = 0; i < 4; ++i) {
    RatFunc r = RatFunc::constant(f, 1);
    for (int j = 0; j < 4; ++j) {
      std::int64_t e = m.b[i][j];
      if (e == 0) continue;
      if (g[j].is_zero()) {
        if (e < 0) throw std::invalid_argument("apply_map: zero coordinate with negative exponent");
        r = RatFunc::zero(f);
        break;
      }
      r = r * g[j].pow(e);
    }
    out[i] = r;
  }
  return out;
}

ParamCurve normalize_projective(const ParamCurve& g) {
  // fiber coordinates 0..2 are projective; coordinate 3 is the base value
  std::int64_t minval = 0;
  bool seen = false;
  for (int i = 0; i < 3; ++i) {
    if (g[i].is_zero()) continue;
    std::int64_t de;
    if (!is_t_power(g[i].den(), de)) {
      throw std::invalid_argument("normalize_projective: non-Laurent coordinate");
    }
    std::int64_t v = valuation(g[i].num()) - de;
    if (!seen || v < minval) { minval = v; seen = true; }
  }
  if (!seen) throw std::invalid_argument("normalize_projective: zero fiber");
  const auto& f = g[3].is_zero() ? g[0].field() : g[3].field();
  RatFunc shift = RatFunc(Poly::x(f)).pow(-minval);
  ParamCurve out = g;
  for (int i = 0; i < 3; ++i) {
    if (!g[i].is_zero()) out[i] = g[i] * shift;
  }
  return out;
}

bool same_projective_class(const ParamCurve& g, const ParamCurve& h) {
  ParamCurve a = normalize_projective(g), b = normalize_projective(h);
  if (a[3] != b[3]) return false;
  int pivot = -1;
  for (int i = 0; i < 3; ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return false;
    if (pivot < 0 && !a[i].is_zero()) pivot = i;
  }
  if (pivot < 0) return false;
  RatFunc r = a[pivot] / b[pivot];
  if (!r.is_poly() || !r.num().is_constant()) return false;
  for (int i = 0; i < 3; ++i) {
    if (!a[i].is_zero() && a[i] != r * b[i]) return false;
  }
  return true;
}

bool on_surface(const DelsarteSurface& s, const ParamCurve& g) {
  RatFunc acc = RatFunc::zero(s.field);
  for (int i = 0; i < 4; ++i) {
    if (s.c[i] == 0) continue;
    RatFunc term = RatFunc::constant(s.field, s.c[i]);
    for (int j = 0; j < 4; ++j) {
      std::int64_t e = s.a[i][j];
      if (e == 0) continue;
      if (g[j].is_zero()) { term = RatFunc::zero(s.field); break; }
      term = term * g[j].pow(e);
    }
    acc = acc + term;
  }
  return acc.is_zero();
}

std::optional<FPoint> substitute_section(const ParamCurve& m) {
  ParamCurve n = normalize_projective(m);
  const RatFunc& base = n[3];
  std::int64_t e = 0;
  if (base.is_zero() || !base.is_poly() || !is_t_power(base.num(), e) || e <= 0) {
    throw std::invalid_argument("substitute_section: base is not a positive power of t");
  }
  if (n[2].is_zero()) throw std::invalid_argument("substitute_section: Z = 0 fiber coordinate");
  RatFunc xs = n[0] / n[2];
  RatFunc ys = n[1] / n[2];
  auto conv = [&](const RatFunc& r) -> std::optional<RatFunc> {
    auto nn = compress_exponents(r.num(), e);
    if (!nn) return std::nullopt;
    auto dd = compress_exponents(r.den(), e);
    if (!dd) return std::nullopt;
    return RatFunc(*nn, *dd);
  };
  auto xr = conv(xs);
  if (!xr) return std::nullopt;
  auto yr = conv(ys);
  if (!yr) return std::nullopt;
  return FPoint(*xr, *yr);
}

namespace {

RatFunc rf_poly(const FieldPtr& f, const std::vector<std::int64_t>& c) {
  return RatFunc(Poly::from_ints(f, c));
}

RatFunc rf_mono(const FieldPtr& f, std::int64_t e) {
  return RatFunc(Poly::monomial(f, 1, e));
}

RatFunc rf_one(const FieldPtr& f) { return RatFunc::constant(f, 1); }

std::vector<DelsarteExample> build_registry() {
  std::vector<DelsarteExample> reg;

  {  // (t^7 - t) y^2 = x^3 - x over F_7, covered by the degree-12 Fermat surface
    auto f = Field::make(7, 1);
    DelsarteExample ex;
    ex.name = "quad-t7";
    ex.target.field = f;
    ex.target.a = {{{0, 2, 1, 7}, {0, 2, 1, 1}, {3, 0, 0, 0}, {1, 0, 2, 0}}};
    ex.target.c = {1, f->from_int(-1), f->from_int(-1), 1};
    ex.cover_c = identity_mat4();
    ex.cover_d = 12;
    DelsarteExample::Line l;
    l.line = {rf_mono(f, 1), rf_one(f), rf_mono(f, 1), rf_one(f)};
    l.multisection = {rf_mono(f, 6), rf_mono(f, 2), rf_one(f), rf_mono(f, 2)};
    l.section = FPoint(rf_mono(f, 3), rf_mono(f, 1));
    ex.lines.push_back(l);
    Poly A = Poly::from_ints(f, {0, -1, 0, 0, 0, 0, 0, 1});
    ex.section_curve = TwistCurve::quadratic(A, Poly::from_ints(f, {0, -1, 0, 1}));
    reg.push_back(std::move(ex));
  }

  {  // y^2 - y = (t^5 - t) x^3 over F_5
    auto f = Field::make(5, 1);
    DelsarteExample ex;
    ex.name = "cubic-t5";
    ex.target.field = f;
    ex.target.a = {{{0, 2, 1, 0}, {0, 1, 2, 0}, {3, 0, 0, 5}, {3, 0, 0, 1}}};
    ex.target.c = {1, f->from_int(-1), f->from_int(-1), 1};
    ex.cover_c = identity_mat4();
    ex.cover_d = 12;
    DelsarteExample::Line l;
    l.line = {rf_mono(f, 1), rf_one(f), rf_mono(f, 1), rf_one(f)};
    l.multisection = {rf_mono(f, 3), rf_mono(f, 12), rf_one(f), rf_mono(f, 3)};
    l.section = FPoint(rf_mono(f, 1), rf_mono(f, 4));
    ex.lines.push_back(l);
    ex.section_curve = TwistCurve::cubic(Poly::from_ints(f, {0, -1, 0, 0, 0, 1}));
    reg.push_back(std::move(ex));
  }

  {  // y^2 = -x^3 + (t^6 + 1) over F_5, covered via C = diag(2,2,6,6)
    auto f = Field::make(5, 1);
    DelsarteExample ex;
    ex.name = "sextic-t6p1";
    ex.target.field = f;
    ex.target.a = {{{0, 2, 1, 0}, {3, 0, 0, 0}, {0, 0, 3, 6}, {0, 0, 3, 0}}};
    ex.target.c = {1, 1, f->from_int(-1), f->from_int(-1)};
    ex.cover_c = diag_mat4(2, 2, 6, 6);
    ex.cover_d = 3;
    DelsarteExample::Line l1;
    l1.line = {rf_mono(f, 3), rf_one(f), rf_mono(f, 1), rf_one(f)};
    l1.multisection = {rf_one(f), rf_mono(f, 9), rf_one(f), rf_mono(f, 3)};
    l1.section = FPoint(rf_one(f), rf_mono(f, 3));
    ex.lines.push_back(l1);
    DelsarteExample::Line l2;
    l2.line = {rf_one(f), rf_mono(f, 3), rf_mono(f, 1), rf_one(f)};
    l2.multisection = {rf_mono(f, 6), rf_one(f), rf_one(f), rf_mono(f, 3)};
    l2.section = FPoint(rf_mono(f, 2), rf_one(f));
    ex.lines.push_back(l2);
    ex.section_curve = TwistCurve::sextic(Poly::from_ints(f, {1, 0, 0, 0, 0, 0, 1}), -1);
    reg.push_back(std::move(ex));
  }

  {  // y^2 = -x^3 + (t^8 + 1) x over F_7, covered via C = diag(2,2,8,8)
    auto f = Field::make(7, 1);
    DelsarteExample ex;
    ex.name = "quartic-t8p1";
    ex.target.field = f;
    ex.target.a = {{{0, 2, 1, 0}, {3, 0, 0, 0}, {1, 0, 2, 8}, {1, 0, 2, 0}}};
    ex.target.c = {1, 1, f->from_int(-1), f->from_int(-1)};
    ex.cover_c = diag_mat4(2, 2, 8, 8);
    ex.cover_d = 6;
    DelsarteExample::Line l1;
    l1.line = {rf_mono(f, 4), rf_one(f), rf_mono(f, 1), rf_one(f)};
    l1.multisection = {rf_one(f), rf_mono(f, 24), rf_one(f), rf_mono(f, 6)};
    l1.section = FPoint(rf_one(f), rf_mono(f, 4));
    ex.lines.push_back(l1);
    DelsarteExample::Line l2;
    l2.line = {rf_one(f), rf_mono(f, 4), rf_mono(f, 1), rf_one(f)};
    l2.multisection = {rf_mono(f, 24), rf_mono(f, 12), rf_one(f), rf_mono(f, 6)};
    l2.section = FPoint(rf_mono(f, 4), rf_mono(f, 2));
    ex.lines.push_back(l2);
    // family model y^2 = x^3 - (u^8+1) x; surface points map in via x -> -x
    ex.section_curve = TwistCurve::quartic(Poly::from_ints(f, {1, 0, 0, 0, 0, 0, 0, 0, 1}));
    ex.section_x_sign = -1;
    reg.push_back(std::move(ex));
  }

  {  // y^2 = x^3 + (t^7 - t) x over F_7: multisection exists, no section
    auto f = Field::make(7, 1);
    DelsarteExample ex;
    ex.name = "quartic-t7";
    ex.target.field = f;
    ex.target.a = {{{0, 2, 1, 0}, {3, 0, 0, 0}, {1, 0, 2, 7}, {1, 0, 2, 1}}};
    ex.target.c = {1, f->from_int(-1), f->from_int(-1), 1};
    ex.cover_c = identity_mat4();
    ex.cover_d = 24;
    DelsarteExample::Line l;
    l.line = {rf_mono(f, 1), rf_one(f), rf_mono(f, 1), rf_one(f)};
    l.multisection = {rf_mono(f, 2), rf_mono(f, 15), rf_one(f), rf_mono(f, 4)};
    l.section = std::nullopt;
    ex.lines.push_back(l);
    reg.push_back(std::move(ex));
  }

  {  // (t^7 - t) y^2 = x^3 - 1 over F_7: multisection exists, no section
    auto f = Field::make(7, 1);
    DelsarteExample ex;
    ex.name = "quad-x3m1";
    ex.target.field = f;
    ex.target.a = {{{0, 2, 1, 7}, {0, 2, 1, 1}, {3, 0, 0, 0}, {0, 0, 3, 0}}};
    ex.target.c = {1, f->from_int(-1), f->from_int(-1), 1};
    ex.cover_c = identity_mat4();
    ex.cover_d = 12;
    DelsarteExample::Line l;
    l.line = {rf_mono(f, 1), rf_one(f), rf_mono(f, 1), rf_one(f)};
    // [t^4 : t^-1 : 1] cleared to polynomials
    l.multisection = {rf_mono(f, 5), rf_one(f), rf_mono(f, 1), rf_mono(f, 2)};
    l.section = std::nullopt;
    ex.lines.push_back(l);
    reg.push_back(std::move(ex));
  }

  return reg;
}

}  // namespace

const std::vector<DelsarteExample>& delsarte_registry() {
  static const std::vector<DelsarteExample> reg = build_registry();
  return reg;
}

}  // namespace isotwist
