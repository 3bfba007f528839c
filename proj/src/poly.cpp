#include "isotwist/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace isotwist {

namespace {
void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a || !b || !a->same(*b)) {
    throw std::domain_error("operands belong to different fields");
  }
}
}  // namespace

Poly::Poly(FieldPtr f, std::vector<elem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(FieldPtr f, elem c) {
  Poly r(std::move(f));
  if (c != 0) r.c_ = {c};
  return r;
}

Poly Poly::monomial(FieldPtr f, elem c, std::int64_t degree) {
  Poly r(std::move(f));
  if (c != 0) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
    r.c_.assign(static_cast<std::size_t>(degree) + 1, 0);
    r.c_.back() = c;
  }
  return r;
}

Poly Poly::from_ints(FieldPtr f, const std::vector<std::int64_t>& coeffs) {
  std::vector<elem> c(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = f->from_int(coeffs[i]);
  return Poly(std::move(f), std::move(c));
}

elem Poly::lc() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
  require_same_field(f_, o.f_);
  std::vector<elem> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    elem a = i < c_.size() ? c_[i] : 0;
    elem b = i < o.c_.size() ? o.c_[i] : 0;
    c[i] = f_->add(a, b);
  }
  return Poly(f_, std::move(c));
}

Poly Poly::operator-() const {
  std::vector<elem> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = f_->neg(c_[i]);
  return Poly(f_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  require_same_field(f_, o.f_);
  if (is_zero() || o.is_zero()) return Poly::zero(f_);
  std::vector<elem> c(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      c[i + j] = f_->add(c[i + j], f_->mul(c_[i], o.c_[j]));
    }
  }
  return Poly(f_, std::move(c));
}

Poly Poly::scaled(elem c) const {
  if (c == 0) return Poly::zero(f_);
  std::vector<elem> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = f_->mul(c_[i], c);
  return Poly(f_, std::move(r));
}

Poly Poly::shifted(std::int64_t k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return *this;
  std::vector<elem> c(c_.size() + static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) c[i + static_cast<std::size_t>(k)] = c_[i];
  return Poly(f_, std::move(c));
}

bool Poly::operator==(const Poly& o) const {
  return f_->same(*o.f_) && c_ == o.c_;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& b) const {
  require_same_field(f_, b.f_);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (deg() < b.deg()) return {Poly::zero(f_), *this};
  elem lcinv = f_->inv(b.lc());
  std::vector<elem> rem = c_;
  std::vector<elem> quo(c_.size() - b.c_.size() + 1, 0);
  for (std::size_t k = rem.size(); k >= b.c_.size(); --k) {
    elem coef = rem[k - 1];
    if (coef == 0) continue;
    elem qc = f_->mul(coef, lcinv);
    std::size_t shift = k - b.c_.size();
    quo[shift] = qc;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      rem[shift + j] = f_->sub(rem[shift + j], f_->mul(qc, b.c_[j]));
    }
  }
  return {Poly(f_, std::move(quo)), Poly(f_, std::move(rem))};
}

bool Poly::divisible_by(const Poly& b) const { return divrem(b).second.is_zero(); }

Poly Poly::gcd(const Poly& b) const {
  Poly x = *this, y = b;
  while (!y.is_zero()) {
    Poly r = x.divrem(y).second;
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return x.monic();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(f_->inv(lc()));
}

Poly Poly::compose(const Poly& inner) const {
  Poly r = Poly::zero(f_);
  for (std::size_t i = c_.size(); i-- > 0;) {
    r = r * inner + Poly::constant(f_, c_[i]);
  }
  return r;
}

elem Poly::eval(elem x) const {
  elem r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    r = f_->add(f_->mul(r, x), c_[i]);
  }
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly::zero(f_);
  std::vector<elem> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    c[i - 1] = f_->mul(c_[i], f_->from_int(static_cast<std::int64_t>(i % f_->p())));
  }
  return Poly(f_, std::move(c));
}

Poly Poly::pow(std::uint64_t e) const {
  Poly r = Poly::constant(f_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::optional<Poly> Poly::sqrt() const {
  if (is_zero()) return *this;
  if (deg() % 2 != 0) return std::nullopt;
  const std::int64_t m = deg() / 2;
  if (f_->p() == 2) {
    // squaring is the Frobenius composed with index doubling
    std::vector<elem> s(static_cast<std::size_t>(m) + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (i % 2 != 0) return std::nullopt;
      s[i / 2] = f_->pow(c_[i], f_->q() / 2);
    }
    Poly cand(f_, std::move(s));
    if (cand * cand == *this) return cand;
    return std::nullopt;
  }
  auto lroot = f_->mth_root(lc(), 2);
  if (!lroot) return std::nullopt;
  // coefficient matching from the top; 2 is invertible
  std::vector<elem> s(static_cast<std::size_t>(m) + 1, 0);
  s[static_cast<std::size_t>(m)] = *lroot;
  elem twolead_inv = f_->inv(f_->mul(f_->from_int(2), *lroot));
  for (std::int64_t j = m - 1; j >= 0; --j) {
    // coefficient of t^{m+j} in s^2 from known entries i,k in (j, m], i+k = m+j
    elem acc = 0;
    for (std::int64_t i = j + 1; i <= m; ++i) {
      std::int64_t k = m + j - i;
      if (k <= j || k > m || k < i) continue;
      elem term = f_->mul(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(k)]);
      if (i != k) term = f_->mul(term, f_->from_int(2));
      acc = f_->add(acc, term);
    }
    elem target = coeff(m + j);
    s[static_cast<std::size_t>(j)] = f_->mul(f_->sub(target, acc), twolead_inv);
  }
  Poly cand(f_, std::move(s));
  if (cand * cand == *this) return cand;
  return std::nullopt;
}

std::optional<Poly> Poly::nth_root_frobenius(std::uint64_t n) const {
  if (is_zero()) return *this;
  std::vector<elem> r(c_.size() / static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (i % n != 0) return std::nullopt;
    r[i / n] = c_[i];
  }
  Poly cand(f_, std::move(r));
  // valid when coefficients are fixed by x -> x^n (n a power of q)
  if (cand.pow(n) == *this) return cand;
  return std::nullopt;
}

std::vector<elem> Poly::roots() const {
  if (is_zero()) throw std::domain_error("roots of the zero polynomial");
  if (f_->q() > max_scan_size()) {
    throw std::runtime_error("roots: field exceeds the exhaustive-scan bound");
  }
  std::vector<elem> out;
  Poly cur = *this;
  for (elem x = 0; x < f_->q(); ++x) {
    while (!cur.is_constant() && cur.eval(x) == 0) {
      Poly lin(f_, {f_->neg(x), 1});
      auto [q, r] = cur.divrem(lin);
      cur = q;
      out.push_back(x);
    }
  }
  return out;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << f_->to_string(c_[i]);
    if (i > 0) {
      if (c_[i] != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), 1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RatFunc::normalize() {
  require_same_field(num_.field(), den_.field());
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.field(), 1);
    return;
  }
  Poly g = num_.gcd(den_);
  if (g.deg() > 0) {
    num_ = num_.divrem(g).first;
    den_ = den_.divrem(g).first;
  }
  elem lcinv = num_.field()->inv(den_.lc());
  num_ = num_.scaled(lcinv);
  den_ = den_.scaled(lcinv);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r = RatFunc(Poly::constant(field(), 1));
  RatFunc base = *this;
  std::uint64_t k = static_cast<std::uint64_t>(e);
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

RatFunc RatFunc::derivative() const {
  Poly n = num_.derivative() * den_ - num_ * den_.derivative();
  return RatFunc(std::move(n), den_ * den_);
}

bool RatFunc::operator==(const RatFunc& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

RatFunc RatFunc::eval_poly(const Poly& p, const RatFunc& x) {
  RatFunc r = RatFunc::zero(x.field());
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    r = r * x + RatFunc::constant(x.field(), p.coeffs()[i]);
  }
  return r;
}

std::string RatFunc::to_string(const std::string& var) const {
  if (is_poly()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace isotwist
