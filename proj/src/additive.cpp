#include "isotwist/additive.hpp"

#include <stdexcept>

namespace isotwist {

AdditivePoly::AdditivePoly(FieldPtr f, std::vector<elem> fcoeffs)
    : f_(std::move(f)), fc_(std::move(fcoeffs)) {
  trim();
}

void AdditivePoly::trim() {
  while (!fc_.empty() && fc_.back() == 0) fc_.pop_back();
}

Poly AdditivePoly::expand() const {
  Poly r = Poly::zero(f_);
  std::uint64_t qpow = 1;
  for (std::size_t i = 0; i < fc_.size(); ++i) {
    if (fc_[i] != 0) {
      r = r + Poly::monomial(f_, fc_[i], static_cast<std::int64_t>(qpow));
    }
    qpow *= f_->q();
  }
  return r;
}

elem AdditivePoly::eval_in(const Embedding& e, elem x) const {
  if (!e.from()->same(*f_)) throw std::domain_error("embedding base mismatch");
  const auto& big = e.to();
  elem acc = 0;
  elem xp = x;
  for (std::size_t i = 0; i < fc_.size(); ++i) {
    acc = big->add(acc, big->mul(e.map(fc_[i]), xp));
    xp = big->pow(xp, f_->q());
  }
  return acc;
}

AdditivePoly AdditivePoly::operator+(const AdditivePoly& o) const {
  if (!f_->same(*o.f_)) throw std::domain_error("mixed fields");
  std::vector<elem> c(std::max(fc_.size(), o.fc_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    elem a = i < fc_.size() ? fc_[i] : 0;
    elem b = i < o.fc_.size() ? o.fc_[i] : 0;
    c[i] = f_->add(a, b);
  }
  return AdditivePoly(f_, std::move(c));
}

bool AdditivePoly::operator==(const AdditivePoly& o) const {
  return f_->same(*o.f_) && fc_ == o.fc_;
}

AdditivePoly ap_from_poly(const Poly& p) {
  return AdditivePoly(p.field(), p.coeffs());
}

Poly ap_to_poly(const AdditivePoly& a) {
  return Poly(a.field(), a.fcoeffs());
}

AdditivePoly ap_compose(const AdditivePoly& a, const AdditivePoly& b) {
  // coefficients lie in F_q and are Frobenius-fixed, so composition is
  // convolution of the F-coefficient vectors
  return ap_from_poly(ap_to_poly(a) * ap_to_poly(b));
}

AdditivePoly trace_poly(const FieldPtr& f, std::uint64_t n, std::uint64_t k) {
  if (k == 0 || n % k != 0) throw std::invalid_argument("trace_poly: k must divide n");
  std::vector<elem> c(static_cast<std::size_t>(n - k) + 1, 0);
  for (std::uint64_t i = 0; i * k < n; ++i) c[static_cast<std::size_t>(i * k)] = 1;
  return AdditivePoly(f, std::move(c));
}

AdditivePoly ap_divisor_witness(const Poly& a0, std::uint64_t k) {
  const auto& f = a0.field();
  Poly tk1 = Poly::monomial(f, 1, static_cast<std::int64_t>(k)) - Poly::constant(f, 1);
  auto [b, rem] = a0.divrem(tk1);
  if (!rem.is_zero()) throw std::invalid_argument("ap_divisor_witness: (t^k - 1) does not divide A0");
  AdditivePoly B = ap_from_poly(b);
  Poly bx = B.expand();
  std::uint64_t qk = 1;
  for (std::uint64_t i = 0; i < k; ++i) qk *= f->q();
  Poly lhs = ap_from_poly(a0).expand();
  if (bx.pow(qk) - bx != lhs) throw std::logic_error("ap_divisor_witness: identity check failed");
  return B;
}

}  // namespace isotwist
