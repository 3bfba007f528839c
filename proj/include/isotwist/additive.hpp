#pragma once

#include "isotwist/poly.hpp"

namespace isotwist {

// A(t) = sum a_i t^{q^i} with a_i in F_q; the a_i are stored as the
// coefficient vector of A in powers of the q-Frobenius.  Under composition
// these form a ring isomorphic to F_q[t] (coefficients of F_q are fixed by
// the Frobenius, so composition is plain multiplication of F-coefficient
// vectors).
class AdditivePoly {
public:
  AdditivePoly() = default;
  AdditivePoly(FieldPtr f, std::vector<elem> fcoeffs);

  const FieldPtr& field() const { return f_; }
  const std::vector<elem>& fcoeffs() const { return fc_; }
  bool is_zero() const { return fc_.empty(); }

  // Dense expansion: sum a_i t^{q^i}.  Degree q^n; keep n small.
  Poly expand() const;

  // Evaluates the induced map on an extension of F_q, coefficients carried
  // through the embedding.
  elem eval_in(const Embedding& e, elem x) const;

  AdditivePoly operator+(const AdditivePoly& o) const;
  bool operator==(const AdditivePoly& o) const;
  bool operator!=(const AdditivePoly& o) const { return !(*this == o); }

private:
  void trim();
  FieldPtr f_;
  std::vector<elem> fc_;
};

// P = sum a_i t^i  ->  A = sum a_i F^i (the ring isomorphism).
AdditivePoly ap_from_poly(const Poly& p);
Poly ap_to_poly(const AdditivePoly& a);

// A(B(t)); equals ap_from_poly(ap_to_poly(A) * ap_to_poly(B)).
AdditivePoly ap_compose(const AdditivePoly& a, const AdditivePoly& b);

// T^n_k = sum_{i < n/k} F^{ki}; as a map F_{q^n} -> F_{q^n} it is the field
// trace down to F_{q^k}.  Requires k | n.
AdditivePoly trace_poly(const FieldPtr& f, std::uint64_t n, std::uint64_t k);

// Given (t^k - 1) | A0 in F_q[t], returns B with B_poly = A0 / (t^k - 1),
// so that A0(F)(t) = B(t)^{q^k} - B(t) identically.  The identity is
// verified before returning.
AdditivePoly ap_divisor_witness(const Poly& a0, std::uint64_t k);

}  // namespace isotwist
