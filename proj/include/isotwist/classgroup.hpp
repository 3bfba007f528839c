#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "isotwist/poly.hpp"

namespace isotwist {

using bigint = boost::multiprecision::cpp_int;

// Zeta data for the superelliptic curve s^m = A(t) over F_q:
// counts N_1..N_g over the extensions, genus, and the L-polynomial.
struct ZetaData {
  unsigned m;
  Poly a;
  std::uint64_t genus;
  std::vector<bigint> counts;       // N_1 .. N_g
  std::vector<bigint> l_coeffs;     // b_0 .. b_{2g}, b_0 = 1
  bigint jacobian_order;            // L(1)
};

// Number of points of the smooth projective model of s^m = A(t) over
// F_{q^i} (affine solutions plus the single totally ramified point at
// infinity).  Needs gcd(m, deg A) = 1 and gcd(m, q) = 1.
bigint curve_count(unsigned m, const Poly& a, unsigned i, unsigned jobs = 1);

// Counts over F_q .. F_{q^g}, Newton's identities, functional equation,
// Weil-interval sanity check.
ZetaData l_polynomial(unsigned m, const Poly& a, unsigned jobs = 1);

// Divisibility witnesses for the Jacobian order of s^m = t^{q^n} - t:
// required = (q+1)^{tau_odd(n)} divides L(1), plus the weaker m'-divisibility
// for every m' | q+1.
struct ClassRankReport {
  std::uint64_t q, n;
  unsigned m;
  unsigned tau_odd;
  ZetaData zeta;
  bigint required_divisor;
  bool verdict;
  struct MDiv {
    std::uint64_t m;
    bigint m_power;  // m^{tau_odd}
    bool divides;
  };
  std::vector<MDiv> m_divisibility;
  // The underlying isogeny decomposition gives order divisibility; the
  // subgroup-exponent refinement is not certified (E(F_q) has exponent
  // (q+1)/2 when q = 3 mod 4, not q+1).
  std::string note;
};
ClassRankReport class_rank_witness(const FieldPtr& f, std::uint64_t n, unsigned m,
                                   unsigned jobs = 1);

unsigned tau_odd(std::uint64_t n);

}  // namespace isotwist
