#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isotwist/field.hpp"

namespace isotwist {

// Degree of the zero polynomial.  A sentinel, deliberately far from any
// ordinary degree so accidental arithmetic on it is loud.
inline constexpr std::int64_t kDegZero = std::numeric_limits<std::int64_t>::min();

// Dense univariate polynomial over a finite field.  Coefficients ascending,
// no trailing zeros; the zero polynomial has an empty coefficient vector.
// Immutable value type.
class Poly {
public:
  Poly() = default;
  explicit Poly(FieldPtr f) : f_(std::move(f)) {}
  Poly(FieldPtr f, std::vector<elem> coeffs);

  static Poly zero(FieldPtr f) { return Poly(std::move(f)); }
  static Poly constant(FieldPtr f, elem c);
  static Poly monomial(FieldPtr f, elem c, std::int64_t degree);
  // t
  static Poly x(FieldPtr f) { return monomial(std::move(f), 1, 1); }
  // Coefficients given as integers, embedded via the prime subfield.
  static Poly from_ints(FieldPtr f, const std::vector<std::int64_t>& coeffs);

  const FieldPtr& field() const { return f_; }
  const std::vector<elem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::int64_t deg() const {
    return c_.empty() ? kDegZero : static_cast<std::int64_t>(c_.size()) - 1;
  }
  elem coeff(std::int64_t i) const {
    return (i < 0 || i >= static_cast<std::int64_t>(c_.size())) ? 0 : c_[static_cast<std::size_t>(i)];
  }
  elem lc() const;
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(elem c) const;
  Poly shifted(std::int64_t k) const;  // * t^k, k >= 0
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // quotient, remainder; divisor must be nonzero
  std::pair<Poly, Poly> divrem(const Poly& b) const;
  bool divisible_by(const Poly& b) const;
  Poly gcd(const Poly& b) const;  // monic generator
  Poly compose(const Poly& inner) const;
  elem eval(elem x) const;
  Poly derivative() const;
  Poly pow(std::uint64_t e) const;
  Poly monic() const;

  // Exact square root in F_q[t] (including leading unit), if one exists.
  std::optional<Poly> sqrt() const;
  // Exact n-th root when every exponent is divisible by n and coefficients
  // are fixed by x -> x^n (used with n = q^e for Frobenius descent).
  std::optional<Poly> nth_root_frobenius(std::uint64_t n) const;

  // All roots in the coefficient field, with multiplicity, ascending
  // encoding order.  Exhaustive scan; requires q <= max_scan_size().
  std::vector<elem> roots() const;

  std::string to_string(const std::string& var = "t") const;

private:
  void trim();
  FieldPtr f_;
  std::vector<elem> c_;
};

// Normalized quotient of polynomials: den monic, gcd(num, den) = 1,
// zero represented as 0/1.
class RatFunc {
public:
  RatFunc() = default;
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);

  static RatFunc zero(const FieldPtr& f) { return RatFunc(Poly::zero(f)); }
  static RatFunc constant(const FieldPtr& f, elem c) { return RatFunc(Poly::constant(f, c)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldPtr& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.deg() == 0; }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inverse() const;
  RatFunc pow(std::int64_t e) const;  // negative exponents allowed
  RatFunc derivative() const;
  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  std::string to_string(const std::string& var = "t") const;

  // p evaluated at a rational-function argument (Horner).
  static RatFunc eval_poly(const Poly& p, const RatFunc& x);

private:
  void normalize();
  Poly num_;
  Poly den_;
};

}  // namespace isotwist
