#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace isotwist {

// Packed representation of an element of F_{p^l}: the base-p digits
// (c_0, ..., c_{l-1}) of the residue class, encoded as sum c_j p^j.
// Encodings range over [0, q) and enumerate the whole field.
using elem = std::uint64_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Upper bound for exhaustive scans (roots, non-residue searches, orthogonal
// group enumeration).  Overridable through the ISOTWIST_MAX_Q environment
// variable; defaults to 16384.
std::uint64_t max_scan_size();

// A finite field F_{p^l} with a fixed monic irreducible modulus of degree l
// over F_p.  The modulus is the lexicographically smallest irreducible, where
// the non-leading coefficient tuple (c_0, ..., c_{l-1}) is ordered as the
// base-p integer sum c_j p^j.  Immutable after construction.
class Field : public std::enable_shared_from_this<Field> {
public:
  static FieldPtr make(std::uint64_t p, unsigned l);

  // Builds a field with an explicit modulus (digits ascending, length l+1,
  // monic).  Irreducibility is verified.
  static FieldPtr make_with_modulus(std::uint64_t p, unsigned l,
                                    std::vector<std::uint64_t> modulus);

  std::uint64_t p() const { return p_; }
  unsigned l() const { return l_; }
  std::uint64_t q() const { return q_; }
  // Non-leading-first digits of the modulus, ascending degree, length l+1.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  elem zero() const { return 0; }
  elem one() const { return 1; }
  // Embeds an integer through the prime subfield.
  elem from_int(std::int64_t n) const;

  elem add(elem a, elem b) const;
  elem sub(elem a, elem b) const;
  elem neg(elem a) const;
  elem mul(elem a, elem b) const;
  elem inv(elem a) const;
  elem pow(elem a, std::uint64_t e) const;

  // m-th power residue test, m in {2, 3}.  Returns an m-th root when one
  // exists.  0 is always a residue with root 0.
  bool is_residue(elem a, unsigned m) const;
  std::optional<elem> mth_root(elem a, unsigned m) const;

  bool same(const Field& other) const;

  std::vector<std::uint64_t> digits(elem a) const;
  elem from_digits(const std::vector<std::uint64_t>& d) const;

  std::string to_string(elem a) const;

private:
  Field(std::uint64_t p, unsigned l, std::vector<std::uint64_t> modulus);

  std::uint64_t p_;
  unsigned l_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  std::vector<std::uint64_t> p_pows_;  // p^0 .. p^l
};

bool is_prime_u64(std::uint64_t n);

// Coefficient embedding F_{p^l} -> F_{p^{l*i}} obtained by mapping the
// generator of the small field to the smallest (in encoding order) root of
// its modulus inside the big field.
class Embedding {
public:
  Embedding(FieldPtr from, FieldPtr to);
  elem map(elem a) const;
  const FieldPtr& from() const { return from_; }
  const FieldPtr& to() const { return to_; }

private:
  FieldPtr from_;
  FieldPtr to_;
  std::vector<elem> gen_pows_;  // images of the small-field generator powers
};

}  // namespace isotwist
