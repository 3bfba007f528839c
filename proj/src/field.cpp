#include "isotwist/field.hpp"

#include <algorithm>
#include <numeric>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace isotwist {

std::uint64_t max_scan_size() {
  static const std::uint64_t cap = [] {
    if (const char* s = std::getenv("ISOTWIST_MAX_Q")) {
      return static_cast<std::uint64_t>(std::strtoull(s, nullptr, 10));
    }
    return std::uint64_t{16384};
  }();
  return cap;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

// Small dense polynomial arithmetic over F_p, used only for modulus
// selection.  Coefficients ascending, no trailing-zero guarantee needed.
using pvec = std::vector<std::uint64_t>;

void ptrim(pvec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

pvec pmulmod(const pvec& a, const pvec& b, const pvec& mod, std::uint64_t p) {
  pvec c(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
  }
  // mod is monic of degree m
  const std::size_t m = mod.size() - 1;
  while (c.size() > m) {
    std::uint64_t lead = c.back();
    std::size_t shift = c.size() - 1 - m;
    if (lead != 0) {
      for (std::size_t j = 0; j < m; ++j) {
        std::uint64_t t = (lead * mod[j]) % p;
        c[shift + j] = (c[shift + j] + p - t) % p;
      }
    }
    c.pop_back();
  }
  ptrim(c);
  return c;
}

pvec ppowmod(pvec base, std::uint64_t e, const pvec& mod, std::uint64_t p) {
  pvec r{1};
  while (e) {
    if (e & 1) r = pmulmod(r, base, mod, p);
    base = pmulmod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

pvec pgcd(pvec a, pvec b, std::uint64_t p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    // a mod b
    std::uint64_t lc = b.back();
    std::uint64_t lcinv = 1;
    for (std::uint64_t x = 1; x < p; ++x) {
      if ((x * lc) % p == 1) { lcinv = x; break; }
    }
    while (a.size() >= b.size() && !a.empty()) {
      std::uint64_t f = (a.back() * lcinv) % p;
      std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::uint64_t t = (f * b[j]) % p;
        a[shift + j] = (a[shift + j] + p - t) % p;
      }
      ptrim(a);
    }
    std::swap(a, b);
  }
  return a;
}

// Irreducibility of a monic polynomial of degree m over F_p: no factor of
// degree <= m/2, detected through gcd(f, x^{p^d} - x).
bool irreducible_fp(const pvec& f, std::uint64_t p) {
  const std::size_t m = f.size() - 1;
  if (m == 0) return false;
  if (m == 1) return true;
  pvec x{0, 1};
  pvec xp = x;
  for (std::size_t d = 1; d <= m / 2; ++d) {
    xp = ppowmod(xp, p, f, p);  // x^{p^d} mod f
    pvec diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    ptrim(diff);
    pvec g = pgcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

Field::Field(std::uint64_t p, unsigned l, std::vector<std::uint64_t> modulus)
    : p_(p), l_(l), modulus_(std::move(modulus)) {
  p_pows_.resize(l_ + 1);
  p_pows_[0] = 1;
  for (unsigned i = 1; i <= l_; ++i) p_pows_[i] = p_pows_[i - 1] * p_;
  q_ = p_pows_[l_];
}

FieldPtr Field::make(std::uint64_t p, unsigned l) {
  if (!is_prime_u64(p)) throw std::invalid_argument("field_make: p is not prime");
  if (l == 0) throw std::invalid_argument("field_make: extension degree must be >= 1");
  // guard 64-bit cardinality
  long double qd = 1;
  for (unsigned i = 0; i < l; ++i) qd *= static_cast<long double>(p);
  if (qd > 9.0e18L) throw std::invalid_argument("field_make: q does not fit in 64 bits");

  if (l == 1) {
    return FieldPtr(new Field(p, 1, {0, 1}));  // modulus t
  }
  std::uint64_t pl = 1;
  for (unsigned i = 0; i < l; ++i) pl *= p;
  for (std::uint64_t low = 0; low < pl; ++low) {
    pvec f(l + 1, 0);
    std::uint64_t v = low;
    for (unsigned j = 0; j < l; ++j) {
      f[j] = v % p;
      v /= p;
    }
    f[l] = 1;
    if (irreducible_fp(f, p)) {
      return FieldPtr(new Field(p, l, std::vector<std::uint64_t>(f.begin(), f.end())));
    }
  }
  throw std::logic_error("field_make: no irreducible modulus found");
}

FieldPtr Field::make_with_modulus(std::uint64_t p, unsigned l,
                                  std::vector<std::uint64_t> modulus) {
  if (!is_prime_u64(p)) throw std::invalid_argument("field: p is not prime");
  if (l == 0) throw std::invalid_argument("field: extension degree must be >= 1");
  if (modulus.size() != l + 1 || modulus[l] != 1) {
    throw std::invalid_argument("field: modulus must be monic of degree l");
  }
  for (auto c : modulus) {
    if (c >= p) throw std::invalid_argument("field: modulus digit out of range");
  }
  if (l > 1 && !irreducible_fp(modulus, p)) {
    throw std::invalid_argument("field: modulus is reducible");
  }
  return FieldPtr(new Field(p, l, std::move(modulus)));
}

elem Field::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return static_cast<elem>(r);
}

std::vector<std::uint64_t> Field::digits(elem a) const {
  std::vector<std::uint64_t> d(l_);
  for (unsigned i = 0; i < l_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

elem Field::from_digits(const std::vector<std::uint64_t>& d) const {
  if (d.size() != l_) throw std::invalid_argument("element digit vector has wrong length");
  elem a = 0;
  for (unsigned i = l_; i-- > 0;) {
    if (d[i] >= p_) throw std::invalid_argument("element digit out of range");
    a = a * p_ + d[i];
  }
  return a;
}

elem Field::add(elem a, elem b) const {
  if (l_ == 1) return (a + b) % p_;
  elem r = 0;
  for (unsigned i = 0; i < l_; ++i) {
    std::uint64_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    r += ((da + db) % p_) * p_pows_[i];
  }
  return r;
}

elem Field::sub(elem a, elem b) const { return add(a, neg(b)); }

elem Field::neg(elem a) const {
  if (l_ == 1) return (p_ - a) % p_;
  elem r = 0;
  for (unsigned i = 0; i < l_; ++i) {
    std::uint64_t da = a % p_;
    a /= p_;
    r += ((p_ - da) % p_) * p_pows_[i];
  }
  return r;
}

elem Field::mul(elem a, elem b) const {
  if (l_ == 1) return (a * b) % p_;
  std::uint64_t da[32], db[32], c[64] = {0};
  for (unsigned i = 0; i < l_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  for (unsigned i = 0; i < l_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < l_; ++j) {
      c[i + j] += da[i] * db[j];
    }
  }
  // reduce degrees 2l-2 .. l by the monic modulus
  for (unsigned k = 2 * l_ - 2 + 1; k-- > l_;) {
    std::uint64_t lead = c[k] % p_;
    if (lead == 0) continue;
    unsigned shift = k - l_;
    for (unsigned j = 0; j < l_; ++j) {
      if (modulus_[j] == 0) continue;
      c[shift + j] += p_ * p_ - lead * modulus_[j] % p_;
    }
    c[k] = 0;
  }
  elem r = 0;
  for (unsigned i = l_; i-- > 0;) {
    r = r * p_ + c[i] % p_;
  }
  return r;
}

elem Field::pow(elem a, std::uint64_t e) const {
  elem r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

elem Field::inv(elem a) const {
  if (a == 0) throw std::domain_error("division by zero in finite field");
  return pow(a, q_ - 2);
}

bool Field::same(const Field& other) const {
  return p_ == other.p_ && l_ == other.l_ && modulus_ == other.modulus_;
}

bool Field::is_residue(elem a, unsigned m) const {
  if (a == 0) return true;
  std::uint64_t g = std::gcd<std::uint64_t, std::uint64_t>(m, q_ - 1);
  if (g == 1) return true;
  return pow(a, (q_ - 1) / g) == 1;
}

std::optional<elem> Field::mth_root(elem a, unsigned m) const {
  if (a == 0) return elem{0};
  std::uint64_t g = std::gcd<std::uint64_t, std::uint64_t>(m, q_ - 1);
  if (q_ == 2) return a;  // x^m = x for both elements
  if (g == 1) {
    // m is invertible mod q-1
    std::uint64_t minv = 1;
    while ((minv * m) % (q_ - 1) != 1) ++minv;
    return pow(a, minv);
  }
  if (pow(a, (q_ - 1) / g) != 1) return std::nullopt;
  if (m == 2 && p_ != 2 && q_ % 4 == 3) {
    return pow(a, (q_ + 1) / 4);
  }
  if (q_ > max_scan_size()) {
    throw std::runtime_error("mth_root: field too large for exhaustive scan");
  }
  for (elem x = 0; x < q_; ++x) {
    if (pow(x, m) == a) return x;
  }
  return std::nullopt;
}

std::string Field::to_string(elem a) const {
  if (l_ == 1) return std::to_string(a);
  std::ostringstream os;
  os << "[";
  auto d = digits(a);
  for (unsigned i = 0; i < l_; ++i) {
    if (i) os << ",";
    os << d[i];
  }
  os << "]";
  return os.str();
}

Embedding::Embedding(FieldPtr from, FieldPtr to) : from_(std::move(from)), to_(std::move(to)) {
  if (from_->p() != to_->p() || to_->l() % from_->l() != 0) {
    throw std::invalid_argument("embedding: target is not an extension of the source");
  }
  if (from_->l() == 1) {
    gen_pows_ = {to_->one()};
    return;
  }
  // Find the smallest root (in encoding order) of the source modulus in the
  // target field.
  const auto& mod = from_->modulus();
  std::optional<elem> root;
  for (elem x = 0; x < to_->q(); ++x) {
    elem v = 0, xp = 1;
    for (std::size_t j = 0; j < mod.size(); ++j) {
      if (mod[j] != 0) v = to_->add(v, to_->mul(to_->from_int(static_cast<std::int64_t>(mod[j])), xp));
      xp = to_->mul(xp, x);
    }
    if (v == 0) { root = x; break; }
  }
  if (!root) throw std::logic_error("embedding: base modulus has no root in extension");
  gen_pows_.resize(from_->l());
  gen_pows_[0] = to_->one();
  for (unsigned j = 1; j < from_->l(); ++j) {
    gen_pows_[j] = to_->mul(gen_pows_[j - 1], *root);
  }
}

elem Embedding::map(elem a) const {
  if (from_->l() == 1) return to_->from_int(static_cast<std::int64_t>(a));
  auto d = from_->digits(a);
  elem r = 0;
  for (unsigned j = 0; j < from_->l(); ++j) {
    if (d[j] != 0) {
      r = to_->add(r, to_->mul(to_->from_int(static_cast<std::int64_t>(d[j])), gen_pows_[j]));
    }
  }
  return r;
}

}  // namespace isotwist
