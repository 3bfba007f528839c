#include "isotwist/analysis.hpp"

#include <algorithm>
#include <stdexcept>
#include <mutex>
#include <thread>

namespace isotwist {

namespace {

void require_poly_point(const FPoint& p) {
  if (p.is_infinity() || !p.is_integral()) {
    throw std::invalid_argument("expected an affine polynomial point");
  }
}

bool squarefree(const Poly& f) {
  Poly d = f.derivative();
  if (d.is_zero()) return f.is_constant();
  return f.gcd(d).is_constant();
}

void check_search_hypotheses(const Poly& a, const Poly& f) {
  if (a.deg() < 1 || a.deg() % 2 == 0) throw std::invalid_argument("A must have odd degree");
  if (!squarefree(a)) throw std::invalid_argument("A must be squarefree");
  if (f.deg() != 3 || !squarefree(f)) throw std::invalid_argument("f must be a squarefree cubic");
}

// beta with lhs = beta * rhs, when they are proportional by a constant
std::optional<elem> constant_ratio(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return std::nullopt;
  if (lhs.deg() != rhs.deg()) return std::nullopt;
  elem b = lhs.field()->mul(lhs.lc(), lhs.field()->inv(rhs.lc()));
  if (rhs.scaled(b) == lhs) return b;
  return std::nullopt;
}

}  // namespace

std::vector<FPoint> search_integral_points(const Poly& a, const Poly& f,
                                           std::int64_t lo, std::int64_t hi,
                                           unsigned jobs) {
  check_search_hypotheses(a, f);
  const auto& k = a.field();
  std::uint64_t q = k->q();
  std::int64_t d = a.deg();
  std::int64_t mlo = std::max<std::int64_t>((d + 2) / 3, lo);
  std::int64_t mhi = std::min<std::int64_t>(d - 2, hi);
  if (jobs == 0) jobs = 1;

  struct Hit {
    std::int64_t m;
    std::uint64_t idx;
    Poly f, g;
  };
  std::vector<Hit> hits;
  std::mutex mu;

  for (std::int64_t m = mlo; m <= mhi; ++m) {
    if ((m - d) % 2 != 0) continue;  // 3 deg F = d + 2 deg G forces the parity
    std::uint64_t total = 1;
    for (std::int64_t i = 0; i <= m; ++i) total *= q;
    auto worker = [&](std::uint64_t begin, std::uint64_t end) {
      std::vector<Hit> local;
      std::vector<elem> coeffs(static_cast<std::size_t>(m) + 1, 0);
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        std::uint64_t v = idx;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
          coeffs[i] = v % q;
          v /= q;
        }
        if (coeffs.back() == 0) continue;
        Poly F(k, coeffs);
        if (F.derivative().is_zero()) continue;
        Poly rhs = RatFunc::eval_poly(f, RatFunc(F)).num();
        auto [quo, rem] = rhs.divrem(a);
        if (!rem.is_zero()) continue;
        auto g = quo.sqrt();
        if (!g) continue;
        local.push_back(Hit{m, idx, F, *g});
      }
      std::lock_guard<std::mutex> lk(mu);
      for (auto& h : local) hits.push_back(std::move(h));
    };
    if (jobs == 1) {
      worker(0, total);
    } else {
      std::vector<std::thread> pool;
      std::uint64_t chunk = (total + jobs - 1) / jobs;
      for (unsigned t = 0; t < jobs; ++t) {
        std::uint64_t b = t * chunk, e = std::min<std::uint64_t>(total, b + chunk);
        if (b >= e) break;
        pool.emplace_back(worker, b, e);
      }
      for (auto& th : pool) th.join();
    }
  }

  std::sort(hits.begin(), hits.end(), [](const Hit& x, const Hit& y) {
    if (x.m != y.m) return x.m < y.m;
    return x.idx < y.idx;
  });
  std::vector<FPoint> out;
  for (const auto& h : hits) {
    Poly g1 = h.g, g2 = -h.g;
    if (g2.coeffs() < g1.coeffs()) std::swap(g1, g2);
    out.emplace_back(RatFunc(h.f), RatFunc(g1));
    out.emplace_back(RatFunc(h.f), RatFunc(g2));
  }
  return out;
}

GdfReport check_gdf(const Poly& a, const Poly& f, const FPoint& p) {
  check_search_hypotheses(a, f);
  require_poly_point(p);
  Poly F = p.x().num(), G = p.y().num();
  Poly Fp = F.derivative();
  if (Fp.is_zero()) throw std::invalid_argument("check_gdf: F' = 0");
  GdfReport r{};
  r.deg_f = F.deg();
  r.deg_a = a.deg();
  r.g_divides_fprime = !G.is_zero() && Fp.divisible_by(G);
  r.deg_lower = a.deg() <= 3 * F.deg();
  r.deg_upper = F.deg() < a.deg() - 1;
  return r;
}

EquivReport eqiv_conditions(const Poly& a, const Poly& f, const FPoint& p) {
  check_search_hypotheses(a, f);
  require_poly_point(p);
  const auto& k = a.field();
  Poly ap = a.derivative();
  if (!ap.is_constant() || ap.is_zero()) {
    throw std::invalid_argument("eqiv_conditions: A' must be a nonzero constant");
  }
  auto aroots = a.roots();
  if (static_cast<std::int64_t>(aroots.size()) != a.deg()) {
    throw std::invalid_argument("eqiv_conditions: A must split completely over the base field");
  }
  auto froots = f.roots();
  if (froots.size() != 3) {
    throw std::invalid_argument("eqiv_conditions: f must split completely over the base field");
  }
  Poly F = p.x().num(), G = p.y().num();
  Poly Fp = F.derivative();
  if (Fp.is_zero()) throw std::invalid_argument("eqiv_conditions: F' = 0");
  if (G.is_zero()) throw std::invalid_argument("eqiv_conditions: G = 0");

  EquivReport r{};
  r.cond_a = 2 * F.deg() <= a.deg() - 1;
  r.cond_b = 2 * G.deg() <= F.deg() - 1;
  auto beta = constant_ratio(G * G, Fp);
  r.cond_c = beta.has_value();
  r.beta = beta.value_or(0);
  r.consistent = (r.cond_a == r.cond_b) && (r.cond_b == r.cond_c);
  r.beta_symmetric = false;
  r.iso_arithmetic_progression = false;

  // roots in arithmetic progression: some root is the average of the others
  elem two_inv = k->inv(k->from_int(2));
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, l = (i + 2) % 3;
    if (froots[static_cast<std::size_t>(i)] ==
        k->mul(k->add(froots[static_cast<std::size_t>(j)], froots[static_cast<std::size_t>(l)]), two_inv)) {
      r.iso_arithmetic_progression = true;
    }
  }

  if (r.cond_a && r.cond_b && r.cond_c) {
    FactorStructure fs{};
    fs.gamma = ap.coeff(0);
    for (int i = 0; i < 3; ++i) fs.roots[static_cast<std::size_t>(i)] = froots[static_cast<std::size_t>(i)];
    for (int i = 0; i < 3; ++i) {
      Poly Fi = F - Poly::constant(k, fs.roots[static_cast<std::size_t>(i)]);
      Poly Ni = a.gcd(Fi);
      auto [quo, rem] = Fi.divrem(Ni);
      if (!rem.is_zero()) throw std::logic_error("eqiv_conditions: gcd(A, F - alpha) does not divide F - alpha");
      elem unit = quo.is_zero() ? 1 : quo.lc();
      auto si = quo.monic().sqrt();
      if (!si) throw std::logic_error("eqiv_conditions: (F - alpha)/N is not a unit times a square");
      fs.s[static_cast<std::size_t>(i)] = *si;
      fs.n[static_cast<std::size_t>(i)] = Ni.scaled(unit);
    }
    elem ginv = k->inv(fs.gamma);
    for (int kk = 0; kk < 3; ++kk) {
      int i = (kk + 1) % 3, j = (kk + 2) % 3;
      elem num = k->mul(k->sub(fs.roots[static_cast<std::size_t>(kk)], fs.roots[static_cast<std::size_t>(i)]),
                        k->sub(fs.roots[static_cast<std::size_t>(kk)], fs.roots[static_cast<std::size_t>(j)]));
      fs.beta[static_cast<std::size_t>(kk)] = k->mul(num, ginv);
    }
    for (int i = 0; i < 3 && !r.beta_symmetric; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (fs.beta[static_cast<std::size_t>(i)] == fs.beta[static_cast<std::size_t>(j)] &&
            fs.beta[static_cast<std::size_t>(i)] == r.beta) {
          r.beta_symmetric = true;
          break;
        }
      }
    }
    r.fs = std::move(fs);
  }
  return r;
}

GammaMap gamma_map(const Poly& a, const Poly& f, const FPoint& p) {
  require_poly_point(p);
  GammaMap g{p.x(), p.y(), false};
  g.verified = RatFunc(a) * g.y_coeff * g.y_coeff == RatFunc::eval_poly(f, g.x);
  if (!g.verified) throw std::invalid_argument("gamma_map: point is not on A y^2 = f(x)");
  return g;
}

IndependenceReport independence_certificate(const Poly& a, const Poly& f,
                                            const std::vector<FPoint>& points) {
  const auto& k = a.field();
  if (!is_supersingular(f)) {
    throw std::domain_error("independence_certificate: y^2 = f(x) is not supersingular");
  }
  IndependenceReport r{};
  for (const auto& p : points) {
    require_poly_point(p);
    Poly F = p.x().num(), G = p.y().num();
    Poly Fp = F.derivative();
    auto beta = constant_ratio(Fp, G * G);
    if (!beta) {
      throw std::domain_error("independence_certificate: F' is not a unit multiple of G^2");
    }
    r.phis.push_back(G.scaled(*beta));
  }
  // Gaussian elimination over F_q on the coefficient rows
  std::size_t cols = 0;
  for (const auto& phi : r.phis) cols = std::max(cols, phi.coeffs().size());
  std::vector<std::vector<elem>> rows;
  for (const auto& phi : r.phis) {
    std::vector<elem> row(cols, 0);
    std::copy(phi.coeffs().begin(), phi.coeffs().end(), row.begin());
    rows.push_back(std::move(row));
  }
  unsigned rank = 0;
  std::size_t col = 0;
  for (std::size_t rrow = 0; rrow < rows.size() && col < cols; ++col) {
    std::size_t piv = rrow;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rrow], rows[piv]);
    elem inv = k->inv(rows[rrow][col]);
    for (std::size_t j = col; j < cols; ++j) rows[rrow][j] = k->mul(rows[rrow][j], inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rrow || rows[i][col] == 0) continue;
      elem c = rows[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        rows[i][j] = k->sub(rows[i][j], k->mul(c, rows[rrow][j]));
      }
    }
    ++rrow;
    ++rank;
  }
  r.rank = rank;
  r.independent = (rank == points.size());
  return r;
}

}  // namespace isotwist
