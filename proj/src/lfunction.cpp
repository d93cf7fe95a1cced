#include "superjac/lfunction.hpp"

#include <algorithm>
#include <numeric>

#include "superjac/parallel.hpp"

namespace superjac {

namespace {

// Polynomial in U with coefficients in Z[zeta_M], each of length phi(M).
struct CPoly {
  std::vector<std::vector<mpz_class>> c;
};

CPoly cpoly_mul(const CPoly& a, const CPoly& b, const CyclotomicRing& ring) {
  const std::size_t phi = ring.phi, S = 2 * phi - 1;
  auto pack = [&](const CPoly& x) {
    std::vector<mpz_class> v(x.c.size() * S);
    for (std::size_t k = 0; k < x.c.size(); ++k)
      for (std::size_t e = 0; e < phi; ++e) v[k * S + e] = x.c[k][e];
    return v;
  };
  std::vector<mpz_class> prod = kronecker_mul(pack(a), pack(b));
  const std::size_t deg = a.c.size() + b.c.size() - 2;
  CPoly out;
  out.c.resize(deg + 1);
  for (std::size_t k = 0; k <= deg; ++k) {
    std::vector<mpz_class> slot(S);
    for (std::size_t e = 0; e < S && k * S + e < prod.size(); ++e) slot[e] = std::move(prod[k * S + e]);
    reduce_mod_phi(slot, ring);
    out.c[k] = std::move(slot);
  }
  return out;
}

}  // namespace

LPolynomial expand_factors(const std::vector<LFactor>& factors, const mpz_class& r) {
  LPolynomial L;
  L.r = r;
  if (factors.empty()) {
    L.coeffs = {mpz_class(1)};
    return L;
  }
  u64 g = 0, M = 1;
  std::vector<LFactor> fs;
  fs.reserve(factors.size());
  for (const auto& f : factors) {
    if (f.size == 0) throw std::invalid_argument("factor of size 0");
    g = std::gcd(g, f.size);
    fs.push_back({f.size, f.omega.compress()});
    M = std::lcm(M, fs.back().omega.conductor());
  }
  std::stable_sort(fs.begin(), fs.end(), [](const LFactor& x, const LFactor& y) { return x.size < y.size; });
  const CyclotomicRing& ring = cyclotomic_ring(M);

  std::vector<CPoly> level(fs.size());
  for (std::size_t k = 0; k < fs.size(); ++k) {
    CPoly& p = level[k];
    p.c.assign(fs[k].size / g + 1, std::vector<mpz_class>(ring.phi));
    p.c[0][0] = 1;
    CycElt w = fs[k].omega.lift(M);
    for (std::size_t e = 0; e < ring.phi; ++e) p.c.back()[e] = -w.coeffs()[e];
  }
  while (level.size() > 1) {
    std::vector<CPoly> next((level.size() + 1) / 2);
    parallel_for(next.size(), 1, [&](std::size_t b, std::size_t e, std::size_t) {
      for (std::size_t k = b; k < e; ++k)
        next[k] = 2 * k + 1 < level.size() ? cpoly_mul(level[2 * k], level[2 * k + 1], ring) : std::move(level[2 * k]);
    });
    level = std::move(next);
  }

  const CPoly& P = level[0];
  L.coeffs.assign((P.c.size() - 1) * g + 1, mpz_class(0));
  for (std::size_t k = 0; k < P.c.size(); ++k) {
    for (std::size_t e = 1; e < ring.phi; ++e)
      if (P.c[k][e] != 0) throw std::logic_error("L-polynomial coefficient is not a rational integer");
    L.coeffs[k * g] = P.c[k][0];
  }
  return L;
}

LPolynomial l_polynomial(const CurveParams& c, const std::vector<Orbit>& orbits,
                         const std::vector<OmegaValue>& omegas) {
  if (orbits.size() != omegas.size()) throw std::invalid_argument("orbit and omega lists differ in length");
  std::vector<LFactor> fs;
  fs.reserve(orbits.size());
  std::size_t missing = 0;
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    if (!omegas[k].value) {
      ++missing;
      continue;
    }
    fs.push_back({orbits[k].size, *omegas[k].value});
  }
  if (missing) throw UnresolvedOrbits(std::to_string(missing) + " orbit values could not be computed exactly");
  return expand_factors(fs, c.r());
}

std::optional<int> functional_equation_sign(const LPolynomial& L) {
  const std::size_t b = L.degree();
  if (L.coeffs.empty()) return std::nullopt;
  std::vector<mpz_class> rp(b + 1);
  rp[0] = 1;
  for (std::size_t k = 1; k <= b; ++k) rp[k] = rp[k - 1] * L.r;
  for (int w : {1, -1}) {
    bool ok = true;
    for (std::size_t k = 0; 2 * k <= b && ok; ++k) ok = L.coeffs[b - k] == w * rp[b - 2 * k] * L.coeffs[k];
    if (ok) return w;
  }
  return std::nullopt;
}

namespace {

// Divides by (1 - rT) if it is a factor.
bool divide_linear(std::vector<mpz_class>& c, const mpz_class& r) {
  if (c.size() < 2) return false;
  const std::size_t b = c.size() - 1;
  std::vector<mpz_class> q(b);
  q[0] = c[0];
  for (std::size_t k = 1; k < b; ++k) q[k] = c[k] + r * q[k - 1];
  if (c[b] + r * q[b - 1] != 0) return false;
  c = std::move(q);
  return true;
}

}  // namespace

unsigned vanishing_order(const LPolynomial& L) { return special_value(L).vanishing_order; }

SpecialValue special_value(const LPolynomial& L) {
  SpecialValue sv;
  std::vector<mpz_class> c = L.coeffs;
  while (divide_linear(c, L.r)) ++sv.vanishing_order;
  // sum c_k r^{-k} = (sum c_k r^{n-k}) / r^n, Horner from the constant term
  mpz_class acc = 0, rpow = 1;
  for (const auto& x : c) acc = acc * L.r + x;
  for (std::size_t k = 1; k < c.size(); ++k) rpow *= L.r;
  sv.value = mpq_class(acc, rpow);
  sv.value.canonicalize();
  return sv;
}

const char* status_name(OrbitStatus s) {
  switch (s) {
    case OrbitStatus::contributes: return "contributes";
    case OrbitStatus::excluded_by_valuation: return "excluded_by_valuation";
    case OrbitStatus::excluded_by_value: return "excluded_by_value";
    case OrbitStatus::unresolved: return "unresolved";
  }
  return "?";
}

RankCertificate analytic_rank(const CurveParams& c, const std::vector<Orbit>& orbits,
                              const std::vector<OmegaValue>& omegas) {
  if (orbits.size() != omegas.size()) throw std::invalid_argument("orbit and omega lists differ in length");
  RankCertificate rc;
  rc.status.resize(orbits.size());
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    const bool val_one = valuation_of_omega(c, orbits[k]).total() == 1;
    const OmegaValue& w = omegas[k];
    if (!val_one) {
      if (w.value && w.contributes) throw std::logic_error("orbit contributes but its valuation is not |o|");
      rc.status[k] = OrbitStatus::excluded_by_valuation;
    } else if (!w.value) {
      rc.status[k] = OrbitStatus::unresolved;
      ++rc.unresolved;
    } else {
      rc.status[k] = w.contributes ? OrbitStatus::contributes : OrbitStatus::excluded_by_value;
    }
    if (rc.status[k] == OrbitStatus::contributes) ++rc.lower;
  }
  rc.upper = rc.lower + rc.unresolved;
  if (rc.unresolved == 0) rc.exact = rc.lower;
  return rc;
}

bool factor_weil_check(const CurveParams& c, const std::vector<Orbit>& orbits, const std::vector<OmegaValue>& omegas) {
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    if (!omegas[k].value) continue;
    const CycElt& w = *omegas[k].value;
    if (w * w.conjugate() != CycElt::integer(mpz_pow(c.p, 2ul * c.r_exp * orbits[k].size))) return false;
  }
  return true;
}

LFunctionData compute_lfunction(const CurveParams& c, const Budget& budget, u64 twist) {
  LFunctionData d;
  d.params = c;
  d.orbits = enumerate_orbits(c, budget);
  d.omegas = omega_all(c, d.orbits, setting_for(c, budget, twist));
  d.rank = analytic_rank(c, d.orbits, d.omegas);
  if (d.rank.unresolved == 0) d.L = l_polynomial(c, d.orbits, d.omegas);
  return d;
}

u64 alternative_twist(u64 p, unsigned max_degree) {
  for (u64 t = 2;; ++t) {
    // powers of p give Frobenius conjugates of x, the same generator on F_p
    u64 s = t;
    while (s % p == 0) s /= p;
    bool ok = s != 1;
    for (unsigned m = 1; m <= max_degree && ok; ++m) {
      mpz_class n = mpz_pow(p, m) - 1, g;
      mpz_class tt(static_cast<unsigned long>(t));
      mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), tt.get_mpz_t());
      ok = g == 1;
    }
    if (ok) return t;
  }
}

}  // namespace superjac
