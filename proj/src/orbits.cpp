#include "superjac/orbits.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "superjac/parallel.hpp"

namespace superjac {

u64 CurveParams::q_minus_1() const {
  if (!ipow_fits(p, q_exp, u64(1) << 62)) throw BudgetExceeded("q does not fit in a machine word");
  return ipow(p, q_exp) - 1;
}

std::string CurveParams::to_string() const {
  return "p=" + std::to_string(p) + " r=" + std::to_string(p) + "^" + std::to_string(r_exp) + " q=" +
         std::to_string(p) + "^" + std::to_string(q_exp) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
}

void validate(const CurveParams& c) {
  if (!is_prime(c.p)) throw InvalidParams("p is not prime");
  if (c.r_exp == 0 || c.q_exp == 0) throw InvalidParams("r and q exponents must be positive");
  if (c.a < 2 || c.b < 2) throw InvalidParams("a and b must be at least 2");
  if (gcd_u64(c.a, c.b) != 1) throw InvalidParams("gcd(a,b) ≠ 1");
  if (c.a % c.p == 0 || c.b % c.p == 0) throw InvalidParams("p divides ab");
}

OrbitSetting setting_for(const CurveParams& c, const Budget& budget, u64 twist) {
  OrbitSetting s;
  s.p = c.p;
  s.r_exp = c.r_exp;
  s.q_exp = c.q_exp;
  s.twist = twist;
  s.budget = budget;
  return s;
}

u64 kappa(u64 p, unsigned r_exp, u64 n, u64 i) {
  const u64 imod = i % n;
  if (imod == 0) throw std::invalid_argument("kappa: i = 0 mod n");
  const u64 np = n / gcd_u64(n, imod);
  return mult_order(powmod(p % np, r_exp, np), np);
}

namespace {

// r mod (q - 1): p^{q_exp} = 1 there.
u64 r_mod_units(const CurveParams& c, u64 N) { return N == 1 ? 0 : powmod(c.p, c.r_exp % c.q_exp, N); }

u64 alpha_orbit_length(u64 e, u64 rinv, u64 N) {
  if (N == 1) return 1;
  u64 len = 1;
  for (u64 x = mulmod(e, rinv, N); x != e; x = mulmod(x, rinv, N)) ++len;
  return len;
}

}  // namespace

std::vector<Orbit> enumerate_orbits(const CurveParams& c, const Budget& budget) {
  validate(c);
  const u64 N = c.q_minus_1();
  const u64 A = c.a - 1, B = c.b - 1;
  if (N > budget.orbit_elements || A * B > budget.orbit_elements / N)
    throw BudgetExceeded("orbit set exceeds enumeration budget");
  const u64 ra = powmod(c.p % c.a, c.r_exp, c.a), rb = powmod(c.p % c.b, c.r_exp, c.b);
  const u64 rinv = N == 1 ? 0 : invmod(r_mod_units(c, N), N);

  std::vector<u64> alpha_deg(N, 0);
  for (u64 e = 0; e < N; ++e) {
    if (alpha_deg[e]) continue;
    u64 len = alpha_orbit_length(e, rinv, N);
    u64 x = e;
    for (u64 k = 0; k < len; ++k, x = N == 1 ? 0 : mulmod(x, rinv, N)) alpha_deg[x] = len;
  }

  std::vector<std::uint8_t> seen(A * B * N, 0);
  auto slot = [&](u64 i, u64 j, u64 e) { return ((i - 1) * B + (j - 1)) * N + e; };
  std::vector<Orbit> out;
  for (u64 i = 1; i < c.a; ++i)
    for (u64 j = 1; j < c.b; ++j)
      for (u64 e = 0; e < N; ++e) {
        if (seen[slot(i, j, e)]) continue;
        Orbit o;
        o.i = i;
        o.j = j;
        o.alpha_exp = e;
        u64 ci = i, cj = j, ce = e, len = 0;
        do {
          seen[slot(ci, cj, ce)] = 1;
          ++len;
          ci = mulmod(ci, ra, c.a);
          cj = mulmod(cj, rb, c.b);
          ce = N == 1 ? 0 : mulmod(ce, rinv, N);
        } while (ci != i || cj != j || ce != e);
        o.size = len;
        o.alpha_degree = alpha_deg[e];
        o.size_a = std::lcm(kappa(c.p, c.r_exp, c.a, i), o.alpha_degree);
        o.size_b = std::lcm(kappa(c.p, c.r_exp, c.b, j), o.alpha_degree);
        out.push_back(o);
      }
  return out;
}

std::vector<std::array<u64, 3>> orbit_elements(const CurveParams& c, const Orbit& o) {
  const u64 N = c.q_minus_1();
  const u64 ra = powmod(c.p % c.a, c.r_exp, c.a), rb = powmod(c.p % c.b, c.r_exp, c.b);
  const u64 rinv = N == 1 ? 0 : invmod(r_mod_units(c, N), N);
  std::vector<std::array<u64, 3>> out;
  u64 ci = o.i, cj = o.j, ce = o.alpha_exp;
  do {
    out.push_back({ci, cj, ce});
    ci = mulmod(ci, ra, c.a);
    cj = mulmod(cj, rb, c.b);
    ce = N == 1 ? 0 : mulmod(ce, rinv, N);
  } while (ci != o.i || cj != o.j || ce != o.alpha_exp);
  return out;
}

PrimeOrbit project_a(const Orbit& o) { return {0, o.i, mpz_class(static_cast<unsigned long>(o.alpha_exp)), o.size_a}; }
PrimeOrbit project_b(const Orbit& o) { return {0, o.j, mpz_class(static_cast<unsigned long>(o.alpha_exp)), o.size_b}; }

PrimeOrbit canonical_prime_orbit(const OrbitSetting& s, const PrimeOrbit& o) {
  if (!mpz_fits_ulong_p(o.alpha_exp.get_mpz_t())) throw std::invalid_argument("alpha exponent too large");
  const u64 N = ipow(s.p, s.q_exp) - 1;
  const u64 rn = powmod(s.p % o.n, s.r_exp, o.n);
  const u64 rinv = N == 1 ? 0 : invmod(powmod(s.p, s.r_exp % s.q_exp, N), N);
  u64 bi = o.i % o.n, be = o.alpha_exp.get_ui();
  u64 ci = bi, ce = be;
  for (u64 k = 0; k < o.size; ++k) {
    ci = mulmod(ci, rn, o.n);
    ce = N == 1 ? 0 : mulmod(ce, rinv, N);
    if (ci < bi || (ci == bi && ce < be)) {
      bi = ci;
      be = ce;
    }
  }
  return {o.n, bi, mpz_class(static_cast<unsigned long>(be)), o.size};
}

const char* method_name(OmegaMethod m) {
  switch (m) {
    case OmegaMethod::joint_closed_form: return "joint_closed_form";
    case OmegaMethod::closed_form: return "closed_form";
    case OmegaMethod::direct: return "direct";
    case OmegaMethod::mixed: return "closed_form+direct";
    case OmegaMethod::unresolved: return "unresolved";
  }
  return "?";
}

bool joint_closed_form_applies(const CurveParams& c) {
  if (c.p == 2) return false;
  auto na = supersingular_nu(c.a, c.p), nb = supersingular_nu(c.b, c.p);
  return na && nb && c.r_exp % (4 * *na) == 0 && c.r_exp % (4 * *nb) == 0;
}

bool alpha_is_power(const OrbitSetting& s, u64 alpha_exp, unsigned deg, u64 n) {
  mpz_class E = alpha_exponent_in(s, mpz_class(static_cast<unsigned long>(alpha_exp)), deg);
  mpz_class units = mpz_pow(s.p, deg) - 1, d;
  mpz_class nn(static_cast<unsigned long>(n));
  mpz_gcd(d.get_mpz_t(), nn.get_mpz_t(), units.get_mpz_t());
  return E % d == 0;
}

namespace {

struct ComponentValue {
  std::optional<CycElt> value;
  bool closed = false;
  std::string note;
};

ComponentValue component_gauss(const OrbitSetting& s, const PrimeOrbit& po) {
  ComponentValue cv;
  if (auto cf = orbit_gauss_closed_form(s, po)) {
    cv.value = cf->value;
    cv.closed = true;
    return cv;
  }
  try {
    cv.value = orbit_gauss(s, po);
  } catch (const BudgetExceeded& e) {
    cv.note = e.what();
  }
  return cv;
}

OmegaValue joint_closed_form(const CurveParams& c, const Orbit& o, const OrbitSetting& s) {
  // r = 1 mod ab here, so |o| = |pi_a(o)| = |pi_b(o)| and F' = F_r(alpha)
  const unsigned D = static_cast<unsigned>(c.r_exp * o.size);
  mpz_class E = alpha_exponent_in(s, mpz_class(static_cast<unsigned long>(o.alpha_exp)), D);
  auto red = [&](u64 n) {
    mpz_class t = E % static_cast<unsigned long>(n);
    return t.get_ui();
  };
  const u64 ua = mulmod(o.i, red(c.a), c.a), ub = mulmod(o.j, red(c.b), c.b);
  OmegaValue ov;
  ov.method = OmegaMethod::joint_closed_form;
  ov.value = zeta(c.a, -static_cast<i64>(ua)) * zeta(c.b, -static_cast<i64>(ub)) * mpz_pow(c.p, D);
  ov.contributes = ua == 0 && ub == 0;
  return ov;
}

OmegaValue combine(const CurveParams& c, const Orbit& o, const ComponentValue& ga, const ComponentValue& gb) {
  OmegaValue ov;
  if (!ga.value || !gb.value) {
    ov.method = OmegaMethod::unresolved;
    ov.note = !ga.value ? ga.note : gb.note;
    return ov;
  }
  ov.method = ga.closed && gb.closed ? OmegaMethod::closed_form
              : (!ga.closed && !gb.closed) ? OmegaMethod::direct
                                           : OmegaMethod::mixed;
  CycElt w = ga.value->pow(o.nu_a()) * gb.value->pow(o.nu_b());
  ov.contributes = w == CycElt::integer(mpz_pow(c.p, static_cast<unsigned long>(c.r_exp) * o.size));
  ov.value = std::move(w);
  return ov;
}

}  // namespace

OmegaValue omega(const CurveParams& c, const Orbit& o, const OrbitSetting& s) {
  if (joint_closed_form_applies(c)) return joint_closed_form(c, o, s);
  PrimeOrbit pa = project_a(o), pb = project_b(o);
  pa.n = c.a;
  pb.n = c.b;
  return combine(c, o, component_gauss(s, pa), component_gauss(s, pb));
}

std::vector<OmegaValue> omega_all(const CurveParams& c, const std::vector<Orbit>& orbits, const OrbitSetting& s) {
  std::vector<OmegaValue> out(orbits.size());
  if (joint_closed_form_applies(c)) {
    parallel_for(orbits.size(), 1, [&](std::size_t b, std::size_t e, std::size_t) {
      for (std::size_t k = b; k < e; ++k) out[k] = joint_closed_form(c, orbits[k], s);
    });
    return out;
  }
  // distinct component orbits, keyed by canonical representative
  using Key = std::tuple<u64, u64, u64, u64>;
  std::map<Key, std::size_t> index;
  std::vector<PrimeOrbit> comps;
  std::vector<std::pair<std::size_t, std::size_t>> which(orbits.size());
  auto intern = [&](PrimeOrbit po) {
    po = canonical_prime_orbit(s, po);
    Key k{po.n, po.i, po.alpha_exp.get_ui(), po.size};
    auto it = index.find(k);
    if (it != index.end()) return it->second;
    index.emplace(k, comps.size());
    comps.push_back(po);
    return comps.size() - 1;
  };
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    PrimeOrbit pa = project_a(orbits[k]), pb = project_b(orbits[k]);
    pa.n = c.a;
    pb.n = c.b;
    which[k] = {intern(pa), intern(pb)};
  }
  std::vector<ComponentValue> values(comps.size());
  parallel_for(comps.size(), 1, [&](std::size_t b, std::size_t e, std::size_t) {
    for (std::size_t k = b; k < e; ++k) values[k] = component_gauss(s, comps[k]);
  });
  parallel_for(orbits.size(), 1, [&](std::size_t b, std::size_t e, std::size_t) {
    for (std::size_t k = b; k < e; ++k) out[k] = combine(c, orbits[k], values[which[k].first], values[which[k].second]);
  });
  return out;
}

std::optional<OmegaDecomposition> omega_decomposition(const CurveParams& c, const Orbit& o, const OrbitSetting& s) {
  const u64 ka = mult_order(c.p, c.a / gcd_u64(c.a, o.i)), kb = mult_order(c.p, c.b / gcd_u64(c.b, o.j));
  const u64 theta = std::lcm(mult_order(c.p, c.a), mult_order(c.p, c.b));
  const u64 total = static_cast<u64>(c.r_exp) * o.size;
  if (total % theta != 0) return std::nullopt;
  auto tower = FieldTower::get(c.p, s.twist);
  FieldPtr fa = tower->field_checked(static_cast<unsigned>(ka), s.budget);
  FieldPtr fb = tower->field_checked(static_cast<unsigned>(kb), s.budget);
  CycElt ga = gauss_sum_exponent(fa, c.a, o.i, mpz_class(0), s.budget);
  CycElt gb = gauss_sum_exponent(fb, c.b, o.j, mpz_class(0), s.budget);
  PrimeOrbit pa = project_a(o), pb = project_b(o);
  pa.n = c.a;
  pb.n = c.b;
  const u64 ua = lambda_at_alpha(s, pa), ub = lambda_at_alpha(s, pb);
  OmegaDecomposition d;
  d.theta = theta;
  d.exponent = total / theta;
  d.zeta_o = zeta(c.a, -static_cast<i64>(mulmod(ua, o.nu_a() % c.a, c.a))) *
             zeta(c.b, -static_cast<i64>(mulmod(ub, o.nu_b() % c.b, c.b)));
  d.g_o = ga.pow(theta / ka) * gb.pow(theta / kb);
  return d;
}

OrbitValuation valuation_of_omega(const CurveParams& c, const Orbit& o) {
  OrbitSetting s = setting_for(c);
  PrimeOrbit pa = project_a(o), pb = project_b(o);
  pa.n = c.a;
  pb.n = c.b;
  return {num_den(s, pa), num_den(s, pb)};
}

}  // namespace superjac
