#include "superjac/geometry.hpp"

#include <map>
#include <set>
#include <numeric>
#include <sstream>

namespace superjac {

u64 genus(u64 a, u64 b) {
  if (a == 0 || b == 0 || gcd_u64(a, b) != 1) throw InvalidParams("gcd(a,b) ≠ 1");
  return (a - 1) * (b - 1) / 2;
}

mpz_class conductor_degree(const CurveParams& c) {
  validate(c);
  return mpz_class(static_cast<unsigned long>(2 * genus(c.a, c.b))) * (c.q() + 1);
}

mpz_class BadPlaces::total_degree() const {
  mpz_class t = infinity.count * static_cast<unsigned long>(infinity.degree);
  for (const auto& g : finite) t += g.count * static_cast<unsigned long>(g.degree);
  return t;
}

BadPlaces bad_places(const CurveParams& c) {
  validate(c);
  // elements of exact degree e over F_p, e | q_exp, fall into Frobenius_r
  // orbits of length e / gcd(e, r_exp)
  std::map<u64, mpz_class> by_degree;
  for (u64 e : divisors(c.q_exp)) {
    mpz_class exact = 0;
    for (u64 d : divisors(e)) {
      int mu = moebius(e / d);
      if (mu) exact += mu * mpz_pow(c.p, d);
    }
    const u64 len = e / gcd_u64(e, c.r_exp);
    by_degree[len] += exact / static_cast<unsigned long>(len);
  }
  BadPlaces bp;
  for (auto& [deg, n] : by_degree) bp.finite.push_back({deg, n});
  return bp;
}

const char* place_name(PlaceKind k) { return k == PlaceKind::finite ? "finite" : "infinity"; }

std::vector<u64> SncFiber::multiplicities() const {
  std::vector<u64> m;
  for (const auto& c : components) m.push_back(c.multiplicity);
  return m;
}

std::vector<std::size_t> SncFiber::degrees() const {
  std::vector<std::size_t> d(components.size(), 0);
  for (auto [u, v] : edges) {
    ++d[u];
    ++d[v];
  }
  return d;
}

bool SncFiber::is_tree() const {
  const std::size_t n = components.size();
  if (n == 0 || edges.size() != n - 1) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : edges) {
    std::size_t ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

std::vector<u64> snc_chain(u64 delta_face, u64 delta_edge, u64 num) {
  if (delta_edge == 0 || delta_face % delta_edge != 0) throw std::invalid_argument("edge denominator must divide face denominator");
  u64 d = delta_face / delta_edge, m = num % d;
  if (d > 1 && gcd_u64(m, d) != 1) throw std::invalid_argument("chain slope is not reduced");
  // m/d > m'/d' > ... > 0/1 with m d' - m' d = 1 at each step
  std::vector<u64> out;
  while (d > 1) {
    const u64 dn = invmod(m, d);
    const u64 mn = (m * dn - 1) / d;
    out.push_back(delta_edge * dn);
    m = mn;
    d = dn;
  }
  if (out.empty()) out.push_back(delta_edge);
  return out;
}

SncFiber snc_special_fiber(const CurveParams& c, PlaceKind kind) {
  validate(c);
  const u64 a = c.a, b = c.b, ab = a * b;
  // Q = 1 at finite places, -q at infinity; only Q mod ab matters
  const u64 Q = kind == PlaceKind::finite ? 1 % ab : (ab - powmod(c.p % ab, c.q_exp, ab)) % ab;
  SncFiber f;
  f.kind = kind;
  f.components.push_back({ab, 0, "central"});
  struct Edge {
    const char* name;
    u64 delta;
    u64 num;  // numerator of the starting slope over ab / delta
  };
  // Steps into the face change v by Q/ab across L3, -Q/a across x = 0 and
  // -Q/b across y = 0; the slope is delta times that, mod 1.
  const Edge edges[3] = {
      {"L1", a, (b - mulmod(Q % b, a % b, b)) % b},
      {"L2", b, (a - mulmod(Q % a, b % a, a)) % a},
      {"L3", 1, Q},
  };
  for (const Edge& e : edges) {
    std::vector<u64> chain = snc_chain(ab, e.delta, e.num);
    std::size_t prev = 0;
    for (std::size_t k = 0; k < chain.size(); ++k) {
      f.components.push_back({chain[k], 0, std::string(e.name) + "." + std::to_string(k + 1)});
      f.edges.push_back({prev, f.components.size() - 1});
      prev = f.components.size() - 1;
    }
  }
  return f;
}

std::vector<std::string> fiber_invariant_failures(const SncFiber& f, const CurveParams& c) {
  std::vector<std::string> bad;
  if (!f.is_tree()) bad.push_back("dual graph is not a tree");
  u64 g = 0;
  for (const auto& comp : f.components) {
    if (comp.genus != 0) bad.push_back("component of positive genus");
    g = gcd_u64(g, comp.multiplicity);
  }
  if (g != 1) bad.push_back("multiplicities have gcd " + std::to_string(g));
  auto deg = f.degrees();
  if (f.components.empty() || f.components[0].multiplicity != c.a * c.b || deg[0] != 3)
    bad.push_back("central component is not of multiplicity ab with three neighbours");
  std::multiset<u64> ends, want{c.a, c.b, 1};
  for (std::size_t k = 1; k < f.components.size(); ++k)
    if (deg[k] == 1) ends.insert(f.components[k].multiplicity);
  if (ends != want) bad.push_back("terminal multiplicities are not {a, b, 1}");
  for (std::size_t k = 1; k < f.components.size(); ++k)
    if (deg[k] != 1 && deg[k] != 2) bad.push_back("chain component with " + std::to_string(deg[k]) + " neighbours");
  return bad;
}

std::string to_dot(const SncFiber& f, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t k = 0; k < f.components.size(); ++k)
    os << "  c" << k << " [label=\"" << f.components[k].multiplicity << "\"" << (k == 0 ? ", shape=box" : "")
       << "];\n";
  for (auto [u, v] : f.edges) os << "  c" << u << " -- c" << v << ";\n";
  os << "}\n";
  return os.str();
}

mpq_class lorenzini_product(const SncFiber& f) {
  auto deg = f.degrees();
  mpq_class prod = 1;
  for (std::size_t k = 0; k < f.components.size(); ++k) {
    const mpz_class m(static_cast<unsigned long>(f.components[k].multiplicity));
    const long e = static_cast<long>(deg[k]) - 2;
    mpz_class t;
    mpz_pow_ui(t.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0)
      prod *= t;
    else
      prod /= t;
  }
  prod.canonicalize();
  return prod;
}

TamagawaCertificate tamagawa(const CurveParams& c) {
  TamagawaCertificate t;
  t.finite = lorenzini_product(snc_special_fiber(c, PlaceKind::finite));
  t.infinity = lorenzini_product(snc_special_fiber(c, PlaceKind::infinity));
  // every finite bad place has the same fiber; good places contribute 1
  BadPlaces bp = bad_places(c);
  t.global = t.infinity;
  for (const auto& g : bp.finite) {
    if (g.count == 0) continue;
    mpz_class n = t.finite.get_num(), d = t.finite.get_den();
    mpz_class nn, dd;
    mpz_pow_ui(nn.get_mpz_t(), n.get_mpz_t(), g.count.get_ui());
    mpz_pow_ui(dd.get_mpz_t(), d.get_mpz_t(), g.count.get_ui());
    t.global *= mpq_class(nn, dd);
  }
  t.global.canonicalize();
  return t;
}

HeightData height(const CurveParams& c) {
  validate(c);
  const u64 a = c.a, b = c.b, ab = a * b;
  const mpz_class q = c.q();
  HeightData h;
  h.genus = genus(a, b);
  h.h = 0;
  for (u64 i = 1; b * i < ab; ++i)
    for (u64 j = 1; b * i + a * j < ab; ++j) {
      const u64 w = ab - b * i - a * j;
      h.D += mpq_class(static_cast<unsigned long>(w), static_cast<unsigned long>(ab));
      mpz_class num = q * static_cast<unsigned long>(w), ceil;
      mpz_cdiv_q_ui(ceil.get_mpz_t(), num.get_mpz_t(), ab);
      h.h += ceil;
      h.E += mpq_class(ceil) - mpq_class(num, mpz_class(static_cast<unsigned long>(ab)));
    }
  h.D.canonicalize();
  h.E.canonicalize();
  const mpz_class t = static_cast<unsigned long>(ab - a - b);
  h.D_lower = mpq_class(t * t * t, mpz_class(static_cast<unsigned long>(6 * ab * ab)));
  h.D_upper = mpq_class(static_cast<unsigned long>(ab), 6ul);
  h.D_lower.canonicalize();
  h.D_upper.canonicalize();
  if (h.D * q + h.E != h.h) throw std::logic_error("height decomposition mismatch");
  return h;
}

}  // namespace superjac
