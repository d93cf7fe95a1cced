#include "superjac/roots.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace superjac {

namespace {

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

mpz_class content(const ZPoly& f) {
  mpz_class g = 0;
  for (const auto& x : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// lc(g) f - lc(f) x^k g, repeated until deg f < deg g.
ZPoly pseudo_rem(ZPoly f, const ZPoly& g) {
  const std::size_t dg = g.size() - 1;
  while (!f.empty() && f.size() - 1 >= dg) {
    const mpz_class lf = f.back(), lg = g.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (auto& x : f) x *= lg;
    for (std::size_t k = 0; k <= dg; ++k) f[k + shift] -= lf * g[k];
    trim(f);
    mpz_class ct = content(f);
    if (ct > 1)
      for (auto& x : f) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), ct.get_mpz_t());
  }
  return f;
}

constexpr u64 kModPrime = (u64(1) << 61) - 1;

using ModPoly = std::vector<u64>;

ModPoly reduce(const ZPoly& f) {
  ModPoly out(f.size());
  mpz_class m(static_cast<unsigned long>(kModPrime)), t;
  for (std::size_t k = 0; k < f.size(); ++k) {
    mpz_fdiv_r(t.get_mpz_t(), f[k].get_mpz_t(), m.get_mpz_t());
    out[k] = t.get_ui();
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::size_t mod_gcd_degree(ModPoly a, ModPoly b) {
  const u64 P = kModPrime;
  while (!b.empty()) {
    const u64 inv = invmod(b.back(), P);
    while (a.size() >= b.size()) {
      const u64 f = mulmod(a.back(), inv, P);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) {
        u64 s = mulmod(f, b[k], P);
        u64& x = a[k + shift];
        x = x >= s ? x - s : x + P - s;
      }
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

}  // namespace

ZPoly derivative(const ZPoly& f) {
  if (f.size() <= 1) return {};
  ZPoly d(f.size() - 1);
  for (std::size_t k = 1; k < f.size(); ++k) d[k - 1] = f[k] * static_cast<unsigned long>(k);
  trim(d);
  return d;
}

ZPoly primitive_part(const ZPoly& f) {
  ZPoly g = f;
  trim(g);
  if (g.empty()) return g;
  mpz_class ct = content(g);
  if (g.back() < 0) ct = -ct;
  for (auto& x : g) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), ct.get_mpz_t());
  return g;
}

ZPoly poly_gcd(const ZPoly& f, const ZPoly& g) {
  ZPoly a = primitive_part(f), b = primitive_part(g);
  if (a.empty()) return b;
  if (b.empty()) return a;
  mpz_class c1 = content(f), c2 = content(g), c;
  mpz_gcd(c.get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t());
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  a = primitive_part(a);
  for (auto& x : a) x *= c;
  return a;
}

ZPoly exact_div(const ZPoly& f0, const ZPoly& g0) {
  ZPoly f = f0, g = g0;
  trim(f);
  trim(g);
  if (g.empty()) throw std::domain_error("division by the zero polynomial");
  if (f.size() < g.size()) {
    if (f.empty()) return {};
    throw std::domain_error("polynomial division is not exact");
  }
  ZPoly q(f.size() - g.size() + 1);
  const mpz_class& lg = g.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class& top = f[k + g.size() - 1];
    if (!mpz_divisible_p(top.get_mpz_t(), lg.get_mpz_t())) throw std::domain_error("polynomial division is not exact");
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lg.get_mpz_t());
    for (std::size_t j = 0; j < g.size(); ++j) f[k + j] -= q[k] * g[j];
  }
  trim(f);
  if (!f.empty()) throw std::domain_error("polynomial division is not exact");
  return q;
}

std::vector<ZPoly> squarefree_decomposition(const ZPoly& f0) {
  ZPoly f = primitive_part(f0);
  std::vector<ZPoly> out;
  if (f.size() <= 1) return out;
  ZPoly fd = derivative(f);
  ZPoly a = poly_gcd(f, fd);
  ZPoly b = exact_div(f, a);
  ZPoly c = exact_div(fd, a);
  ZPoly bd = derivative(b);
  ZPoly d(std::max(c.size(), bd.size()));
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = (k < c.size() ? c[k] : 0) - (k < bd.size() ? bd[k] : 0);
  trim(d);
  while (b.size() > 1) {
    ZPoly ai = poly_gcd(b, d);
    out.push_back(ai);
    ZPoly nb = exact_div(b, ai);
    ZPoly nc = exact_div(d, ai);
    b = std::move(nb);
    bd = derivative(b);
    d.assign(std::max(nc.size(), bd.size()), 0);
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = (k < nc.size() ? nc[k] : 0) - (k < bd.size() ? bd[k] : 0);
    trim(d);
  }
  return out;
}

ZPoly squarefree_part(const ZPoly& f0) {
  ZPoly f = primitive_part(f0);
  if (f.size() <= 2) return f;
  ModPoly fm = reduce(f);
  if (fm.size() == f.size() && mod_gcd_degree(fm, reduce(derivative(f))) == 0) return f;
  return primitive_part(exact_div(f, poly_gcd(f, derivative(f))));
}

namespace {

using boost::multiprecision::mpfr_float;

struct Cx {
  mpfr_float re, im;
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx operator/(const Cx& a, const Cx& b) {
  mpfr_float d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
mpfr_float cabs(const Cx& a) { return sqrt(a.re * a.re + a.im * a.im); }

void horner(const std::vector<mpfr_float>& c, const Cx& z, Cx& p, Cx& dp) {
  p = {c.back(), 0};
  dp = {0, 0};
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + Cx{c[k], 0};
  }
}

}  // namespace

RhResult rh_check(const LPolynomial& L, double tol) {
  RhResult res;
  const std::size_t b = L.degree();
  if (b == 0) {
    res.ok = true;
    return res;
  }
  u64 g = 0;
  for (std::size_t k = 1; k <= b; ++k)
    if (L.coeffs[k] != 0) g = std::gcd(g, static_cast<u64>(k));
  res.g = static_cast<unsigned>(g);
  ZPoly P(b / g + 1);
  for (std::size_t k = 0; k < P.size(); ++k) P[k] = L.coeffs[k * g];
  ZPoly S = squarefree_part(P);
  const std::size_t n = S.size() - 1;
  res.distinct_roots = n;
  if (n == 0) {
    res.ok = true;
    return res;
  }

  const unsigned prec = static_cast<unsigned>(2 * n + 128);
  res.precision_bits = prec;
  // the default precision is process-wide in this Boost version
  static std::mutex precision_mu;
  std::lock_guard<std::mutex> lock(precision_mu);
  const unsigned saved = mpfr_float::default_precision();
  mpfr_float::default_precision(static_cast<unsigned>(prec * 0.30103) + 2);

  // roots of S(u / r^g) should lie on the unit circle
  mpz_class R = 1;
  for (u64 k = 0; k < g; ++k) R *= L.r;
  std::vector<mpfr_float> c(n + 1);
  mpz_class Rk = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    c[k] = mpfr_float(S[k].get_mpz_t()) / mpfr_float(Rk.get_mpz_t());
    Rk *= R;
  }

  const mpfr_float two_pi = 2 * boost::math::constants::pi<mpfr_float>();
  std::vector<Cx> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    mpfr_float t = two_pi * k / n + mpfr_float(0.4);
    z[k] = {cos(t), sin(t)};
  }
  const mpfr_float stop = ldexp(mpfr_float(1), -static_cast<int>(prec) / 2);
  Cx p, dp;
  int settle = -1;
  for (int it = 0; it < 2000 && settle != 0; ++it) {
    mpfr_float worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      horner(c, z[k], p, dp);
      Cx ratio = p / dp;
      Cx s{0, 0};
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) s = s + Cx{1, 0} / (z[k] - z[j]);
      Cx w = ratio / (Cx{1, 0} - ratio * s);
      z[k] = z[k] - w;
      worst = std::max(worst, mpfr_float(cabs(w)));
    }
    if (settle > 0) --settle;
    if (settle < 0 && worst < stop) settle = 3;
  }

  // n |S/S'| disks each hold a root; pairwise disjoint disks hold one each
  std::vector<mpfr_float> rad(n);
  const mpfr_float ulp = ldexp(mpfr_float(1), -static_cast<int>(prec) + 16);
  for (std::size_t k = 0; k < n; ++k) {
    horner(c, z[k], p, dp);
    rad[k] = n * cabs(p) / cabs(dp) + ulp;
  }
  bool disjoint = true;
  for (std::size_t k = 0; k < n && disjoint; ++k)
    for (std::size_t j = k + 1; j < n && disjoint; ++j) disjoint = cabs(z[k] - z[j]) > rad[k] + rad[j];

  mpfr_float dev = 0;
  const mpfr_float inv_g = mpfr_float(1) / g, rr = mpfr_float(L.r.get_mpz_t());
  for (std::size_t k = 0; k < n; ++k) {
    mpfr_float m = cabs(z[k]);
    mpfr_float hi = pow(m + rad[k], inv_g), lo = m > rad[k] ? pow(m - rad[k], inv_g) : mpfr_float(0);
    dev = std::max(dev, mpfr_float(std::max(mpfr_float(abs(hi - 1)), mpfr_float(abs(1 - lo))) / rr));
  }
  res.max_deviation = dev.convert_to<double>();
  res.ok = disjoint && res.max_deviation <= tol;
  if (!disjoint) res.note = "inclusion disks overlap";
  mpfr_float::default_precision(saved);
  return res;
}

}  // namespace superjac
