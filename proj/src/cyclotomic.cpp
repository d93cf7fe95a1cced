#include "superjac/cyclotomic.hpp"

#include <cfloat>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace superjac {

namespace {

using Poly64 = std::vector<i64>;

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic polynomial coefficient overflow");
  return r;
}

// f(x^k)
Poly64 compose_power(const Poly64& f, u64 k) {
  Poly64 g((f.size() - 1) * k + 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) g[i * k] = f[i];
  return g;
}

// exact division by a monic polynomial
Poly64 exact_div(const Poly64& num, const Poly64& den) {
  Poly64 r = num;
  std::size_t dn = den.size() - 1;
  Poly64 q(num.size() - dn, 0);
  for (std::size_t k = num.size() - 1; k + 1 >= den.size(); --k) {
    i64 c = r[k];
    q[k - dn] = c;
    if (c)
      for (std::size_t j = 0; j <= dn; ++j) r[k - dn + j] -= checked_mul(c, den[j]);
    if (k == dn) break;
  }
  for (std::size_t j = 0; j < dn; ++j)
    if (r[j] != 0) throw std::logic_error("inexact cyclotomic division");
  return q;
}

}  // namespace

std::vector<i64> cyclotomic_polynomial(u64 M) {
  if (M == 0) throw std::invalid_argument("conductor must be positive");
  Poly64 f{-1, 1};  // Phi_1
  u64 rad = 1;
  for (u64 l : prime_divisors(M == 1 ? 1 : M)) {
    // Phi_{rad*l}(x) = Phi_rad(x^l) / Phi_rad(x)
    f = exact_div(compose_power(f, l), f);
    rad *= l;
  }
  return compose_power(f, M / rad);
}

const CyclotomicRing& cyclotomic_ring(u64 M) {
  static std::mutex mu;
  static std::map<u64, CyclotomicRing> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(M);
  if (it != cache.end()) return it->second;
  CyclotomicRing r;
  r.M = M;
  r.Phi = cyclotomic_polynomial(M);
  r.phi = r.Phi.size() - 1;
  for (u64 i = 0; i < r.phi; ++i)
    if (r.Phi[i] != 0) r.tail.emplace_back(i, r.Phi[i]);
  return cache.emplace(M, std::move(r)).first->second;
}

void reduce_mod_phi(std::vector<mpz_class>& a, const CyclotomicRing& ring) {
  const u64 M = ring.M, phi = ring.phi;
  if (a.size() > M) {
    for (std::size_t k = M; k < a.size(); ++k)
      if (a[k] != 0) a[k % M] += a[k];
    a.resize(M);
  }
  if (a.size() < phi) a.resize(phi);
  for (std::size_t k = a.size(); k-- > phi;) {
    if (a[k] == 0) continue;
    const std::size_t base = k - phi;
    for (auto& [i, v] : ring.tail) {
      if (v == 1)
        a[base + i] -= a[k];
      else if (v == -1)
        a[base + i] += a[k];
      else if (v > 0)
        mpz_submul_ui(a[base + i].get_mpz_t(), a[k].get_mpz_t(), static_cast<unsigned long>(v));
      else
        mpz_addmul_ui(a[base + i].get_mpz_t(), a[k].get_mpz_t(), static_cast<unsigned long>(-v));
    }
    a[k] = 0;
  }
  a.resize(phi);
}

// ---------------- Kronecker substitution ----------------

std::size_t max_bits(const std::vector<mpz_class>& v) {
  std::size_t b = 0;
  for (auto& x : v)
    if (x != 0) b = std::max(b, mpz_sizeinbase(x.get_mpz_t(), 2));
  return b;
}

mpz_class kronecker_pack(const mpz_class* c, std::size_t n, std::size_t bits) {
  const std::size_t limbs = bits / 64;
  std::vector<std::uint64_t> pos(limbs * n, 0), neg(limbs * n, 0);
  bool any_neg = false;
  for (std::size_t i = 0; i < n; ++i) {
    int s = sgn(c[i]);
    if (s == 0) continue;
    std::uint64_t* dst = (s > 0 ? pos.data() : neg.data()) + i * limbs;
    if (s < 0) any_neg = true;
    std::size_t count = 0;
    mpz_export(dst, &count, -1, 8, 0, 0, c[i].get_mpz_t());
    if (count > limbs) throw std::logic_error("kronecker slot overflow");
  }
  mpz_class P, N;
  mpz_import(P.get_mpz_t(), pos.size(), -1, 8, 0, 0, pos.data());
  if (!any_neg) return P;
  mpz_import(N.get_mpz_t(), neg.size(), -1, 8, 0, 0, neg.data());
  return P - N;
}

std::vector<mpz_class> kronecker_unpack(const mpz_class& z, std::size_t n, std::size_t bits) {
  const std::size_t limbs = bits / 64;
  std::vector<mpz_class> out(n);
  int s = sgn(z);
  if (s == 0) return out;
  mpz_class az = abs(z);
  std::size_t count = (mpz_sizeinbase(az.get_mpz_t(), 2) + 63) / 64;
  std::vector<std::uint64_t> buf(std::max(count, limbs * n) + limbs, 0);
  mpz_export(buf.data(), &count, -1, 8, 0, 0, az.get_mpz_t());
  mpz_class half, full, carry = 0;
  mpz_ui_pow_ui(full.get_mpz_t(), 2, bits);
  half = full / 2;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class d;
    mpz_import(d.get_mpz_t(), limbs, -1, 8, 0, 0, buf.data() + i * limbs);
    d += carry;
    if (d >= half) {
      d -= full;
      carry = 1;
    } else {
      carry = 0;
    }
    out[i] = s > 0 ? d : mpz_class(-d);
  }
  return out;
}

std::vector<mpz_class> kronecker_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  if (a.empty() || b.empty()) return {};
  std::size_t n = a.size() + b.size() - 1;
  std::size_t need = max_bits(a) + max_bits(b) + 64 - __builtin_clzll(std::min(a.size(), b.size())) + 2;
  std::size_t bits = (need + 63) / 64 * 64;
  mpz_class A = kronecker_pack(a.data(), a.size(), bits);
  mpz_class B = kronecker_pack(b.data(), b.size(), bits);
  mpz_class C = A * B;
  return kronecker_unpack(C, n, bits);
}

// ---------------- CycElt ----------------

CycElt::CycElt(u64 M) : M_(M) {
  if (M == 0) throw std::invalid_argument("conductor must be positive");
  c_.assign(cyclotomic_ring(M).phi, 0);
}

CycElt CycElt::integer(const mpz_class& n, u64 M) {
  CycElt x(M);
  x.c_[0] = n;
  return x;
}

CycElt CycElt::from_exponents(u64 M, std::vector<mpz_class> by_exponent) {
  CycElt x(M);
  reduce_mod_phi(by_exponent, cyclotomic_ring(M));
  x.c_ = std::move(by_exponent);
  return x;
}

CycElt CycElt::from_exponents_i64(u64 M, const std::vector<i64>& by_exponent) {
  std::vector<mpz_class> v(std::max<std::size_t>(by_exponent.size(), 1));
  for (std::size_t i = 0; i < by_exponent.size(); ++i) v[i] = static_cast<long>(by_exponent[i]);
  return from_exponents(M, std::move(v));
}

CycElt CycElt::from_reduced(u64 M, std::vector<mpz_class> coeffs) {
  CycElt x(M);
  if (coeffs.size() != x.c_.size()) throw std::invalid_argument("reduced coefficient length != phi(M)");
  x.c_ = std::move(coeffs);
  return x;
}

bool CycElt::is_zero() const {
  for (auto& v : c_)
    if (v != 0) return false;
  return true;
}

CycElt CycElt::lift(u64 M2) const {
  if (M2 == M_) return *this;
  if (M2 % M_ != 0) throw std::invalid_argument("lift target is not a multiple of the conductor");
  const u64 k = M2 / M_;
  std::vector<mpz_class> v(M2);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) v[(i * k) % M2] += c_[i];
  return from_exponents(M2, std::move(v));
}

CycElt CycElt::operator+(const CycElt& o) const {
  u64 L = lcm_u64(M_, o.M_);
  CycElt a = lift(L), b = o.lift(L);
  for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

CycElt CycElt::operator-(const CycElt& o) const {
  u64 L = lcm_u64(M_, o.M_);
  CycElt a = lift(L), b = o.lift(L);
  for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
  return a;
}

CycElt CycElt::operator-() const {
  CycElt a = *this;
  for (auto& v : a.c_) v = -v;
  return a;
}

CycElt CycElt::operator*(const mpz_class& s) const {
  CycElt a = *this;
  for (auto& v : a.c_) v *= s;
  return a;
}

CycElt CycElt::operator*(const CycElt& o) const {
  u64 L = lcm_u64(M_, o.M_);
  if (M_ != L || o.M_ != L) return lift(L) * o.lift(L);
  const auto& ring = cyclotomic_ring(L);
  std::vector<mpz_class> prod;
  if (ring.phi <= 12) {
    prod.assign(2 * ring.phi - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        if (o.c_[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), c_[i].get_mpz_t(), o.c_[j].get_mpz_t());
    }
  } else {
    prod = kronecker_mul(c_, o.c_);
  }
  reduce_mod_phi(prod, ring);
  CycElt r(L);
  r.c_ = std::move(prod);
  return r;
}

bool CycElt::operator==(const CycElt& o) const {
  if (M_ == o.M_) return c_ == o.c_;
  u64 L = lcm_u64(M_, o.M_);
  return lift(L).c_ == o.lift(L).c_;
}

CycElt CycElt::pow(u64 e) const {
  CycElt result = integer(1, M_), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

CycElt CycElt::galois(u64 c) const {
  if (gcd_u64(c % M_, M_) != 1 && M_ > 1) throw std::invalid_argument("galois: c not coprime to conductor");
  std::vector<mpz_class> v(M_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) v[mulmod(i, c % M_, M_)] += c_[i];
  return from_exponents(M_, std::move(v));
}

CycElt CycElt::conjugate() const { return galois(M_ - 1 == 0 ? 1 : M_ - 1); }

std::optional<mpz_class> CycElt::is_rational_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return std::nullopt;
  return c_[0];
}

std::optional<CycElt> CycElt::descend(u64 l) const {
  if (M_ % l != 0) return std::nullopt;
  const u64 m = M_ / l;
  if (m % l == 0) {
    // Phi_M(x) = Phi_m(x^l): the subfield is spanned by exponents divisible by l
    std::vector<mpz_class> b(cyclotomic_ring(m).phi);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (i % l != 0) return std::nullopt;
      b[i / l] = c_[i];
    }
    return from_reduced(m, std::move(b));
  }
  // Q(zeta_M) = Q(zeta_m)(zeta_l) with basis zeta_l^1..zeta_l^{l-1}
  const u64 alpha = m == 1 ? 0 : invmod(l % m, m);
  const u64 beta = invmod(m % l, l);
  std::vector<std::vector<mpz_class>> z(l, std::vector<mpz_class>(m));
  for (std::size_t t = 0; t < c_.size(); ++t) {
    if (c_[t] == 0) continue;
    z[(beta * t) % l][m == 1 ? 0 : (alpha * t) % m] += c_[t];
  }
  const auto& ring = cyclotomic_ring(m);
  for (auto& v : z) reduce_mod_phi(v, ring);
  for (u64 s = 2; s < l; ++s)
    if (z[s] != z[1]) return std::nullopt;
  std::vector<mpz_class> r(ring.phi);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = z[0][i] - z[1][i];
  return from_reduced(m, std::move(r));
}

CycElt CycElt::compress() const {
  CycElt cur = *this;
  bool progress = true;
  while (progress && cur.M_ > 1) {
    progress = false;
    for (u64 l : prime_divisors(cur.M_)) {
      if (auto d = cur.descend(l)) {
        cur = std::move(*d);
        progress = true;
        break;
      }
    }
  }
  return cur;
}

long double ComplexApprox::abs() const { return std::hypot(re, im); }

ComplexApprox ComplexApprox::operator*(const ComplexApprox& o) const {
  ComplexApprox r;
  r.re = re * o.re - im * o.im;
  r.im = re * o.im + im * o.re;
  long double a = std::hypot(re, im), b = std::hypot(o.re, o.im);
  r.err = a * o.err + b * err + err * o.err + 4 * LDBL_EPSILON * (a * b);
  return r;
}

ComplexApprox ComplexApprox::operator+(const ComplexApprox& o) const {
  ComplexApprox r;
  r.re = re + o.re;
  r.im = im + o.im;
  r.err = err + o.err + 2 * LDBL_EPSILON * (std::fabs(r.re) + std::fabs(r.im));
  return r;
}

ComplexApprox CycElt::embed_complex(u64 j, unsigned bits) const {
  if (M_ > 1 && gcd_u64(j % M_, M_) != 1) throw std::invalid_argument("embedding index not coprime to conductor");
  ComplexApprox out;
  const std::size_t n = c_.size();
  if (bits <= 64) {
    const long double two_pi = 6.283185307179586476925286766559L;
    long double re = 0, im = 0, mass = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (c_[k] == 0) continue;
      long double a = static_cast<long double>(mpz_get_d(c_[k].get_mpz_t()));
      // mpz_get_d truncates to double; recover the remainder for long double accuracy
      mpz_class rest = c_[k] - mpz_class(static_cast<double>(a));
      a += static_cast<long double>(mpz_get_d(rest.get_mpz_t()));
      u64 r = mulmod(k, j % M_, M_);
      long double ang = two_pi * static_cast<long double>(r) / static_cast<long double>(M_);
      re += a * cosl(ang);
      im += a * sinl(ang);
      mass += fabsl(a);
    }
    out.re = re;
    out.im = im;
    out.err = (static_cast<long double>(n) + 16) * LDBL_EPSILON * mass;
    return out;
  }
  using boost::multiprecision::mpfr_float;
  mpfr_float::default_precision(static_cast<unsigned>(bits * 0.30103) + 5);
  mpfr_float re = 0, im = 0, mass = 0;
  mpfr_float pi2 = boost::math::constants::pi<mpfr_float>() * 2;
  for (std::size_t k = 0; k < n; ++k) {
    if (c_[k] == 0) continue;
    mpfr_float a(c_[k].get_mpz_t());
    u64 r = mulmod(k, j % M_, M_);
    mpfr_float ang = pi2 * r / M_;
    re += a * cos(ang);
    im += a * sin(ang);
    mass += abs(a);
  }
  out.re = re.convert_to<long double>();
  out.im = im.convert_to<long double>();
  mpfr_float ulp = boost::multiprecision::ldexp(mpfr_float(1), -static_cast<int>(bits));
  long double hp_err = (mass * (n + 16) * ulp).convert_to<long double>();
  out.err = hp_err + 2 * LDBL_EPSILON * (fabsl(out.re) + fabsl(out.im));
  return out;
}

std::string CycElt::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!s.empty()) s += c_[k] > 0 ? " + " : " - ";
    else if (c_[k] < 0) s += "-";
    mpz_class a = abs(c_[k]);
    if (k == 0 || a != 1) s += a.get_str();
    if (k > 0) s += (a != 1 ? "*" : "") + std::string("z") + std::to_string(M_) + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return s.empty() ? "0" : s;
}

CycElt zeta(u64 M, i64 k) {
  std::vector<mpz_class> v(M);
  v[static_cast<std::size_t>(mod_floor(k, static_cast<i64>(M)))] = 1;
  return CycElt::from_exponents(M, std::move(v));
}

}  // namespace superjac
