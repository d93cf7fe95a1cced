#include "superjac/arith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace superjac {

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 powmod(u64 base, const mpz_class& exp, u64 m) {
  if (exp < 0) throw std::invalid_argument("powmod: negative exponent");
  mpz_class b = base, mod = static_cast<unsigned long>(m), r;
  static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long expected");
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r.get_ui();
}

u64 invmod(u64 a, u64 m) {
  if (m == 1) return 0;
  i64 t = 0, newt = 1;
  i64 r = static_cast<i64>(m), newr = static_cast<i64>(a % m);
  while (newr != 0) {
    i64 q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (r != 1) throw std::invalid_argument("invmod: not invertible");
  if (t < 0) t += static_cast<i64>(m);
  return static_cast<u64>(t);
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

u64 lcm_u64(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  u64 g = std::gcd(a, b);
  u128 l = static_cast<u128>(a / g) * b;
  if (l > std::numeric_limits<u64>::max()) throw std::overflow_error("lcm overflow");
  return static_cast<u64>(l);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  static const u64 bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 b : bases) {
    if (n % b == 0) return n == b;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : bases) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n % p == 0) {
      out.push_back(p);
      factor_into(n / p, out);
      return;
    }
  }
  u64 d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Factorization factor(u64 n) {
  if (n == 0) throw std::invalid_argument("factor(0)");
  std::vector<u64> primes;
  for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  Factorization f;
  for (u64 p : primes) {
    if (!f.empty() && f.back().first == p)
      ++f.back().second;
    else
      f.emplace_back(p, 1);
  }
  return f;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (auto& [p, e] : factor(n)) out.push_back(p);
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (auto& [p, e] : factor(n)) {
    std::size_t cur = out.size();
    u64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < cur; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 euler_phi(u64 n) {
  u64 r = n;
  for (auto& [p, e] : factor(n)) r = r / p * (p - 1);
  return r;
}

int moebius(u64 n) {
  int m = 1;
  for (auto& [p, e] : factor(n)) {
    if (e > 1) return 0;
    m = -m;
  }
  return m;
}

u64 order_in_group(u64 x, u64 modulus, u64 group_order, const Factorization& f) {
  u64 ord = group_order;
  for (auto& [p, e] : f) {
    for (int k = 0; k < e; ++k) {
      if (powmod(x, ord / p, modulus) == 1 % modulus)
        ord /= p;
      else
        break;
    }
  }
  return ord;
}

u64 mult_order(u64 x, u64 n) {
  if (n == 0) throw std::invalid_argument("mult_order: modulus 0");
  if (n == 1) return 1;
  x %= n;
  if (std::gcd(x, n) != 1) throw std::invalid_argument("mult_order: gcd(x, n) != 1");
  u64 lam = euler_phi(n);
  return order_in_group(x, n, lam, factor(lam));
}

std::optional<u64> supersingular_nu(u64 n, u64 p) {
  if (n == 0) throw std::invalid_argument("supersingular_nu: modulus 0");
  if (n <= 2) return 1;
  u64 o = mult_order(p, n);
  // any nu with p^nu = -1 is congruent to o/2 mod o
  if (o % 2 == 0 && powmod(p % n, o / 2, n) == n - 1) return o / 2;
  return std::nullopt;
}

u64 mult_order(const mpz_class& x, u64 n) {
  if (n == 0) throw std::invalid_argument("mult_order: modulus 0");
  mpz_class r = x % mpz_class(static_cast<unsigned long>(n));
  if (r < 0) r += static_cast<unsigned long>(n);
  return mult_order(static_cast<u64>(r.get_ui()), n);
}

u64 ipow(u64 p, unsigned k) {
  u64 r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r > std::numeric_limits<u64>::max() / p) throw std::overflow_error("ipow overflow");
    r *= p;
  }
  return r;
}

bool ipow_fits(u64 p, unsigned k, u64 limit) {
  u64 r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r > limit / p) return false;
    r *= p;
  }
  return r <= limit;
}

mpz_class mpz_pow(u64 p, unsigned long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, k);
  return r;
}

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i64 mod_floor(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

std::string to_string(const mpz_class& z) { return z.get_str(); }

}  // namespace superjac
