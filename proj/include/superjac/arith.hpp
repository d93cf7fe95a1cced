#pragma once
// Elementary number theory on machine words and GMP integers.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace superjac {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

using Factorization = std::vector<std::pair<u64, int>>;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
u64 powmod(u64 base, u64 exp, u64 m);
// Base to a GMP exponent, reduced mod m.
u64 powmod(u64 base, const mpz_class& exp, u64 m);
u64 invmod(u64 a, u64 m);  // throws if not invertible

u64 gcd_u64(u64 a, u64 b);
u64 lcm_u64(u64 a, u64 b);  // throws on overflow

// Miller-Rabin with the first twelve prime bases; exact for all 64-bit inputs.
bool is_prime(u64 n);
Factorization factor(u64 n);
std::vector<u64> prime_divisors(u64 n);
std::vector<u64> divisors(u64 n);
u64 euler_phi(u64 n);
int moebius(u64 n);

// Least e >= 1 with x^e = 1 mod n. Requires gcd(x, n) = 1; order mod 1 is 1.
u64 mult_order(u64 x, u64 n);
// Same, for x given as a big integer (reduced mod n first).
u64 mult_order(const mpz_class& x, u64 n);
// Order of x in a group of known order N with known factorization.
u64 order_in_group(u64 x, u64 modulus, u64 group_order, const Factorization& f);
// Least nu >= 1 with p^nu = -1 mod n, if any.
std::optional<u64> supersingular_nu(u64 n, u64 p);

// p^k as a checked machine word; throws on overflow.
u64 ipow(u64 p, unsigned k);
bool ipow_fits(u64 p, unsigned k, u64 limit);
mpz_class mpz_pow(u64 p, unsigned long k);

// ceil/floor helpers for signed 64-bit values
i64 floor_div(i64 a, i64 b);
i64 mod_floor(i64 a, i64 m);

std::string to_string(const mpz_class& z);

}  // namespace superjac
