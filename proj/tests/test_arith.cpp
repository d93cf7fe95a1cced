#include <doctest.h>

#include "superjac/arith.hpp"

using namespace superjac;

namespace {

bool trial_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 naive_order(u64 x, u64 n) {
  u64 y = x % n, e = 1;
  while (y != 1 % n) {
    y = y * x % n;
    ++e;
  }
  return e;
}

}  // namespace

TEST_SUITE("arith") {
  TEST_CASE("primality agrees with trial division") {
    for (u64 n = 0; n < 20000; ++n) CHECK(is_prime(n) == trial_prime(n));
    CHECK(is_prime(2305843009213693951ull));  // 2^61 - 1
    CHECK_FALSE(is_prime(3215031751ull));     // strong pseudoprime to 2, 3, 5, 7
  }

  TEST_CASE("multiplicative order") {
    CHECK(mult_order(5, 3) == 2);
    CHECK(mult_order(7, 1) == 1);
    CHECK(mult_order(67, 7) == 3);
    for (u64 n = 2; n < 300; ++n)
      for (u64 p : {2, 3, 5, 7, 67})
        if (gcd_u64(n, p) == 1) CHECK(mult_order(p, n) == naive_order(p, n));
    CHECK_THROWS(mult_order(6, 4));
  }

  TEST_CASE("supersingular exponent") {
    CHECK(supersingular_nu(5, 67) == std::optional<u64>(2));
    CHECK(supersingular_nu(2, 3) == std::optional<u64>(1));
    CHECK_FALSE(supersingular_nu(7, 67).has_value());
    for (u64 n = 3; n < 200; ++n)
      for (u64 p : {3, 5, 7}) {
        if (gcd_u64(n, p) != 1) continue;
        std::optional<u64> brute;
        u64 y = 1;
        for (u64 k = 1; k <= n; ++k) {
          y = y * p % n;
          if (y == n - 1) {
            brute = k;
            break;
          }
        }
        CHECK(supersingular_nu(n, p) == brute);
      }
  }

  TEST_CASE("divisors, phi and moebius") {
    CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
    CHECK(euler_phi(35) == 24);
    CHECK(moebius(30) == -1);
    CHECK(moebius(12) == 0);
    CHECK(mpz_pow(3, 40) == mpz_class("12157665459056928801"));
  }
}
