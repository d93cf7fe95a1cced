#include <doctest.h>

#include <random>

#include "superjac/cyclotomic.hpp"

using namespace superjac;

TEST_SUITE("cyclotomic") {
  TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<i64>{-1, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<i64>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<i64>{1, 0, -1, 0, 1});
    // Phi_105 is the first with a coefficient of absolute value 2
    auto c = cyclotomic_polynomial(105);
    CHECK(c.size() == 49);
    CHECK(std::count(c.begin(), c.end(), -2) == 2);
  }

  TEST_CASE("ring identities") {
    CHECK((zeta(3, 1) + zeta(3, 2)) == CycElt::integer(-1, 3));
    CHECK(((CycElt::integer(1, 3) + zeta(3, 1)) * (CycElt::integer(1, 3) + zeta(3, 2))) == CycElt::integer(1, 3));
    CHECK(zeta(4, 1).conjugate() == zeta(4, 3));
    CHECK(zeta(12, 5).pow(12) == CycElt::integer(1, 12));
    auto x = CycElt::integer(3, 105) + zeta(105, 1);
    CHECK(x.pow(40) == x.pow(20) * x.pow(20));
    CHECK(x.galois(2).galois(53) == x);  // 2 * 53 = 1 mod 105
  }

  TEST_CASE("compression finds the minimal conductor") {
    auto e = zeta(35, 7) * zeta(35, 5);
    CHECK(e.compress().conductor() == 35);
    CHECK(zeta(15, 5).compress().conductor() == 3);
    CHECK(CycElt::integer(7, 60).compress().conductor() == 1);
    auto s = zeta(8, 1) + zeta(8, 7);  // sqrt 2
    CHECK(s.compress().conductor() == 8);
    CHECK((s * s).is_rational_integer() == std::optional<mpz_class>(2));
  }

  TEST_CASE("complex embedding carries an error bound") {
    auto em = zeta(8, 1).embed_complex(1);
    CHECK(std::abs(static_cast<double>(em.re) - std::sqrt(0.5)) < 1e-15);
    CHECK(em.err < 1e-15);
    auto hi = zeta(8, 1).embed_complex(1, 200);
    CHECK(hi.err < 1e-18);
  }

  TEST_CASE("Kronecker product matches schoolbook") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; ++t) {
      std::vector<mpz_class> a(1 + rng() % 40), b(1 + rng() % 40);
      for (auto& x : a) x = mpz_class(static_cast<long>(rng() % 2000001)) - 1000000;
      for (auto& x : b) x = mpz_class(static_cast<long>(rng() % 2000001)) - 1000000;
      a.back() = 5;
      std::vector<mpz_class> want(a.size() + b.size() - 1, 0);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) want[i + j] += a[i] * b[j];
      auto got = kronecker_mul(a, b);
      got.resize(want.size(), 0);
      CHECK(got == want);
    }
  }
}
