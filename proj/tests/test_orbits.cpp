#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "superjac/orbits.hpp"

using namespace superjac;

namespace {

// Orbits of (i, j, e) -> (r i mod a, r j mod b, e r^-1 mod (q - 1)) by
// explicit closure, independent of the enumeration code.
std::multiset<u64> brute_orbit_sizes(const CurveParams& c) {
  const u64 a = c.a, b = c.b, Q = c.q_minus_1();
  const mpz_class rz = c.r();
  const u64 ra = mpz_class(rz % a).get_ui(), rb = mpz_class(rz % b).get_ui();
  const u64 rq = mpz_class(rz % Q).get_ui();
  const u64 rinv = Q == 1 ? 0 : invmod(rq, Q);
  std::set<std::array<u64, 3>> done;
  std::multiset<u64> sizes;
  for (u64 i = 1; i < a; ++i)
    for (u64 j = 1; j < b; ++j)
      for (u64 e = 0; e < Q; ++e) {
        std::array<u64, 3> s{i, j, e};
        if (done.count(s)) continue;
        u64 n = 0;
        auto t = s;
        do {
          done.insert(t);
          ++n;
          t = {t[0] * ra % a, t[1] * rb % b, Q == 1 ? 0 : t[2] * rinv % Q};
        } while (t != s);
        sizes.insert(n);
      }
  return sizes;
}

}  // namespace

TEST_SUITE("orbits") {
  TEST_CASE("validation") {
    CHECK_THROWS_WITH_AS(validate({5, 1, 1, 4, 6}), "gcd(a,b) ≠ 1", InvalidParams);
    CHECK_THROWS_AS(validate({4, 1, 1, 2, 3}), InvalidParams);
    CHECK_THROWS_AS(validate({5, 1, 1, 5, 3}), InvalidParams);
    CHECK_NOTHROW(validate({67, 1, 1, 5, 7}));
  }

  TEST_CASE("orbit sizes match an explicit closure") {
    for (CurveParams c : {CurveParams{5, 1, 1, 2, 3}, CurveParams{7, 1, 1, 2, 3}, CurveParams{5, 1, 2, 2, 11},
                          CurveParams{67, 1, 1, 5, 7}, CurveParams{3, 2, 2, 4, 5}, CurveParams{2, 3, 2, 3, 5}}) {
      auto orbits = enumerate_orbits(c);
      std::multiset<u64> sizes;
      u64 total = 0;
      for (const auto& o : orbits) {
        sizes.insert(o.size);
        total += o.size;
        CHECK(orbit_elements(c, o).size() == o.size);
      }
      CHECK(total == (c.a - 1) * (c.b - 1) * c.q_minus_1());
      CHECK(sizes == brute_orbit_sizes(c));
    }
  }

  TEST_CASE("representatives are lexicographically least") {
    CurveParams c{5, 1, 2, 2, 11};
    for (const auto& o : enumerate_orbits(c)) {
      auto el = orbit_elements(c, o);
      CHECK(*std::min_element(el.begin(), el.end()) == std::array<u64, 3>{o.i, o.j, o.alpha_exp});
    }
  }

  TEST_CASE("valuations of omega lie in [0, 2] and are symmetric in conjugate orbits") {
    CurveParams c{67, 1, 1, 5, 7};
    for (const auto& o : enumerate_orbits(c)) {
      mpq_class v = valuation_of_omega(c, o).total();
      CHECK(v > 0);
      CHECK(v < 2);
      CHECK(v != 1);
    }
  }

  TEST_CASE("every omega has absolute value r^{|o|}") {
    CurveParams c{5, 1, 1, 2, 3};
    auto s = setting_for(c);
    for (const auto& o : enumerate_orbits(c)) {
      OmegaValue w = omega(c, o, s);
      REQUIRE(w.value);
      mpz_class r2;
      mpz_pow_ui(r2.get_mpz_t(), c.r().get_mpz_t(), 2 * o.size);
      CHECK(*w.value * w.value->conjugate() == CycElt::integer(r2, w.value->conductor()));
    }
  }

  TEST_CASE("joint closed form hypotheses") {
    CHECK(joint_closed_form_applies({3, 40, 1, 2, 5}));
    CHECK(joint_closed_form_applies({3, 8, 1, 2, 5}));
    CHECK_FALSE(joint_closed_form_applies({3, 4, 1, 2, 5}));
    CHECK_FALSE(joint_closed_form_applies({67, 1, 1, 5, 7}));
  }
}
