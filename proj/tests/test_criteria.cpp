#include <doctest.h>

#include "superjac/criteria.hpp"

using namespace superjac;

TEST_SUITE("criteria") {
  TEST_CASE("supersingular witnesses") {
    auto w = supersingular(5, 67);
    CHECK(w.is_supersingular);
    CHECK(w.nu == std::optional<u64>(2));
    CHECK(supersingular(2, 7).nu == std::optional<u64>(1));
    CHECK_FALSE(supersingular(7, 67).is_supersingular);
    for (u64 n = 3; n <= 100; ++n)
      for (u64 p : {3, 5, 7, 67}) {
        if (gcd_u64(n, p) != 1) continue;
        auto s = supersingular(n, p);
        if (s.nu) CHECK(mult_order(p, n) == 2 * *s.nu);
      }
  }

  TEST_CASE("rank-zero criterion") {
    // (5, 7, 67) meets condition 3 and also condition 1: 5 o(5) = 20, 7 o(7) = 21
    CHECK(rank_zero_conditions(5, 7, 67) == std::vector<int>{1, 3});
    CHECK(rank_zero_conditions(7, 5, 67) == std::vector<int>{1, 2});
    CHECK(rank_zero_criterion(5, 7, 67) == std::optional<int>(1));
    CHECK_FALSE(rank_zero_criterion(2, 3, 5).has_value());
  }

  TEST_CASE("lower bound") {
    auto na = rank_lower_bound({3, 1, 1, 2, 5});
    CHECK_FALSE(na.applicable);
    CHECK_FALSE(na.reason.empty());
    // 4 * ceil((2/10 - (3 sqrt 3 - 1)/2) / 1) = 4 * ceil(-1.898...) = -4
    auto lb = rank_lower_bound({3, 8, 1, 2, 5});
    CHECK(lb.applicable);
    CHECK(lb.raw == -4);
    CHECK(lb.value == 0);
    // q = 3^12: (531440/10 - (3^7 - 1)/2) / 12 = (53144 - 1093) / 12 = 4337.58...
    auto big = rank_lower_bound({3, 8, 12, 2, 5});
    CHECK(big.raw == 4 * 4338);
  }

  TEST_CASE("exact full rank") {
    CHECK(rank_exact_full({3, 40, 1, 2, 5}) == std::optional<u64>(8));
    CHECK_FALSE(rank_exact_full({3, 8, 1, 2, 5}).has_value());
    CHECK(minimal_r_exponent_full(2, 5, 3, 1) == std::optional<u64>(40));
    CHECK(minimal_r_exponent_lower_bound(2, 5, 3) == std::optional<u64>(8));
    CurveParams c{3, 40, 1, 2, 5};
    auto pr = full_rank_power_residue_check(c, enumerate_orbits(c), setting_for(c));
    CHECK(pr.all_singletons);
    CHECK(pr.all_powers);
    CHECK(pr.orbits == 8);
  }

  TEST_CASE("simplicity") {
    CHECK(simplicity(5, 7));
    CHECK_FALSE(simplicity(4, 9));
    CHECK_FALSE(simplicity(2, 9));
  }

  TEST_CASE("pair search") {
    auto pairs = find_pairs({67, PairCondition::any, 10});
    bool found = false;
    for (const auto& p : pairs) {
      CHECK(rank_zero_criterion(p.a, p.b, 67).has_value());
      if (p.a == 5 && p.b == 7) found = std::count(p.conditions.begin(), p.conditions.end(), 3) == 1;
    }
    CHECK(found);

    for (const auto& p : find_pairs({5, PairCondition::c2, 50})) CHECK(rank_zero_condition_holds(2, p.a, p.b, 5));
    for (const auto& p : find_pairs({5, PairCondition::c1, 30, true})) {
      CHECK(simplicity(p.a, p.b));
      CHECK(rank_zero_condition_holds(1, p.a, p.b, 5));
    }
    // (31, 13): 31 = (5^3 - 1)/4 has order 3, and 5^2 = -1 mod 13
    auto c2 = find_pairs({5, PairCondition::c2, 1000, false, 13, 3});
    CHECK(std::any_of(c2.begin(), c2.end(), [](const PairResult& p) { return p.a == 31 && p.b == 13; }));
    for (const auto& p : find_pairs({3, PairCondition::lower_bound, 20})) {
      CHECK(supersingular(p.a, 3).is_supersingular);
      CHECK(supersingular(p.b, 3).is_supersingular);
    }
  }

  TEST_CASE("rank assessment never crosses") {
    for (CurveParams c : {CurveParams{67, 1, 1, 5, 7}, CurveParams{3, 40, 1, 2, 5}, CurveParams{5, 1, 1, 2, 3}}) {
      auto ra = assess_rank(c);
      CHECK(ra.lower <= ra.upper);
      CHECK(ra.upper <= (c.a - 1) * (c.b - 1) * c.q_minus_1());
    }
  }
}
