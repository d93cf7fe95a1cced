#include <doctest.h>

#include "superjac/oracle.hpp"

using namespace superjac;

TEST_SUITE("oracle") {
  TEST_CASE("four routes to the trace sums agree") {
    for (CurveParams c : {CurveParams{5, 1, 1, 2, 3}, CurveParams{3, 1, 2, 2, 5}, CurveParams{2, 1, 2, 3, 5},
                          CurveParams{5, 2, 1, 2, 3}, CurveParams{3, 1, 1, 2, 5}}) {
      auto lf = compute_lfunction(c);
      for (unsigned m = 1; m <= 2; ++m) {
        const mpz_class ts = trace_sum(c, m);
        CHECK(ts == gauss_side_trace_sum(c, m));
        CHECK(ts == orbit_side_trace_sum(lf.orbits, lf.omegas, m));
        if (mpz_pow(c.p, static_cast<unsigned long>(c.r_exp) * m) <= 64) CHECK(ts == brute_force_trace_sum(c, m));
      }
    }
  }

  TEST_CASE("trace sums for (5, 5, 5, 2, 3) and (5, 25, 5, 2, 3)") {
    CHECK(trace_sum({5, 1, 1, 2, 3}, 2) == 200);
    CHECK(trace_sum({5, 2, 1, 2, 3}, 1) == 200);
    CHECK(trace_sum({5, 2, 1, 2, 3}, 2) == -5000);
    CHECK(trace_sum({5, 2, 1, 2, 3}, 3) == 125000);
  }

  TEST_CASE("full and shortcut modes give the explicit polynomial") {
    for (CurveParams c : {CurveParams{5, 1, 1, 2, 3}, CurveParams{2, 1, 2, 3, 5}, CurveParams{3, 1, 1, 2, 5}}) {
      auto lf = compute_lfunction(c);
      REQUIRE(lf.L);
      if (lf.L->degree() <= 8) CHECK(l_from_counts(c, Budget::from_env(), OracleMode::full).L == *lf.L);
      auto sc = l_from_counts(c, Budget::from_env(), OracleMode::shortcut);
      CHECK(sc.L == *lf.L);
      CHECK(sc.terms < lf.L->degree());
    }
  }

  TEST_CASE("point count of a single fibre") {
    // y^3 + x^2 = beta^5 - beta = 0 for beta in F_5: the cusp has 5 affine points
    CurveParams c{5, 1, 1, 2, 3};
    auto f = make_field(5, 1);
    CHECK(count_points(c, from_int(f, 2)) == 6);
  }

  TEST_CASE("exp-log series") {
    // S_m = 2 for all m gives 1 / (1 - T)^2
    std::vector<mpz_class> S(5, 2);
    auto c = exp_log_series(S);
    for (std::size_t k = 0; k < c.size(); ++k) CHECK(c[k] == static_cast<long>(k + 1));
    CHECK_THROWS(exp_log_series({mpz_class(1), mpz_class(0)}));
  }

  TEST_CASE("budget is honoured") {
    Budget tiny;
    tiny.transform_elements = 10;
    CHECK_THROWS_AS(trace_sum({5, 1, 1, 2, 3}, 2, tiny), BudgetExceeded);
  }
}
