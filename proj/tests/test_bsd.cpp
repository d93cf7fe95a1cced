#include <doctest.h>

#include <cmath>

#include "superjac/bsd_report.hpp"

using namespace superjac;

TEST_SUITE("bsd") {
  TEST_CASE("composite for (5, 5, 5, 2, 3)") {
    BsdReport rep = bsd_combination(CurveParams{5, 1, 1, 2, 3});
    CHECK(rep.l_star == 16);
    CHECK(rep.height.h == 1);
    CHECK(rep.genus == 1);
    // X = L* r^{h - g} = 16
    CHECK(rep.X == 16);
    CHECK(rep.tamagawa.all_one());
    REQUIRE(rep.brauer_siegel_ratio);
    CHECK(rep.brauer_siegel_ratio->value == doctest::Approx(std::log(16.0) / std::log(5.0)).epsilon(1e-12));
  }

  TEST_CASE("definition consistency X r^g = L* r^h") {
    for (CurveParams c : {CurveParams{5, 1, 1, 2, 11}, CurveParams{67, 1, 1, 5, 7}, CurveParams{3, 40, 1, 2, 5}}) {
      BsdReport rep = bsd_combination(c);
      mpz_class rg, rh;
      mpz_pow_ui(rg.get_mpz_t(), c.r().get_mpz_t(), rep.genus);
      mpz_pow_ui(rh.get_mpz_t(), c.r().get_mpz_t(), rep.height.h.get_ui());
      CHECK(rep.X * rg == rep.l_star * rh);
      CHECK(rep.X > 0);
    }
  }

  TEST_CASE("rank-zero pair along q") {
    auto rows = scan_q(5, 1, 2, 11, {1, 2});
    REQUIRE(rows.size() == 2);
    for (const auto& row : rows) {
      REQUIRE(row.status == RowStatus::ok);
      CHECK(row.report->rank.exact == std::optional<u64>(0));
      CHECK(row.report->X > 0);
    }
    CHECK(rows[0].report->X == 3025);
    CHECK(rows[1].report->log_X.value > rows[0].report->log_X.value);
    CHECK(rows[1].report->height.h > rows[0].report->height.h);
  }

  TEST_CASE("scan rows fail independently") {
    Budget tiny = Budget::from_env();
    tiny.orbit_elements = 100;
    auto rows = scan_q(5, 1, 2, 3, {1, 3}, tiny);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].status == RowStatus::ok);
    CHECK(rows[1].status == RowStatus::budget);
    CHECK(scan_q(5, 1, 2, 3, {}).empty());
    CHECK(scan_q(5, 1, 4, 6, {1})[0].status == RowStatus::invalid);
  }

  TEST_CASE("log of rationals") {
    auto l = log_rational(mpq_class(1, 7));
    CHECK(l.value == doctest::Approx(-std::log(7.0)).epsilon(1e-15));
    CHECK(l.error < 1e-15);
    CHECK_THROWS(log_rational(mpq_class(0)));
  }
}
