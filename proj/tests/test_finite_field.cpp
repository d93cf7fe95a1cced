#include <doctest.h>

#include <set>

#include "superjac/finite_field.hpp"

using namespace superjac;

TEST_SUITE("finite_field") {
  TEST_CASE("generators have full order and the tower is norm-compatible") {
    for (auto [p, m] : std::vector<std::pair<u64, unsigned>>{{2, 4}, {3, 2}, {3, 6}, {5, 1}, {5, 2}, {5, 3}, {7, 2}, {67, 1}}) {
      auto f = make_field(p, m);
      CHECK(generator_order_check(f));
      CHECK(f->modulus().size() == m + 1);
      for (unsigned d : divisors(m)) {
        auto sub = FieldTower::get(p)->field(d);
        CHECK(norm(generator(f), sub) == generator(sub));
      }
    }
  }

  TEST_CASE("field axioms on F_125 by exhaustion of a sample") {
    auto f = make_field(5, 3);
    for (u64 i = 1; i < f->size(); i += 7) {
      FieldElt x = from_index(f, i);
      CHECK((x * x.inverse()).is_one());
      CHECK(x.pow(f->unit_order()).is_one());
      CHECK(frobenius(frobenius(frobenius(x, 1), 1), 1) == x);
      for (u64 j = 3; j < f->size(); j += 31) {
        FieldElt y = from_index(f, j);
        CHECK(x * y == y * x);
        CHECK((x + y) * x == x * x + y * x);
      }
    }
  }

  TEST_CASE("discrete log round trip and tables") {
    auto f = make_field(7, 2);
    std::set<u64> seen;
    for (u64 e = 0; e < f->unit_order(); ++e) {
      FieldElt x = gen_power(f, e);
      CHECK(discrete_log(x) == e);
      seen.insert(x.index());
    }
    CHECK(seen.size() == f->unit_order());
    const auto& exp = f->exp_table();
    const auto& log = f->log_table();
    for (u64 k = 0; k < f->unit_order(); ++k) CHECK(log[exp[k]] == k);
  }

  TEST_CASE("trace table matches sum of conjugates") {
    auto f = make_field(3, 4);
    auto base = FieldTower::get(3)->field(1);
    const auto& tt = f->trace_table();
    for (u64 k = 0; k < f->unit_order(); k += 5) {
      FieldElt x = x_power(f, k), s = zero(f);
      for (int t = 0; t < 4; ++t) s = s + frobenius(x, t);
      CHECK(restrict_to(s, base).coeffs()[0] == tt[k]);
      CHECK(trace(x, base) == restrict_to(s, base));
    }
  }

  TEST_CASE("embedding and exponent transport") {
    auto f2 = make_field(5, 2), f6 = make_field(5, 6);
    for (u64 e = 0; e < f2->unit_order(); e += 5) {
      FieldElt x = gen_power(f2, e);
      FieldElt y = embed(x, f6);
      CHECK(restrict_to(y, f2) == x);
      CHECK(gen_power(f6, transport_exponent(5, e, 2, 6)) == y);
    }
    CHECK(exponent_in_subfield(5, (ipow(5, 6) - 1) / (ipow(5, 2) - 1) * 3, 6, 2));
    CHECK_FALSE(exponent_in_subfield(5, 1, 6, 2));
  }

  TEST_CASE("alternative generator twist") {
    auto t = FieldTower::get(5, 7);
    auto f = t->field(2);
    CHECK(f->twist() == 7);
    CHECK(generator(f) == x_power(f, 7));
    CHECK(generator_order_check(f));
    CHECK_THROWS(FieldTower::get(5, 2)->field(1));
  }

  TEST_CASE("budget gate") {
    Budget tiny;
    tiny.field_elements = 100;
    CHECK_THROWS_AS(FieldTower::get(3)->field_checked(6, tiny), BudgetExceeded);
  }
}
