#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "superjac/finite_field.hpp"
#include "superjac/geometry.hpp"

using namespace superjac;

namespace {

std::multiset<u64> mults(const SncFiber& f) {
  auto m = f.multiplicities();
  return {m.begin(), m.end()};
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("genus and conductor") {
    CHECK(genus(2, 3) == 1);
    CHECK(genus(5, 7) == 12);
    CHECK(genus(7, 5) == 12);
    CHECK_THROWS_AS(genus(4, 6), InvalidParams);
    CHECK(conductor_degree({5, 1, 1, 2, 3}) == 12);
    CHECK(conductor_degree({67, 1, 1, 5, 7}) == 1632);
  }

  TEST_CASE("fibers for (a, b, q) = (7, 5, 67)") {
    CurveParams c{67, 1, 1, 7, 5};
    auto fin = snc_special_fiber(c, PlaceKind::finite);
    auto inf = snc_special_fiber(c, PlaceKind::infinity);
    CHECK(mults(fin) == std::multiset<u64>{35, 1, 20, 14, 5, 7});
    CHECK(mults(inf) == std::multiset<u64>{35, 1, 12, 30, 28, 25, 20, 15, 10, 5, 21, 14, 7});
    // neighbours of the central curve
    std::multiset<u64> fin_adj, inf_adj;
    for (auto [u, v] : fin.edges)
      if (u == 0) fin_adj.insert(fin.components[v].multiplicity);
    for (auto [u, v] : inf.edges)
      if (u == 0) inf_adj.insert(inf.components[v].multiplicity);
    CHECK(fin_adj == std::multiset<u64>{1, 20, 14});
    CHECK(inf_adj == std::multiset<u64>{12, 30, 28});
    CHECK(fin.is_tree());
    CHECK(inf.is_tree());
    CHECK(lorenzini_product(fin) == 1);
    CHECK(lorenzini_product(inf) == 1);
  }

  TEST_CASE("chain sequences") {
    CHECK(snc_chain(35, 1, 3) == std::vector<u64>{12, 1});
    CHECK(snc_chain(35, 5, 6) == std::vector<u64>{30, 25, 20, 15, 10, 5});
    CHECK(snc_chain(35, 7, 3) == std::vector<u64>{14, 7});
    CHECK(snc_chain(35, 1, 1) == std::vector<u64>{1});
  }

  TEST_CASE("fiber invariants and Tamagawa on a sweep") {
    for (u64 a = 2; a <= 12; ++a)
      for (u64 b = 2; b <= 12; ++b) {
        if (gcd_u64(a, b) != 1) continue;
        for (u64 p : {2, 3, 5, 7, 11, 13}) {
          if (a % p == 0 || b % p == 0) continue;
          for (unsigned qe : {1u, 2u}) {
            CurveParams c{p, 1, qe, a, b};
            for (auto kind : {PlaceKind::finite, PlaceKind::infinity}) {
              auto f = snc_special_fiber(c, kind);
              CHECK_MESSAGE(fiber_invariant_failures(f, c).empty(), c.to_string());
              auto m = f.multiplicities();
              CHECK(std::count(m.begin(), m.end(), 1u) >= 1);
            }
            CHECK(tamagawa(c).all_one());
          }
        }
      }
  }

  TEST_CASE("height for (2, 3)") {
    HeightData h = height({5, 1, 1, 2, 3});
    CHECK(h.D == mpq_class(1, 6));
    CHECK(h.E == mpq_class(1, 6));
    CHECK(h.h == 1);
    // D = (b - 1)^2 / 8b for a = 2
    for (u64 b : {3, 5, 7, 9, 11}) {
      const u64 p = b == 5 ? 3 : 5;
      mpq_class want((b - 1) * (b - 1), 8 * b);
      want.canonicalize();
      CHECK(height({p, 1, 1, 2, b}).D == want);
    }
  }

  TEST_CASE("E depends only on q mod ab") {
    // 5 and 125 are both 5 mod 6
    CHECK(height({5, 1, 1, 2, 3}).E == height({5, 1, 3, 2, 3}).E);
    // 2^1 and 2^5 are both 2 mod 15
    CHECK(height({2, 1, 1, 3, 5}).E == height({2, 1, 5, 3, 5}).E);
  }

  TEST_CASE("height bounds on a sweep") {
    for (u64 a = 2; a <= 12; ++a)
      for (u64 b = 2; b <= 12; ++b) {
        if (gcd_u64(a, b) != 1) continue;
        for (u64 p : {2, 3, 5, 7}) {
          if (a % p == 0 || b % p == 0) continue;
          for (unsigned qe : {1u, 2u, 3u}) {
            HeightData h = height({p, 1, qe, a, b});
            CHECK(h.bounds_hold());
            CHECK(h.h >= 0);
          }
        }
      }
  }

  TEST_CASE("bad places by brute-force Frobenius orbits") {
    for (auto [p, re, qe] : std::vector<std::tuple<u64, unsigned, unsigned>>{{3, 1, 2}, {5, 1, 2}, {2, 1, 4}, {2, 2, 4}, {3, 2, 3}}) {
      CurveParams c{p, re, qe, p == 2 ? 3u : 2u, p == 5 ? 3u : 5u};
      auto f = make_field(p, qe);
      std::map<u64, mpz_class> want;
      std::set<u64> seen;
      for (u64 idx = 0; idx < f->size(); ++idx) {
        if (seen.count(idx)) continue;
        FieldElt x = from_index(f, idx), y = x;
        u64 len = 0;
        do {
          seen.insert(y.index());
          y = frobenius(y, re);
          ++len;
        } while (y != x);
        want[len] += 1;
      }
      BadPlaces bp = bad_places(c);
      std::map<u64, mpz_class> got;
      for (const auto& g : bp.finite) got[g.degree] = g.count;
      CHECK(got == want);
      CHECK(bp.total_degree() == c.q() + 1);
    }
  }

  TEST_CASE("DOT export") {
    auto dot = to_dot(snc_special_fiber({67, 1, 1, 7, 5}, PlaceKind::finite));
    CHECK(dot.find("label=\"35\"") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '\n') == 1 + 6 + 5 + 1);
  }
}
