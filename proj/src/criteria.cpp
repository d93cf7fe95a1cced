#include "superjac/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include <mpfr.h>

namespace superjac {

SupersingularWitness supersingular(u64 n, u64 p) {
  SupersingularWitness w;
  w.n = n;
  w.p = p;
  if (gcd_u64(n, p) != 1) throw InvalidParams("supersingular: gcd(n, p) ≠ 1");
  w.nu = supersingular_nu(n, p);
  w.is_supersingular = w.nu.has_value();
  return w;
}

bool rank_zero_condition_holds(int condition, u64 a, u64 b, u64 p) {
  const u64 ao = a * mult_order(p, a), bo = b * mult_order(p, b);
  switch (condition) {
    case 1: return gcd_u64(ao, bo) == 1;
    case 2: return ao % 2 == 1 && supersingular_nu(b, p).has_value();
    case 3: return supersingular_nu(a, p).has_value() && bo % 2 == 1;
    default: return false;
  }
}

std::optional<int> rank_zero_criterion(u64 a, u64 b, u64 p) {
  for (int k = 1; k <= 3; ++k)
    if (rank_zero_condition_holds(k, a, b, p)) return k;
  return std::nullopt;
}

std::vector<int> rank_zero_conditions(u64 a, u64 b, u64 p) {
  std::vector<int> out;
  for (int k = 1; k <= 3; ++k)
    if (rank_zero_condition_holds(k, a, b, p)) out.push_back(k);
  return out;
}

namespace {

// Both supersingular with p odd; nu values are returned.
std::optional<std::pair<u64, u64>> supersingular_pair(u64 a, u64 b, u64 p, std::string* why) {
  if (p == 2) {
    if (why) *why = "p = 2";
    return std::nullopt;
  }
  auto na = supersingular_nu(a, p), nb = supersingular_nu(b, p);
  if (!na || !nb) {
    if (why) *why = !na ? "a is not supersingular" : "b is not supersingular";
    return std::nullopt;
  }
  return std::pair{*na, *nb};
}

// Least integer n with n >= (A - B sqrt(Q)) / k, for A, B rationals, B, k > 0.
mpz_class ceil_minus_sqrt(const mpq_class& A, const mpq_class& B, const mpz_class& Q, u64 k) {
  mpfr_t x, y;
  mpfr_inits2(256, x, y, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_z(x, Q.get_mpz_t(), MPFR_RNDN);
  mpfr_sqrt(x, x, MPFR_RNDN);
  mpfr_set_q(y, B.get_mpq_t(), MPFR_RNDN);
  mpfr_mul(x, x, y, MPFR_RNDN);
  mpfr_set_q(y, A.get_mpq_t(), MPFR_RNDN);
  mpfr_sub(x, y, x, MPFR_RNDN);
  mpfr_div_ui(x, x, k, MPFR_RNDN);
  mpfr_ceil(x, x);
  mpz_class n;
  mpfr_get_z(n.get_mpz_t(), x, MPFR_RNDN);
  mpfr_clears(x, y, static_cast<mpfr_ptr>(nullptr));
  // n works iff B sqrt(Q) >= A - n k
  auto ok = [&](const mpz_class& m) {
    mpq_class rhs = A - mpq_class(m * static_cast<unsigned long>(k));
    if (rhs <= 0) return true;
    return B * B * mpq_class(Q) >= rhs * rhs;
  };
  while (!ok(n)) ++n;
  while (ok(n - 1)) --n;
  return n;
}

}  // namespace

LowerBound rank_lower_bound(const CurveParams& c) {
  validate(c);
  LowerBound lb;
  auto nus = supersingular_pair(c.a, c.b, c.p, &lb.reason);
  if (!nus) return lb;
  if (c.r_exp % (4 * nus->first) != 0 || c.r_exp % (4 * nus->second) != 0) {
    lb.reason = "4 nu_a or 4 nu_b does not divide [F_r:F_p]";
    return lb;
  }
  lb.applicable = true;
  // ((q-1)/ab - (p sqrt q - 1)/(p-1)) / q_exp = (A - B sqrt q) / q_exp
  const mpz_class q = c.q();
  const mpq_class A = mpq_class(q - 1, mpz_class(static_cast<unsigned long>(c.a * c.b))) +
                      mpq_class(1, static_cast<unsigned long>(c.p - 1));
  const mpq_class B(static_cast<unsigned long>(c.p), static_cast<unsigned long>(c.p - 1));
  lb.raw = ceil_minus_sqrt(A, B, q, c.q_exp) * static_cast<unsigned long>((c.a - 1) * (c.b - 1));
  lb.value = lb.raw > 0 ? lb.raw.get_ui() : 0;
  return lb;
}

u64 rank_upper_bound(const CurveParams& c) { return (c.a - 1) * (c.b - 1) * c.q_minus_1(); }

std::optional<u64> rank_exact_full(const CurveParams& c) {
  validate(c);
  auto nus = supersingular_pair(c.a, c.b, c.p, nullptr);
  if (!nus) return std::nullopt;
  const u64 n = c.a * c.b * c.q_minus_1();
  if (c.r_exp % (4 * nus->first) || c.r_exp % (4 * nus->second) || c.r_exp % n) return std::nullopt;
  if (c.r_exp % mult_order(c.p, n) != 0) return std::nullopt;
  return rank_upper_bound(c);
}

PowerResidueCheck full_rank_power_residue_check(const CurveParams& c, const std::vector<Orbit>& orbits,
                                                const OrbitSetting& s) {
  PowerResidueCheck pr;
  pr.orbits = orbits.size();
  pr.all_singletons = std::all_of(orbits.begin(), orbits.end(), [](const Orbit& o) { return o.size == 1; });
  pr.all_powers = std::all_of(orbits.begin(), orbits.end(), [&](const Orbit& o) {
    return alpha_is_power(s, o.alpha_exp, static_cast<unsigned>(c.r_exp * o.alpha_degree), c.a * c.b);
  });
  return pr;
}

std::optional<u64> minimal_r_exponent_lower_bound(u64 a, u64 b, u64 p) {
  auto nus = supersingular_pair(a, b, p, nullptr);
  if (!nus) return std::nullopt;
  return lcm_u64(4 * nus->first, 4 * nus->second);
}

std::optional<u64> minimal_r_exponent_full(u64 a, u64 b, u64 p, unsigned q_exp) {
  auto base = minimal_r_exponent_lower_bound(a, b, p);
  if (!base) return std::nullopt;
  const u64 n = a * b * (ipow(p, q_exp) - 1);
  return lcm_u64(lcm_u64(*base, n), mult_order(p, n));
}

bool simplicity(u64 a, u64 b) { return is_prime(a) && is_prime(b); }

RankAssessment assess_rank(const CurveParams& c, const RankCertificate* analytic) {
  RankAssessment ra;
  ra.upper = rank_upper_bound(c);
  ra.methods.push_back("upper: 2g(q-1)");
  if (rank_zero_criterion(c.a, c.b, c.p)) {
    ra.upper = 0;
    ra.exact = 0;
    ra.methods.push_back("exact: rank-zero criterion");
  }
  if (auto lb = rank_lower_bound(c); lb.applicable && lb.value > ra.lower) {
    ra.lower = lb.value;
    ra.methods.push_back("lower: supersingular bound");
  }
  if (auto full = rank_exact_full(c)) {
    ra.lower = ra.upper = *full;
    ra.exact = full;
    ra.methods.push_back("exact: full rank");
  }
  if (analytic) {
    ra.lower = std::max(ra.lower, analytic->lower);
    ra.upper = std::min(ra.upper, analytic->upper);
    if (analytic->exact) {
      if (ra.exact && *ra.exact != *analytic->exact) throw std::logic_error("criteria disagree with analytic rank");
      ra.exact = analytic->exact;
      ra.methods.push_back("exact: orbit count");
    }
  }
  if (ra.exact) ra.lower = ra.upper = *ra.exact;
  if (ra.lower > ra.upper) throw std::logic_error("rank bounds cross");
  return ra;
}

std::optional<PairCondition> parse_pair_condition(const std::string& s) {
  if (s == "any") return PairCondition::any;
  if (s == "1") return PairCondition::c1;
  if (s == "2") return PairCondition::c2;
  if (s == "3") return PairCondition::c3;
  if (s == "lower-bound") return PairCondition::lower_bound;
  return std::nullopt;
}

namespace {

std::string witnesses(u64 a, u64 b, u64 p) {
  std::ostringstream os;
  os << "o_p(a)=" << mult_order(p, a) << ";o_p(b)=" << mult_order(p, b);
  if (auto n = supersingular_nu(a, p)) os << ";nu_a=" << *n;
  if (auto n = supersingular_nu(b, p)) os << ";nu_b=" << *n;
  return os.str();
}

std::optional<int> qualifies(const PairQuery& q, u64 a, u64 b) {
  if (a < 2 || b < 2 || gcd_u64(a, b) != 1 || a % q.p == 0 || b % q.p == 0) return std::nullopt;
  if (q.primes_only && !simplicity(a, b)) return std::nullopt;
  switch (q.condition) {
    case PairCondition::any: return rank_zero_criterion(a, b, q.p);
    case PairCondition::c1: return rank_zero_condition_holds(1, a, b, q.p) ? std::optional(1) : std::nullopt;
    case PairCondition::c2: return rank_zero_condition_holds(2, a, b, q.p) ? std::optional(2) : std::nullopt;
    case PairCondition::c3: return rank_zero_condition_holds(3, a, b, q.p) ? std::optional(3) : std::nullopt;
    case PairCondition::lower_bound:
      return supersingular_pair(a, b, q.p, nullptr) ? std::optional(4) : std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::vector<PairResult> find_pairs(const PairQuery& q) {
  if (!is_prime(q.p)) throw InvalidParams("p must be prime");
  // (a, b) and (b, a) are the same curve up to the criteria's symmetry,
  // except for conditions 2 and 3 which are swapped by it
  const bool ordered = q.condition == PairCondition::c2 || q.condition == PairCondition::c3;
  std::vector<PairResult> out;
  std::set<std::pair<u64, u64>> seen;
  auto emit = [&](u64 a, u64 b) {
    if (out.size() >= q.limit || seen.count({a, b})) return;
    if (!ordered && seen.count({b, a})) return;
    auto cond = qualifies(q, a, b);
    if (!cond) return;
    if (*cond <= 3 && !rank_zero_condition_holds(*cond, a, b, q.p)) throw std::logic_error("pair failed re-verification");
    seen.insert({a, b});
    out.push_back({a, b, *cond, rank_zero_conditions(a, b, q.p), witnesses(a, b, q.p)});
  };
  for (u64 m = 3; m <= q.max_ab && out.size() < q.limit; ++m)
    for (u64 lo = 2; lo < m; ++lo) {
      emit(lo, m);
      if (ordered) emit(m, lo);
    }
  // a = (p^k - 1)/(p - 1) with k odd, against supersingular primes b, and
  // pairs of repunits with odd prime exponents for condition 1
  std::vector<std::pair<unsigned, u64>> repunits;
  for (unsigned k = 3; k <= q.max_k; k += 2)
    if (ipow_fits(q.p, k, u64(1) << 40)) repunits.push_back({k, (ipow(q.p, k) - 1) / (q.p - 1)});
  for (auto [k, a] : repunits) {
    for (u64 b = 3; b <= q.max_ab; ++b)
      if (b != q.p && is_prime(b) && supersingular_nu(b, q.p)) {
        emit(a, b);
        emit(b, a);
      }
    for (auto [l, b] : repunits)
      if (l != k && is_prime(k) && is_prime(l)) emit(a, b);
  }
  return out;
}

}  // namespace superjac
