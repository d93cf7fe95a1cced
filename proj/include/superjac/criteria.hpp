#pragma once
// Arithmetic criteria on (a, b, p, r, q): rank-zero conditions, rank bounds,
// simplicity and the search for admissible pairs.

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "superjac/lfunction.hpp"

namespace superjac {

struct SupersingularWitness {
  u64 n = 0, p = 0;
  bool is_supersingular = false;
  std::optional<u64> nu;  // least nu >= 1 with p^nu = -1 mod n
};
SupersingularWitness supersingular(u64 n, u64 p);

// Least numbered condition that holds:
//   1. gcd(a o_p(a), b o_p(b)) = 1
//   2. a o_p(a) odd and b supersingular
//   3. a supersingular and b o_p(b) odd
std::optional<int> rank_zero_criterion(u64 a, u64 b, u64 p);
// Every condition that holds, ascending.
std::vector<int> rank_zero_conditions(u64 a, u64 b, u64 p);
bool rank_zero_condition_holds(int condition, u64 a, u64 b, u64 p);

struct LowerBound {
  bool applicable = false;
  std::string reason;  // why not, when not applicable
  mpz_class raw;       // the displayed bound before clamping
  u64 value = 0;       // max(raw, 0)
};
// p odd, a and b supersingular with 4 nu_a, 4 nu_b | [F_r:F_p].
LowerBound rank_lower_bound(const CurveParams& c);

u64 rank_upper_bound(const CurveParams& c);  // (a-1)(b-1)(q-1)

// Hypotheses of the lower bound plus ab(q-1) | [F_r:F_p]; additionally
// requires ab(q-1) | r - 1, which the conclusion relies on.
std::optional<u64> rank_exact_full(const CurveParams& c);
// Every orbit is a singleton and every alpha in F_q^x is an ab-th power in F_r.
struct PowerResidueCheck {
  bool all_singletons = false;
  bool all_powers = false;
  u64 orbits = 0;
};
PowerResidueCheck full_rank_power_residue_check(const CurveParams& c, const std::vector<Orbit>& orbits,
                                                const OrbitSetting& s);

// Smallest [F_r:F_p] meeting the lower-bound hypotheses, or the full-rank ones.
std::optional<u64> minimal_r_exponent_lower_bound(u64 a, u64 b, u64 p);
std::optional<u64> minimal_r_exponent_full(u64 a, u64 b, u64 p, unsigned q_exp);

bool simplicity(u64 a, u64 b);

struct RankAssessment {
  u64 lower = 0, upper = 0;
  std::optional<u64> exact;
  std::vector<std::string> methods;  // one tag per bound that was used
};
// Combines criteria with an analytic rank certificate when one is given.
RankAssessment assess_rank(const CurveParams& c, const RankCertificate* analytic = nullptr);

enum class PairCondition { any, c1, c2, c3, lower_bound };
std::optional<PairCondition> parse_pair_condition(const std::string& s);
struct PairQuery {
  u64 p = 0;
  PairCondition condition = PairCondition::any;
  std::size_t limit = 20;
  bool primes_only = false;
  u64 max_ab = 100;     // bound on a and b in the exhaustive part
  unsigned max_k = 9;   // bound on k, l in (p^k - 1)/(p - 1)
};
struct PairResult {
  u64 a = 0, b = 0;
  int condition = 0;  // 1, 2, 3; 4 marks the lower-bound hypotheses
  std::vector<int> conditions;  // all rank-zero conditions that hold
  std::string witnesses;
};
// Small pairs in order of (max(a, b), min(a, b), a), then the repunit
// constructions. Incomplete by nature: both searches are bounded.
std::vector<PairResult> find_pairs(const PairQuery& q);

}  // namespace superjac
