#pragma once
// L(J, T) as a product over orbits, its functional equation, vanishing order
// at T = 1/r and special value.

#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "superjac/orbits.hpp"

namespace superjac {

class UnresolvedOrbits : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integer polynomial, ascending coefficients, over a base field of size r.
struct LPolynomial {
  std::vector<mpz_class> coeffs;
  mpz_class r;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool operator==(const LPolynomial& o) const { return r == o.r && coeffs == o.coeffs; }
};

// One factor 1 - omega T^size.
struct LFactor {
  u64 size = 0;
  CycElt omega;
};

// Balanced product tree over Z[zeta_M][T^g], g = gcd of the sizes. Throws
// std::logic_error if a coefficient of the product is not a rational integer.
LPolynomial expand_factors(const std::vector<LFactor>& factors, const mpz_class& r);

// Throws UnresolvedOrbits when some omega is missing.
LPolynomial l_polynomial(const CurveParams& c, const std::vector<Orbit>& orbits,
                         const std::vector<OmegaValue>& omegas);

// The w in {+1, -1} with c_{b-k} = w r^{b-2k} c_k for all k; empty if neither works.
std::optional<int> functional_equation_sign(const LPolynomial& L);

struct SpecialValue {
  unsigned vanishing_order = 0;
  mpq_class value;  // (L(T) / (1 - rT)^v) at T = 1/r
};
unsigned vanishing_order(const LPolynomial& L);
SpecialValue special_value(const LPolynomial& L);

enum class OrbitStatus { contributes, excluded_by_valuation, excluded_by_value, unresolved };
const char* status_name(OrbitStatus s);

struct RankCertificate {
  u64 lower = 0, upper = 0;
  std::optional<u64> exact;
  std::vector<OrbitStatus> status;  // parallel to the orbit list
  u64 unresolved = 0;
};
// Counts orbits with omega(o) = r^{|o|}. Orbits whose valuation differs from
// |o| are excluded without needing omega.
RankCertificate analytic_rank(const CurveParams& c, const std::vector<Orbit>& orbits,
                              const std::vector<OmegaValue>& omegas);

// omega(o) * conj(omega(o)) == r^{2|o|} exactly, for every resolved orbit.
bool factor_weil_check(const CurveParams& c, const std::vector<Orbit>& orbits, const std::vector<OmegaValue>& omegas);

// Everything needed downstream from one instance.
struct LFunctionData {
  CurveParams params;
  std::vector<Orbit> orbits;
  std::vector<OmegaValue> omegas;
  std::optional<LPolynomial> L;  // empty when orbits are unresolved
  RankCertificate rank;
};
LFunctionData compute_lfunction(const CurveParams& c, const Budget& budget = Budget::from_env(), u64 twist = 1);

// Smallest c > 1, not a power of p, coprime to p^m - 1 for every
// m <= max_degree: a valid alternative generator twist for the tower.
u64 alternative_twist(u64 p, unsigned max_degree);

}  // namespace superjac
