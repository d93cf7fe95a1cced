#pragma once
// <r>-orbits on S = (Z/a - 0) x (Z/b - 0) x F_q^x and the orbit values omega(o).

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "superjac/characters.hpp"

namespace superjac {

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Curve y^b + x^a = t^q - t over F_r(t) with r = p^r_exp and q = p^q_exp.
struct CurveParams {
  u64 p = 0;
  unsigned r_exp = 1;
  unsigned q_exp = 1;
  u64 a = 0;
  u64 b = 0;

  mpz_class r() const { return mpz_pow(p, r_exp); }
  mpz_class q() const { return mpz_pow(p, q_exp); }
  // q - 1 as a machine word; throws when q does not fit.
  u64 q_minus_1() const;
  std::string to_string() const;
};

// Throws InvalidParams describing the first violated invariant.
void validate(const CurveParams& c);
OrbitSetting setting_for(const CurveParams& c, const Budget& budget = Budget::from_env(), u64 twist = 1);

// o_r(n / gcd(n, i)) with r = p^r_exp.
u64 kappa(u64 p, unsigned r_exp, u64 n, u64 i);

struct Orbit {
  u64 i = 0, j = 0;
  u64 alpha_exp = 0;    // alpha = g_q^alpha_exp
  u64 size = 0;         // |o|
  u64 alpha_degree = 0; // [F_r(alpha):F_r]
  u64 size_a = 0;       // |pi_a(o)|
  u64 size_b = 0;       // |pi_b(o)|

  u64 nu_a() const { return size / size_a; }
  u64 nu_b() const { return size / size_b; }
};

// Orbits in order of their lexicographically least element (i, j, alpha_exp).
std::vector<Orbit> enumerate_orbits(const CurveParams& c, const Budget& budget = Budget::from_env());
// Walks the orbit of (i, j, alpha_exp) explicitly.
std::vector<std::array<u64, 3>> orbit_elements(const CurveParams& c, const Orbit& o);

PrimeOrbit project_a(const Orbit& o);
PrimeOrbit project_b(const Orbit& o);

enum class OmegaMethod { joint_closed_form, closed_form, direct, mixed, unresolved };
const char* method_name(OmegaMethod m);

struct OmegaValue {
  OmegaMethod method = OmegaMethod::unresolved;
  std::optional<CycElt> value;   // empty when unresolved
  bool contributes = false;      // value == r^{|o|}
  std::string note;
};

// Evaluation order: joint closed form for both components, then
// per-component closed forms, then direct summation under the budget.
OmegaValue omega(const CurveParams& c, const Orbit& o, const OrbitSetting& s);

// Hypotheses for the joint closed form: p odd, a and b supersingular, 4 nu_a
// and 4 nu_b dividing [F_r:F_p].
bool joint_closed_form_applies(const CurveParams& c);
// True iff alpha (given in F_q) is an n-th power in F_p^{deg}.
bool alpha_is_power(const OrbitSetting& s, u64 alpha_exp, unsigned deg, u64 n);

struct OmegaDecomposition {
  CycElt zeta_o;      // root of unity of order dividing ab
  CycElt g_o;         // Weil integer of size p^theta
  u64 theta = 0;      // lcm(o_p(a), o_p(b))
  u64 exponent = 0;   // [F_r:F_p] |o| / theta
};
// Empty when [F_r:F_p] |o| / theta is not integral.
std::optional<OmegaDecomposition> omega_decomposition(const CurveParams& c, const Orbit& o, const OrbitSetting& s);

// omega for every orbit. Distinct component Gauss sums are computed once,
// concurrently; results follow the order of `orbits`.
std::vector<OmegaValue> omega_all(const CurveParams& c, const std::vector<Orbit>& orbits, const OrbitSetting& s);

// Lexicographically least representative of the orbit of (i, alpha) in S'_n.
PrimeOrbit canonical_prime_orbit(const OrbitSetting& s, const PrimeOrbit& o);

// nu_p(omega(o)) / |o| from the two Stickelberger fractions.
struct OrbitValuation {
  ValuationFraction a_side, b_side;
  mpq_class total() const { return a_side.value() + b_side.value(); }
};
OrbitValuation valuation_of_omega(const CurveParams& c, const Orbit& o);

}  // namespace superjac
