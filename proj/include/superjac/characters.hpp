#pragma once
// Multiplicative and additive characters, Gauss sums, orbit Gauss sums and
// their closed forms, and Stickelberger valuations.

#include <optional>

#include <gmpxx.h>

#include "superjac/cyclotomic.hpp"
#include "superjac/finite_field.hpp"

namespace superjac {

// x = g^k  ->  zeta_n^{i k} for the distinguished generator g. n divides |F^x|.
struct MultChar {
  FieldPtr field;
  u64 n = 1;
  u64 i = 0;

  u64 order() const { return n / gcd_u64(n, i % n == 0 ? n : i % n); }
  bool trivial() const { return i % n == 0; }
  // Exponent of zeta_n at g^k.
  u64 exponent_at(const mpz_class& k) const;
  CycElt operator()(const FieldElt& x) const;  // chi(0) = 0
  MultChar pow(u64 e) const { return {field, n, (i % n) * (e % n) % n}; }
  MultChar inverse() const { return {field, n, (n - i % n) % n}; }
};

// x -> zeta_p^{Tr_{F/F_p}(alpha x)}
struct AddChar {
  FieldPtr field;
  FieldElt alpha;

  bool trivial() const { return alpha.is_zero(); }
  CycElt operator()(const FieldElt& x) const;
};

MultChar teichmuller_char(const FieldPtr& f);
MultChar mult_char(const FieldPtr& f, u64 n, u64 i);
AddChar additive_char(const FieldElt& alpha);
// chi o N_{big/F}: with norm-compatible generators this keeps (n, i).
MultChar compose_norm(const MultChar& chi, const FieldPtr& big);
// psi o Tr_{big/F} = psi_{big, alpha}.
AddChar compose_trace(const AddChar& psi, const FieldPtr& big);

// -sum_{x in F^x} chi(x) psi(x), exact. Sums over |F| elements under the budget.
CycElt gauss_sum(const MultChar& chi, const AddChar& psi, const Budget& budget = Budget::from_env());
// Same with psi = psi_{F, g^alpha_exp} (or trivial psi when alpha_exp is empty).
CycElt gauss_sum_exponent(const FieldPtr& f, u64 n, u64 i, const std::optional<mpz_class>& alpha_exp,
                          const Budget& budget = Budget::from_env());

bool twist_identity_check(const MultChar& chi, const FieldElt& alpha, const Budget& budget = Budget::from_env());
bool hasse_davenport_check(const MultChar& chi, const AddChar& psi, const FieldPtr& big,
                           const Budget& budget = Budget::from_env());

// -chi(x)|F0| for trace-zero x in the quadratic extension F of F0 (the field of chi).
CycElt shafarevich_tate_eval(const FieldPtr& f0, const MultChar& chi);

// ---------------- orbit Gauss sums ----------------

// Ambient data shared by all orbit computations: r = p^r_exp, q = p^q_exp.
struct OrbitSetting {
  u64 p = 0;
  unsigned r_exp = 1;
  unsigned q_exp = 1;
  u64 twist = 1;  // generator system g_m = x_m^twist
  Budget budget = Budget::from_env();
};

// o' in O'_n with representative (i, alpha), alpha = g_q^alpha_exp.
struct PrimeOrbit {
  u64 n = 0;
  u64 i = 0;
  mpz_class alpha_exp;
  u64 size = 0;
};

// Exponent of alpha relative to the generator of F' = F_{r^{|o'|}}.
mpz_class alpha_exponent_in(const OrbitSetting& s, const mpz_class& alpha_exp, unsigned target_deg);
// Exponent of zeta_n in lambda_(i,alpha)(alpha).
u64 lambda_at_alpha(const OrbitSetting& s, const PrimeOrbit& o);

// g(o') by direct summation over F'.
CycElt orbit_gauss(const OrbitSetting& s, const PrimeOrbit& o);

enum class ClosedForm { none, quadratic, supersingular };
struct ClosedFormValue {
  CycElt value;
  ClosedForm kind = ClosedForm::none;
};
// Quadratic (2i = n, p odd, 4 | [F_r:F_p]) or supersingular (n/gcd(n,i) > 2
// supersingular, p odd) evaluation; empty when neither applies.
std::optional<ClosedFormValue> orbit_gauss_closed_form(const OrbitSetting& s, const PrimeOrbit& o);

// (1/mu) sum_{k<mu} {-i p^k / n}, via the period kappa = o_p(n/gcd(n,i)).
mpq_class stickelberger_valuation(u64 n, u64 i, u64 p, u64 mu);
struct ValuationFraction {
  u64 num = 0;
  u64 den = 1;
  mpq_class value() const { return mpq_class(static_cast<unsigned long>(num), static_cast<unsigned long>(den)); }
};
ValuationFraction num_den(const OrbitSetting& s, const PrimeOrbit& o);

}  // namespace superjac
