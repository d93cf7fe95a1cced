#pragma once
// L(J, T) from point counts of x^a + y^b = beta^q - beta over F_{r^m}, and
// the character-sum identities connecting the counts to Gauss sums.

#include <optional>
#include <vector>

#include "superjac/lfunction.hpp"

namespace superjac {

// sums[m - 1] = sum over beta in F_{r^m}^x of (r^m + 1 - |X_beta(F_{r^m})|).
struct TraceData {
  std::vector<mpz_class> sums;
};

// |X_beta(F)| = 1 + #{(x, y) in F^2 : x^a + y^b = beta^q - beta}, by enumeration.
mpz_class count_points(const CurveParams& c, const FieldElt& beta);

// One trace sum, by coset bucketing of x^a and y^b modulo the image of
// beta -> beta^q - beta (an F_p-subspace of index |F cap F_q|).
mpz_class trace_sum(const CurveParams& c, unsigned m, const Budget& budget = Budget::from_env());
TraceData trace_sums(const CurveParams& c, unsigned M, const Budget& budget = Budget::from_env());
// Triple loop over (beta, x, y); for tiny fields only.
mpz_class brute_force_trace_sum(const CurveParams& c, unsigned m);

struct OracleResult {
  LPolynomial L;
  TraceData traces;
  unsigned terms = 0;       // trace sums actually computed
  bool used_functional_equation = false;
  int w = 0;                // sign used to complete the polynomial (0 if not needed)
};

// full counts all deg L terms. shortcut counts about half and completes the
// polynomial by the functional equation, taking the sign from an overlapping
// pair of counted coefficients. automatic is full when affordable.
enum class OracleMode { full, shortcut, automatic };

OracleResult l_from_counts(const CurveParams& c, const Budget& budget = Budget::from_env(),
                           OracleMode mode = OracleMode::automatic);

// Coefficients of exp(sum S_m T^m / m) up to degree S.size(); throws if a
// coefficient is not integral.
std::vector<mpz_class> exp_log_series(const std::vector<mpz_class>& S);

// -sum over alpha in (F cap F_q)^x and nontrivial lambda_1^a = lambda_2^b = 1 of
// g(lambda_1, psi_alpha) g(lambda_2, psi_alpha), over F = F_{r^m}.
mpz_class gauss_side_trace_sum(const CurveParams& c, unsigned m, const Budget& budget = Budget::from_env());
// -sum over orbits with |o| dividing m of |o| omega(o)^{m/|o|}.
mpz_class orbit_side_trace_sum(const std::vector<Orbit>& orbits,
                               const std::vector<OmegaValue>& omegas, unsigned m);

// Point-count side equals the Gauss-sum side exactly for this m.
bool char_identity_check(const CurveParams& c, unsigned m, const Budget& budget = Budget::from_env());

}  // namespace superjac
