#pragma once
// Square-free parts and certified complex root moduli of L-polynomials.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "superjac/lfunction.hpp"

namespace superjac {

using ZPoly = std::vector<mpz_class>;  // ascending

ZPoly derivative(const ZPoly& f);
ZPoly primitive_part(const ZPoly& f);
// gcd over Z[x] by primitive pseudo-remainder sequence; positive leading coefficient.
ZPoly poly_gcd(const ZPoly& f, const ZPoly& g);
// Exact quotient f / g; throws if g does not divide f.
ZPoly exact_div(const ZPoly& f, const ZPoly& g);
// Yun's algorithm: f = prod_k sqf[k-1]^k (up to the content of f).
std::vector<ZPoly> squarefree_decomposition(const ZPoly& f);
ZPoly squarefree_part(const ZPoly& f);

struct RhResult {
  bool ok = false;
  std::size_t distinct_roots = 0;  // roots of the square-free part in U = T^g
  unsigned g = 1;
  // Rigorous bound on max | |z| - 1/r | over the roots z of L(T).
  double max_deviation = 0;
  unsigned precision_bits = 0;
  std::string note;
};
// Aberth iteration in MPFR on the square-free part of L viewed in U = T^g,
// followed by inclusion disks of radius n |P/P'|.
RhResult rh_check(const LPolynomial& L, double tol = 1e-9);

}  // namespace superjac
