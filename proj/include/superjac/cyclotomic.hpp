#pragma once
// Exact arithmetic in Z[zeta_M], power basis modulo the M-th cyclotomic polynomial.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "superjac/arith.hpp"

namespace superjac {

struct CyclotomicRing {
  u64 M = 1;
  u64 phi = 1;
  std::vector<i64> Phi;                       // monic, degree phi, constant first
  std::vector<std::pair<u64, i64>> tail;      // nonzero (i, Phi_i) for i < phi
};

// Cached and shared; the reference stays valid for the process lifetime.
const CyclotomicRing& cyclotomic_ring(u64 M);
std::vector<i64> cyclotomic_polynomial(u64 M);

struct ComplexApprox {
  long double re = 0, im = 0;
  long double err = 0;  // rigorous bound on distance to the true value

  long double abs() const;
  ComplexApprox operator*(const ComplexApprox& o) const;
  ComplexApprox operator+(const ComplexApprox& o) const;
};

class CycElt {
 public:
  CycElt() : CycElt(1) {}
  explicit CycElt(u64 M);
  static CycElt integer(const mpz_class& n, u64 M = 1);
  // Coefficients indexed by exponent mod M (any length; folded mod M, then reduced).
  static CycElt from_exponents(u64 M, std::vector<mpz_class> by_exponent);
  static CycElt from_exponents_i64(u64 M, const std::vector<i64>& by_exponent);
  // Already reduced coefficients (length phi(M)).
  static CycElt from_reduced(u64 M, std::vector<mpz_class> coeffs);

  u64 conductor() const { return M_; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  bool is_zero() const;

  CycElt lift(u64 M2) const;
  CycElt operator+(const CycElt& o) const;
  CycElt operator-(const CycElt& o) const;
  CycElt operator-() const;
  CycElt operator*(const CycElt& o) const;
  CycElt operator*(const mpz_class& s) const;
  CycElt& operator+=(const CycElt& o) { return *this = *this + o; }
  CycElt& operator*=(const CycElt& o) { return *this = *this * o; }
  bool operator==(const CycElt& o) const;
  bool operator!=(const CycElt& o) const { return !(*this == o); }

  CycElt pow(u64 e) const;
  CycElt conjugate() const;
  // sigma_c : zeta_M -> zeta_M^c, gcd(c, M) = 1
  CycElt galois(u64 c) const;
  std::optional<mpz_class> is_rational_integer() const;
  // Smallest conductor representing the same value.
  CycElt compress() const;
  // Returns the value at conductor M/l if it lies in Q(zeta_{M/l}).
  std::optional<CycElt> descend(u64 l) const;

  // Embedding zeta_M -> exp(2 pi i j / M). bits > 64 switches to MPFR accumulation.
  ComplexApprox embed_complex(u64 j = 1, unsigned bits = 64) const;

  std::string to_string() const;

 private:
  u64 M_;
  std::vector<mpz_class> c_;
};

CycElt zeta(u64 M, i64 k);

// Integer polynomial product by Kronecker substitution (exact, signed).
std::vector<mpz_class> kronecker_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b);
// Helpers shared with the L-polynomial product.
mpz_class kronecker_pack(const mpz_class* c, std::size_t n, std::size_t bits);
std::vector<mpz_class> kronecker_unpack(const mpz_class& z, std::size_t n, std::size_t bits);
std::size_t max_bits(const std::vector<mpz_class>& v);
// Reduce a coefficient vector (exponents < length) modulo Phi_M in place; result has length phi.
void reduce_mod_phi(std::vector<mpz_class>& a, const CyclotomicRing& ring);

}  // namespace superjac
