#pragma once
// Finite fields F_{p^m} with Conway-style norm-compatible generators.

#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "superjac/arith.hpp"

namespace superjac {

using u32 = std::uint32_t;

struct Budget {
  u64 field_elements = u64(1) << 26;     // exhaustive character sums
  u64 transform_elements = u64(1) << 22; // point-count oracle, per extension degree
  u64 orbit_elements = u64(1) << 26;     // |S| for orbit enumeration
  // Reads SUPERJAC_FIELD_BUDGET, SUPERJAC_TRANSFORM_BUDGET, SUPERJAC_ORBIT_BUDGET.
  static Budget from_env();
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;
class FieldTower;

class Field : public std::enable_shared_from_this<Field> {
 public:
  Field(u64 p, unsigned m, std::vector<u32> modulus, u64 twist, const FieldTower* tower);

  u64 p() const { return p_; }
  unsigned degree() const { return m_; }
  u64 size() const { return size_; }
  u64 unit_order() const { return size_ - 1; }
  // Monic, m + 1 coefficients, constant term first.
  const std::vector<u32>& modulus() const { return modulus_; }
  // The distinguished generator is x^twist where x is the class of the variable.
  u64 twist() const { return twist_; }
  u64 twist_inverse() const { return twist_inv_; }
  const Factorization& unit_factorization() const { return unit_factors_; }
  const FieldTower* tower() const { return tower_; }
  std::string id() const;

  // Raw coefficient-vector arithmetic (vectors of length m).
  void mul(const u32* a, const u32* b, u32* out) const;
  void mul_by_x(u32* a) const;
  std::vector<u32> xpow(const mpz_class& k) const;
  std::vector<u32> xpow(u64 k) const;
  u64 index_of(const u32* c) const;
  void coeffs_of(u64 index, u32* c) const;

  // Tr_{F/F_p}(x^i) for i < m: trace is the linear form with these weights.
  const std::vector<u32>& trace_form() const { return trace_form_; }
  // Tr_{F/F_p}(x^k) for k in [0, |F^x|). Built once, under the field budget.
  const std::vector<std::uint16_t>& trace_table() const;
  // index -> log_x and log_x -> index tables; built once, for |F| under the budget.
  const std::vector<u32>& log_table() const;
  const std::vector<u32>& exp_table() const;

 private:
  void build_tables() const;

  u64 p_;
  unsigned m_;
  u64 size_;
  std::vector<u32> modulus_;
  u64 twist_, twist_inv_;
  Factorization unit_factors_;
  std::vector<u32> trace_form_;
  const FieldTower* tower_;
  mutable std::once_flag trace_once_, table_once_;
  mutable std::vector<std::uint16_t> trace_table_;
  mutable std::vector<u32> log_table_, exp_table_;
};

class FieldElt {
 public:
  FieldElt() = default;
  FieldElt(FieldPtr f, std::vector<u32> coeffs);

  const FieldPtr& field() const { return f_; }
  const std::vector<u32>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;
  u64 index() const { return f_->index_of(c_.data()); }

  FieldElt operator+(const FieldElt& o) const;
  FieldElt operator-(const FieldElt& o) const;
  FieldElt operator-() const;
  FieldElt operator*(const FieldElt& o) const;
  bool operator==(const FieldElt& o) const;
  bool operator!=(const FieldElt& o) const { return !(*this == o); }

  FieldElt pow(const mpz_class& e) const;
  FieldElt pow(u64 e) const { return pow(mpz_class(static_cast<unsigned long>(e))); }
  FieldElt inverse() const;

 private:
  void check_same(const FieldElt& o) const;
  FieldPtr f_;
  std::vector<u32> c_;
};

// A coherent family of fields F_{p^m} for one prime p. With twist c the
// generator of every field is g_m = x_m^c, which stays norm-compatible.
class FieldTower {
 public:
  static std::shared_ptr<FieldTower> get(u64 p, u64 twist = 1);

  u64 p() const { return p_; }
  u64 twist() const { return twist_; }
  // Conway-style field of degree m; no element-count gate (tables are gated lazily).
  FieldPtr field(unsigned m) const;
  FieldPtr field_checked(unsigned m, const Budget& budget) const;

 private:
  FieldTower(u64 p, u64 twist) : p_(p), twist_(twist) {}
  std::vector<u32> conway_modulus(unsigned m) const;

  u64 p_, twist_;
  mutable std::recursive_mutex mu_;
  mutable std::vector<FieldPtr> fields_;
};

// --- element constructors ---
FieldElt zero(const FieldPtr& f);
FieldElt one(const FieldPtr& f);
FieldElt from_int(const FieldPtr& f, i64 v);
FieldElt generator(const FieldPtr& f);
FieldElt x_power(const FieldPtr& f, const mpz_class& k);
FieldElt from_index(const FieldPtr& f, u64 idx);
// g^e for the distinguished generator g.
FieldElt gen_power(const FieldPtr& f, const mpz_class& e);

// --- field operations ---
FieldPtr make_field(u64 p, unsigned m, const Budget& budget = Budget{});
bool generator_order_check(const FieldPtr& f);
// Order test for an arbitrary candidate element.
bool has_full_order(const FieldElt& x);
u64 element_order(const FieldElt& x);
// x^{p^t}; negative t means inverse Frobenius.
FieldElt frobenius(const FieldElt& x, i64 t);
FieldElt trace(const FieldElt& x, const FieldPtr& sub);
FieldElt norm(const FieldElt& x, const FieldPtr& sub);
bool is_nth_power(const FieldElt& x, u64 n);
// Exponent e in [0, |F|-2] with g^e = x for the distinguished generator g.
u64 discrete_log(const FieldElt& x);

// Tower embeddings. sub must be a subfield of the same tower.
FieldElt embed(const FieldElt& x, const FieldPtr& big);
// Inverse of embed; throws if y does not lie in the subfield.
FieldElt restrict_to(const FieldElt& y, const FieldPtr& sub);

// Exponent-level transport: alpha = g_{from}^e (in F_{p^from}) lies in
// F_{p^gcd(from,to)} iff (p^from-1)/(p^c-1) divides e. Returns the exponent of
// alpha with respect to g_{to}. Works for degrees far beyond 64-bit fields.
mpz_class transport_exponent(u64 p, const mpz_class& e, unsigned from, unsigned to);
bool exponent_in_subfield(u64 p, const mpz_class& e, unsigned from, unsigned sub);

}  // namespace superjac
