#include "superjac/characters.hpp"

#include <stdexcept>

#include "superjac/parallel.hpp"

namespace superjac {

namespace {

// Tr_{F/F_p}(y) from coefficients.
u64 trace_of(const FieldElt& y) {
  const auto& form = y.field()->trace_form();
  const u64 p = y.field()->p();
  u64 t = 0;
  for (std::size_t j = 0; j < form.size(); ++j) t = (t + static_cast<u64>(form[j]) * y.coeffs()[j]) % p;
  return t;
}

u64 reduce_exponent(const mpz_class& k, u64 n) {
  mpz_class r = k % mpz_class(static_cast<unsigned long>(n));
  if (r < 0) r += static_cast<unsigned long>(n);
  return r.get_ui();
}

void require_divides_units(const FieldPtr& f, u64 n) {
  if (n == 0 || f->unit_order() % n != 0) throw std::invalid_argument("character order must divide |F^x|");
}

}  // namespace

u64 MultChar::exponent_at(const mpz_class& k) const {
  return mulmod(i % n, reduce_exponent(k, n), n);
}

CycElt MultChar::operator()(const FieldElt& x) const {
  if (x.is_zero()) return CycElt(n);
  return zeta(n, static_cast<i64>(exponent_at(mpz_class(static_cast<unsigned long>(discrete_log(x))))));
}

CycElt AddChar::operator()(const FieldElt& x) const {
  const u64 p = field->p();
  if (alpha.is_zero()) return CycElt::integer(1, p);
  return zeta(p, static_cast<i64>(trace_of(alpha * x)));
}

MultChar teichmuller_char(const FieldPtr& f) { return {f, f->unit_order(), 1}; }

MultChar mult_char(const FieldPtr& f, u64 n, u64 i) {
  require_divides_units(f, n);
  return {f, n, i % n};
}

AddChar additive_char(const FieldElt& alpha) { return {alpha.field(), alpha}; }

MultChar compose_norm(const MultChar& chi, const FieldPtr& big) {
  if (big->degree() % chi.field->degree() != 0 || big->p() != chi.field->p())
    throw std::invalid_argument("compose_norm: not an extension");
  // N(g_big) = g_small, so chi(N(g_big^k)) = zeta_n^{ik}
  return {big, chi.n, chi.i};
}

AddChar compose_trace(const AddChar& psi, const FieldPtr& big) {
  if (big->degree() % psi.field->degree() != 0 || big->p() != psi.field->p())
    throw std::invalid_argument("compose_trace: not an extension");
  return {big, embed(psi.alpha, big)};
}

CycElt gauss_sum_exponent(const FieldPtr& f, u64 n, u64 i, const std::optional<mpz_class>& alpha_exp,
                          const Budget& budget) {
  if (n == 0) throw std::invalid_argument("character order must be positive");
  if (f->size() > budget.field_elements) throw BudgetExceeded("Gauss sum field exceeds element budget");
  const u64 p = f->p();
  const u64 N = f->unit_order();
  const u64 imod = i % n;
  const u64 d = n / gcd_u64(n, imod == 0 ? n : imod);
  const u64 id = imod == 0 ? 0 : imod / (n / d);
  require_divides_units(f, d);
  if (d * p > (u64(1) << 26)) throw BudgetExceeded("character order too large for Gauss sum histogram");

  // x^k has g-exponent k * twist^{-1}; chi(x^k) = zeta_d^{step * k}
  const u64 step = mulmod(id, f->twist_inverse() % d, d);
  const bool trivial_psi = !alpha_exp.has_value();
  const u64 A = trivial_psi ? 0 : mulmod(reduce_exponent(*alpha_exp, N), f->twist() % N, N);
  static const std::vector<std::uint16_t> kNoTable;
  const auto& T = trivial_psi ? kNoTable : f->trace_table();

  const std::size_t grain = 1 << 16;
  const std::size_t chunks = chunk_count(N, grain);
  std::vector<std::vector<u64>> partial(chunks);
  parallel_for(N, grain, [&](std::size_t begin, std::size_t end, std::size_t c) {
    std::vector<u64> counts(d * p, 0);
    u64 u = mulmod(step, begin % d, d);
    std::size_t idx = (begin + A) % N;
    for (std::size_t k = begin; k < end; ++k) {
      const u64 t = trivial_psi ? 0 : T[idx];
      ++counts[u * p + t];
      u += step;
      if (u >= d) u -= d;
      if (++idx == N) idx = 0;
    }
    partial[c] = std::move(counts);
  });

  u64 M = d * p;
  std::vector<mpz_class> by_exp(M);
  for (u64 u = 0; u < d; ++u)
    for (u64 t = 0; t < p; ++t) {
      u64 total = 0;
      for (auto& part : partial) total += part[u * p + t];
      if (total == 0) continue;
      // zeta_d = zeta_M^p and zeta_p = zeta_M^d
      by_exp[(u * p + t * d) % M] -= static_cast<unsigned long>(total);
    }
  return CycElt::from_exponents(M, std::move(by_exp)).compress();
}

CycElt gauss_sum(const MultChar& chi, const AddChar& psi, const Budget& budget) {
  if (chi.field->id() != psi.field->id()) throw std::invalid_argument("characters live on different fields");
  std::optional<mpz_class> a;
  if (!psi.alpha.is_zero()) a = mpz_class(static_cast<unsigned long>(discrete_log(psi.alpha)));
  return gauss_sum_exponent(chi.field, chi.n, chi.i, a, budget);
}

bool twist_identity_check(const MultChar& chi, const FieldElt& alpha, const Budget& budget) {
  if (alpha.is_zero()) throw std::invalid_argument("twist identity needs alpha != 0");
  CycElt lhs = gauss_sum(chi, additive_char(alpha), budget);
  CycElt rhs = chi.inverse()(alpha) * gauss_sum(chi, additive_char(one(chi.field)), budget);
  return lhs == rhs;
}

bool hasse_davenport_check(const MultChar& chi, const AddChar& psi, const FieldPtr& big, const Budget& budget) {
  const unsigned deg = big->degree() / chi.field->degree();
  CycElt lhs = gauss_sum(compose_norm(chi, big), compose_trace(psi, big), budget);
  CycElt rhs = gauss_sum(chi, psi, budget).pow(deg);
  return lhs == rhs;
}

CycElt shafarevich_tate_eval(const FieldPtr& f0, const MultChar& chi) {
  const FieldPtr& f = chi.field;
  if (f->p() != f0->p() || f->degree() != 2 * f0->degree())
    throw std::invalid_argument("Shafarevich-Tate: field is not the quadratic extension");
  if (chi.trivial()) throw std::invalid_argument("Shafarevich-Tate: character is trivial");
  const u64 q0 = f0->size();
  // F0^x is generated by g^{q0+1}
  if (chi.exponent_at(mpz_class(static_cast<unsigned long>(q0 + 1))) != 0)
    throw std::invalid_argument("Shafarevich-Tate: character is nontrivial on the subfield");
  // g^{(q0+1)/2} squares into F0 without lying in it, so its trace is 0.
  // In characteristic 2 the trace-zero units are those of F0 itself.
  const u64 k = f->p() == 2 ? q0 + 1 : (q0 + 1) / 2;
  CycElt cx = zeta(chi.n, static_cast<i64>(chi.exponent_at(mpz_class(static_cast<unsigned long>(k)))));
  return -(cx * mpz_class(static_cast<unsigned long>(q0)));
}

// ---------------- orbit Gauss sums ----------------

mpz_class alpha_exponent_in(const OrbitSetting& s, const mpz_class& alpha_exp, unsigned target_deg) {
  return transport_exponent(s.p, alpha_exp, s.q_exp, target_deg);
}

u64 lambda_at_alpha(const OrbitSetting& s, const PrimeOrbit& o) {
  const unsigned D = static_cast<unsigned>(s.r_exp * o.size);
  mpz_class E = alpha_exponent_in(s, o.alpha_exp, D);
  return mulmod(o.i % o.n, reduce_exponent(E, o.n), o.n);
}

CycElt orbit_gauss(const OrbitSetting& s, const PrimeOrbit& o) {
  const unsigned D = static_cast<unsigned>(s.r_exp * o.size);
  auto tower = FieldTower::get(s.p, s.twist);
  FieldPtr f = tower->field_checked(D, s.budget);
  mpz_class E = alpha_exponent_in(s, o.alpha_exp, D);
  return gauss_sum_exponent(f, o.n, o.i, E, s.budget);
}

std::optional<ClosedFormValue> orbit_gauss_closed_form(const OrbitSetting& s, const PrimeOrbit& o) {
  if (s.p == 2) return std::nullopt;
  const u64 imod = o.i % o.n;
  if (imod == 0) return std::nullopt;
  const u64 np = o.n / gcd_u64(o.n, imod);
  const u64 D = static_cast<u64>(s.r_exp) * o.size;
  const u64 u = lambda_at_alpha(s, o);
  CycElt unit = zeta(o.n, -static_cast<i64>(u));
  if (np == 2) {
    if (s.r_exp % 4 != 0) return std::nullopt;
    return ClosedFormValue{unit * mpz_pow(s.p, D / 2), ClosedForm::quadratic};
  }
  auto nu = supersingular_nu(np, s.p);
  if (!nu) return std::nullopt;
  // sign exponent (1 + i (p^nu + 1)/n) * D / (2 nu)
  if (D % (2 * *nu) != 0) throw std::logic_error("orbit degree not a multiple of o_p(n')");
  mpz_class t = mpz_class(static_cast<unsigned long>(imod)) * (mpz_pow(s.p, *nu) + 1);
  if (t % static_cast<unsigned long>(o.n) != 0) throw std::logic_error("supersingular sign exponent not integral");
  t = (t / static_cast<unsigned long>(o.n) + 1) * static_cast<unsigned long>(D / (2 * *nu));
  CycElt value = unit * mpz_pow(s.p, D / 2);
  if (mpz_odd_p(t.get_mpz_t())) value = -value;
  return ClosedFormValue{value, ClosedForm::supersingular};
}

mpq_class stickelberger_valuation(u64 n, u64 i, u64 p, u64 mu) {
  if (n < 2 || gcd_u64(n, p) != 1) throw std::invalid_argument("stickelberger: need n >= 2 coprime to p");
  const u64 imod = i % n;
  if (imod == 0) throw std::invalid_argument("stickelberger: i = 0 mod n");
  const u64 np = n / gcd_u64(n, imod);
  const u64 kappa = mult_order(p, np);
  if (mu == 0 || mu % kappa != 0) throw std::invalid_argument("stickelberger: mu is not a multiple of kappa");
  // {-i p^y / n} = ((-i p^y) mod n) / n
  u64 sum = 0, pw = 1 % n;
  for (u64 y = 0; y < kappa; ++y) {
    u64 v = mulmod(imod, pw, n);
    sum += (n - v) % n;
    pw = mulmod(pw, p % n, n);
  }
  mpq_class q(static_cast<unsigned long>(sum), static_cast<unsigned long>(n));
  q /= static_cast<unsigned long>(kappa);
  q.canonicalize();
  return q;
}

ValuationFraction num_den(const OrbitSetting& s, const PrimeOrbit& o) {
  mpq_class v = stickelberger_valuation(o.n, o.i, s.p, static_cast<u64>(s.r_exp) * o.size);
  return {v.get_num().get_ui(), v.get_den().get_ui()};
}

}  // namespace superjac
