#include "superjac/oracle.hpp"

#include <numeric>

#include "superjac/kernels.hpp"
#include "superjac/parallel.hpp"

namespace superjac {

namespace {

FieldPtr oracle_field(const CurveParams& c, unsigned m, const Budget& budget) {
  const unsigned D = c.r_exp * m;
  if (!ipow_fits(c.p, D, budget.transform_elements))
    throw BudgetExceeded("F_{r^" + std::to_string(m) + "} exceeds the point-count budget");
  return FieldTower::get(c.p)->field(D);
}

// Exponent of -1 with respect to any generator.
u64 minus_one_exponent(const FieldPtr& f) { return f->p() == 2 ? 0 : f->unit_order() / 2; }

// #{(x, y) : x^a + y^b = 0}
mpz_class count_zero_fiber(const CurveParams& c, const FieldPtr& f) {
  const u64 N = f->unit_order(), h = minus_one_exponent(f);
  const u64 da = gcd_u64(c.a, N);
  // x^a = -y^b has da solutions iff da divides the exponent of -y^b
  mpz_class total = 1;
  u64 hits = 0;
  for (u64 k = 0; k < da; ++k)
    if ((mulmod(c.b % da, k, da) + h) % da == 0) ++hits;
  total += mpz_class(static_cast<unsigned long>(hits)) * static_cast<unsigned long>(N / da) *
           static_cast<unsigned long>(da);
  return total;
}

std::vector<u32> trace_forms_for_subfield(const FieldPtr& f, unsigned sub_deg) {
  // Forms x -> Tr_{F/F_p}(h^l x), l < sub_deg, with h primitive in the subfield.
  // Their common kernel is the kernel of Tr_{F/F_sub}.
  const unsigned D = f->degree();
  const u64 p = f->p();
  const u64 N = f->unit_order();
  const u64 sub_units = ipow(p, sub_deg) - 1;
  std::vector<u32> h = f->xpow(N / sub_units);
  std::vector<u32> forms(static_cast<std::size_t>(sub_deg) * D);
  std::vector<u32> gamma(D, 0), cur(D);
  gamma[0] = 1;
  for (unsigned l = 0; l < sub_deg; ++l) {
    cur = gamma;
    for (unsigned i = 0; i < D; ++i) {
      u64 t = 0;
      for (unsigned d = 0; d < D; ++d) t += static_cast<u64>(cur[d]) * f->trace_form()[d];
      forms[static_cast<std::size_t>(l) * D + i] = static_cast<u32>(t % p);
      f->mul_by_x(cur.data());
    }
    std::vector<u32> next(D);
    f->mul(gamma.data(), h.data(), next.data());
    gamma = next;
  }
  return forms;
}

}  // namespace

mpz_class count_points(const CurveParams& c, const FieldElt& beta) {
  const FieldPtr& f = beta.field();
  const unsigned D = f->degree();
  const u64 N = f->unit_order(), p = f->p();
  const mpz_class q = c.q();
  FieldElt w = beta.pow(q) - beta;
  const auto& ex = f->exp_table();
  const auto& lg = f->log_table();
  const u64 da = gcd_u64(c.a, N);
  auto roots_a = [&](u64 idx) -> u64 {  // #{x : x^a = element idx}
    if (idx == 0) return 1;
    return lg[idx] % da == 0 ? da : 0;
  };
  std::vector<u32> yb(D), diff(D);
  u64 total = roots_a(w.index());  // y = 0
  for (u64 k = 0; k < N; ++k) {
    f->coeffs_of(ex[mulmod(c.b % N, k, N)], yb.data());
    for (unsigned d = 0; d < D; ++d) diff[d] = static_cast<u32>((w.coeffs()[d] + p - yb[d]) % p);
    total += roots_a(f->index_of(diff.data()));
  }
  return mpz_class(static_cast<unsigned long>(total)) + 1;
}

mpz_class trace_sum(const CurveParams& c, unsigned m, const Budget& budget) {
  validate(c);
  FieldPtr f = oracle_field(c, m, budget);
  const unsigned D = f->degree();
  const u64 p = f->p(), size = f->size(), N = f->unit_order();
  const unsigned sub = std::gcd(c.q_exp, D);
  const u64 qsub = ipow(p, sub);

  // coset id of every element, via the batched linear-form kernel
  std::vector<u32> forms = trace_forms_for_subfield(f, sub);
  std::vector<u32> digits(static_cast<std::size_t>(D) * size);
  for (u64 e = 0; e < size; ++e) {
    u64 v = e;
    for (unsigned d = 0; d < D; ++d, v /= p) digits[d * size + e] = static_cast<u32>(v % p);
  }
  std::vector<u32> out(static_cast<std::size_t>(sub) * size);
  kernels::linear_forms_mod_p(digits.data(), D, size, forms.data(), sub, static_cast<u32>(p), out.data());
  digits.clear();
  digits.shrink_to_fit();
  std::vector<u32> coset(size);
  for (u64 e = 0; e < size; ++e) {
    u64 id = 0;
    for (unsigned l = sub; l-- > 0;) id = id * p + out[l * size + e];
    coset[e] = static_cast<u32>(id);
  }
  out.clear();

  const auto& ex = f->exp_table();
  auto histogram = [&](u64 power) {
    std::vector<u64> h(qsub, 0);
    h[0] = 1;  // the zero element
    const u64 step = power % N;
    u64 u = 0;
    for (u64 k = 0; k < N; ++k) {
      ++h[coset[ex[u]]];
      u += step;
      if (u >= N) u -= N;
    }
    return h;
  };
  std::vector<u64> A = histogram(c.a), B = histogram(c.b);
  auto neg = [&](u64 id) {
    u64 r = 0, pw = 1;
    for (unsigned l = 0; l < sub; ++l, id /= p, pw *= p) r += ((p - id % p) % p) * pw;
    return r;
  };
  mpz_class in_image = 0;  // #{(x, y) : x^a + y^b in image}
  for (u64 id = 0; id < qsub; ++id)
    in_image += mpz_class(static_cast<unsigned long>(A[id])) * static_cast<unsigned long>(B[neg(id)]);

  // every image point has |F cap F_q| preimages beta; drop beta = 0
  mpz_class affine = in_image * static_cast<unsigned long>(qsub) - count_zero_fiber(c, f);
  return mpz_class(static_cast<unsigned long>(N)) * static_cast<unsigned long>(size) - affine;
}

TraceData trace_sums(const CurveParams& c, unsigned M, const Budget& budget) {
  TraceData t;
  t.sums.resize(M);
  for (unsigned m = 1; m <= M; ++m) oracle_field(c, m, budget);  // fail before any work
  parallel_for(M, 1, [&](std::size_t b, std::size_t e, std::size_t) {
    for (std::size_t k = b; k < e; ++k) t.sums[k] = trace_sum(c, static_cast<unsigned>(k + 1), budget);
  });
  return t;
}

mpz_class brute_force_trace_sum(const CurveParams& c, unsigned m) {
  validate(c);
  const unsigned D = c.r_exp * m;
  if (!ipow_fits(c.p, D, 1u << 12)) throw BudgetExceeded("brute force limited to 2^12 elements");
  FieldPtr f = FieldTower::get(c.p)->field(D);
  const mpz_class q = c.q();
  const u64 size = f->size();
  std::vector<FieldElt> el;
  el.reserve(size);
  for (u64 i = 0; i < size; ++i) el.push_back(from_index(f, i));
  std::vector<u64> xa(size), yb(size);
  for (u64 i = 0; i < size; ++i) {
    xa[i] = el[i].pow(mpz_class(static_cast<unsigned long>(c.a))).index();
    yb[i] = el[i].pow(mpz_class(static_cast<unsigned long>(c.b))).index();
  }
  mpz_class total = 0;
  for (u64 bi = 1; bi < size; ++bi) {
    FieldElt w = el[bi].pow(q) - el[bi];
    u64 count = 0;
    for (u64 x = 0; x < size; ++x)
      for (u64 y = 0; y < size; ++y)
        if ((el[xa[x]] + el[yb[y]]) == w) ++count;
    total += mpz_class(static_cast<unsigned long>(size)) - static_cast<unsigned long>(count);
  }
  return total;
}

std::vector<mpz_class> exp_log_series(const std::vector<mpz_class>& S) {
  std::vector<mpz_class> cfs(S.size() + 1);
  cfs[0] = 1;
  for (std::size_t k = 1; k <= S.size(); ++k) {
    mpz_class acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += S[j - 1] * cfs[k - j];
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), k)) throw std::logic_error("log series exponentiates to a non-integer");
    mpz_divexact_ui(cfs[k].get_mpz_t(), acc.get_mpz_t(), k);
  }
  return cfs;
}

OracleResult l_from_counts(const CurveParams& c, const Budget& budget, OracleMode mode) {
  validate(c);
  const u64 b = (c.a - 1) * (c.b - 1) * c.q_minus_1();
  const mpz_class r = c.r();
  unsigned affordable = 0;
  while (affordable < b && ipow_fits(c.p, c.r_exp * (affordable + 1), budget.transform_elements)) ++affordable;

  OracleResult res;
  res.L.r = r;
  const bool full = mode == OracleMode::full || (mode == OracleMode::automatic && affordable >= b);
  unsigned M = static_cast<unsigned>(full ? b : std::min<u64>(b, (b + 1) / 2));
  if (M > affordable) throw BudgetExceeded("point counts needed up to F_{r^" + std::to_string(M) + "}");
  res.traces = trace_sums(c, M, budget);

  std::vector<mpz_class> rp(b + 1);
  rp[0] = 1;
  for (u64 k = 1; k <= b; ++k) rp[k] = rp[k - 1] * r;
  auto sign_from = [&](const std::vector<mpz_class>& cf) -> int {
    const u64 top = cf.size() - 1;
    for (u64 k = b - std::min<u64>(b, top); k <= top && 2 * k <= b; ++k) {
      if (cf[k] == 0) continue;
      const mpz_class& hi = cf[b - k];
      if (hi == rp[b - 2 * k] * cf[k]) return 1;
      if (hi == -rp[b - 2 * k] * cf[k]) return -1;
      throw std::logic_error("counted coefficients violate the functional equation");
    }
    return 0;
  };

  std::vector<mpz_class> cf = exp_log_series(res.traces.sums);
  int w = M == b ? 0 : sign_from(cf);
  while (M < b && w == 0) {
    if (M + 1 > affordable) throw BudgetExceeded("functional-equation sign not determined within the budget");
    ++M;
    res.traces.sums.push_back(trace_sum(c, M, budget));
    cf = exp_log_series(res.traces.sums);
    w = sign_from(cf);
  }
  res.terms = M;
  if (M < b) {
    res.used_functional_equation = true;
    res.w = w;
    cf.resize(b + 1);
    for (u64 k = 0; b - k > M; ++k) cf[b - k] = w * rp[b - 2 * k] * cf[k];
  }
  res.L.coeffs = std::move(cf);
  return res;
}

mpz_class gauss_side_trace_sum(const CurveParams& c, unsigned m, const Budget& budget) {
  validate(c);
  const unsigned D = c.r_exp * m;
  FieldPtr f = FieldTower::get(c.p)->field_checked(D, budget);
  const u64 N = f->unit_order();
  const unsigned sub = std::gcd(c.q_exp, D);
  const u64 sub_units = ipow(c.p, sub) - 1;
  const u64 na = gcd_u64(c.a, N), nb = gcd_u64(c.b, N);
  CycElt total(1);
  for (u64 t = 0; t < sub_units; ++t) {
    mpz_class alpha(static_cast<unsigned long>(t * (N / sub_units)));
    CycElt sa(1), sb(1);
    for (u64 i = 1; i < na; ++i) sa += gauss_sum_exponent(f, na, i, alpha, budget);
    for (u64 j = 1; j < nb; ++j) sb += gauss_sum_exponent(f, nb, j, alpha, budget);
    total += sa * sb;
  }
  auto v = (-total).is_rational_integer();
  if (!v) throw std::logic_error("Gauss-sum side of the trace identity is not rational");
  return *v;
}

mpz_class orbit_side_trace_sum(const std::vector<Orbit>& orbits,
                               const std::vector<OmegaValue>& omegas, unsigned m) {
  CycElt total(1);
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    if (m % orbits[k].size != 0) continue;
    if (!omegas[k].value) throw UnresolvedOrbits("orbit value missing");
    total += omegas[k].value->pow(m / orbits[k].size) * mpz_class(static_cast<unsigned long>(orbits[k].size));
  }
  auto v = (-total).is_rational_integer();
  if (!v) throw std::logic_error("orbit side of the trace identity is not rational");
  return *v;
}

bool char_identity_check(const CurveParams& c, unsigned m, const Budget& budget) {
  return trace_sum(c, m, budget) == gauss_side_trace_sum(c, m, budget);
}

}  // namespace superjac
