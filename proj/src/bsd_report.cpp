#include "superjac/bsd_report.hpp"

#include <cmath>

#include <mpfr.h>

namespace superjac {

namespace {

struct Mpfr {
  mpfr_t v;
  explicit Mpfr(unsigned bits) { mpfr_init2(v, bits); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
};

// log of a positive integer, correctly rounded
void log_z(mpfr_t out, const mpz_class& z) {
  mpfr_set_z(out, z.get_mpz_t(), MPFR_RNDN);
  mpfr_log(out, out, MPFR_RNDN);
}

LogValue ratio(const LogValue& x, const LogValue& y) {
  LogValue r;
  r.value = x.value / y.value;
  // first-order propagation plus the final double rounding
  r.error = (x.error + std::fabs(r.value) * y.error) / std::fabs(y.value) + std::fabs(r.value) * 0x1p-52;
  return r;
}

LogValue from_mpfr(const mpfr_t v, unsigned bits, unsigned ops) {
  LogValue lv;
  lv.value = mpfr_get_d(v, MPFR_RNDN);
  // ops correctly rounded steps at `bits`, then a conversion to double
  lv.error = std::ldexp(std::fabs(lv.value) + 1.0, -static_cast<int>(bits) + 4) * ops + std::fabs(lv.value) * 0x1p-53;
  return lv;
}

}  // namespace

LogValue log_rational(const mpq_class& x, unsigned bits) {
  if (x <= 0) throw std::domain_error("log of a non-positive rational");
  Mpfr n(bits), d(bits);
  log_z(n.v, x.get_num());
  log_z(d.v, x.get_den());
  mpfr_sub(n.v, n.v, d.v, MPFR_RNDN);
  return from_mpfr(n.v, bits, 3);
}

BsdReport bsd_combination(const LFunctionData& lf) {
  if (!lf.L) throw UnresolvedOrbits("L-polynomial not available");
  const CurveParams& c = lf.params;
  BsdReport rep;
  rep.params = c;
  rep.genus = genus(c.a, c.b);
  rep.degree = lf.L->degree();
  rep.rank = assess_rank(c, &lf.rank);
  SpecialValue sv = special_value(*lf.L);
  rep.vanishing_order = sv.vanishing_order;
  rep.l_star = sv.value;
  rep.height = height(c);
  rep.tamagawa = tamagawa(c);
  if (!rep.tamagawa.all_one()) throw std::logic_error("Tamagawa product differs from 1");

  const mpz_class r = c.r();
  const mpz_class& h = rep.height.h;
  const long e = static_cast<long>(h.get_si()) - static_cast<long>(rep.genus);
  mpz_class rp;
  mpz_pow_ui(rp.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(std::labs(e)));
  rep.X = e >= 0 ? mpq_class(rep.l_star * rp) : mpq_class(rep.l_star / rp);
  rep.X.canonicalize();
  if (rep.X <= 0) throw std::logic_error("BSD composite is not positive");

  constexpr unsigned bits = 128;
  {
    Mpfr lr(bits);
    log_z(lr.v, r);
    mpfr_mul_z(lr.v, lr.v, h.get_mpz_t(), MPFR_RNDN);
    rep.log_H = from_mpfr(lr.v, bits, 2);
  }
  rep.log_X = log_rational(rep.X, bits);
  const LogValue log_l = log_rational(rep.l_star, bits);
  if (h > 0) {
    rep.brauer_siegel_ratio = ratio(rep.log_X, rep.log_H);
    rep.special_value_ratio = ratio(log_l, rep.log_H);
  } else {
    rep.caveats.push_back("h(J) = 0: ratios undefined");
  }
  rep.caveats.push_back("|J(K)_tors| and Reg(J) are not computed separately; X = |Sha| Reg / |tors|^2");
  if (sv.vanishing_order == 0) rep.caveats.push_back("rank 0: Reg(J) = 1, so X = |Sha| / |tors|^2");
  rep.caveats.push_back(std::string("ratio columns: ") + kTrendLabel);
  return rep;
}

BsdReport bsd_combination(const CurveParams& c, const Budget& budget) {
  return bsd_combination(compute_lfunction(c, budget));
}

const char* row_status_name(RowStatus s) {
  switch (s) {
    case RowStatus::ok: return "OK";
    case RowStatus::invalid: return "INVALID";
    case RowStatus::budget: return "BUDGET";
    case RowStatus::unresolved: return "UNRESOLVED";
    case RowStatus::error: return "ERROR";
  }
  return "?";
}

std::vector<ScanRow> scan_q(u64 p, unsigned r_exp, u64 a, u64 b, const std::vector<unsigned>& q_exps,
                            const Budget& budget) {
  // each row already runs on the worker pool, so rows go one at a time
  std::vector<ScanRow> rows;
  for (unsigned qe : q_exps) {
    ScanRow row;
    row.q_exp = qe;
    try {
      row.report = bsd_combination(CurveParams{p, r_exp, qe, a, b}, budget);
    } catch (const InvalidParams& e) {
      row.status = RowStatus::invalid;
      row.message = e.what();
    } catch (const BudgetExceeded& e) {
      row.status = RowStatus::budget;
      row.message = e.what();
    } catch (const UnresolvedOrbits& e) {
      row.status = RowStatus::unresolved;
      row.message = e.what();
    } catch (const std::exception& e) {
      row.status = RowStatus::error;
      row.message = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace superjac
