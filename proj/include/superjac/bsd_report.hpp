#pragma once
// BSD composite X = L* H(J) r^{-g} = |Sha| Reg / |tors|^2 and log ratios
// against the height, per instance and along q.

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "superjac/criteria.hpp"
#include "superjac/geometry.hpp"
#include "superjac/lfunction.hpp"

namespace superjac {

// log(x) as a double together with an absolute error bound.
struct LogValue {
  double value = 0;
  double error = 0;
};
// Natural log of a positive rational, evaluated in MPFR at `bits` precision.
LogValue log_rational(const mpq_class& x, unsigned bits = 128);

struct BsdReport {
  CurveParams params;
  u64 genus = 0;
  std::size_t degree = 0;
  RankAssessment rank;
  unsigned vanishing_order = 0;
  mpq_class l_star;
  HeightData height;
  LogValue log_H;  // h log r
  mpq_class X;     // L* r^{h - g}
  LogValue log_X;
  std::optional<LogValue> brauer_siegel_ratio;  // log X / log H, absent when h = 0
  std::optional<LogValue> special_value_ratio;  // log L* / log H
  TamagawaCertificate tamagawa;
  std::vector<std::string> caveats;
};

BsdReport bsd_combination(const LFunctionData& lf);
BsdReport bsd_combination(const CurveParams& c, const Budget& budget = Budget::from_env());

enum class RowStatus { ok, invalid, budget, unresolved, error };
const char* row_status_name(RowStatus s);

struct ScanRow {
  unsigned q_exp = 0;
  RowStatus status = RowStatus::ok;
  std::string message;
  std::optional<BsdReport> report;
};
// Rows in the order of q_exps; a failing row does not stop the scan.
std::vector<ScanRow> scan_q(u64 p, unsigned r_exp, u64 a, u64 b, const std::vector<unsigned>& q_exps,
                            const Budget& budget = Budget::from_env());

inline constexpr const char* kTrendLabel = "trend (asymptotic claim not verifiable at this scale)";

}  // namespace superjac
