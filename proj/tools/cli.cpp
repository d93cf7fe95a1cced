#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "superjac/bsd_report.hpp"
#include "superjac/criteria.hpp"
#include "superjac/geometry.hpp"
#include "superjac/lfunction.hpp"
#include "superjac/oracle.hpp"
#include "superjac/parallel.hpp"
#include "superjac/report_json.hpp"
#include "superjac/roots.hpp"

namespace superjac::cli {

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInvalid = 2, kBudget = 3, kPartial = 4 };

struct RunConfig {
  CurveParams params;
  Budget budget = Budget::from_env();
  std::string format = "json";
  std::string output;
  unsigned threads = 0;
  u64 twist = 1;
  bool oracle_check = false;
  std::string dot;  // finite | infinity
  std::vector<unsigned> q_exps;
  PairQuery pairs;
  std::string condition = "any";
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char ch : s) o += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return o + "\"";
}

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

// Flattens nested objects to dotted keys for csv/text output.
void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], prefix + "." + std::to_string(k), out);
  } else if (j.is_array()) {
    std::string s;
    for (std::size_t k = 0; k < j.size(); ++k) s += (k ? ";" : "") + scalar(j[k]);
    out.push_back({prefix, s});
  } else {
    out.push_back({prefix, scalar(j)});
  }
}

void write_key_values(const Json& doc, const std::string& format, std::ostream& os) {
  std::vector<std::pair<std::string, std::string>> kv;
  flatten(doc, "", kv);
  if (format == "csv") {
    os << "key,value\n";
    for (auto& [k, v] : kv) os << csv_escape(k) << "," << csv_escape(v) << "\n";
  } else {
    for (auto& [k, v] : kv) os << k << ": " << v << "\n";
  }
}

void write_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                 const std::string& format, std::ostream& os) {
  const char* sep = format == "csv" ? "," : "\t";
  for (std::size_t k = 0; k < header.size(); ++k) os << (k ? sep : "") << header[k];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? sep : "") << (format == "csv" ? csv_escape(row[k]) : row[k]);
    os << "\n";
  }
}

std::string fmt_log(const Json& j) {
  if (j.is_null()) return "";
  std::ostringstream os;
  os.precision(12);
  os << j["value"].get<double>();
  return os.str();
}

int cmd_invariants(const RunConfig& cfg, std::ostream& os) {
  validate(cfg.params);
  if (!cfg.dot.empty()) {
    const PlaceKind kind = cfg.dot == "infinity" ? PlaceKind::infinity : PlaceKind::finite;
    os << to_dot(snc_special_fiber(cfg.params, kind), cfg.dot == "infinity" ? "infinity" : "finite");
    return kOk;
  }
  Json doc = envelope("invariants", params_json(cfg.params), invariants_json(cfg.params));
  if (cfg.format == "json")
    os << doc.dump(2) << "\n";
  else
    write_key_values(doc, cfg.format, os);
  return kOk;
}

int cmd_lfunction(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
  validate(cfg.params);
  LFunctionData lf = compute_lfunction(cfg.params, cfg.budget, cfg.twist);
  std::optional<RhResult> rh;
  std::optional<int> sign;
  std::optional<OracleCheck> oc;
  int code = kOk;
  if (lf.L) {
    sign = functional_equation_sign(*lf.L);
    rh = rh_check(*lf.L);
    if (cfg.oracle_check) {
      OracleResult orc = l_from_counts(cfg.params, cfg.budget, OracleMode::automatic);
      oc = OracleCheck{orc.L == *lf.L, orc.terms, orc.used_functional_equation};
      if (!oc->match) code = kMismatch;
    }
  } else {
    err << "unresolved orbits: " << lf.rank.unresolved << "; reporting bounds only\n";
    code = kPartial;
  }
  Json doc = envelope("lfunction", params_json(cfg.params),
                      lfunction_json(lf, rh ? &*rh : nullptr, sign, oc ? &*oc : nullptr));
  if (cfg.format == "json") {
    os << doc.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    if (lf.L)
      for (std::size_t k = 0; k < lf.L->coeffs.size(); ++k) rows.push_back({std::to_string(k), lf.L->coeffs[k].get_str()});
    write_table({"k", "coefficient"}, rows, "csv", os);
  } else {
    const Json& res = doc["result"];
    os << "params: " << cfg.params.to_string() << "\n";
    if (lf.L) {
      os << "degree: " << res["degree"] << "\n";
      os << "coefficients: ";
      for (std::size_t k = 0; k < lf.L->coeffs.size(); ++k) os << (k ? " " : "") << lf.L->coeffs[k].get_str();
      os << "\n";
      os << "functional equation sign: " << (sign ? std::to_string(*sign) : "none") << "\n";
      os << "RH: " << (rh->ok ? "ok" : "FAILED") << " (max deviation " << rh->max_deviation << ")\n";
      os << "L*: " << res["l_star"].get<std::string>() << "\n";
    }
    os << "rank: " << (lf.rank.exact ? std::to_string(*lf.rank.exact) : "in [" + std::to_string(lf.rank.lower) + ", " + std::to_string(lf.rank.upper) + "]") << "\n";
    for (std::size_t k = 0; k < lf.orbits.size(); ++k) {
      const Orbit& o = lf.orbits[k];
      os << "  orbit (" << o.i << "," << o.j << ",g^" << o.alpha_exp << ") size " << o.size << ": "
         << status_name(lf.rank.status[k]) << "\n";
    }
    if (oc) os << "oracle: " << (oc->match ? "MATCH" : "MISMATCH") << "\n";
  }
  if (oc) err << (oc->match ? "MATCH" : "MISMATCH") << "\n";
  return code;
}

int cmd_scan(const RunConfig& cfg, std::ostream& os) {
  // the q exponent is supplied per row; validate the rest with q_exp = 1
  CurveParams probe = cfg.params;
  probe.q_exp = 1;
  validate(probe);
  auto rows = scan_q(cfg.params.p, cfg.params.r_exp, cfg.params.a, cfg.params.b, cfg.q_exps, cfg.budget);
  int code = kOk;
  for (const auto& r : rows)
    if (r.status != RowStatus::ok) code = kPartial;
  Json params = {{"p", cfg.params.p}, {"r_exp", cfg.params.r_exp}, {"a", cfg.params.a}, {"b", cfg.params.b},
                 {"q_exps", cfg.q_exps}};
  Json doc = envelope("scan", params, scan_json(rows));
  if (cfg.format == "json") {
    os << doc.dump(2) << "\n";
    return code;
  }
  std::vector<std::vector<std::string>> table;
  for (const auto& row : doc["result"]) {
    const Json& rep = row["report"];
    if (rep.is_null()) {
      table.push_back({scalar(row["q_exp"]), scalar(row["status"]), "", "", "", "", "", "", "", scalar(row["message"])});
      continue;
    }
    table.push_back({scalar(row["q_exp"]), scalar(row["status"]), scalar(rep["degree"]), scalar(rep["rank"]["exact"]),
                     scalar(rep["l_star"]), scalar(rep["h"]), scalar(rep["X"]), fmt_log(rep["brauer_siegel_ratio"]),
                     fmt_log(rep["special_value_ratio"]), ""});
  }
  write_table({"q_exp", "status", "deg_L", "rank", "L_star", "h", "X", "brauer_siegel_ratio_trend",
               "special_value_ratio_trend", "message"},
              table, cfg.format, os);
  return code;
}

int cmd_find_pairs(const RunConfig& cfg, std::ostream& os) {
  auto cond = parse_pair_condition(cfg.condition);
  if (!cond) throw InvalidParams("unknown condition '" + cfg.condition + "'");
  PairQuery q = cfg.pairs;
  q.p = cfg.params.p;
  q.condition = *cond;
  auto pairs = find_pairs(q);
  if (cfg.format == "json") {
    Json params = {{"p", q.p}, {"condition", cfg.condition}, {"limit", q.limit}, {"primes_only", q.primes_only},
                   {"max_ab", q.max_ab}, {"max_k", q.max_k}};
    os << envelope("find-pairs", params, pairs_json(pairs)).dump(2) << "\n";
    return kOk;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& pr : pairs) {
    std::string all;
    for (std::size_t k = 0; k < pr.conditions.size(); ++k) all += (k ? ";" : "") + std::to_string(pr.conditions[k]);
    rows.push_back({std::to_string(pr.a), std::to_string(pr.b), std::to_string(pr.condition), all, pr.witnesses});
  }
  write_table({"a", "b", "condition", "conditions", "witnesses"}, rows, cfg.format, os);
  return kOk;
}

void add_curve_options(CLI::App* sub, RunConfig& cfg, bool with_q) {
  sub->add_option("-p", cfg.params.p, "characteristic")->required();
  sub->add_option("-r", cfg.params.r_exp, "r = p^R, give R")->capture_default_str();
  if (with_q) sub->add_option("-q", cfg.params.q_exp, "q = p^Q, give Q")->capture_default_str();
  sub->add_option("-a", cfg.params.a, "exponent of x")->required();
  sub->add_option("-b", cfg.params.b, "exponent of y")->required();
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"superjac: Jacobians of y^b + x^a = t^q - t over F_r(t)"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
  app.add_option("-o,--output", cfg.output, "write to this file instead of stdout");
  app.add_option("--threads", cfg.threads, "worker threads (0: SUPERJAC_THREADS or all cores)");
  app.add_option("--field-budget", cfg.budget.field_elements, "max field size for exhaustive sums");
  app.add_option("--transform-budget", cfg.budget.transform_elements, "max field size per point count");
  app.add_option("--orbit-budget", cfg.budget.orbit_elements, "max |S| for orbit enumeration");

  auto* inv = app.add_subcommand("invariants", "genus, conductor, bad places, height, Tamagawa");
  add_curve_options(inv, cfg, true);
  inv->add_option("--dot", cfg.dot, "emit the SNC fiber at this place as DOT")->check(CLI::IsMember({"finite", "infinity"}));

  auto* lfn = app.add_subcommand("lfunction", "L-polynomial, rank and special value");
  add_curve_options(lfn, cfg, true);
  lfn->add_flag("--oracle-check", cfg.oracle_check, "compare with the point-counting oracle");
  lfn->add_option("--twist", cfg.twist, "use x^twist as generator of each field")->capture_default_str();

  auto* scan = app.add_subcommand("scan", "BSD composite along q = p^Q");
  add_curve_options(scan, cfg, false);
  scan->add_option("--q-exps", cfg.q_exps, "list of Q")->delimiter(',');

  auto* fp = app.add_subcommand("find-pairs", "pairs (a, b) meeting a rank criterion");
  fp->add_option("-p", cfg.params.p, "characteristic")->required();
  fp->add_option("--condition", cfg.condition, "any, 1, 2, 3 or lower-bound")->capture_default_str();
  fp->add_option("--limit", cfg.pairs.limit, "maximum number of pairs")->capture_default_str();
  fp->add_flag("--primes-only", cfg.pairs.primes_only, "only prime a and b");
  fp->add_option("--max-ab", cfg.pairs.max_ab, "search bound for a and b")->capture_default_str();
  fp->add_option("--max-k", cfg.pairs.max_k, "search bound for repunit exponents")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kInvalid;
  }
  if (cfg.threads) set_worker_count(cfg.threads);

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "cannot open " << cfg.output << "\n";
      return kInvalid;
    }
  }
  std::ostream& os = cfg.output.empty() ? out : file;
  try {
    if (*inv) return cmd_invariants(cfg, os);
    if (*lfn) return cmd_lfunction(cfg, os, err);
    if (*scan) return cmd_scan(cfg, os);
    return cmd_find_pairs(cfg, os);
  } catch (const InvalidParams& e) {
    err << e.what() << "\n";
    return kInvalid;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const UnresolvedOrbits& e) {
    err << e.what() << "\n";
    return kPartial;
  }
}

}  // namespace superjac::cli
