#include "superjac/report_json.hpp"

namespace superjac {

namespace {

std::string zs(const mpz_class& z) { return z.get_str(); }

Json log_json(const LogValue& v) { return {{"value", v.value}, {"error", v.error}}; }

}  // namespace

std::string to_json_string(const mpq_class& q) { return q.get_str(); }

Json params_json(const CurveParams& c) {
  return {{"p", c.p}, {"r_exp", c.r_exp}, {"q_exp", c.q_exp}, {"a", c.a}, {"b", c.b}, {"r", zs(c.r())}, {"q", zs(c.q())}};
}

Json fiber_json(const SncFiber& f) {
  Json comps = Json::array(), edges = Json::array();
  for (std::size_t k = 0; k < f.components.size(); ++k)
    comps.push_back({{"id", k}, {"multiplicity", f.components[k].multiplicity}, {"genus", f.components[k].genus},
                     {"role", f.components[k].role}});
  for (auto [u, v] : f.edges) edges.push_back({u, v});
  return {{"kind", place_name(f.kind)}, {"components", comps}, {"edges", edges},
          {"lorenzini_product", to_json_string(lorenzini_product(f))}};
}

Json invariants_json(const CurveParams& c) {
  const BadPlaces bp = bad_places(c);
  Json places = Json::array();
  for (const auto& g : bp.finite) places.push_back({{"degree", g.degree}, {"count", zs(g.count)}});
  const HeightData h = height(c);
  const TamagawaCertificate t = tamagawa(c);
  if (!t.all_one()) throw std::logic_error("Tamagawa product differs from 1");
  Json fibers = Json::array();
  for (auto kind : {PlaceKind::finite, PlaceKind::infinity}) {
    SncFiber f = snc_special_fiber(c, kind);
    if (auto bad = fiber_invariant_failures(f, c); !bad.empty()) throw std::logic_error("SNC fiber: " + bad.front());
    fibers.push_back(fiber_json(f));
  }
  return {
      {"genus", genus(c.a, c.b)},
      {"conductor_degree", zs(conductor_degree(c))},
      {"l_degree", (c.a - 1) * (c.b - 1) * c.q_minus_1()},
      {"bad_places", {{"finite", places}, {"infinity_degree", 1}, {"total_degree", zs(bp.total_degree())}}},
      {"height",
       {{"D", to_json_string(h.D)}, {"E", to_json_string(h.E)}, {"h", zs(h.h)}, {"D_lower", to_json_string(h.D_lower)},
        {"D_upper", to_json_string(h.D_upper)}, {"bounds_hold", h.bounds_hold()}}},
      {"tamagawa",
       {{"finite", to_json_string(t.finite)}, {"infinity", to_json_string(t.infinity)},
        {"global", to_json_string(t.global)}}},
      {"fibers", fibers},
      {"simple", simplicity(c.a, c.b)},
  };
}

Json lfunction_json(const LFunctionData& lf, const RhResult* rh, const std::optional<int>& sign,
                    const OracleCheck* oracle) {
  const CurveParams& c = lf.params;
  Json orbits = Json::array();
  for (std::size_t k = 0; k < lf.orbits.size(); ++k) {
    const Orbit& o = lf.orbits[k];
    const OrbitValuation v = valuation_of_omega(c, o);
    orbits.push_back({{"i", o.i},
                      {"j", o.j},
                      {"alpha_exp", o.alpha_exp},
                      {"size", o.size},
                      {"valuation", to_json_string(v.total())},
                      {"method", method_name(lf.omegas[k].method)},
                      {"status", status_name(lf.rank.status[k])}});
  }
  Json rank = {{"lower", lf.rank.lower}, {"upper", lf.rank.upper}, {"unresolved", lf.rank.unresolved}};
  rank["exact"] = lf.rank.exact ? Json(*lf.rank.exact) : Json(nullptr);
  Json out = {{"orbits", orbits}, {"rank", rank}, {"complete", lf.L.has_value()}};
  if (lf.L) {
    Json coeffs = Json::array();
    for (const auto& x : lf.L->coeffs) coeffs.push_back(zs(x));
    const SpecialValue sv = special_value(*lf.L);
    out["degree"] = lf.L->degree();
    out["coefficients"] = coeffs;
    out["vanishing_order"] = sv.vanishing_order;
    out["l_star"] = to_json_string(sv.value);
    out["functional_equation_sign"] = sign ? Json(*sign) : Json(nullptr);
  }
  if (rh)
    out["rh"] = {{"ok", rh->ok}, {"distinct_roots", rh->distinct_roots}, {"g", rh->g},
                 {"max_deviation", rh->max_deviation}, {"precision_bits", rh->precision_bits}, {"note", rh->note}};
  if (oracle)
    out["oracle_check"] = {{"status", oracle->match ? "MATCH" : "MISMATCH"}, {"terms", oracle->terms},
                           {"used_functional_equation", oracle->used_functional_equation}};
  return out;
}

Json bsd_json(const BsdReport& rep) {
  Json rank = {{"lower", rep.rank.lower}, {"upper", rep.rank.upper}, {"methods", rep.rank.methods}};
  rank["exact"] = rep.rank.exact ? Json(*rep.rank.exact) : Json(nullptr);
  Json out = {
      {"genus", rep.genus},
      {"degree", rep.degree},
      {"rank", rank},
      {"vanishing_order", rep.vanishing_order},
      {"l_star", to_json_string(rep.l_star)},
      {"h", zs(rep.height.h)},
      {"D", to_json_string(rep.height.D)},
      {"E", to_json_string(rep.height.E)},
      {"log_H", log_json(rep.log_H)},
      {"X", to_json_string(rep.X)},
      {"log_X", log_json(rep.log_X)},
      {"tamagawa", to_json_string(rep.tamagawa.global)},
      {"trend_label", kTrendLabel},
      {"caveats", rep.caveats},
  };
  out["brauer_siegel_ratio"] = rep.brauer_siegel_ratio ? log_json(*rep.brauer_siegel_ratio) : Json(nullptr);
  out["special_value_ratio"] = rep.special_value_ratio ? log_json(*rep.special_value_ratio) : Json(nullptr);
  return out;
}

Json scan_json(const std::vector<ScanRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json j = {{"q_exp", row.q_exp}, {"status", row_status_name(row.status)}, {"message", row.message}};
    j["report"] = row.report ? bsd_json(*row.report) : Json(nullptr);
    out.push_back(j);
  }
  return out;
}

Json pairs_json(const std::vector<PairResult>& pairs) {
  Json out = Json::array();
  for (const auto& pr : pairs)
    out.push_back({{"a", pr.a}, {"b", pr.b}, {"condition", pr.condition}, {"conditions", pr.conditions}, {"witnesses", pr.witnesses}});
  return out;
}

Json envelope(const std::string& command, Json params, Json result) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"params", std::move(params)},
          {"result", std::move(result)}};
}

}  // namespace superjac
