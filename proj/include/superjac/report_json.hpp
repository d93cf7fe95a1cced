#pragma once
// JSON documents emitted by the CLI. Layout is described by
// schema/report.schema.json; bump kSchemaVersion on any change.

#include <string>
#include <vector>

#include <json.hpp>

#include "superjac/bsd_report.hpp"
#include "superjac/criteria.hpp"
#include "superjac/geometry.hpp"
#include "superjac/lfunction.hpp"
#include "superjac/roots.hpp"

namespace superjac {

inline constexpr const char* kSchemaVersion = "1.0.0";
using Json = nlohmann::json;

std::string to_json_string(const mpq_class& q);  // "n" or "n/d"

Json params_json(const CurveParams& c);
Json fiber_json(const SncFiber& f);
Json invariants_json(const CurveParams& c);

struct OracleCheck {
  bool match = false;
  unsigned terms = 0;
  bool used_functional_equation = false;
};
Json lfunction_json(const LFunctionData& lf, const RhResult* rh, const std::optional<int>& sign,
                    const OracleCheck* oracle);
Json bsd_json(const BsdReport& rep);
Json scan_json(const std::vector<ScanRow>& rows);
Json pairs_json(const std::vector<PairResult>& pairs);

// {"schema_version", "command", "params", "result"}; params may be null.
Json envelope(const std::string& command, Json params, Json result);

}  // namespace superjac
