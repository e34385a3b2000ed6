#pragma once

#include "cogdof/channel.hpp"
#include "cogdof/rate_sim.hpp"
#include "cogdof/region.hpp"
#include "cogdof/verify.hpp"
#include "cogdof/zf_scheme.hpp"

#include <json.hpp>

#include <string>

namespace cogdof {

nlohmann::json to_json(const AntennaConfig& c);
nlohmann::json to_json(const CognitionScenario& s);
AntennaConfig config_from_json(const nlohmann::json& j);
CognitionScenario scenario_from_json(const nlohmann::json& j);

// {"config", "scenario", "halfspaces":[{a1,a2,b}], "vertices":[["p/q","p/q"]], "sum_dof":"p/q"}
nlohmann::json region_to_json(const Region2D& r, const AntennaConfig& c, const CognitionScenario& s);
Region2D region_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerifyReport& r);
nlohmann::json to_json(const SchemeDiagnostics& d);
// A list of {"config","scenario","point","trials","passes","worst_null_residual"}.
nlohmann::json to_json(const AchievabilityReport& r);
nlohmann::json to_json(const SweepCell& c);
nlohmann::json to_json(const CooperationGapReport& r);

// Header "rho,r1,r2,rsum"; values at full double precision.
std::string rate_sweep_csv(const RateSweep& sweep);
// {"slope","intercept","config","scenario","point",...}
nlohmann::json rate_sweep_sidecar(const SimulationResult& result);

// %.17g
std::string format_full(double v);
// %.4g
std::string format_short(double v);

}  // namespace cogdof
