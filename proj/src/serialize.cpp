#include "cogdof/serialize.hpp"

#include "cogdof/dof.hpp"
#include "cogdof/error.hpp"

#include <cstdio>

namespace cogdof {

using nlohmann::json;

json to_json(const AntennaConfig& c) { return {{"m1", c.m1}, {"m2", c.m2}, {"n1", c.n1}, {"n2", c.n2}}; }

json to_json(const CognitionScenario& s) { return json::array({int(s.t1), int(s.t2), int(s.r1), int(s.r2)}); }

AntennaConfig config_from_json(const json& j) {
  try {
    return validate_config(j.at("m1").get<int>(), j.at("m2").get<int>(), j.at("n1").get<int>(),
                           j.at("n2").get<int>());
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed config JSON: ") + e.what());
  }
}

CognitionScenario scenario_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw InvalidArgument("scenario JSON must be a 4-element array");
  std::array<bool, 4> bits{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (!j[i].is_number_integer() || (j[i] != 0 && j[i] != 1))
      throw InvalidArgument("scenario entries must be 0 or 1");
    bits[i] = j[i] == 1;
  }
  return {bits[0], bits[1], bits[2], bits[3]};
}

json region_to_json(const Region2D& r, const AntennaConfig& c, const CognitionScenario& s) {
  json hs = json::array();
  for (const auto& h : r.halfspaces()) hs.push_back({{"a1", h.a1}, {"a2", h.a2}, {"b", h.b}});
  json vs = json::array();
  for (const auto& v : r.vertices()) vs.push_back({rational_to_string(v.d1), rational_to_string(v.d2)});
  return {{"config", to_json(c)},
          {"scenario", to_json(s)},
          {"halfspaces", hs},
          {"vertices", vs},
          {"sum_dof", rational_to_string(sum_dof_lp(r))}};
}

Region2D region_from_json(const json& j) {
  try {
    std::vector<Halfspace> hs;
    for (const auto& h : j.at("halfspaces"))
      hs.push_back({h.at("a1").get<std::int64_t>(), h.at("a2").get<std::int64_t>(), h.at("b").get<std::int64_t>()});
    return Region2D::from_halfspaces(std::move(hs));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed region JSON: ") + e.what());
  }
}

json to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& t : r.tallies)
    checks.push_back({{"name", t.name},
                      {"checks", t.checks},
                      {"failures", t.failures},
                      {"counterexamples", t.counterexamples}});
  return {{"passed", r.passed()}, {"total_checks", r.total_checks()}, {"checks", checks}};
}

json to_json(const SchemeDiagnostics& d) {
  return {{"signal_dim_rx1", d.signal_dim_rx1},
          {"interference_dim_rx1", d.interference_dim_rx1},
          {"intersection_dim_rx1", d.intersection_dim_rx1},
          {"signal_dim_rx2", d.signal_dim_rx2},
          {"interference_dim_rx2", d.interference_dim_rx2},
          {"intersection_dim_rx2", d.intersection_dim_rx2},
          {"decodable_w1", d.decodable_w1},
          {"decodable_w2", d.decodable_w2},
          {"worst_null_residual", d.worst_null_residual},
          {"transmit_rank", d.transmit_rank}};
}

json to_json(const SweepCell& c) {
  return {{"config", to_json(c.config)},
          {"scenario", to_json(c.scenario)},
          {"point", {c.d1, c.d2}},
          {"trials", c.trials},
          {"passes", c.passes},
          {"worst_null_residual", c.worst_null_residual}};
}

json to_json(const AchievabilityReport& r) {
  json out = json::array();
  for (const auto& c : r.cells) out.push_back(to_json(c));
  return out;
}

json to_json(const CooperationGapReport& r) {
  return {{"config", to_json(r.config)},
          {"trials", r.trials},
          {"rho_grid", r.rho_grid},
          {"max_term_slopes", r.max_term_slopes},
          {"worst_slope", r.worst_slope},
          {"slope_limit", kBoundSlopeLimit},
          {"slopes_bounded", r.slopes_bounded()},
          {"dof_cooperation", r.dof_cooperation},
          {"upper_bounds", {r.upper_bounds.first, r.upper_bounds.second}},
          {"ceiling_holds", r.ceiling_holds}};
}

std::string format_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_short(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string rate_sweep_csv(const RateSweep& sweep) {
  std::string out = "rho,r1,r2,rsum\n";
  for (std::size_t i = 0; i < sweep.rho_grid.size(); ++i) {
    out += format_full(sweep.rho_grid[i]) + "," + format_full(sweep.r1_rates[i]) + "," +
           format_full(sweep.r2_rates[i]) + "," + format_full(sweep.r1_rates[i] + sweep.r2_rates[i]) + "\n";
  }
  return out;
}

json rate_sweep_sidecar(const SimulationResult& result) {
  return {{"slope", result.mean.slope},
          {"intercept", result.mean.intercept},
          {"config", to_json(result.config)},
          {"scenario", to_json(result.scenario)},
          {"point", {result.d1, result.d2}},
          {"eta", result.eta},
          {"trials", result.trials},
          {"fit_points", result.mean.fit_points}};
}

}  // namespace cogdof
