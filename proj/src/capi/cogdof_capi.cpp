#include "cogdof/cogdof.h"

#include "cogdof/dof.hpp"
#include "cogdof/error.hpp"
#include "cogdof/rate_sim.hpp"
#include "cogdof/serialize.hpp"
#include "cogdof/verify.hpp"
#include "cogdof/zf_scheme.hpp"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>

struct cogdof_channel {
  cogdof::ChannelRealization value;
};

struct cogdof_scheme {
  cogdof::ZfScheme value;
};

struct cogdof_region {
  cogdof::Region2D value;
  cogdof::AntennaConfig config;
  cogdof::CognitionScenario scenario;
};

namespace {

thread_local std::string g_last_error;

cogdof_status fail(cogdof_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename Body>
cogdof_status guarded(Body&& body) {
  try {
    g_last_error.clear();
    body();
    return COGDOF_OK;
  } catch (const cogdof::NotAchievable& e) {
    return fail(COGDOF_ERR_NOT_ACHIEVABLE, e.what());
  } catch (const cogdof::PreconditionFailed& e) {
    return fail(COGDOF_ERR_PRECONDITION, e.what());
  } catch (const cogdof::Undecodable& e) {
    return fail(COGDOF_ERR_UNDECODABLE, e.what());
  } catch (const cogdof::DegenerateChannel& e) {
    return fail(COGDOF_ERR_DEGENERATE_CHANNEL, e.what());
  } catch (const cogdof::InvalidArgument& e) {
    return fail(COGDOF_ERR_INVALID_ARGUMENT, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(COGDOF_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(COGDOF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(COGDOF_ERR_INTERNAL, "unknown error");
  }
}

template <typename T>
void require(T* ptr, const char* name) {
  if (ptr == nullptr) throw cogdof::InvalidArgument(std::string(name) + " must not be NULL");
}

cogdof::AntennaConfig to_cpp(cogdof_config c) { return cogdof::validate_config(c.m1, c.m2, c.n1, c.n2); }

cogdof::CognitionScenario to_cpp(cogdof_scenario s) {
  for (int b : {s.t1, s.t2, s.r1, s.r2})
    if (b != 0 && b != 1) throw cogdof::InvalidArgument("scenario entries must be 0 or 1");
  return {s.t1 == 1, s.t2 == 1, s.r1 == 1, s.r2 == 1};
}

cogdof_config to_c(const cogdof::AntennaConfig& c) { return {c.m1, c.m2, c.n1, c.n2}; }

cogdof_scenario to_c(const cogdof::CognitionScenario& s) { return {s.t1, s.t2, s.r1, s.r2}; }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put_string(char** out, const std::string& s) {
  if (out != nullptr) *out = dup_string(s);
}

std::int64_t to_i64(const boost::multiprecision::cpp_int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw cogdof::InvalidArgument("rational component does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace

extern "C" {

const char* cogdof_version(void) { return "1.0.0"; }

const char* cogdof_status_string(cogdof_status status) {
  switch (status) {
    case COGDOF_OK: return "ok";
    case COGDOF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case COGDOF_ERR_NOT_ACHIEVABLE: return "point not in achievable set";
    case COGDOF_ERR_PRECONDITION: return "precondition failed";
    case COGDOF_ERR_UNDECODABLE: return "scheme not decodable";
    case COGDOF_ERR_DEGENERATE_CHANNEL: return "degenerate channel";
    case COGDOF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* cogdof_last_error(void) { return g_last_error.c_str(); }

void cogdof_string_free(char* s) { std::free(s); }

cogdof_status cogdof_config_validate(int m1, int m2, int n1, int n2, cogdof_config* out) {
  return guarded([&] {
    require(out, "out");
    *out = to_c(cogdof::validate_config(m1, m2, n1, n2));
  });
}

cogdof_status cogdof_config_parse(const char* text, cogdof_config* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = to_c(cogdof::parse_config(text));
  });
}

cogdof_status cogdof_scenario_parse(const char* text, cogdof_scenario* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = to_c(cogdof::parse_scenario(text));
  });
}

cogdof_status cogdof_config_from_json(const char* json, cogdof_config* out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = to_c(cogdof::config_from_json(nlohmann::json::parse(json)));
  });
}

cogdof_status cogdof_swap_users(cogdof_config config, cogdof_scenario scenario, cogdof_config* config_out,
                                cogdof_scenario* scenario_out) {
  return guarded([&] {
    require(config_out, "config_out");
    require(scenario_out, "scenario_out");
    const auto [c, s] = cogdof::swap_users(to_cpp(config), to_cpp(scenario));
    *config_out = to_c(c);
    *scenario_out = to_c(s);
  });
}

cogdof_status cogdof_channel_sample(cogdof_config config, uint64_t seed, int extended, cogdof_channel** out) {
  return guarded([&] {
    require(out, "out");
    *out = new cogdof_channel{cogdof::sample_channel(to_cpp(config), seed, extended != 0)};
  });
}

void cogdof_channel_free(cogdof_channel* channel) { delete channel; }

cogdof_status cogdof_channel_link(const cogdof_channel* channel, int rx_node, int tx_node, double* buf,
                                  size_t buf_len, int* rows, int* cols) {
  return guarded([&] {
    require(channel, "channel");
    const auto& m = channel->value.link(rx_node, tx_node);
    if (rows) *rows = static_cast<int>(m.rows());
    if (cols) *cols = static_cast<int>(m.cols());
    if (buf == nullptr) return;
    if (buf_len < static_cast<size_t>(m.size())) throw cogdof::InvalidArgument("buffer too small for link matrix");
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) buf[r * m.cols() + c] = m(r, c);
  });
}

cogdof_status cogdof_dof_formula(cogdof_config config, cogdof_scenario scenario, int* eta) {
  return guarded([&] {
    require(eta, "eta");
    *eta = cogdof::dof_formula(to_cpp(config), to_cpp(scenario));
  });
}

cogdof_status cogdof_dof_cooperation(cogdof_config config, int* eta, int* bound1, int* bound2) {
  return guarded([&] {
    require(eta, "eta");
    const auto c = to_cpp(config);
    *eta = cogdof::dof_cooperation(c);
    const auto [b1, b2] = cogdof::dof_cooperation_upper_bounds(c);
    if (bound1) *bound1 = b1;
    if (bound2) *bound2 = b2;
  });
}

cogdof_status cogdof_in_achievable_set(cogdof_config config, cogdof_scenario scenario, int d1, int d2,
                                       int* member) {
  return guarded([&] {
    require(member, "member");
    *member = cogdof::in_achievable_set(to_cpp(config), to_cpp(scenario), d1, d2);
  });
}

cogdof_status cogdof_region_build(cogdof_config config, cogdof_scenario scenario, cogdof_region_kind kind,
                                  cogdof_region** out) {
  return guarded([&] {
    require(out, "out");
    const auto c = to_cpp(config);
    const auto s = to_cpp(scenario);
    if (kind == COGDOF_REGION_INNER) *out = new cogdof_region{cogdof::inner_region(c, s), c, s};
    else if (kind == COGDOF_REGION_OUTER) *out = new cogdof_region{cogdof::outer_region(c, s), c, s};
    else throw cogdof::InvalidArgument("unknown region kind");
  });
}

cogdof_status cogdof_region_from_json(const char* json, cogdof_region** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    const auto doc = nlohmann::json::parse(json);
    cogdof::AntennaConfig c;
    cogdof::CognitionScenario s;
    if (doc.contains("config")) c = cogdof::config_from_json(doc["config"]);
    if (doc.contains("scenario")) s = cogdof::scenario_from_json(doc["scenario"]);
    *out = new cogdof_region{cogdof::region_from_json(doc), c, s};
  });
}

void cogdof_region_free(cogdof_region* region) { delete region; }

cogdof_status cogdof_region_vertex_count(const cogdof_region* region, size_t* count) {
  return guarded([&] {
    require(region, "region");
    require(count, "count");
    *count = region->value.vertices().size();
  });
}

cogdof_status cogdof_region_vertex(const cogdof_region* region, size_t index, int64_t* d1_num, int64_t* d1_den,
                                   int64_t* d2_num, int64_t* d2_den) {
  return guarded([&] {
    require(region, "region");
    const auto& vs = region->value.vertices();
    if (index >= vs.size()) throw cogdof::InvalidArgument("vertex index out of range");
    const auto& v = vs[index];
    if (d1_num) *d1_num = to_i64(numerator(v.d1));
    if (d1_den) *d1_den = to_i64(denominator(v.d1));
    if (d2_num) *d2_num = to_i64(numerator(v.d2));
    if (d2_den) *d2_den = to_i64(denominator(v.d2));
  });
}

cogdof_status cogdof_region_sum_dof(const cogdof_region* region, int64_t* num, int64_t* den) {
  return guarded([&] {
    require(region, "region");
    require(num, "num");
    require(den, "den");
    const auto v = cogdof::sum_dof_lp(region->value);
    *num = to_i64(numerator(v));
    *den = to_i64(denominator(v));
  });
}

cogdof_status cogdof_regions_equal(const cogdof_region* a, const cogdof_region* b, int* equal) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(equal, "equal");
    *equal = cogdof::regions_equal(a->value, b->value);
  });
}

cogdof_status cogdof_region_to_json(const cogdof_region* region, char** json) {
  return guarded([&] {
    require(region, "region");
    require(json, "json");
    *json = dup_string(cogdof::region_to_json(region->value, region->config, region->scenario).dump());
  });
}

cogdof_status cogdof_clip_identity_holds(int c, int d, int box, int* holds) {
  return guarded([&] {
    require(holds, "holds");
    *holds = cogdof::clip_identity_holds(c, d, box);
  });
}

cogdof_status cogdof_ordering_holds(cogdof_config config, int* holds) {
  return guarded([&] {
    require(holds, "holds");
    *holds = cogdof::scenario_ordering_holds(to_cpp(config));
  });
}

cogdof_status cogdof_verify(int max_antennas, int which, int* passed, char** report_json) {
  return guarded([&] {
    require(passed, "passed");
    if (which <= 0 || (which & ~COGDOF_VERIFY_ALL) != 0) throw cogdof::InvalidArgument("unknown verify selection");
    if (max_antennas < 1 || max_antennas > 5)
      throw cogdof::InvalidArgument("max antennas must be in 1..5, got " + std::to_string(max_antennas));
    cogdof::VerifyReport report;
    if (which & COGDOF_VERIFY_REGIONS) report.merge(cogdof::verify_regions(max_antennas));
    if (which & COGDOF_VERIFY_CLIP_IDENTITY) report.merge(cogdof::verify_clip_identity());
    if (which & COGDOF_VERIFY_ORDERING) report.merge(cogdof::verify_ordering(max_antennas));
    *passed = report.passed();
    put_string(report_json, cogdof::to_json(report).dump());
  });
}

cogdof_status cogdof_scheme_build(cogdof_config config, cogdof_scenario scenario, int d1, int d2,
                                  const cogdof_channel* channel, uint64_t seed, cogdof_scheme** out) {
  return guarded([&] {
    require(channel, "channel");
    require(out, "out");
    *out = new cogdof_scheme{cogdof::build_scheme(to_cpp(config), to_cpp(scenario), d1, d2, channel->value, seed)};
  });
}

void cogdof_scheme_free(cogdof_scheme* scheme) { delete scheme; }

cogdof_status cogdof_scheme_verify(const cogdof_scheme* scheme, const cogdof_channel* channel,
                                   cogdof_diagnostics* out) {
  return guarded([&] {
    require(scheme, "scheme");
    require(channel, "channel");
    require(out, "out");
    const auto d = cogdof::verify_scheme(scheme->value, channel->value);
    *out = {d.signal_dim_rx1, d.interference_dim_rx1, d.intersection_dim_rx1,
            d.signal_dim_rx2, d.interference_dim_rx2, d.intersection_dim_rx2,
            d.decodable_w1,   d.decodable_w2,         d.worst_null_residual,
            d.transmit_rank};
  });
}

cogdof_status cogdof_achieve(cogdof_config config, cogdof_scenario scenario, int d1, int d2, int trials,
                             uint64_t seed, int* passes, char** report_json) {
  return guarded([&] {
    require(passes, "passes");
    const auto cell = cogdof::achieve_point(to_cpp(config), to_cpp(scenario), d1, d2, trials, seed);
    *passes = cell.passes;
    put_string(report_json, cogdof::to_json(cell).dump());
  });
}

cogdof_status cogdof_achievability_sweep(int max_antennas, int trials, uint64_t seed, long long* passes,
                                         long long* total, char** report_json) {
  return guarded([&] {
    const auto report = cogdof::achievability_sweep(max_antennas, trials, seed);
    if (passes) *passes = report.passes();
    if (total) *total = report.trials();
    put_string(report_json, cogdof::to_json(report).dump());
  });
}

cogdof_status cogdof_achievable_rates(const cogdof_scheme* scheme, const cogdof_channel* channel, double rho,
                                      double* r1, double* r2) {
  return guarded([&] {
    require(scheme, "scheme");
    require(channel, "channel");
    require(r1, "r1");
    require(r2, "r2");
    std::tie(*r1, *r2) = cogdof::achievable_rates(scheme->value, channel->value, rho);
  });
}

cogdof_status cogdof_simulate(cogdof_config config, cogdof_scenario scenario, int d1, int d2, double rho_min,
                              double rho_max, int points, int trials, uint64_t seed, double* slope, char** csv,
                              char** sidecar_json) {
  return guarded([&] {
    require(slope, "slope");
    const auto grid = cogdof::log_grid(rho_min, rho_max, points);
    const auto result = cogdof::simulate_rates(to_cpp(config), to_cpp(scenario), d1, d2, grid, trials, seed);
    *slope = result.mean.slope;
    put_string(csv, cogdof::rate_sweep_csv(result.mean));
    put_string(sidecar_json, cogdof::rate_sweep_sidecar(result).dump());
  });
}

cogdof_status cogdof_cooperation_bound_term(const cogdof_channel* channel, double rho, double* terms,
                                            size_t len, size_t* count) {
  return guarded([&] {
    require(channel, "channel");
    const auto probe = cogdof::cooperation_bound_term(channel->value, rho);
    if (count) *count = probe.per_antenna_terms.size();
    if (terms == nullptr) return;
    for (size_t i = 0; i < len && i < probe.per_antenna_terms.size(); ++i) terms[i] = probe.per_antenna_terms[i];
  });
}

cogdof_status cogdof_coop_gap_check(cogdof_config config, int trials, uint64_t seed, int* passed,
                                    char** report_json) {
  return guarded([&] {
    require(passed, "passed");
    const auto report = cogdof::cooperation_dof_gap_check(to_cpp(config), trials, seed);
    *passed = report.passed();
    put_string(report_json, cogdof::to_json(report).dump());
  });
}

}  // extern "C"
