// Command-line front end. Talks to the library only through the C API.

#include "cogdof/cogdof.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

enum ExitCode {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitNotAchievable = 3,
  kExitPrecondition = 4,
  kExitError = 5,
};

struct ApiError {
  cogdof_status status;
  std::string message;
};

void check(cogdof_status status) {
  if (status != COGDOF_OK) throw ApiError{status, cogdof_last_error()};
}

// Owns a string returned by the library.
struct LibString {
  char* ptr = nullptr;
  ~LibString() { cogdof_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

std::string short_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string config_text(const cogdof_config& c) {
  std::ostringstream os;
  os << "(" << c.m1 << "," << c.m2 << "," << c.n1 << "," << c.n2 << ")";
  return os.str();
}

std::string scenario_text(const cogdof_scenario& s) {
  std::ostringstream os;
  os << "[" << s.t1 << "," << s.t2 << "," << s.r1 << "," << s.r2 << "]";
  return os.str();
}

json config_json(const cogdof_config& c) { return {{"m1", c.m1}, {"m2", c.m2}, {"n1", c.n1}, {"n2", c.n2}}; }
json scenario_json(const cogdof_scenario& s) { return json::array({s.t1, s.t2, s.r1, s.r2}); }

std::pair<int, int> parse_point(const std::string& text) {
  int d1 = 0, d2 = 0;
  char comma = 0, extra = 0;
  std::istringstream is(text);
  if (!(is >> d1 >> comma >> d2) || comma != ',' || (is >> extra))
    throw ApiError{COGDOF_ERR_INVALID_ARGUMENT, "point must be 'd1,d2', got '" + text + "'"};
  return {d1, d2};
}

struct Common {
  std::string config = "";
  std::string scenario = "0,0,0,0";
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string output;

  cogdof_config parsed_config() const {
    cogdof_config c{};
    check(cogdof_config_parse(config.c_str(), &c));
    return c;
  }
  cogdof_scenario parsed_scenario() const {
    cogdof_scenario s{};
    check(cogdof_scenario_parse(scenario.c_str(), &s));
    return s;
  }
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ApiError{COGDOF_ERR_INVALID_ARGUMENT, "cannot open output file '" + path + "'"};
    }
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void print_region_text(std::ostream& os, const char* label, const json& r) {
  os << label << " region\n  vertices:";
  for (const auto& v : r["vertices"]) os << " (" << v[0].get<std::string>() << ", " << v[1].get<std::string>() << ")";
  os << "\n  halfspaces:";
  for (const auto& h : r["halfspaces"])
    os << "\n    " << h["a1"].get<long long>() << "*d1 + " << h["a2"].get<long long>() << "*d2 <= "
       << h["b"].get<long long>();
  os << "\n  sum DOF: " << r["sum_dof"].get<std::string>() << "\n";
}

int run_dof(const Common& opt, bool all_scenarios, bool cooperation) {
  const auto c = opt.parsed_config();
  Output out(opt.output);
  auto& os = out.out();
  if (cooperation) {
    int eta = 0, b1 = 0, b2 = 0;
    check(cogdof_dof_cooperation(c, &eta, &b1, &b2));
    if (opt.format == "json") {
      os << json{{"config", config_json(c)}, {"eta_cooperation", eta}, {"upper_bounds", {b1, b2}}}.dump(2) << "\n";
    } else {
      os << eta << "\n";
      os << "upper bounds: max(M1,N2)=" << b1 << " max(M2,N1)=" << b2 << "\n";
    }
    return kExitOk;
  }
  if (all_scenarios) {
    json rows = json::array();
    if (opt.format != "json") os << "T1 T2 R1 R2  eta\n";
    for (int i = 0; i < 16; ++i) {
      cogdof_scenario s{(i >> 3) & 1, (i >> 2) & 1, (i >> 1) & 1, i & 1};
      int eta = 0;
      check(cogdof_dof_formula(c, s, &eta));
      rows.push_back({{"scenario", scenario_json(s)}, {"eta", eta}});
      if (opt.format != "json")
        os << " " << s.t1 << "  " << s.t2 << "  " << s.r1 << "  " << s.r2 << "   " << eta << "\n";
    }
    if (opt.format == "json") os << json{{"config", config_json(c)}, {"rows", rows}}.dump(2) << "\n";
    return kExitOk;
  }
  const auto s = opt.parsed_scenario();
  int eta = 0;
  check(cogdof_dof_formula(c, s, &eta));
  if (opt.format == "json")
    os << json{{"config", config_json(c)}, {"scenario", scenario_json(s)}, {"eta", eta}}.dump(2) << "\n";
  else
    os << eta << "\n";
  return kExitOk;
}

int run_region(const Common& opt) {
  const auto c = opt.parsed_config();
  const auto s = opt.parsed_scenario();
  std::unique_ptr<cogdof_region, decltype(&cogdof_region_free)> inner(nullptr, cogdof_region_free);
  std::unique_ptr<cogdof_region, decltype(&cogdof_region_free)> outer(nullptr, cogdof_region_free);
  cogdof_region* raw = nullptr;
  check(cogdof_region_build(c, s, COGDOF_REGION_INNER, &raw));
  inner.reset(raw);
  check(cogdof_region_build(c, s, COGDOF_REGION_OUTER, &raw));
  outer.reset(raw);
  int equal = 0;
  check(cogdof_regions_equal(inner.get(), outer.get(), &equal));
  LibString inner_json, outer_json;
  check(cogdof_region_to_json(inner.get(), &inner_json.ptr));
  check(cogdof_region_to_json(outer.get(), &outer_json.ptr));

  const json doc = {{"inner", json::parse(inner_json.str())},
                    {"outer", json::parse(outer_json.str())},
                    {"equal", equal != 0}};
  Output out(opt.output);
  auto& os = out.out();
  if (opt.format == "json") {
    os << doc.dump(2) << "\n";
  } else {
    os << "config " << config_text(c) << " scenario " << scenario_text(s) << "\n";
    print_region_text(os, "inner", doc["inner"]);
    print_region_text(os, "outer", doc["outer"]);
    os << "equal: " << (equal ? "true" : "false") << "\n";
  }
  return equal ? kExitOk : kExitCheckFailed;
}

int run_verify(const Common& opt, int max_antennas, const std::string& which) {
  int mask = 0;
  if (which == "regions") mask = COGDOF_VERIFY_REGIONS;
  else if (which == "clip-identity") mask = COGDOF_VERIFY_CLIP_IDENTITY;
  else if (which == "ordering") mask = COGDOF_VERIFY_ORDERING;
  else mask = COGDOF_VERIFY_ALL;
  int passed = 0;
  LibString report;
  check(cogdof_verify(max_antennas, mask, &passed, &report.ptr));
  const auto doc = json::parse(report.str());
  Output out(opt.output);
  auto& os = out.out();
  if (opt.format == "json") {
    os << doc.dump(2) << "\n";
  } else {
    for (const auto& t : doc["checks"]) {
      os << (t["failures"] == 0 ? "PASS " : "FAIL ") << t["name"].get<std::string>() << ": "
         << t["checks"].get<long long>() << " checks, " << t["failures"].get<long long>() << " failures\n";
      for (const auto& ce : t["counterexamples"]) os << "  counterexample: " << ce.get<std::string>() << "\n";
    }
    os << (passed ? "PASS" : "FAIL") << " (" << doc["total_checks"].get<long long>() << " checks)\n";
  }
  return passed ? kExitOk : kExitCheckFailed;
}

int run_achieve(const Common& opt, const std::string& point, int trials) {
  const auto c = opt.parsed_config();
  const auto s = opt.parsed_scenario();
  const auto [d1, d2] = parse_point(point);
  if (trials < 0) throw ApiError{COGDOF_ERR_INVALID_ARGUMENT, "trials must be >= 0"};
  int passes = 0;
  LibString report;
  check(cogdof_achieve(c, s, d1, d2, trials, opt.seed, &passes, &report.ptr));
  const auto doc = json::parse(report.str());

  Output out(opt.output);
  auto& os = out.out();
  if (opt.format == "json") {
    os << doc.dump(2) << "\n";
  } else {
    os << "config " << config_text(c) << " scenario " << scenario_text(s) << " point (" << d1 << "," << d2
       << ")\n";
    os << passes << "/" << trials << " channels pass"
       << " (worst null residual " << short_num(doc["worst_null_residual"].get<double>()) << ")\n";
  }
  return passes == trials ? kExitOk : kExitCheckFailed;
}

std::string default_output_prefix() {
  const char* dir = std::getenv("COGDOF_OUTPUT_DIR");
  std::string base = dir && *dir ? dir : ".";
  return base + "/rates";
}

int run_simulate(const Common& opt, const std::string& point, double rho_min, double rho_max, int points,
                 int trials, std::string prefix) {
  const auto c = opt.parsed_config();
  const auto s = opt.parsed_scenario();
  const auto [d1, d2] = parse_point(point);
  double slope = 0.0;
  LibString csv, sidecar;
  check(cogdof_simulate(c, s, d1, d2, rho_min, rho_max, points, trials, opt.seed, &slope, &csv.ptr, &sidecar.ptr));
  int eta = 0;
  check(cogdof_dof_formula(c, s, &eta));

  if (prefix.empty()) prefix = default_output_prefix();
  {
    std::ofstream f(prefix + ".csv");
    std::ofstream g(prefix + ".json");
    if (!f || !g) throw ApiError{COGDOF_ERR_INVALID_ARGUMENT, "cannot write outputs with prefix '" + prefix + "'"};
    f << csv.str();
    g << json::parse(sidecar.str()).dump(2) << "\n";
  }

  // The fitted slope should match the scheme's d1 + d2 and never beat eta.
  const double target = d1 + d2;
  const bool near_target = std::abs(slope - target) <= 0.03 * std::max(target, 1.0);
  const bool below_eta = slope <= eta + 0.1;
  Output out(opt.output);
  auto& os = out.out();
  if (opt.format == "json") {
    auto doc = json::parse(sidecar.str());
    doc["target"] = target;
    doc["within_tolerance"] = near_target && below_eta;
    os << doc.dump(2) << "\n";
  } else if (opt.format == "csv") {
    os << csv.str();
  } else {
    os << "slope " << short_num(slope) << "  eta " << eta << "  target d1+d2 " << target << "\n";
    os << "wrote " << prefix << ".csv and " << prefix << ".json\n";
  }
  return near_target && below_eta ? kExitOk : kExitCheckFailed;
}

int run_coop_bound(const Common& opt, int trials) {
  const auto c = opt.parsed_config();
  if (trials < 0) throw ApiError{COGDOF_ERR_INVALID_ARGUMENT, "trials must be >= 0"};
  int passed = 0;
  LibString report;
  check(cogdof_coop_gap_check(c, trials, opt.seed, &passed, &report.ptr));
  const auto doc = json::parse(report.str());
  Output out(opt.output);
  auto& os = out.out();
  if (opt.format == "json") {
    os << doc.dump(2) << "\n";
  } else {
    int t = 0;
    for (const auto& row : doc["max_term_slopes"]) {
      os << "trial " << t++ << " term slopes:";
      for (const auto& v : row) os << " " << short_num(v.get<double>());
      os << "\n";
    }
    os << "worst slope " << short_num(doc["worst_slope"].get<double>()) << " (limit "
       << short_num(doc["slope_limit"].get<double>()) << ")\n";
    os << "eta with cooperation " << doc["dof_cooperation"].get<int>() << " <= min(max(M1,N2)="
       << doc["upper_bounds"][0].get<int>() << ", max(M2,N1)=" << doc["upper_bounds"][1].get<int>() << ")\n";
  }
  return passed ? kExitOk : kExitCheckFailed;
}

int exit_code_for(cogdof_status status) {
  switch (status) {
    case COGDOF_ERR_INVALID_ARGUMENT: return kExitUsage;
    case COGDOF_ERR_NOT_ACHIEVABLE: return kExitNotAchievable;
    case COGDOF_ERR_PRECONDITION: return kExitPrecondition;
    default: return kExitError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degrees of freedom of the two-user MIMO interference channel with cognition and cooperation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cogdof_version());

  Common opt;
  auto add_common = [&](CLI::App* sub, bool needs_config) {
    auto* cfg = sub->add_option("--config", opt.config, "antenna counts M1,M2,N1,N2");
    if (needs_config) cfg->required();
    sub->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("--output", opt.output, "write the report to this file instead of stdout");
  };
  auto add_scenario = [&](CLI::App* sub) {
    sub->add_option("--scenario", opt.scenario, "cognition bits T1,T2,R1,R2")->capture_default_str();
  };

  bool all_scenarios = false, cooperation = false;
  auto* dof = app.add_subcommand("dof", "closed-form sum DOF");
  add_common(dof, true);
  add_scenario(dof);
  dof->add_flag("--all-scenarios", all_scenarios, "table over all 16 scenarios");
  dof->add_flag("--cooperation", cooperation, "sum DOF with full cooperation and its upper bounds");

  auto* region = app.add_subcommand("region", "inner and outer DOF regions and their equality");
  add_common(region, true);
  add_scenario(region);

  int max_antennas = 4;
  std::string which = "all";
  auto* verify = app.add_subcommand("verify", "exhaustive exact identity checks");
  add_common(verify, false);
  verify->add_option("--max-antennas", max_antennas, "largest antenna count in the sweep (1..5)")
      ->capture_default_str();
  verify->add_option("--which", which, "checks to run")
      ->check(CLI::IsMember({"regions", "clip-identity", "ordering", "all"}))
      ->capture_default_str();

  std::string point;
  int trials = 50;
  auto* achieve = app.add_subcommand("achieve", "build and verify zero-forcing schemes on random channels");
  add_common(achieve, true);
  add_scenario(achieve);
  achieve->add_option("--point", point, "DOF point d1,d2")->required();
  achieve->add_option("--trials", trials, "random channels")->capture_default_str();

  double rho_min = 1e4, rho_max = 1e10;
  int points = 7, sim_trials = 10;
  std::string prefix;
  auto* simulate = app.add_subcommand("simulate", "finite-SNR rates and the high-SNR slope");
  add_common(simulate, true);
  add_scenario(simulate);
  simulate->add_option("--point", point, "DOF point d1,d2")->required();
  simulate->add_option("--rho-min", rho_min, "smallest per-node power")->capture_default_str();
  simulate->add_option("--rho-max", rho_max, "largest per-node power")->capture_default_str();
  simulate->add_option("--points", points, "grid size")->capture_default_str();
  simulate->add_option("--trials", sim_trials, "random channels")->capture_default_str();
  simulate->add_option("--out", prefix, "output prefix for .csv and .json (default $COGDOF_OUTPUT_DIR/rates)");

  int coop_trials = 10;
  auto* coop = app.add_subcommand("coop-bound", "boundedness of the cooperation genie-bound term");
  add_common(coop, true);
  coop->add_option("--trials", coop_trials, "random extended channels")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*dof) return run_dof(opt, all_scenarios, cooperation);
    if (*region) return run_region(opt);
    if (*verify) return run_verify(opt, max_antennas, which);
    if (*achieve) return run_achieve(opt, point, trials);
    if (*simulate) return run_simulate(opt, point, rho_min, rho_max, points, sim_trials, prefix);
    if (*coop) return run_coop_bound(opt, coop_trials);
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.message << "\n";
    if (e.status == COGDOF_ERR_INVALID_ARGUMENT) std::cerr << app.help();
    return exit_code_for(e.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
