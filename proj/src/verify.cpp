#include "cogdof/verify.hpp"

#include "cogdof/dof.hpp"
#include "cogdof/error.hpp"
#include "cogdof/parallel.hpp"

#include <algorithm>
#include <map>

namespace cogdof {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

std::string describe(const AntennaConfig& c, const CognitionScenario& s) {
  return "config " + c.to_string() + " scenario " + s.to_string();
}

bool integral(const Region2D& r) {
  return std::all_of(r.vertices().begin(), r.vertices().end(), [](const DofPoint& p) {
    return denominator(p.d1) == 1 && denominator(p.d2) == 1;
  });
}

VerifyReport ordered(std::map<std::string, CheckTally>& by_name, const std::vector<std::string>& order) {
  VerifyReport out;
  for (const auto& name : order) out.tallies.push_back(by_name[name]);
  return out;
}

void check_max_antennas(int max_antennas) {
  if (max_antennas < 1 || max_antennas > 5)
    throw InvalidArgument("max antennas must be in 1..5, got " + std::to_string(max_antennas));
}

}  // namespace

void CheckTally::record(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  ++failures;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(what);
}

bool VerifyReport::passed() const {
  return std::all_of(tallies.begin(), tallies.end(), [](const CheckTally& t) { return t.failures == 0; });
}

long long VerifyReport::total_checks() const {
  long long n = 0;
  for (const auto& t : tallies) n += t.checks;
  return n;
}

void VerifyReport::merge(const VerifyReport& other) {
  for (const auto& t : other.tallies) {
    auto it = std::find_if(tallies.begin(), tallies.end(), [&](const CheckTally& x) { return x.name == t.name; });
    if (it == tallies.end()) {
      tallies.push_back(t);
      continue;
    }
    it->checks += t.checks;
    it->failures += t.failures;
    for (const auto& c : t.counterexamples)
      if (it->counterexamples.size() < kMaxCounterexamples) it->counterexamples.push_back(c);
  }
}

VerifyReport verify_regions(int max_antennas) {
  check_max_antennas(max_antennas);
  const auto configs = all_configs(max_antennas);
  const std::vector<std::string> names = {
      "region_equality", "formula_equals_lp", "vertex_integrality", "downward_closure",
      "cognition_monotonicity", "swap_symmetry", "cooperation_ceiling"};

  std::vector<VerifyReport> per_config(configs.size());
  parallel_for(configs.size(), [&](std::size_t k) {
    const auto& c = configs[k];
    std::map<std::string, CheckTally> t;
    for (const auto& n : names) t[n].name = n;

    std::array<Region2D, CognitionScenario::kCount> outer;
    for (const auto& s : CognitionScenario::all()) {
      const std::string where = describe(c, s);
      const auto points = inner_points(c, s);
      const auto inner = Region2D::from_points(points.points);
      outer[s.index()] = outer_region(c, s);
      const auto& out = outer[s.index()];

      t["region_equality"].record(regions_equal(inner, out), where);
      const int eta = dof_formula(c, s);
      t["formula_equals_lp"].record(sum_dof_lp(out) == eta, where + " eta " + std::to_string(eta));
      t["vertex_integrality"].record(integral(inner) && integral(out), where);
      t["downward_closure"].record(points.downward_closed(), where);
      const auto [sc, ss] = swap_users(c, s);
      t["swap_symmetry"].record(dof_formula(sc, ss) == eta, where);
    }
    for (const auto& s : CognitionScenario::all()) {
      for (int bit = 0; bit < 4; ++bit) {
        const int richer = s.index() | (1 << bit);
        if (richer == s.index()) continue;
        t["cognition_monotonicity"].record(outer[richer].contains(outer[s.index()]),
                                           describe(c, s) + " vs " +
                                               CognitionScenario::from_index(richer).to_string());
      }
    }
    const auto [b1, b2] = dof_cooperation_upper_bounds(c);
    const int coop = dof_cooperation(c);
    t["cooperation_ceiling"].record(coop == dof_formula(c, {}) && coop <= std::min(b1, b2),
                                    "config " + c.to_string());
    per_config[k] = ordered(t, names);
  });

  VerifyReport report;
  for (const auto& r : per_config) report.merge(r);
  return report;
}

VerifyReport verify_clip_identity(int max_cd, int box) {
  if (max_cd < 0) throw InvalidArgument("clip identity sweep needs max_cd >= 0");
  CheckTally t;
  t.name = "clip_identity";
  for (int c = 0; c <= max_cd; ++c)
    for (int d = 0; d <= max_cd; ++d)
      t.record(clip_identity_holds(c, d, std::max(box, c + d)),
               "c=" + std::to_string(c) + " d=" + std::to_string(d));
  return VerifyReport{{t}};
}

VerifyReport verify_ordering(int max_antennas) {
  check_max_antennas(max_antennas);
  CheckTally eta;
  eta.name = "ordering_eta_chain";
  CheckTally regions;
  regions.name = "ordering_region_chain";
  for (const auto& c : all_configs(max_antennas)) {
    const auto check = scenario_ordering(c);
    eta.record(check.eta_chain, "config " + c.to_string());
    regions.record(check.region_chain, "config " + c.to_string());
  }
  return VerifyReport{{eta, regions}};
}

VerifyReport verify_all(int max_antennas) {
  auto report = verify_regions(max_antennas);
  report.merge(verify_clip_identity());
  report.merge(verify_ordering(max_antennas));
  return report;
}

}  // namespace cogdof
