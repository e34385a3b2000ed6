#include "cogdof/dof.hpp"

#include "cogdof/error.hpp"

#include <algorithm>

namespace cogdof {

int w1_transmit_dim(const AntennaConfig& c, const CognitionScenario& s) {
  return c.m1 + (s.t2 ? c.m2 : 0);
}

int w2_transmit_dim(const AntennaConfig& c, const CognitionScenario& s) {
  return (s.t1 ? c.m1 : 0) + c.m2;
}

int w1_nullable_streams(const AntennaConfig& c, const CognitionScenario& s) {
  return positive_part(w1_transmit_dim(c, s) - c.n2);
}

int w2_nullable_streams(const AntennaConfig& c, const CognitionScenario& s) {
  return positive_part(w2_transmit_dim(c, s) - c.n1);
}

bool in_achievable_set(const AntennaConfig& c, const CognitionScenario& s, int d1, int d2) {
  if (d1 < 0 || d2 < 0) return false;
  if (w2_transmit_dim(c, s) < (s.t1 ? d1 : 0) + d2) return false;
  if (w1_transmit_dim(c, s) < d1 + (s.t2 ? d2 : 0)) return false;
  const int leak_rx1 = s.r1 ? 0 : positive_part(d2 - w2_nullable_streams(c, s));
  if (c.n1 < leak_rx1 + d1) return false;
  const int leak_rx2 = s.r2 ? 0 : positive_part(d1 - w1_nullable_streams(c, s));
  if (c.n2 < leak_rx2 + d2) return false;
  return true;
}

bool AchievableSet::contains(std::int64_t d1, std::int64_t d2) const {
  return std::binary_search(points.begin(), points.end(), IntPoint{d1, d2});
}

bool AchievableSet::downward_closed() const {
  for (const auto& [d1, d2] : points) {
    if (d1 > 0 && !contains(d1 - 1, d2)) return false;
    if (d2 > 0 && !contains(d1, d2 - 1)) return false;
  }
  return true;
}

AchievableSet inner_points(const AntennaConfig& c, const CognitionScenario& s) {
  AchievableSet set{c, s, {}};
  // Each coordinate is at most min(M1+M2, N1+N2), so this box covers the set.
  const int bound = c.m1 + c.m2;
  for (int d1 = 0; d1 <= bound; ++d1)
    for (int d2 = 0; d2 <= bound; ++d2)
      if (in_achievable_set(c, s, d1, d2)) set.points.emplace_back(d1, d2);
  return set;
}

Region2D inner_region(const AntennaConfig& c, const CognitionScenario& s) {
  return Region2D::from_points(inner_points(c, s).points);
}

std::vector<Halfspace> outer_halfspaces(const AntennaConfig& c, const CognitionScenario& s) {
  std::vector<Halfspace> hs = {
      {1, 1, c.m1 + c.m2},
      {1, 1, c.n1 + c.n2},
      {1, 0, c.n1},
      {0, 1, c.n2},
  };
  if (!s.t2) hs.push_back({1, 0, c.m1});
  if (!s.t1) hs.push_back({0, 1, c.m2});
  if (!s.t2) hs.push_back({1, 1, s.r2 ? c.m1 + c.n2 : std::max(c.m1, c.n2)});
  if (!s.t1) hs.push_back({1, 1, s.r1 ? c.m2 + c.n1 : std::max(c.m2, c.n1)});
  return hs;
}

Region2D outer_region(const AntennaConfig& c, const CognitionScenario& s) {
  return Region2D::from_halfspaces(outer_halfspaces(c, s));
}

int dof_formula(const AntennaConfig& c, const CognitionScenario& s) {
  int eta = std::min(c.m1 + c.m2, c.n1 + c.n2);
  if (!s.t2) eta = std::min(eta, s.r2 ? c.m1 + c.n2 : std::max(c.m1, c.n2));
  if (!s.t1) eta = std::min(eta, s.r1 ? c.m2 + c.n1 : std::max(c.m2, c.n1));
  return eta;
}

int dof_cooperation(const AntennaConfig& c) {
  return std::min({c.m1 + c.m2, c.n1 + c.n2, std::max(c.m1, c.n2), std::max(c.m2, c.n1)});
}

std::pair<int, int> dof_cooperation_upper_bounds(const AntennaConfig& c) {
  return {std::max(c.m1, c.n2), std::max(c.m2, c.n1)};
}

bool clip_identity_holds(int c, int d, int box) {
  if (c < 0 || d < 0) throw InvalidArgument("clip_identity_holds needs nonnegative c and d");
  if (box < c + d) throw InvalidArgument("clip_identity_holds needs box >= c + d");
  for (int a = 0; a <= box; ++a) {
    for (int b = 0; b <= box; ++b) {
      const bool nested = a + positive_part(b - positive_part(c - d)) <= d;
      const bool split = a <= d && a + b <= std::max(c, d);
      if (nested != split) return false;
    }
  }
  return true;
}

OrderingCheck scenario_ordering(const AntennaConfig& c) {
  OrderingCheck out;
  std::array<Region2D, 5> regions;
  for (std::size_t i = 0; i < kOrderingChain.size(); ++i) {
    out.eta[i] = dof_formula(c, kOrderingChain[i]);
    regions[i] = outer_region(c, kOrderingChain[i]);
  }
  const auto& e = out.eta;
  out.eta_chain = e[0] <= e[1] && e[1] == e[2] && e[2] <= e[3] && e[3] <= e[4];
  out.region_chain = regions[1].contains(regions[0]) && regions_equal(regions[1], regions[2]) &&
                     regions[3].contains(regions[2]) && regions[4].contains(regions[3]);
  return out;
}

bool scenario_ordering_holds(const AntennaConfig& c) { return scenario_ordering(c).holds(); }

std::vector<AntennaConfig> all_configs(int max_antennas) {
  std::vector<AntennaConfig> out;
  for (int m1 = 1; m1 <= max_antennas; ++m1)
    for (int m2 = 1; m2 <= max_antennas; ++m2)
      for (int n1 = 1; n1 <= max_antennas; ++n1)
        for (int n2 = 1; n2 <= max_antennas; ++n2) out.push_back({m1, m2, n1, n2});
  return out;
}

}  // namespace cogdof
