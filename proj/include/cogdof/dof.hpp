#pragma once

#include "cogdof/channel.hpp"
#include "cogdof/region.hpp"

#include <array>
#include <utility>
#include <vector>

namespace cogdof {

inline int positive_part(int x) { return x > 0 ? x : 0; }

// Transmit dimension available to message W1: M1, plus M2 when transmitter 2
// is cognitive. Symmetrically for W2.
int w1_transmit_dim(const AntennaConfig& c, const CognitionScenario& s);
int w2_transmit_dim(const AntennaConfig& c, const CognitionScenario& s);

// Streams of W1 that can be zero-forced at receiver 2, (w1_transmit_dim - N2)^+,
// and of W2 at receiver 1.
int w1_nullable_streams(const AntennaConfig& c, const CognitionScenario& s);
int w2_nullable_streams(const AntennaConfig& c, const CognitionScenario& s);

// Membership in the integer achievable set: transmit dimension limits for both
// messages and the receive dimension budget at both receivers.
bool in_achievable_set(const AntennaConfig& c, const CognitionScenario& s, int d1, int d2);

struct AchievableSet {
  AntennaConfig config;
  CognitionScenario scenario;
  std::vector<IntPoint> points;  // sorted by (d1, d2)

  bool contains(std::int64_t d1, std::int64_t d2) const;
  // Closed under decreasing either coordinate.
  bool downward_closed() const;
};

AchievableSet inner_points(const AntennaConfig& c, const CognitionScenario& s);
Region2D inner_region(const AntennaConfig& c, const CognitionScenario& s);

// Converse halfspaces (nonnegativity excluded; Region2D adds it).
std::vector<Halfspace> outer_halfspaces(const AntennaConfig& c, const CognitionScenario& s);
Region2D outer_region(const AntennaConfig& c, const CognitionScenario& s);

// Closed-form sum DOF. A term whose transmitter-cognition prefactor is zero is
// dropped from the min.
int dof_formula(const AntennaConfig& c, const CognitionScenario& s);

// Sum DOF with full-duplex cooperation among all four nodes.
int dof_cooperation(const AntennaConfig& c);
// (max(M1,N2), max(M2,N1))
std::pair<int, int> dof_cooperation_upper_bounds(const AntennaConfig& c);

// Brute-force check over [0,box]^2 that
//   {a + (b - (c-d)^+)^+ <= d}  ==  {a <= d, a + b <= max(c,d)}.
// Requires box >= c + d.
bool clip_identity_holds(int c, int d, int box);

// The scenario chain [0,0,0,1] <= [0,1,0,0] == [0,1,0,1] <= [0,1,1,0] <= [1,1,0,0].
inline constexpr std::array<CognitionScenario, 5> kOrderingChain = {{
    {false, false, false, true},
    {false, true, false, false},
    {false, true, false, true},
    {false, true, true, false},
    {true, true, false, false},
}};

struct OrderingCheck {
  std::array<int, 5> eta{};
  bool eta_chain = false;
  bool region_chain = false;
  bool holds() const { return eta_chain && region_chain; }
};

OrderingCheck scenario_ordering(const AntennaConfig& c);
bool scenario_ordering_holds(const AntennaConfig& c);

// All configs with every count in 1..max_antennas, sorted.
std::vector<AntennaConfig> all_configs(int max_antennas);

}  // namespace cogdof
