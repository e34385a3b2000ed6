#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace cogdof {

// Antenna counts of an (M1, M2, N1, N2) two-user interference channel.
// Nodes 1 and 2 are the transmitters, nodes 3 and 4 the receivers.
struct AntennaConfig {
  int m1 = 1;
  int m2 = 1;
  int n1 = 1;
  int n2 = 1;

  // Antennas at node 1..4.
  int node_antennas(int node) const;
  std::string to_string() const;

  friend bool operator==(const AntennaConfig&, const AntennaConfig&) = default;
  friend auto operator<=>(const AntennaConfig&, const AntennaConfig&) = default;
};

// Which nodes hold the other user's message, labeled [T1, T2, R1, R2].
struct CognitionScenario {
  bool t1 = false;
  bool t2 = false;
  bool r1 = false;
  bool r2 = false;

  static constexpr int kCount = 16;

  // Bits read as the binary number T1 T2 R1 R2, so [0,1,0,1] is 5.
  int index() const;
  static CognitionScenario from_index(int index);
  static std::array<CognitionScenario, kCount> all();

  std::array<int, 4> bits() const { return {t1, t2, r1, r2}; }
  std::string to_string() const;

  friend bool operator==(const CognitionScenario&, const CognitionScenario&) = default;
  friend auto operator<=>(const CognitionScenario&, const CognitionScenario&) = default;
};

// Throws InvalidArgument naming the first count below one.
AntennaConfig validate_config(int m1, int m2, int n1, int n2);

// Parses "a,b,c,d" into a validated config.
AntennaConfig parse_config(const std::string& text);
// Parses a comma separated 0/1 quadruple ordered T1,T2,R1,R2.
CognitionScenario parse_scenario(const std::string& text);

// Relabels user 1 as user 2 and vice versa. An involution.
std::pair<AntennaConfig, CognitionScenario> swap_users(const AntennaConfig& config,
                                                       const CognitionScenario& scenario);

// A matrix is full rank when sigma_min > kRankTolerance * sigma_max.
inline constexpr double kRankTolerance = 1e-9;

bool is_full_rank(const Eigen::MatrixXd& m, double tolerance = kRankTolerance);

struct ChannelRealization {
  AntennaConfig config;
  Eigen::MatrixXd h31;  // N1 x M1
  Eigen::MatrixXd h32;  // N1 x M2
  Eigen::MatrixXd h41;  // N2 x M1
  Eigen::MatrixXd h42;  // N2 x M2
  // Full-duplex cooperation model: links[(i-1)*4 + (j-1)] is H^[ij], node j to
  // node i, including self links. The four interference-channel links equal
  // the matrices above.
  std::optional<std::array<Eigen::MatrixXd, 16>> extended_links;
  std::uint64_t seed = 0;

  bool extended() const { return extended_links.has_value(); }
  const Eigen::MatrixXd& link(int rx_node, int tx_node) const;

  // [H31 H32], receiver 1 seen from the whole transmit side.
  Eigen::MatrixXd rx1_stack() const;
  // [H41 H42]
  Eigen::MatrixXd rx2_stack() const;

  // Shape check against the config; does not re-test rank.
  bool matches(const AntennaConfig& c) const;
};

// Independent standard normal entries, deterministic in (config, seed,
// extended). A draw with a rank-deficient link is replaced by a draw from a
// derived seed, up to 8 attempts.
ChannelRealization sample_channel(const AntennaConfig& config, std::uint64_t seed,
                                  bool extended = false);

// SplitMix64 finalizer; used wherever a child seed is derived from a parent.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace cogdof
