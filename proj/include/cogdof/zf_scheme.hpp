#pragma once

#include "cogdof/channel.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace cogdof {

// Zero-forcing transmit plan for an integer DOF point.
//
// W1 is sent from transmitter 1, and also from transmitter 2 when that one is
// cognitive; its vectors live in that stacked space of dimension
// M1 + [T2]*M2. When receiver 2 is not cognitive, the first w1_nulled vectors
// lie in the kernel of the cross channel toward receiver 2; the rest are
// isotropic. W2 mirrors this against receiver 1.
struct ZfScheme {
  AntennaConfig config;
  CognitionScenario scenario;
  int d1 = 0;
  int d2 = 0;
  int r1 = 0;  // (M1 + [T2]M2 - N2)^+
  int r2 = 0;  // ([T1]M1 + M2 - N1)^+
  int w1_nulled = 0;
  int w2_nulled = 0;
  Eigen::MatrixXd w1_vectors;  // (M1 + [T2]M2) x d1, unit columns
  Eigen::MatrixXd w2_vectors;  // ([T1]M1 + M2) x d2, unit columns
  std::uint64_t seed = 0;

  // Vectors placed in the full R^(M1+M2) transmit space (zeros on a
  // transmitter that does not carry the message).
  Eigen::MatrixXd embedded_w1() const;
  Eigen::MatrixXd embedded_w2() const;

  // Streams each transmitter carries, counting shared messages.
  int streams_at_tx1() const;
  int streams_at_tx2() const;
};

struct SchemeDiagnostics {
  int signal_dim_rx1 = 0;
  int interference_dim_rx1 = 0;
  int intersection_dim_rx1 = 0;
  int signal_dim_rx2 = 0;
  int interference_dim_rx2 = 0;
  int intersection_dim_rx2 = 0;
  bool decodable_w1 = false;
  bool decodable_w2 = false;
  // Largest ||H_cross v|| / (||H_cross|| ||v||) over the nulled vectors.
  double worst_null_residual = 0.0;
  int transmit_rank = 0;
  bool transmit_independent = false;

  bool passed(double residual_limit = 1e-9) const {
    return decodable_w1 && decodable_w2 && transmit_independent &&
           worst_null_residual <= residual_limit;
  }
};

// Throws NotAchievable for a point outside the achievable set and
// InvalidArgument when the channel was drawn for another config.
ZfScheme build_scheme(const AntennaConfig& config, const CognitionScenario& scenario, int d1,
                      int d2, const ChannelRealization& channel, std::uint64_t seed);

SchemeDiagnostics verify_scheme(const ZfScheme& scheme, const ChannelRealization& channel);

struct SweepCell {
  AntennaConfig config;
  CognitionScenario scenario;
  int d1 = 0;
  int d2 = 0;
  int trials = 0;
  int passes = 0;
  double worst_null_residual = 0.0;
};

struct AchievabilityReport {
  std::vector<SweepCell> cells;  // sorted by config, scenario, point

  long long trials() const;
  long long passes() const;
  bool all_passed() const { return trials() == passes(); }
};

// `trials` random channels for one point.
SweepCell achieve_point(const AntennaConfig& config, const CognitionScenario& scenario, int d1,
                        int d2, int trials, std::uint64_t seed);

// Every config with counts in 1..max_antennas, every scenario and every
// achievable integer point. trials == 0 gives an empty report.
AchievabilityReport achievability_sweep(int max_antennas, int trials, std::uint64_t seed);

}  // namespace cogdof
