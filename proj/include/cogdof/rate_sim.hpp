#pragma once

#include "cogdof/channel.hpp"
#include "cogdof/zf_scheme.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cogdof {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

// Ordinary least squares y = slope * x + intercept. Needs two distinct x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

// `points` logarithmically spaced values from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int points);

// Per-stream transmit power under the per-node budget rho: each node splits
// rho equally over the streams it carries, and a stream sent from both
// transmitters takes the smaller share.
std::pair<double, double> stream_powers(const ZfScheme& scheme, double rho);

// Rates in bits per channel use of W1 and W2 after projecting away the
// residual interference at each receiver; unit noise variance. Throws
// Undecodable when the scheme does not verify on this channel.
std::pair<double, double> achievable_rates(const ZfScheme& scheme, const ChannelRealization& channel,
                                           double rho);

inline constexpr int kDefaultFitPoints = 5;
inline constexpr double kMinSlopeRho = 1e4;
inline constexpr double kMaxSlopeRho = 1e10;

struct RateSweep {
  std::vector<double> rho_grid;
  std::vector<double> r1_rates;
  std::vector<double> r2_rates;
  double slope = 0.0;
  double intercept = 0.0;
  int fit_points = 0;

  std::vector<double> sum_rates() const;
};

// Fits R1 + R2 against log2(rho) over the highest `fit_points` grid entries
// (all of them when the grid is shorter). The grid must be strictly
// increasing, have at least 3 points and lie within [1e4, 1e10].
RateSweep estimate_dof_slope(const ZfScheme& scheme, const ChannelRealization& channel,
                             const std::vector<double>& rho_grid, int fit_points = kDefaultFitPoints);

// Refits an averaged sweep; used after summing per-channel rates.
void refit(RateSweep& sweep, int fit_points = kDefaultFitPoints);

struct SimulationResult {
  AntennaConfig config;
  CognitionScenario scenario;
  int d1 = 0;
  int d2 = 0;
  int trials = 0;
  int eta = 0;
  RateSweep mean;                   // rates averaged over channels, refit
  std::vector<double> trial_slopes;  // one per channel
};

// Builds the zero-forcing scheme on `trials` random channels and averages the
// rates per grid point. The mean slope equals the mean of per-trial slopes.
SimulationResult simulate_rates(const AntennaConfig& config, const CognitionScenario& scenario,
                                int d1, int d2, const std::vector<double>& rho_grid, int trials,
                                std::uint64_t seed, int fit_points = kDefaultFitPoints);

// log2(1 + a*rho / (1 + b*rho)) with a = ||h11_j||^2 and b = ||h41_j||^2.
double bound_term(double h11_norm_sq, double h41_norm_sq, double rho);

struct CooperationBoundProbe {
  std::vector<double> per_antenna_terms;  // j = 1..M1
  double rho = 0.0;
};

// Needs an extended channel and N2 >= M1; throws PreconditionFailed otherwise.
CooperationBoundProbe cooperation_bound_term(const ChannelRealization& channel, double rho);

inline constexpr double kBoundSlopeLimit = 0.01;

struct CooperationGapReport {
  AntennaConfig config;
  int trials = 0;
  std::vector<double> rho_grid;
  // [trial][antenna] largest |finite-difference slope| against log2(rho).
  std::vector<std::vector<double>> max_term_slopes;
  double worst_slope = 0.0;
  int dof_cooperation = 0;
  std::pair<int, int> upper_bounds;
  bool ceiling_holds = false;

  bool slopes_bounded() const { return worst_slope < kBoundSlopeLimit; }
  bool passed() const { return slopes_bounded() && ceiling_holds; }
};

// Default grid 1e6, 1e7, ..., 1e10.
CooperationGapReport cooperation_dof_gap_check(const AntennaConfig& config, int trials,
                                               std::uint64_t seed,
                                               std::vector<double> rho_grid = {});

}  // namespace cogdof
