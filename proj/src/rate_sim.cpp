#include "cogdof/rate_sim.hpp"

#include "cogdof/dof.hpp"
#include "cogdof/error.hpp"
#include "cogdof/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cogdof {

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw InvalidArgument("line fit needs >= 2 paired samples");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw InvalidArgument("line fit needs two distinct abscissae");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0) || !(hi > lo) || points < 2)
    throw InvalidArgument("log grid needs 0 < lo < hi and at least 2 points");
  std::vector<double> grid(points);
  const double a = std::log10(lo), b = std::log10(hi);
  for (int i = 0; i < points; ++i) grid[i] = std::pow(10.0, a + (b - a) * i / (points - 1));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::pair<double, double> stream_powers(const ZfScheme& scheme, double rho) {
  const int n1 = scheme.streams_at_tx1();
  const int n2 = scheme.streams_at_tx2();
  const double share1 = n1 > 0 ? rho / n1 : 0.0;
  const double share2 = n2 > 0 ? rho / n2 : 0.0;
  const double p1 = scheme.scenario.t2 ? std::min(share1, share2) : share1;
  const double p2 = scheme.scenario.t1 ? std::min(share1, share2) : share2;
  return {p1, p2};
}

namespace {

double projected_rate(const Eigen::MatrixXd& h_rx, const Eigen::MatrixXd& signal_tx,
                      const Eigen::MatrixXd& interference_tx, bool cognitive, double power) {
  if (signal_tx.cols() == 0 || power <= 0.0) return 0.0;
  Eigen::MatrixXd s = h_rx * signal_tx;
  if (!cognitive && interference_tx.cols() > 0) {
    const double threshold = kRankTolerance * spectral_norm(h_rx);
    const Eigen::MatrixXd q = column_basis(h_rx * interference_tx, threshold);
    s -= q * (q.transpose() * s);
  }
  const Eigen::MatrixXd gram = power * (s.transpose() * s);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram, Eigen::EigenvaluesOnly);
  double rate = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i)
    rate += std::log2(1.0 + std::max(0.0, eig.eigenvalues()(i)));
  return rate;
}

}  // namespace

std::pair<double, double> achievable_rates(const ZfScheme& scheme, const ChannelRealization& channel,
                                           double rho) {
  if (!(rho >= 0.0) || !std::isfinite(rho)) throw InvalidArgument("rho must be finite and >= 0");
  const auto diag = verify_scheme(scheme, channel);
  if (!diag.decodable_w1 || !diag.decodable_w2)
    throw Undecodable(std::string("scheme is not decodable at receiver ") +
                      (diag.decodable_w1 ? "2" : "1"));
  const auto [p1, p2] = stream_powers(scheme, rho);
  const Eigen::MatrixXd e1 = scheme.embedded_w1();
  const Eigen::MatrixXd e2 = scheme.embedded_w2();
  return {projected_rate(channel.rx1_stack(), e1, e2, scheme.scenario.r1, p1),
          projected_rate(channel.rx2_stack(), e2, e1, scheme.scenario.r2, p2)};
}

std::vector<double> RateSweep::sum_rates() const {
  std::vector<double> out(rho_grid.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = r1_rates[i] + r2_rates[i];
  return out;
}

namespace {

void check_grid(const std::vector<double>& grid) {
  if (grid.size() < 3) throw InvalidArgument("rho grid needs at least 3 points");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < kMinSlopeRho * (1 - 1e-12) || grid[i] > kMaxSlopeRho * (1 + 1e-12))
      throw InvalidArgument("rho grid must lie within [1e4, 1e10]");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw InvalidArgument("rho grid must be strictly increasing");
  }
}

}  // namespace

void refit(RateSweep& sweep, int fit_points) {
  if (fit_points < 2) throw InvalidArgument("slope fit needs at least 2 points");
  const std::size_t n = sweep.rho_grid.size();
  const std::size_t used = std::min<std::size_t>(n, fit_points);
  std::vector<double> x, y;
  const auto sums = sweep.sum_rates();
  for (std::size_t i = n - used; i < n; ++i) {
    x.push_back(std::log2(sweep.rho_grid[i]));
    y.push_back(sums[i]);
  }
  const auto fit = fit_line(x, y);
  sweep.slope = fit.slope;
  sweep.intercept = fit.intercept;
  sweep.fit_points = static_cast<int>(used);
}

RateSweep estimate_dof_slope(const ZfScheme& scheme, const ChannelRealization& channel,
                             const std::vector<double>& rho_grid, int fit_points) {
  check_grid(rho_grid);
  RateSweep sweep;
  sweep.rho_grid = rho_grid;
  for (double rho : rho_grid) {
    const auto [r1, r2] = achievable_rates(scheme, channel, rho);
    sweep.r1_rates.push_back(r1);
    sweep.r2_rates.push_back(r2);
  }
  refit(sweep, fit_points);
  return sweep;
}

SimulationResult simulate_rates(const AntennaConfig& config, const CognitionScenario& scenario,
                                int d1, int d2, const std::vector<double>& rho_grid, int trials,
                                std::uint64_t seed, int fit_points) {
  if (trials < 1) throw InvalidArgument("simulation needs at least one trial");
  check_grid(rho_grid);
  SimulationResult result;
  result.config = config;
  result.scenario = scenario;
  result.d1 = d1;
  result.d2 = d2;
  result.trials = trials;
  result.eta = dof_formula(config, scenario);
  result.mean.rho_grid = rho_grid;
  result.mean.r1_rates.assign(rho_grid.size(), 0.0);
  result.mean.r2_rates.assign(rho_grid.size(), 0.0);
  for (int t = 0; t < trials; ++t) {
    const auto channel = sample_channel(config, mix_seed(seed, 2 * std::uint64_t(t)));
    const auto scheme = build_scheme(config, scenario, d1, d2, channel, mix_seed(seed, 2 * std::uint64_t(t) + 1));
    const auto sweep = estimate_dof_slope(scheme, channel, rho_grid, fit_points);
    result.trial_slopes.push_back(sweep.slope);
    for (std::size_t i = 0; i < rho_grid.size(); ++i) {
      result.mean.r1_rates[i] += sweep.r1_rates[i] / trials;
      result.mean.r2_rates[i] += sweep.r2_rates[i] / trials;
    }
  }
  refit(result.mean, fit_points);
  return result;
}

double bound_term(double h11_norm_sq, double h41_norm_sq, double rho) {
  return std::log2(1.0 + h11_norm_sq * rho / (1.0 + h41_norm_sq * rho));
}

CooperationBoundProbe cooperation_bound_term(const ChannelRealization& channel, double rho) {
  if (!channel.extended())
    throw PreconditionFailed("the cooperation bound needs an extended (full-duplex) channel");
  const auto& c = channel.config;
  if (c.n2 < c.m1)
    throw PreconditionFailed("the cooperation bound requires N2 >= M1, got N2=" + std::to_string(c.n2) +
                             " M1=" + std::to_string(c.m1));
  if (!(rho > 0.0)) throw InvalidArgument("rho must be > 0");
  const Eigen::MatrixXd& h11 = channel.link(1, 1);
  const Eigen::MatrixXd& h41 = channel.link(4, 1);
  CooperationBoundProbe probe;
  probe.rho = rho;
  for (int j = 0; j < c.m1; ++j)
    probe.per_antenna_terms.push_back(bound_term(h11.row(j).squaredNorm(), h41.row(j).squaredNorm(), rho));
  return probe;
}

CooperationGapReport cooperation_dof_gap_check(const AntennaConfig& config, int trials,
                                               std::uint64_t seed, std::vector<double> rho_grid) {
  if (config.n2 < config.m1)
    throw PreconditionFailed("the cooperation bound requires N2 >= M1, got N2=" +
                             std::to_string(config.n2) + " M1=" + std::to_string(config.m1));
  if (trials < 0) throw InvalidArgument("trials must be >= 0");
  if (rho_grid.empty()) rho_grid = {1e6, 1e7, 1e8, 1e9, 1e10};
  if (rho_grid.size() < 2) throw InvalidArgument("bound slope needs at least 2 rho values");

  CooperationGapReport report;
  report.config = config;
  report.trials = trials;
  report.rho_grid = rho_grid;
  report.dof_cooperation = dof_cooperation(config);
  report.upper_bounds = dof_cooperation_upper_bounds(config);
  report.ceiling_holds = report.dof_cooperation <= report.upper_bounds.first &&
                         report.dof_cooperation <= report.upper_bounds.second;

  for (int t = 0; t < trials; ++t) {
    const auto channel = sample_channel(config, mix_seed(seed, std::uint64_t(t)), true);
    std::vector<CooperationBoundProbe> probes;
    for (double rho : rho_grid) probes.push_back(cooperation_bound_term(channel, rho));
    std::vector<double> worst(config.m1, 0.0);
    for (std::size_t k = 1; k < rho_grid.size(); ++k) {
      const double dx = std::log2(rho_grid[k]) - std::log2(rho_grid[k - 1]);
      for (int j = 0; j < config.m1; ++j) {
        const double dy = probes[k].per_antenna_terms[j] - probes[k - 1].per_antenna_terms[j];
        worst[j] = std::max(worst[j], std::abs(dy / dx));
      }
    }
    report.worst_slope = std::max(report.worst_slope, *std::max_element(worst.begin(), worst.end()));
    report.max_term_slopes.push_back(std::move(worst));
  }
  return report;
}

}  // namespace cogdof
