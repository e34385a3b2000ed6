#include "cogdof/zf_scheme.hpp"

#include "cogdof/dof.hpp"
#include "cogdof/error.hpp"
#include "cogdof/linalg.hpp"
#include "cogdof/parallel.hpp"

#include <algorithm>
#include <random>

namespace cogdof {

namespace {

Eigen::MatrixXd normalize_columns(Eigen::MatrixXd m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) m.col(c).normalize();
  return m;
}

Eigen::MatrixXd gaussian(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = normal(rng);
  return m;
}

// d unit vectors in a space of dimension `dim`: up to `nullable` of them drawn
// from ker(cross) when nulling applies, the remainder isotropic.
Eigen::MatrixXd draw_vectors(std::mt19937_64& rng, int dim, int d, bool null_at_cross,
                             const Eigen::MatrixXd& cross, int& nulled) {
  Eigen::MatrixXd out(dim, d);
  nulled = 0;
  if (d == 0) return out;
  if (null_at_cross) {
    const Eigen::MatrixXd kernel = null_space(cross);
    nulled = std::min<int>(d, static_cast<int>(kernel.cols()));
    if (nulled > 0)
      out.leftCols(nulled) = normalize_columns(kernel * gaussian(rng, kernel.cols(), nulled));
  }
  if (d > nulled) out.rightCols(d - nulled) = normalize_columns(gaussian(rng, dim, d - nulled));
  return out;
}

double null_residual(const Eigen::MatrixXd& cross, const Eigen::MatrixXd& vectors, int count) {
  const double norm = spectral_norm(cross);
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    const double denom = norm * vectors.col(i).norm();
    if (denom > 0) worst = std::max(worst, (cross * vectors.col(i)).norm() / denom);
  }
  return worst;
}

struct ReceiverDims {
  int signal = 0;
  int interference = 0;
  int intersection = 0;
};

ReceiverDims receiver_dims(const Eigen::MatrixXd& h_rx, const Eigen::MatrixXd& signal_tx,
                           const Eigen::MatrixXd& interference_tx, bool cognitive) {
  const double threshold = kRankTolerance * spectral_norm(h_rx);
  const Eigen::MatrixXd s = h_rx * signal_tx;
  ReceiverDims dims;
  dims.signal = rank_above(s, threshold);
  if (cognitive || interference_tx.cols() == 0) return dims;
  const Eigen::MatrixXd i = h_rx * interference_tx;
  dims.interference = rank_above(i, threshold);
  Eigen::MatrixXd joint(s.rows(), s.cols() + i.cols());
  joint << s, i;
  dims.intersection = dims.signal + dims.interference - rank_above(joint, threshold);
  return dims;
}

}  // namespace

Eigen::MatrixXd ZfScheme::embedded_w1() const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(config.m1 + config.m2, d1);
  out.topRows(w1_vectors.rows()) = w1_vectors;
  return out;
}

Eigen::MatrixXd ZfScheme::embedded_w2() const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(config.m1 + config.m2, d2);
  out.bottomRows(w2_vectors.rows()) = w2_vectors;
  return out;
}

int ZfScheme::streams_at_tx1() const { return d1 + (scenario.t1 ? d2 : 0); }
int ZfScheme::streams_at_tx2() const { return d2 + (scenario.t2 ? d1 : 0); }

ZfScheme build_scheme(const AntennaConfig& config, const CognitionScenario& scenario, int d1,
                      int d2, const ChannelRealization& channel, std::uint64_t seed) {
  if (!channel.matches(config))
    throw InvalidArgument("channel realization was drawn for config " + channel.config.to_string() +
                          ", not " + config.to_string());
  if (!in_achievable_set(config, scenario, d1, d2))
    throw NotAchievable("point (" + std::to_string(d1) + "," + std::to_string(d2) +
                        ") is not in the achievable set for config " + config.to_string() +
                        " scenario " + scenario.to_string());

  ZfScheme scheme;
  scheme.config = config;
  scheme.scenario = scenario;
  scheme.d1 = d1;
  scheme.d2 = d2;
  scheme.r1 = w1_nullable_streams(config, scenario);
  scheme.r2 = w2_nullable_streams(config, scenario);
  scheme.seed = seed;

  std::mt19937_64 rng(seed);
  const Eigen::MatrixXd cross_w1 = scenario.t2 ? channel.rx2_stack() : channel.h41;
  const Eigen::MatrixXd cross_w2 = scenario.t1 ? channel.rx1_stack() : channel.h32;
  scheme.w1_vectors = draw_vectors(rng, w1_transmit_dim(config, scenario), d1, !scenario.r2,
                                   cross_w1, scheme.w1_nulled);
  scheme.w2_vectors = draw_vectors(rng, w2_transmit_dim(config, scenario), d2, !scenario.r1,
                                   cross_w2, scheme.w2_nulled);
  return scheme;
}

SchemeDiagnostics verify_scheme(const ZfScheme& scheme, const ChannelRealization& channel) {
  if (!channel.matches(scheme.config))
    throw InvalidArgument("scheme and channel disagree on the antenna config");
  const auto& c = scheme.config;
  const auto& s = scheme.scenario;
  const Eigen::MatrixXd e1 = scheme.embedded_w1();
  const Eigen::MatrixXd e2 = scheme.embedded_w2();
  const Eigen::MatrixXd h_rx1 = channel.rx1_stack();
  const Eigen::MatrixXd h_rx2 = channel.rx2_stack();

  SchemeDiagnostics diag;
  const auto rx1 = receiver_dims(h_rx1, e1, e2, s.r1);
  const auto rx2 = receiver_dims(h_rx2, e2, e1, s.r2);
  diag.signal_dim_rx1 = rx1.signal;
  diag.interference_dim_rx1 = rx1.interference;
  diag.intersection_dim_rx1 = rx1.intersection;
  diag.signal_dim_rx2 = rx2.signal;
  diag.interference_dim_rx2 = rx2.interference;
  diag.intersection_dim_rx2 = rx2.intersection;
  diag.decodable_w1 = rx1.signal == scheme.d1 && rx1.intersection == 0 &&
                      rx1.signal + rx1.interference <= c.n1;
  diag.decodable_w2 = rx2.signal == scheme.d2 && rx2.intersection == 0 &&
                      rx2.signal + rx2.interference <= c.n2;

  // Residuals against the full cross channel, with vectors embedded.
  diag.worst_null_residual = std::max(null_residual(h_rx2, e1, scheme.w1_nulled),
                                      null_residual(h_rx1, e2, scheme.w2_nulled));

  Eigen::MatrixXd all(e1.rows(), e1.cols() + e2.cols());
  all << e1, e2;
  diag.transmit_rank = rank_above(all, kRankTolerance);
  diag.transmit_independent = diag.transmit_rank == scheme.d1 + scheme.d2;
  return diag;
}

long long AchievabilityReport::trials() const {
  long long n = 0;
  for (const auto& c : cells) n += c.trials;
  return n;
}

long long AchievabilityReport::passes() const {
  long long n = 0;
  for (const auto& c : cells) n += c.passes;
  return n;
}

SweepCell achieve_point(const AntennaConfig& config, const CognitionScenario& scenario, int d1,
                        int d2, int trials, std::uint64_t seed) {
  if (trials < 0) throw InvalidArgument("trials must be >= 0");
  if (!in_achievable_set(config, scenario, d1, d2))
    throw NotAchievable("point (" + std::to_string(d1) + "," + std::to_string(d2) +
                        ") is not in the achievable set for config " + config.to_string() +
                        " scenario " + scenario.to_string());
  SweepCell cell{config, scenario, d1, d2, trials, 0, 0.0};
  for (int t = 0; t < trials; ++t) {
    const auto channel = sample_channel(config, mix_seed(seed, 2 * std::uint64_t(t)));
    const auto scheme = build_scheme(config, scenario, d1, d2, channel, mix_seed(seed, 2 * std::uint64_t(t) + 1));
    const auto diag = verify_scheme(scheme, channel);
    cell.worst_null_residual = std::max(cell.worst_null_residual, diag.worst_null_residual);
    if (diag.passed()) ++cell.passes;
  }
  return cell;
}

AchievabilityReport achievability_sweep(int max_antennas, int trials, std::uint64_t seed) {
  if (max_antennas < 1) throw InvalidArgument("max antennas must be >= 1");
  if (trials < 0) throw InvalidArgument("trials must be >= 0");
  AchievabilityReport report;
  if (trials == 0) return report;

  struct Job {
    AntennaConfig config;
    CognitionScenario scenario;
  };
  std::vector<Job> jobs;
  for (const auto& c : all_configs(max_antennas))
    for (const auto& s : CognitionScenario::all()) jobs.push_back({c, s});

  std::vector<std::vector<SweepCell>> results(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t k) {
    const auto& [c, s] = jobs[k];
    const std::uint64_t job_seed = mix_seed(seed, k);
    for (const auto& [d1, d2] : inner_points(c, s).points) {
      const auto point_seed = mix_seed(job_seed, std::uint64_t(d1) * 1024 + std::uint64_t(d2));
      results[k].push_back(achieve_point(c, s, int(d1), int(d2), trials, point_seed));
    }
  });
  for (auto& r : results) report.cells.insert(report.cells.end(), r.begin(), r.end());
  return report;
}

}  // namespace cogdof
