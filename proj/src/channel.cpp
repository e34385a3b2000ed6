#include "cogdof/channel.hpp"

#include "cogdof/error.hpp"

#include <random>
#include <sstream>
#include <vector>

namespace cogdof {

int AntennaConfig::node_antennas(int node) const {
  switch (node) {
    case 1: return m1;
    case 2: return m2;
    case 3: return n1;
    case 4: return n2;
  }
  throw InvalidArgument("node index must be in 1..4, got " + std::to_string(node));
}

std::string AntennaConfig::to_string() const {
  std::ostringstream os;
  os << "(" << m1 << "," << m2 << "," << n1 << "," << n2 << ")";
  return os.str();
}

int CognitionScenario::index() const { return t1 * 8 + t2 * 4 + r1 * 2 + r2; }

CognitionScenario CognitionScenario::from_index(int index) {
  if (index < 0 || index >= kCount)
    throw InvalidArgument("scenario index must be in 0..15, got " + std::to_string(index));
  return {(index & 8) != 0, (index & 4) != 0, (index & 2) != 0, (index & 1) != 0};
}

std::array<CognitionScenario, CognitionScenario::kCount> CognitionScenario::all() {
  std::array<CognitionScenario, kCount> out;
  for (int i = 0; i < kCount; ++i) out[i] = from_index(i);
  return out;
}

std::string CognitionScenario::to_string() const {
  std::ostringstream os;
  os << "[" << t1 << "," << t2 << "," << r1 << "," << r2 << "]";
  return os.str();
}

AntennaConfig validate_config(int m1, int m2, int n1, int n2) {
  const std::pair<const char*, int> fields[] = {{"m1", m1}, {"m2", m2}, {"n1", n1}, {"n2", n2}};
  for (const auto& [name, value] : fields) {
    if (value < 1)
      throw InvalidArgument(std::string("antenna count ") + name + " must be >= 1, got " +
                            std::to_string(value));
  }
  return {m1, m2, n1, n2};
}

namespace {

std::vector<long long> split_ints(const std::string& text, std::size_t expected, const char* what) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("malformed ") + what + " '" + text + "'");
    }
  }
  if (out.size() != expected)
    throw InvalidArgument(std::string(what) + " needs " + std::to_string(expected) +
                          " comma separated values, got '" + text + "'");
  return out;
}

}  // namespace

AntennaConfig parse_config(const std::string& text) {
  auto v = split_ints(text, 4, "config");
  for (auto x : v)
    if (x > 1'000'000 || x < -1'000'000) throw InvalidArgument("antenna count out of range in '" + text + "'");
  return validate_config(int(v[0]), int(v[1]), int(v[2]), int(v[3]));
}

CognitionScenario parse_scenario(const std::string& text) {
  auto v = split_ints(text, 4, "scenario");
  for (auto x : v)
    if (x != 0 && x != 1) throw InvalidArgument("scenario entries must be 0 or 1, got '" + text + "'");
  return {v[0] == 1, v[1] == 1, v[2] == 1, v[3] == 1};
}

std::pair<AntennaConfig, CognitionScenario> swap_users(const AntennaConfig& c,
                                                       const CognitionScenario& s) {
  return {{c.m2, c.m1, c.n2, c.n1}, {s.t2, s.t1, s.r2, s.r1}};
}

bool is_full_rank(const Eigen::MatrixXd& m, double tolerance) {
  if (m.size() == 0) return true;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return false;
  return sv(sv.size() - 1) > tolerance * sv(0);
}

const Eigen::MatrixXd& ChannelRealization::link(int rx_node, int tx_node) const {
  if (rx_node < 1 || rx_node > 4 || tx_node < 1 || tx_node > 4)
    throw InvalidArgument("link node indices must be in 1..4");
  if (extended_links) return (*extended_links)[(rx_node - 1) * 4 + (tx_node - 1)];
  if (rx_node == 3 && tx_node == 1) return h31;
  if (rx_node == 3 && tx_node == 2) return h32;
  if (rx_node == 4 && tx_node == 1) return h41;
  if (rx_node == 4 && tx_node == 2) return h42;
  throw PreconditionFailed("link H^[" + std::to_string(rx_node) + std::to_string(tx_node) +
                           "] needs an extended channel realization");
}

Eigen::MatrixXd ChannelRealization::rx1_stack() const {
  Eigen::MatrixXd out(h31.rows(), h31.cols() + h32.cols());
  out << h31, h32;
  return out;
}

Eigen::MatrixXd ChannelRealization::rx2_stack() const {
  Eigen::MatrixXd out(h41.rows(), h41.cols() + h42.cols());
  out << h41, h42;
  return out;
}

bool ChannelRealization::matches(const AntennaConfig& c) const {
  auto shape = [](const Eigen::MatrixXd& m, int r, int k) { return m.rows() == r && m.cols() == k; };
  if (!(config == c && shape(h31, c.n1, c.m1) && shape(h32, c.n1, c.m2) && shape(h41, c.n2, c.m1) &&
        shape(h42, c.n2, c.m2)))
    return false;
  if (extended_links) {
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        if (!shape(link(i, j), c.node_antennas(i), c.node_antennas(j))) return false;
  }
  return true;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

Eigen::MatrixXd gaussian_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd m(rows, cols);
  // Row-major fill so the draw order does not depend on Eigen's storage.
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = normal(rng);
  return m;
}

constexpr int kMaxAttempts = 8;

}  // namespace

ChannelRealization sample_channel(const AntennaConfig& config, std::uint64_t seed, bool extended) {
  validate_config(config.m1, config.m2, config.n1, config.n2);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::mt19937_64 rng(attempt == 0 ? seed : mix_seed(seed, attempt));
    ChannelRealization ch;
    ch.config = config;
    ch.seed = seed;
    ch.h31 = gaussian_matrix(rng, config.n1, config.m1);
    ch.h32 = gaussian_matrix(rng, config.n1, config.m2);
    ch.h41 = gaussian_matrix(rng, config.n2, config.m1);
    ch.h42 = gaussian_matrix(rng, config.n2, config.m2);
    bool ok = is_full_rank(ch.h31) && is_full_rank(ch.h32) && is_full_rank(ch.h41) &&
              is_full_rank(ch.h42);
    if (extended) {
      std::array<Eigen::MatrixXd, 16> links;
      for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
          auto& slot = links[(i - 1) * 4 + (j - 1)];
          if (i == 3 && j == 1) slot = ch.h31;
          else if (i == 3 && j == 2) slot = ch.h32;
          else if (i == 4 && j == 1) slot = ch.h41;
          else if (i == 4 && j == 2) slot = ch.h42;
          else {
            slot = gaussian_matrix(rng, config.node_antennas(i), config.node_antennas(j));
            ok = ok && is_full_rank(slot);
          }
        }
      }
      ch.extended_links = std::move(links);
    }
    if (ok) return ch;
  }
  throw DegenerateChannel("no full-rank channel after " + std::to_string(kMaxAttempts) +
                          " draws from seed " + std::to_string(seed));
}

}  // namespace cogdof
