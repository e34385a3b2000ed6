#include "cogdof/dof.hpp"
#include "cogdof/error.hpp"
#include "cogdof/rate_sim.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace cogdof;

namespace {

CognitionScenario scn(int t1, int t2, int r1, int r2) { return {t1 == 1, t2 == 1, r1 == 1, r2 == 1}; }

}  // namespace

TEST_SUITE("rate_sim") {

TEST_CASE("fit_line recovers an exact line") {
  const std::vector<double> x{1, 2, 3, 4, 5};
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 * v + 0.5);
  const auto f = fit_line(x, y);
  CHECK(std::abs(f.slope - 3.0) <= 1e-12 * 3.0);
  CHECK(std::abs(f.intercept - 0.5) <= 1e-12);
  const std::vector<double> same{2, 2};
  CHECK_THROWS_AS(fit_line(same, same), InvalidArgument);
}

TEST_CASE("log_grid endpoints and spacing") {
  const auto g = log_grid(1e4, 1e9, 6);
  REQUIRE(g.size() == 6);
  CHECK(g.front() == 1e4);
  CHECK(g.back() == 1e9);
  CHECK(g[2] == doctest::Approx(1e6));
}

TEST_CASE("zero power gives zero rates") {
  const AntennaConfig c{2, 2, 2, 2};
  const auto ch = sample_channel(c, 1);
  const auto s = build_scheme(c, {}, 1, 1, ch, 1);
  const auto [r1, r2] = achievable_rates(s, ch, 0.0);
  CHECK(r1 == 0.0);
  CHECK(r2 == 0.0);
  CHECK_THROWS_AS(achievable_rates(s, ch, -1.0), InvalidArgument);
}

TEST_CASE("single-antenna point-to-point rate") {
  const AntennaConfig c{1, 1, 1, 1};
  const auto ch = sample_channel(c, 6);
  const auto s = build_scheme(c, {}, 1, 0, ch, 6);
  const double rho = 100.0;
  const double g = ch.h31(0, 0) * ch.h31(0, 0);
  const auto [r1, r2] = achievable_rates(s, ch, rho);
  CHECK(r1 == doctest::Approx(std::log2(1.0 + rho * g)).epsilon(1e-12));
  CHECK(r2 == 0.0);
}

TEST_CASE("rates grow with power") {
  const AntennaConfig c{2, 2, 2, 2};
  const auto ch = sample_channel(c, 3);
  const auto s = build_scheme(c, scn(1, 1, 0, 0), 2, 2, ch, 3);
  double prev = -1.0;
  for (double rho : log_grid(1, 1e8, 9)) {
    const auto [r1, r2] = achievable_rates(s, ch, rho);
    CHECK(r1 + r2 >= prev);
    prev = r1 + r2;
  }
}

TEST_CASE("stream powers under shared streams") {
  const AntennaConfig c{2, 2, 2, 2};
  const auto ch = sample_channel(c, 4);
  const auto s = build_scheme(c, scn(0, 1, 0, 1), 1, 1, ch, 4);
  // Transmitter 2 carries both messages, so W1 takes the smaller share.
  const auto [p1, p2] = stream_powers(s, 10.0);
  CHECK(p1 == doctest::Approx(5.0));
  CHECK(p2 == doctest::Approx(5.0));
}

TEST_CASE("corrupted scheme is reported undecodable") {
  const AntennaConfig c{2, 2, 2, 1};
  const auto ch = sample_channel(c, 17);
  auto s = build_scheme(c, scn(0, 1, 0, 0), 1, 1, ch, 17);
  s.w1_vectors(0, 0) += 1e-2;
  CHECK_THROWS_AS(achievable_rates(s, ch, 1e4), Undecodable);
}

TEST_CASE("slope tracks the stream count") {
  const auto grid = log_grid(1e4, 1e9, 6);
  const auto r = simulate_rates({2, 2, 2, 2}, {}, 1, 1, grid, 10, 5);
  CHECK(r.eta == 2);
  CHECK(std::abs(r.mean.slope - 2.0) <= 0.03 * 2.0);
  CHECK(r.mean.slope <= r.eta + 0.1);
  CHECK(r.trial_slopes.size() == 10);
  CHECK(r.mean.fit_points == 5);
  double avg = 0.0;
  for (double v : r.trial_slopes) avg += v / 10.0;
  CHECK(avg == doctest::Approx(r.mean.slope).epsilon(1e-9));
}

TEST_CASE("slope never exceeds the sum DOF by more than the margin") {
  const auto grid = log_grid(1e4, 1e9, 6);
  for (const auto& c : all_configs(2)) {
    for (const auto& sc : CognitionScenario::all()) {
      const auto pts = inner_points(c, sc);
      // Largest-sum point.
      IntPoint best{0, 0};
      for (const auto& p : pts.points)
        if (p.first + p.second > best.first + best.second) best = p;
      const auto r = simulate_rates(c, sc, int(best.first), int(best.second), grid, 2, 9);
      CHECK(r.mean.slope <= dof_formula(c, sc) + 0.1);
    }
  }
}

TEST_CASE("grid validation") {
  const AntennaConfig c{1, 1, 1, 1};
  const auto ch = sample_channel(c, 1);
  const auto s = build_scheme(c, {}, 1, 0, ch, 1);
  CHECK_THROWS_AS(estimate_dof_slope(s, ch, {1e4, 1e5}), InvalidArgument);
  CHECK_THROWS_AS(estimate_dof_slope(s, ch, {1e4, 1e6, 1e5}), InvalidArgument);
  CHECK_THROWS_AS(estimate_dof_slope(s, ch, {1e2, 1e4, 1e6}), InvalidArgument);
  CHECK_THROWS_AS(estimate_dof_slope(s, ch, {1e8, 1e10, 1e12}), InvalidArgument);
  const auto sw = estimate_dof_slope(s, ch, {1e4, 1e6, 1e8});
  CHECK(sw.fit_points == 3);
  CHECK(sw.slope == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("bound_term examples") {
  CHECK(bound_term(0.0, 1.0, 1e6) == 0.0);
  CHECK(std::abs(bound_term(2.0, 2.0, 1e10) - 1.0) < 1e-3);
  double prev = 1e300;
  for (double b = 0.0; b <= 10.0; b += 0.5) {
    const double t = bound_term(3.0, b, 1e5);
    CHECK(t <= prev);
    prev = t;
  }
}

TEST_CASE("cooperation probe terms saturate") {
  const AntennaConfig c{2, 2, 2, 2};
  const auto ch = sample_channel(c, 12, true);
  const auto probe = cooperation_bound_term(ch, 1e8);
  REQUIRE(probe.per_antenna_terms.size() == 2);
  const auto& h11 = ch.link(1, 1);
  const auto& h41 = ch.link(4, 1);
  for (int j = 0; j < 2; ++j)
    CHECK(probe.per_antenna_terms[j] ==
          doctest::Approx(bound_term(h11.row(j).squaredNorm(), h41.row(j).squaredNorm(), 1e8)));

  CHECK_THROWS_AS(cooperation_bound_term(sample_channel(c, 12), 1e8), PreconditionFailed);
  CHECK_THROWS_AS(cooperation_bound_term(sample_channel({3, 1, 1, 2}, 1, true), 1e8),
                  PreconditionFailed);
}

TEST_CASE("cooperation gap check") {
  for (const AntennaConfig c : {AntennaConfig{2, 2, 2, 2}, AntennaConfig{1, 3, 3, 1}}) {
    const auto r = cooperation_dof_gap_check(c, 10, 7);
    CHECK(r.passed());
    CHECK(r.worst_slope < kBoundSlopeLimit);
    CHECK(r.max_term_slopes.size() == 10);
  }
  CHECK_THROWS_AS(cooperation_dof_gap_check({3, 1, 1, 2}, 2, 1), PreconditionFailed);
}

}  // TEST_SUITE
