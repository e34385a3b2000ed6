#include "cogdof/dof.hpp"
#include "cogdof/error.hpp"
#include "cogdof/linalg.hpp"
#include "cogdof/zf_scheme.hpp"

#include <doctest.h>

using namespace cogdof;
using Eigen::MatrixXd;

namespace {

CognitionScenario scn(int t1, int t2, int r1, int r2) { return {t1 == 1, t2 == 1, r1 == 1, r2 == 1}; }

}  // namespace

TEST_SUITE("zf_achievability") {

TEST_CASE("null_space examples") {
  MatrixXd row(1, 2);
  row << 1, 0;
  const MatrixXd k = null_space(row);
  REQUIRE(k.cols() == 1);
  CHECK(std::abs(k(0, 0)) < 1e-12);
  CHECK(std::abs(std::abs(k(1, 0)) - 1.0) < 1e-12);

  MatrixXd full(2, 2);
  full << 1, 2, 3, 4;
  CHECK(null_space(full).cols() == 0);

  const auto ch = sample_channel({4, 1, 2, 1}, 5);
  const MatrixXd h = ch.h31;  // 2 x 4
  const MatrixXd kh = null_space(h);
  REQUIRE(kh.cols() == 2);
  CHECK((h * kh).norm() < 1e-9 * h.norm());
  CHECK((kh.transpose() * kh - MatrixXd::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("rank helpers") {
  MatrixXd m(3, 2);
  m << 1, 2, 2, 4, 3, 6;
  CHECK(rank_above(m, 1e-9 * spectral_norm(m)) == 1);
  CHECK(column_basis(m, 1e-9).cols() == 1);
  CHECK(spectral_norm(MatrixXd::Identity(3, 3)) == doctest::Approx(1.0));
}

TEST_CASE("build_scheme example with cognitive transmitter 2 and receiver 2") {
  const AntennaConfig c{2, 2, 2, 2};
  const auto ch = sample_channel(c, 11);
  const auto s = build_scheme(c, scn(0, 1, 0, 1), 1, 1, ch, 3);
  CHECK(s.r1 == 2);
  CHECK(s.r2 == 0);
  CHECK(s.w1_vectors.rows() == 4);
  CHECK(s.w1_vectors.cols() == 1);
  CHECK(s.w2_vectors.rows() == 2);
  CHECK(s.w2_vectors.cols() == 1);

  const auto d = verify_scheme(s, ch);
  CHECK(d.signal_dim_rx1 == 1);
  CHECK(d.interference_dim_rx1 == 1);
  CHECK(d.intersection_dim_rx1 == 0);
  CHECK(d.signal_dim_rx2 == 1);
  CHECK(d.interference_dim_rx2 == 0);
  CHECK(d.passed());
}

TEST_CASE("single-antenna time-sharing corner") {
  const AntennaConfig c{1, 1, 1, 1};
  const auto ch = sample_channel(c, 1);
  const auto s = build_scheme(c, {}, 1, 0, ch, 1);
  CHECK(s.w1_vectors.cols() == 1);
  CHECK(s.w2_vectors.cols() == 0);
  CHECK(verify_scheme(s, ch).passed());
}

TEST_CASE("points outside the achievable set are rejected") {
  const AntennaConfig c{2, 2, 2, 2};
  const auto ch = sample_channel(c, 2);
  CHECK_THROWS_AS(build_scheme(c, {}, 2, 1, ch, 0), NotAchievable);
  CHECK_THROWS_AS(build_scheme(c, {}, -1, 0, ch, 0), NotAchievable);
  CHECK_THROWS_AS(build_scheme({3, 2, 2, 2}, {}, 1, 0, ch, 0), InvalidArgument);
}

TEST_CASE("nulled vectors are annihilated by the cross channel") {
  // Cross channel recomputed here from the raw blocks.
  const AntennaConfig c{3, 1, 2, 1};
  const CognitionScenario sc = scn(0, 1, 0, 0);
  const auto ch = sample_channel(c, 21);
  const auto s = build_scheme(c, sc, 1, 1, ch, 4);
  REQUIRE(s.w1_nulled >= 1);
  MatrixXd cross(1, 4);
  cross << ch.h41, ch.h42;
  for (int k = 0; k < s.w1_nulled; ++k)
    CHECK((cross * s.w1_vectors.col(k)).norm() <= 1e-9 * cross.norm());
  for (int k = 0; k < s.w1_vectors.cols(); ++k)
    CHECK(s.w1_vectors.col(k).norm() == doctest::Approx(1.0));
}

TEST_CASE("a zero stream count is vacuous") {
  const AntennaConfig c{2, 3, 3, 2};
  const auto ch = sample_channel(c, 8);
  const auto s = build_scheme(c, scn(1, 0, 1, 0), 0, 2, ch, 8);
  CHECK(s.w1_vectors.cols() == 0);
  const auto d = verify_scheme(s, ch);
  CHECK(d.signal_dim_rx1 == 0);
  CHECK(d.decodable_w1);
  CHECK(d.passed());
}

TEST_CASE("corrupting a nulled vector is detected") {
  const AntennaConfig c{2, 2, 2, 1};
  const auto ch = sample_channel(c, 17);
  auto s = build_scheme(c, scn(0, 1, 0, 0), 1, 1, ch, 17);
  REQUIRE(s.w1_nulled == 1);
  REQUIRE(verify_scheme(s, ch).passed());
  s.w1_vectors(0, 0) += 1e-2;
  s.w1_vectors.col(0).normalize();
  const auto d = verify_scheme(s, ch);
  CHECK(d.worst_null_residual > 1e-9);
  CHECK_FALSE(d.decodable_w2);
  CHECK_FALSE(d.passed());
}

TEST_CASE("verify_scheme passes at every achievable point of small configs") {
  for (const auto& c : all_configs(2)) {
    for (const auto& sc : CognitionScenario::all()) {
      const auto pts = inner_points(c, sc);
      for (const auto& [d1, d2] : pts.points) {
        const auto cell = achieve_point(c, sc, int(d1), int(d2), 3, 77);
        REQUIRE(cell.passes == cell.trials);
      }
    }
  }
}

TEST_CASE("achievability sweep at one antenna") {
  const auto r = achievability_sweep(1, 5, 1);
  CHECK(r.all_passed());
  long long expected_cells = 0;
  for (const auto& sc : CognitionScenario::all())
    expected_cells += static_cast<long long>(inner_points({1, 1, 1, 1}, sc).points.size());
  CHECK(static_cast<long long>(r.cells.size()) == expected_cells);
  CHECK(r.trials() == 5 * expected_cells);
  CHECK(achievability_sweep(2, 0, 1).cells.empty());
}

TEST_CASE("sweeps are deterministic for a fixed seed") {
  const auto a = achieve_point({2, 2, 2, 2}, scn(0, 1, 0, 1), 1, 1, 10, 42);
  const auto b = achieve_point({2, 2, 2, 2}, scn(0, 1, 0, 1), 1, 1, 10, 42);
  CHECK(a.passes == b.passes);
  CHECK(a.worst_null_residual == b.worst_null_residual);

  const auto ch = sample_channel({3, 3, 3, 3}, 9);
  const auto s1 = build_scheme({3, 3, 3, 3}, {}, 2, 1, ch, 9);
  const auto s2 = build_scheme({3, 3, 3, 3}, {}, 2, 1, ch, 9);
  CHECK(s1.w1_vectors == s2.w1_vectors);
  CHECK(s1.w2_vectors == s2.w2_vectors);
}

}  // TEST_SUITE
