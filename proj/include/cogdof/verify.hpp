#pragma once

#include <string>
#include <vector>

namespace cogdof {

struct CheckTally {
  std::string name;
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> counterexamples;  // first few only

  void record(bool ok, const std::string& what);
};

struct VerifyReport {
  std::vector<CheckTally> tallies;

  bool passed() const;
  long long total_checks() const;
  void merge(const VerifyReport& other);
};

// Exhaustive exact checks over every config with counts in 1..max_antennas and
// every scenario: inner == outer, closed form == LP, integral vertices,
// downward closure, monotonicity in cognition, user-swap symmetry, and the
// cooperation ceiling.
VerifyReport verify_regions(int max_antennas);

// Brute-force set identity for every c, d in 0..max_cd on [0,box]^2.
VerifyReport verify_clip_identity(int max_cd = 8, int box = 20);

// Scenario chains of both sum DOF and regions, per config.
VerifyReport verify_ordering(int max_antennas);

VerifyReport verify_all(int max_antennas);

}  // namespace cogdof
