// Copyright 2026 The vacsep Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace vacsep {

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  double worst = 0.0;      ///< largest deviation seen, in the suite's own measure
  double tolerance = 0.0;

  bool passed() const { return failures == 0 && checked > 0; }
};

/// Seeded property suites covering every module. Deterministic for a given
/// (seed, samples); the lattice suites use a fixed small sample count.
std::vector<SuiteResult> run_verify_suites(std::uint64_t seed, std::size_t samples);

}  // namespace vacsep
