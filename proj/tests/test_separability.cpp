// Copyright 2026 The vacsep Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vacsep/error.hpp"
#include "vacsep/separability.hpp"

using namespace vacsep;
using std::numbers::pi;

TEST_CASE("coincidence gives exactly -1/4") {
  for (double L : {0.1, 0.01, 0.5}) {
    const PairGeometry g{0.0, 1.0, 1.0, L};
    CHECK(f_expanded(g) == -0.25);
    CHECK(f_detform(g) == doctest::Approx(-0.25).epsilon(1e-14));
  }
  const SeparabilityReport rep = separability_report({0.0, 1.0, 1.0, 0.1});
  CHECK(rep.verdict == Verdict::Separable);
}

TEST_CASE("far-separated pair approaches -1/4 from below") {
  const PairGeometry g{100.0, 1.0, 1.0, 0.1};
  const double leading = -(1e-6 / (4 * std::pow(pi, 4))) * (2.0 / 128.0);
  CHECK(f_expanded_excess(g) == doctest::Approx(leading).epsilon(1e-6));
  CHECK(f_expanded(g) < -0.25);
}

TEST_CASE("off-coincidence geometry is strictly below -1/4") {
  const PairGeometry g{2.0, 1.0, 3.0, 0.1};
  CHECK(f_detform(g) < -0.25);
  CHECK(f_expanded_excess(g) < 0.0);
  CHECK(f_expanded(g) == doctest::Approx(f_detform(g)).epsilon(1e-14));
}

TEST_CASE("scan of a single point") {
  const ScanResult res = scan({{0.0}, {1.0}, {1.0}, {0.1}});
  REQUIRE(res.records.size() == 1);
  CHECK(res.records[0].F_expanded == -0.25);
  CHECK(res.records[0].max_flag);
  CHECK(res.records[0].verdict == Verdict::Separable);
}

TEST_CASE("scan over a small grid is sorted and separable") {
  const ScanResult res = scan({{0.0, 1.0}, {1.0, 2.0}, {1.0, 2.0}, {0.1}}, 3);
  REQUIRE(res.records.size() == 8);
  CHECK(res.skipped == 0);
  for (std::size_t i = 0; i < res.records.size(); ++i) {
    CHECK(res.records[i].verdict == Verdict::Separable);
    CHECK(res.records[i].F_expanded <= -0.25 + 1e-12);
    if (i > 0) CHECK(res.records[i - 1].F_expanded >= res.records[i].F_expanded);
  }
  // z = z' at r = 0 twice, both at the supremum.
  CHECK(res.records[0].max_flag);
  CHECK(res.records[1].max_flag);
  CHECK_FALSE(res.records[2].max_flag);
  CHECK(res.records[0].geometry.z < res.records[1].geometry.z);
}

TEST_CASE("scan output does not depend on the worker count") {
  const ScanRange range{{0.0, 0.5, 1.0}, {0.5, 1.0, 3.0}, {0.5, 2.0}, {0.02, 0.2}};
  const ScanResult one = scan(range, 1), many = scan(range, 4);
  REQUIRE(one.records.size() == many.records.size());
  for (std::size_t i = 0; i < one.records.size(); ++i) {
    CHECK(one.records[i].F_expanded == many.records[i].F_expanded);
    CHECK(one.records[i].geometry.r == many.records[i].geometry.r);
    CHECK(one.records[i].geometry.z == many.records[i].geometry.z);
  }
}

TEST_CASE("scan skips invalid points and rejects empty products") {
  const ScanResult res = scan({{0.0}, {0.01, 1.0}, {1.0}, {0.1}});
  CHECK(res.records.size() == 1);
  CHECK(res.skipped == 1);
  CHECK_THROWS_AS(scan({{}, {1.0}, {1.0}, {0.1}}), PreconditionError);
  CHECK_THROWS_AS(scan({{0.0}, {0.01}, {1.0}, {0.1}}), PreconditionError);
}

TEST_CASE("find_max_f locates the coincidence maximum") {
  const MaxSearchResult best = find_max_f({{0.0, 2.0}, {0.5, 2.0}, {0.5, 2.0}, 0.1});
  CHECK(best.F == doctest::Approx(-0.25).epsilon(1e-9));
  CHECK(best.geometry.r == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(best.geometry.z == doctest::Approx(best.geometry.z_prime).epsilon(1e-6));
}

TEST_CASE("find_max_f away from coincidence") {
  const MaxSearchResult best = find_max_f({{0.0, 1.0}, {1.0, 1.0}, {2.0, 3.0}, 0.1});
  CHECK(best.F < -0.25);
  CHECK(best.geometry.z_prime == doctest::Approx(2.0));
  CHECK(best.geometry.r == 0.0);
}

TEST_CASE("find_max_f on a single point") {
  const MaxSearchResult best = find_max_f({{0.5, 0.5}, {1.5, 1.5}, {2.0, 2.0}, 0.1});
  CHECK(best.geometry.r == 0.5);
  CHECK(best.geometry.z == 1.5);
  CHECK(best.geometry.z_prime == 2.0);
  CHECK(best.F == f_expanded({0.5, 1.5, 2.0, 0.1}));
}

TEST_CASE("find_max_f reports non-convergence") {
  MaxSearchOptions opts;
  opts.max_depth = 2;
  CHECK_THROWS_AS(find_max_f({{0.0, 2.0}, {0.5, 2.0}, {0.5, 2.0}, 0.1}, opts), ConvergenceError);
}

TEST_CASE("power-mean inequality") {
  const InequalityCheck eq = check_power_mean_inequality(1.0, 1.0, 3);
  CHECK(eq.holds);
  CHECK(eq.equality);
  const InequalityCheck strict = check_power_mean_inequality(1.0, 2.0, 3);
  CHECK(strict.holds);
  CHECK_FALSE(strict.equality);
  const InequalityCheck near = check_power_mean_inequality(1.0, std::nextafter(1.0, 2.0), 6);
  CHECK(near.holds);
  CHECK_FALSE(near.equality);
  CHECK(near.exact);
}

TEST_CASE("cubic rearrangement") {
  CHECK(check_cubic_rearrangement(2.0, 2.0).equality);
  const InequalityCheck c = check_cubic_rearrangement(1.0, 2.0);
  CHECK(c.holds);
  CHECK_FALSE(c.equality);
  const InequalityCheck near = check_cubic_rearrangement(3.0, std::nextafter(3.0, 0.0));
  CHECK(near.holds);
  CHECK_FALSE(near.equality);
}
