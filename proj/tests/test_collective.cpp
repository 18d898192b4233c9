// Copyright 2026 The vacsep Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vacsep/collective.hpp"
#include "vacsep/error.hpp"

using namespace vacsep;
using std::numbers::pi;

TEST_CASE("closed-form smeared covariance at coincidence") {
  const SmearedVariance sv = tilde_variance_closed_form({0.0, 1.0, 1.0, 0.1});
  CHECK(sv.path == SmearingPath::ClosedForm);
  CHECK(sv.matrix(0, 0) == doctest::Approx(-1 / (16 * pi * pi)).epsilon(1e-15));
  CHECK(sv.matrix(1, 1) == doctest::Approx(1e-6 / (32 * pi * pi)).epsilon(1e-14));
  CHECK(sv.matrix.has_block_pattern(0.0));
}

TEST_CASE("halving L keeps fields and divides momenta by 64") {
  const PairGeometry g{0.3, 1.0, 2.0, 0.1};
  const PairGeometry h{0.3, 1.0, 2.0, 0.05};
  const VarianceMatrix a = tilde_variance_closed_form(g).matrix;
  const VarianceMatrix b = tilde_variance_closed_form(h).matrix;
  CHECK(a(0, 2) == b(0, 2));
  CHECK(a(0, 0) == b(0, 0));
  CHECK(b(1, 3) == doctest::Approx(a(1, 3) / 64).epsilon(1e-14));
  CHECK(b(1, 1) == doctest::Approx(a(1, 1) / 64).epsilon(1e-14));
}

TEST_CASE("quadrature path converges to the point components") {
  const SmearedVariance sv = tilde_variance_quadrature({0.0, 1.0, 2.0, 0.05});
  CHECK(sv.path == SmearingPath::Quadrature);
  CHECK(sv.matrix(0, 2) == doctest::Approx(-1 / (36 * pi * pi)).epsilon(1e-3));
  CHECK(sv.matrix(1, 3) / std::pow(0.05, 6) ==
        doctest::Approx(1 / (162 * pi * pi)).epsilon(1e-3));
}

TEST_CASE("quadrature path refuses overlapping boxes and oversized grids") {
  CHECK_THROWS_AS(tilde_variance_quadrature({0.0, 1.0, 1.0, 0.1}), PreconditionError);
  CHECK_THROWS_AS(tilde_variance_quadrature({0.0, 1.0, 1.05, 0.1}), PreconditionError);
  QuadratureSpec big;
  big.nodes_per_axis = 12;  // 12^6 > 1e6
  CHECK_THROWS_AS(tilde_variance_quadrature({1.0, 1.0, 1.0, 0.1}, big), PreconditionError);
}

TEST_CASE("constant kernels average to the constant for either rule") {
  for (auto rule : {QuadratureRule::GaussLegendre, QuadratureRule::Trapezoid}) {
    QuadratureSpec spec;
    spec.nodes_per_axis = 3;
    spec.rule = rule;
    const double avg = box_pair_average({0, 0, 1}, {2, 0, 1}, 0.4, spec,
                                        [](const SpatialPoint&, const SpatialPoint&) { return 2.5; });
    CHECK(avg == doctest::Approx(2.5).epsilon(1e-14));
  }
}

TEST_CASE("box overlap fraction") {
  CHECK(box_overlap_fraction({0, 0, 1}, {0, 0, 1}, 0.2) == 1.0);
  CHECK(box_overlap_fraction({0, 0, 1}, {1, 0, 1}, 0.2) == 0.0);
  CHECK(box_overlap_fraction({0, 0, 1}, {0.1, 0, 1}, 0.2) == doctest::Approx(0.5));
  CHECK(box_overlap_fraction({0, 0, 1}, {0.1, 0.1, 1.1}, 0.2) == doctest::Approx(0.125));
}

TEST_CASE("default box edge") { CHECK(default_box_edge(2.0, 1.0) == doctest::Approx(0.05)); }
