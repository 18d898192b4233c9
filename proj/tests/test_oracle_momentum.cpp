// Copyright 2026 The vacsep Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vacsep/error.hpp"
#include "vacsep/oracle_momentum.hpp"

using namespace vacsep;
using std::numbers::pi;

TEST_CASE("regulated field integral follows the analytic regulator law") {
  // int sin(kR) e^{-eps k} dk = R / (R^2 + eps^2)
  for (double R : {0.5, 2.0}) {
    for (double eps : {0.1 * R, R}) {
      const RegulatedIntegral v = phi_phi_image_integral(R, eps);
      CHECK(v.value == doctest::Approx(-1 / (4 * pi * pi * (R * R + eps * eps))).epsilon(1e-9));
      CHECK(v.tail_bound < 1e-12 * std::abs(v.value) * 4 * pi * pi * R);
    }
  }
  const double sharp = phi_phi_image_integral(2.0, 0.002).value;
  CHECK(phi_phi_image_integral(2.0, 2.0).value == doctest::Approx(sharp / 2).epsilon(1e-5));
}

TEST_CASE("scaling in R at fixed regulator") {
  const double eps = 0.04;
  CHECK(phi_phi_image_integral(2.0, eps).value ==
        doctest::Approx(phi_phi_image_integral(1.0, eps).value / 4).epsilon(1e-2));
  CHECK(pi_pi_image_integral(2.0, eps).value ==
        doctest::Approx(pi_pi_image_integral(1.0, eps).value / 16).epsilon(1e-2));
}

TEST_CASE("extrapolated oracle matches the image correlations") {
  const auto c = momentum_oracle(2.0, ImageCorrelation::FieldField);
  CHECK(c.extrapolation.value == doctest::Approx(-1 / (16 * pi * pi)).epsilon(1e-8));
  const auto d = momentum_oracle(2.0, ImageCorrelation::MomentumMomentum);
  CHECK(d.extrapolation.value == doctest::Approx(1 / (32 * pi * pi)).epsilon(1e-8));
  CHECK(d.samples.size() == default_regulator_fractions().size());
}

TEST_CASE("extrapolation error estimate shrinks with more samples") {
  const double R = 1.0;
  std::vector<std::pair<double, double>> samples;
  for (double f : {0.1, 0.05, 0.025})
    samples.emplace_back(f * R, pi_pi_image_integral(R, f * R).value);
  const Extrapolation ex = extrapolate_regulator(samples);
  REQUIRE(ex.corrections.size() == 2);
  CHECK(ex.corrections[1] < ex.corrections[0]);
}

TEST_CASE("synthetic regulator law round trip") {
  const double A = 3.7, R = 1.5;
  std::vector<std::pair<double, double>> samples;
  for (double f : default_regulator_fractions())
    samples.emplace_back(f * R, A / (R * R + f * R * f * R));
  CHECK(extrapolate_regulator(samples).value == doctest::Approx(A / (R * R)).epsilon(1e-8));
}

TEST_CASE("extrapolation edge cases") {
  CHECK_THROWS_AS(extrapolate_regulator({{0.1, 1.0}, {0.05, 1.0}}), PreconditionError);
  CHECK_THROWS_AS(extrapolate_regulator({{0.1, 1.0}, {0.2, 1.0}, {0.05, 1.0}}),
                  PreconditionError);
  const Extrapolation flat = extrapolate_regulator({{0.1, 2.5}, {0.05, 2.5}, {0.025, 2.5}});
  CHECK(flat.value == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(flat.error_estimate == doctest::Approx(0.0));
  // A coarse-sample spike the finer samples do not follow makes the last correction grow.
  CHECK_THROWS_AS(extrapolate_regulator({{0.1, 2.0}, {0.05, 1.0}, {0.025, 1.0}, {0.0125, 1.0}}),
                  ConvergenceError);
}

TEST_CASE("regulator floor and truncation") {
  CHECK_THROWS_AS(phi_phi_image_integral(1.0, 1e-5), PreconditionError);
  CHECK_THROWS_AS(phi_phi_image_integral(0.0, 0.1), PreconditionError);
  MomentumOracleOptions short_cut;
  short_cut.cutoff_factor = 5.0;
  CHECK_THROWS_AS(pi_pi_image_integral(1.0, 0.1, short_cut), ConvergenceError);
}
