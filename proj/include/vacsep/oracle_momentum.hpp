// Copyright 2026 The vacsep Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oracle_momentum.hpp
 * @brief Mode-sum evaluation of the image-term correlations.
 *
 * The image contribution to the equal-time correlators is written as a radial
 * integral over |k| with an exponential regulator exp(-eps k), integrated
 * numerically, and the regulator is then extrapolated to zero. Nothing here
 * uses the closed-form position-space Green's functions; the only shared input
 * is the image distance R.
 */

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace vacsep {

struct MomentumOracleOptions {
  double cutoff_factor = 50.0;      ///< k_max = cutoff_factor / eps
  double relative_tolerance = 1e-12;
  double regulator_floor = 1e-3;    ///< smallest accepted eps / R
  int max_intervals_per_panel = 200;
};

struct RegulatedIntegral {
  double R = 0.0;
  double epsilon = 0.0;
  double value = 0.0;
  double quadrature_error = 0.0;  ///< summed Gauss-Kronrod estimate
  double tail_bound = 0.0;        ///< bound on the truncated [k_max, inf) piece
  double k_max = 0.0;
  std::size_t panels = 0;
  std::size_t evaluations = 0;
};

/// -(1/(4 pi^2 R)) int_0^inf sin(kR) exp(-eps k) dk, the regulated field-field
/// image correlation. Tends to c = -1/(4 pi^2 R^2) as eps -> 0.
RegulatedIntegral phi_phi_image_integral(double R, double epsilon,
                                         const MomentumOracleOptions& options = {});

/// -(1/(4 pi^2 R)) int_0^inf k^2 sin(kR) exp(-eps k) dk, the regulated
/// momentum-momentum image correlation. Tends to d = 1/(2 pi^2 R^4).
RegulatedIntegral pi_pi_image_integral(double R, double epsilon,
                                       const MomentumOracleOptions& options = {});

struct Extrapolation {
  double value = 0.0;
  double error_estimate = 0.0;
  /// |T(j) - T(j-1)| along the last row of the Neville tableau, j = 1..n-1.
  std::vector<double> corrections;
};

/// Polynomial extrapolation in eps^2 to eps = 0 (Neville). Needs at least three
/// samples with strictly decreasing eps. The error estimate is the last tableau
/// correction. Throws ConvergenceError when the corrections grow at the end and
/// the estimate exceeds `relative_tolerance * |value|`.
Extrapolation extrapolate_regulator(const std::vector<std::pair<double, double>>& samples,
                                    double relative_tolerance = 1e-6);

/// Default regulator ladder as fractions of R.
std::vector<double> default_regulator_fractions();

enum class ImageCorrelation { FieldField, MomentumMomentum };

struct MomentumOracleEstimate {
  double R = 0.0;
  ImageCorrelation kind = ImageCorrelation::FieldField;
  std::vector<RegulatedIntegral> samples;
  Extrapolation extrapolation;
};

/// Evaluates the regulator ladder eps = fraction * R and extrapolates.
MomentumOracleEstimate momentum_oracle(double R, ImageCorrelation kind,
                                       const std::vector<double>& fractions =
                                           default_regulator_fractions(),
                                       const MomentumOracleOptions& options = {});

}  // namespace vacsep
