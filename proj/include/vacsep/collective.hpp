// Copyright 2026 The vacsep Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file collective.hpp
 * @brief Box-smeared collective operators.
 *
 * Phi is the field averaged over a cube of edge L (factor 1/L^3), Pi the
 * momentum integrated over the same cube. The box around the first point is
 * centred at (0, 0, z), the second at (r, 0, z').
 */

#pragma once

#include <cstddef>
#include <functional>

#include "vacsep/gaussian.hpp"
#include "vacsep/greens.hpp"

namespace vacsep {

enum class QuadratureRule { GaussLegendre, Trapezoid };

struct QuadratureSpec {
  int nodes_per_axis = 8;
  QuadratureRule rule = QuadratureRule::GaussLegendre;
  std::size_t node_budget = 1'000'000;  ///< cap on nodes_per_axis^6

  void validate() const;
};

enum class SmearingPath { ClosedForm, Quadrature };

struct SmearedVariance {
  VarianceMatrix matrix;
  PairGeometry geometry;
  SmearingPath path = SmearingPath::ClosedForm;
};

/// Small-box limit: field entries unscaled, momentum entries times L^6.
SmearedVariance tilde_variance_closed_form(const PairGeometry& geom);

/// All six entries from tensor-product quadrature over the box pairs:
/// field entries are (1/L^6) int_B int_B' c(y, y'), momentum entries
/// int_B int_B' d(y, y'). Diagonal entries pair a box with itself; the
/// regularized kernels are finite there. Throws PreconditionError when the
/// two boxes overlap or the node budget is exceeded.
SmearedVariance tilde_variance_quadrature(const PairGeometry& geom,
                                          const QuadratureSpec& spec = {});

using PairKernel = std::function<double(const SpatialPoint&, const SpatialPoint&)>;

/// (1/L^6) int_{B(a)} int_{B(b)} kernel, the average of `kernel` over the box pair.
double box_pair_average(const SpatialPoint& center_a, const SpatialPoint& center_b, double L,
                        const QuadratureSpec& spec, const PairKernel& kernel);

/// Vol(B(a) n B(b)) / L^3 for axis-aligned cubes of edge L; the coefficient
/// of i in [Phi_a, Pi_b].
double box_overlap_fraction(const SpatialPoint& center_a, const SpatialPoint& center_b,
                            double L);

/// Default box edge min(z, z') / 20.
double default_box_edge(double z, double z_prime);

}  // namespace vacsep
