// Copyright 2026 The vacsep Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file greens.hpp
 * @brief Hadamard functions of a massless scalar near a Dirichlet plane at z = 0.
 *
 * G(x, t; x', t') = <{phi(x,t), phi(x',t')}>. Natural units throughout.
 * The free function has a pole on the light cone; the image term lives at the
 * mirrored point (x', y', -z'). The regularized function is boundary minus
 * free, i.e. the image term alone, and is finite at coincidence.
 */

#pragma once

namespace vacsep {

struct SpatialPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

struct SpacetimeEvent {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double t = 0.0;

  SpatialPoint position() const { return {x, y, z}; }
};

/// Two probe points: transverse separation r, wall distances z and z', box edge L.
struct PairGeometry {
  double r = 0.0;
  double z = 1.0;
  double z_prime = 1.0;
  double L = 0.05;

  /// Throws PreconditionError unless r >= 0, L > 0 and both boxes sit
  /// strictly above the wall (z - L/2 > 0, z' - L/2 > 0).
  void validate() const;
  bool is_valid() const noexcept;

  /// Image distance squared, R^2 = r^2 + (z + z')^2.
  double image_distance_squared() const { return r * r + (z + z_prime) * (z + z_prime); }

  SpatialPoint first_center() const { return {0.0, 0.0, z}; }
  SpatialPoint second_center() const { return {r, 0.0, z_prime}; }

  /// Uniform rescaling of every length.
  PairGeometry scaled(double lambda) const {
    return {lambda * r, lambda * z, lambda * z_prime, lambda * L};
  }
  PairGeometry swapped() const { return {r, z_prime, z, L}; }
};

/// Regularized covariance components. a, a', c carry length^-2, b, b', d length^-4.
struct ComponentSet {
  double a = 0.0;
  double b = 0.0;
  double a_prime = 0.0;
  double b_prime = 0.0;
  double c = 0.0;
  double d = 0.0;
};

/// [2 pi^2 (-(t-t')^2 + |x-x'|^2)]^-1. Throws PreconditionError on the light cone.
double g_free(const SpacetimeEvent& e1, const SpacetimeEvent& e2);

/// Free function minus the image term. Vanishes when either event is on the wall.
/// Throws PreconditionError for z < 0 or a singular separation.
double g_boundary(const SpacetimeEvent& e1, const SpacetimeEvent& e2);

/// -[2 pi^2 (-(t-t')^2 + r^2 + (z+z')^2)]^-1.
double g_regularized(const SpacetimeEvent& e1, const SpacetimeEvent& e2);

/// d_t d_t' G_reg, differentiated analytically.
double g_regularized_time_derivative(const SpacetimeEvent& e1, const SpacetimeEvent& e2);

/// grad_x . grad_x' G_reg, differentiated analytically.
double g_regularized_gradient_dot(const SpacetimeEvent& e1, const SpacetimeEvent& e2);

/// Equal-time field correlation c(x, x') = (1/2) G_reg.
double field_correlation(const SpatialPoint& p1, const SpatialPoint& p2);

/// Equal-time momentum correlation d(x, x') = (1/2) d_t d_t' G_reg.
double momentum_correlation(const SpatialPoint& p1, const SpatialPoint& p2);

/// Closed-form components: a = -1/(16 pi^2 z^2), b = 1/(32 pi^2 z^4),
/// c = -1/(4 pi^2 R^2), d = 1/(2 pi^2 R^4). The box edge is not used.
ComponentSet components(const PairGeometry& geom);

/// Central second difference in t - t' of (1/2) G_reg with step h.
/// Second order in h; throws PreconditionError when h >= R or the estimate
/// is more than 50% away from the analytic value.
double d_component_by_differentiation(const PairGeometry& geom, double h);

/// (1/4) [d_t d_t' + grad . grad'] G_reg at coincidence, which is -1/(16 pi^2 z^4).
double casimir_energy_density(double z);

/// Same quantity from mixed-partial finite differences of g_regularized with
/// step `relative_step * z`, Richardson-extrapolated over h and h/2.
double casimir_energy_density_finite_difference(double z, double relative_step = 1e-3);

}  // namespace vacsep
