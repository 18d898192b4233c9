// Copyright 2026 The vacsep Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "vacsep/greens.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "vacsep/error.hpp"

namespace vacsep {

namespace {

using std::numbers::pi;
constexpr double kTwoPiSq = 2.0 * pi * pi;

std::string fmt_event(const SpacetimeEvent& e) {
  std::ostringstream os;
  os.precision(17);
  os << "(x=" << e.x << ", y=" << e.y << ", z=" << e.z << ", t=" << e.t << ")";
  return os.str();
}

// Interval -(dt)^2 + dx^2 + dy^2 + dz^2 with an explicit light-cone guard.
double checked_interval(double dt, double dx, double dy, double dz, const char* who,
                        const SpacetimeEvent& e1, const SpacetimeEvent& e2) {
  const double spatial = dx * dx + dy * dy + dz * dz;
  const double q = spatial - dt * dt;
  const double scale = spatial + dt * dt;
  if (!(std::abs(q) > 8.0 * std::numeric_limits<double>::epsilon() * scale))
    throw PreconditionError(std::string(who) + ": singular separation between " + fmt_event(e1) +
                            " and " + fmt_event(e2));
  return q;
}

double image_interval(const SpacetimeEvent& e1, const SpacetimeEvent& e2, const char* who) {
  if (e1.z < 0.0 || e2.z < 0.0)
    throw PreconditionError(std::string(who) + ": events must satisfy z >= 0, got " +
                            fmt_event(e1) + " and " + fmt_event(e2));
  return checked_interval(e1.t - e2.t, e1.x - e2.x, e1.y - e2.y, e1.z + e2.z, who, e1, e2);
}

}  // namespace

bool PairGeometry::is_valid() const noexcept {
  return r >= 0.0 && L > 0.0 && z - 0.5 * L > 0.0 && z_prime - 0.5 * L > 0.0 &&
         std::isfinite(r) && std::isfinite(z) && std::isfinite(z_prime) && std::isfinite(L);
}

void PairGeometry::validate() const {
  if (is_valid()) return;
  std::ostringstream os;
  os.precision(17);
  os << "PairGeometry(r=" << r << ", z=" << z << ", zprime=" << z_prime << ", L=" << L << "): ";
  if (!(r >= 0.0)) os << "requires r >= 0";
  else if (!(L > 0.0)) os << "requires L > 0";
  else if (!(z - 0.5 * L > 0.0)) os << "box around z crosses the wall (needs z - L/2 > 0)";
  else if (!(z_prime - 0.5 * L > 0.0)) os << "box around zprime crosses the wall (needs zprime - L/2 > 0)";
  else os << "non-finite value";
  throw PreconditionError(os.str());
}

double g_free(const SpacetimeEvent& e1, const SpacetimeEvent& e2) {
  const double q =
      checked_interval(e1.t - e2.t, e1.x - e2.x, e1.y - e2.y, e1.z - e2.z, "g_free", e1, e2);
  return 1.0 / (kTwoPiSq * q);
}

double g_boundary(const SpacetimeEvent& e1, const SpacetimeEvent& e2) {
  const double image = image_interval(e1, e2, "g_boundary");
  return g_free(e1, e2) - 1.0 / (kTwoPiSq * image);
}

double g_regularized(const SpacetimeEvent& e1, const SpacetimeEvent& e2) {
  return -1.0 / (kTwoPiSq * image_interval(e1, e2, "g_regularized"));
}

double g_regularized_time_derivative(const SpacetimeEvent& e1, const SpacetimeEvent& e2) {
  const double q = image_interval(e1, e2, "g_regularized_time_derivative");
  const double s = e1.t - e2.t;
  return (2.0 / (q * q) + 8.0 * s * s / (q * q * q)) / kTwoPiSq;
}

double g_regularized_gradient_dot(const SpacetimeEvent& e1, const SpacetimeEvent& e2) {
  const double q = image_interval(e1, e2, "g_regularized_gradient_dot");
  const double dx = e1.x - e2.x;
  const double dy = e1.y - e2.y;
  const double u = e1.z + e2.z;
  // Transverse terms enter as -d^2/d(dx)^2, the normal term as +d^2/du^2.
  return (-2.0 / (q * q) + 8.0 * (dx * dx + dy * dy - u * u) / (q * q * q)) / kTwoPiSq;
}

double field_correlation(const SpatialPoint& p1, const SpatialPoint& p2) {
  return 0.5 * g_regularized({p1.x, p1.y, p1.z, 0.0}, {p2.x, p2.y, p2.z, 0.0});
}

double momentum_correlation(const SpatialPoint& p1, const SpatialPoint& p2) {
  return 0.5 * g_regularized_time_derivative({p1.x, p1.y, p1.z, 0.0}, {p2.x, p2.y, p2.z, 0.0});
}

ComponentSet components(const PairGeometry& geom) {
  geom.validate();
  const double pi2 = pi * pi;
  const double z2 = geom.z * geom.z;
  const double zp2 = geom.z_prime * geom.z_prime;
  const double R2 = geom.image_distance_squared();
  return {
      .a = -1.0 / (16.0 * pi2 * z2),
      .b = 1.0 / (32.0 * pi2 * z2 * z2),
      .a_prime = -1.0 / (16.0 * pi2 * zp2),
      .b_prime = 1.0 / (32.0 * pi2 * zp2 * zp2),
      .c = -1.0 / (4.0 * pi2 * R2),
      .d = 1.0 / (2.0 * pi2 * R2 * R2),
  };
}

double d_component_by_differentiation(const PairGeometry& geom, double h) {
  geom.validate();
  const double R = std::sqrt(geom.image_distance_squared());
  if (!(h > 0.0) || !(h < R))
    throw PreconditionError("d_component_by_differentiation: step must satisfy 0 < h < R");
  auto half_g = [&](double t) {
    return 0.5 * g_regularized({0.0, 0.0, geom.z, t}, {geom.r, 0.0, geom.z_prime, 0.0});
  };
  // d_t d_t' = -d^2/ds^2 with s = t - t'.
  const double estimate = -(half_g(h) - 2.0 * half_g(0.0) + half_g(-h)) / (h * h);
  const double exact = components(geom).d;
  if (std::abs(estimate - exact) > 0.5 * std::abs(exact))
    throw PreconditionError("d_component_by_differentiation: step too large for this geometry");
  return estimate;
}

double casimir_energy_density(double z) {
  if (!(z > 0.0)) throw PreconditionError("casimir_energy_density: requires z > 0");
  const SpacetimeEvent e{0.0, 0.0, z, 0.0};
  return 0.25 * (g_regularized_time_derivative(e, e) + g_regularized_gradient_dot(e, e));
}

double casimir_energy_density_finite_difference(double z, double relative_step) {
  if (!(z > 0.0)) throw PreconditionError("casimir_energy_density: requires z > 0");
  if (!(relative_step > 0.0 && relative_step < 0.25))
    throw PreconditionError("casimir_energy_density_finite_difference: step out of (0, 0.25)");

  // Sum over the four coordinates of the mixed partial d_a d_a' G_reg at (z, z).
  auto mixed_sum = [z](double h) {
    double total = 0.0;
    for (int axis = 0; axis < 4; ++axis) {
      auto shifted = [&](double delta) {
        SpacetimeEvent e{0.0, 0.0, z, 0.0};
        std::array<double*, 4> coord{&e.x, &e.y, &e.z, &e.t};
        *coord[axis] += delta;
        return e;
      };
      const double pp = g_regularized(shifted(h), shifted(h));
      const double pm = g_regularized(shifted(h), shifted(-h));
      const double mp = g_regularized(shifted(-h), shifted(h));
      const double mm = g_regularized(shifted(-h), shifted(-h));
      total += (pp - pm - mp + mm) / (4.0 * h * h);
    }
    return total;
  };
  const double h = relative_step * z;
  const double coarse = mixed_sum(h);
  const double fine = mixed_sum(0.5 * h);
  return 0.25 * (4.0 * fine - coarse) / 3.0;
}

}  // namespace vacsep
