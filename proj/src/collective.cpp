// Copyright 2026 The vacsep Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "vacsep/collective.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "vacsep/error.hpp"
#include "vacsep/quadrature.hpp"

namespace vacsep {

namespace {

struct WeightedPoint {
  SpatialPoint p;
  double w;
};

std::vector<WeightedPoint> box_nodes(const SpatialPoint& center, double L,
                                     const QuadratureSpec& spec) {
  const quad::Rule base = spec.rule == QuadratureRule::GaussLegendre
                              ? quad::gauss_legendre(spec.nodes_per_axis)
                              : quad::trapezoid(spec.nodes_per_axis);
  const quad::Rule rule = base.mapped(-0.5 * L, 0.5 * L);
  std::vector<WeightedPoint> nodes;
  nodes.reserve(rule.size() * rule.size() * rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i)
    for (std::size_t j = 0; j < rule.size(); ++j)
      for (std::size_t k = 0; k < rule.size(); ++k)
        nodes.push_back({{center.x + rule.nodes[i], center.y + rule.nodes[j],
                          center.z + rule.nodes[k]},
                         rule.weights[i] * rule.weights[j] * rule.weights[k]});
  return nodes;
}

// int_{B(a)} int_{B(b)} kernel, summed with an ordered inner reduction.
template <class Kernel>
double box_pair_integral(const std::vector<WeightedPoint>& a,
                         const std::vector<WeightedPoint>& b, Kernel&& kernel) {
  double total = 0.0;
  for (const auto& pa : a) {
    double inner = 0.0;
    for (const auto& pb : b) inner += pb.w * kernel(pa.p, pb.p);
    total += pa.w * inner;
  }
  return total;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (nodes_per_axis < 2)
    throw PreconditionError("QuadratureSpec: nodes_per_axis must be >= 2");
  const double total = std::pow(static_cast<double>(nodes_per_axis), 6);
  if (total > static_cast<double>(node_budget))
    throw PreconditionError("QuadratureSpec: " + std::to_string(nodes_per_axis) +
                            "^6 nodes exceed the budget of " + std::to_string(node_budget));
}

SmearedVariance tilde_variance_closed_form(const PairGeometry& geom) {
  const ComponentSet k = components(geom);
  return {build_variance_matrix(k.a, k.b, k.a_prime, k.b_prime, k.c, k.d, geom.L), geom,
          SmearingPath::ClosedForm};
}

SmearedVariance tilde_variance_quadrature(const PairGeometry& geom, const QuadratureSpec& spec) {
  geom.validate();
  spec.validate();
  const SpatialPoint ca = geom.first_center();
  const SpatialPoint cb = geom.second_center();
  if (box_overlap_fraction(ca, cb, geom.L) > 0.0)
    throw PreconditionError(
        "tilde_variance_quadrature: boxes overlap; use the closed-form path for this geometry");

  const auto na = box_nodes(ca, geom.L, spec);
  const auto nb = box_nodes(cb, geom.L, spec);
  auto field = [](const SpatialPoint& p, const SpatialPoint& q) {
    return field_correlation(p, q);
  };
  auto momentum = [](const SpatialPoint& p, const SpatialPoint& q) {
    return momentum_correlation(p, q);
  };
  const double inv_l6 = 1.0 / std::pow(geom.L, 6);

  VarianceMatrix::Entries m{};
  m[0][0] = inv_l6 * box_pair_integral(na, na, field);
  m[2][2] = inv_l6 * box_pair_integral(nb, nb, field);
  m[0][2] = m[2][0] = inv_l6 * box_pair_integral(na, nb, field);
  m[1][1] = box_pair_integral(na, na, momentum);
  m[3][3] = box_pair_integral(nb, nb, momentum);
  m[1][3] = m[3][1] = box_pair_integral(na, nb, momentum);
  return {VarianceMatrix(m), geom, SmearingPath::Quadrature};
}

double box_pair_average(const SpatialPoint& center_a, const SpatialPoint& center_b, double L,
                        const QuadratureSpec& spec, const PairKernel& kernel) {
  if (!(L > 0.0)) throw PreconditionError("box_pair_average: requires L > 0");
  spec.validate();
  return box_pair_integral(box_nodes(center_a, L, spec), box_nodes(center_b, L, spec), kernel) /
         std::pow(L, 6);
}

double box_overlap_fraction(const SpatialPoint& center_a, const SpatialPoint& center_b,
                            double L) {
  if (!(L > 0.0)) throw PreconditionError("box_overlap_fraction: requires L > 0");
  auto axis = [L](double u, double v) { return std::max(0.0, L - std::abs(u - v)) / L; };
  return axis(center_a.x, center_b.x) * axis(center_a.y, center_b.y) *
         axis(center_a.z, center_b.z);
}

double default_box_edge(double z, double z_prime) { return std::min(z, z_prime) / 20.0; }

}  // namespace vacsep
