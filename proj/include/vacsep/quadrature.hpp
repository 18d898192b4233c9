// Copyright 2026 The vacsep Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace vacsep::quad {

/// Nodes and weights of a one-dimensional rule on [-1, 1].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  /// Affine map onto [a, b].
  Rule mapped(double a, double b) const;
};

/// n-point Gauss-Legendre rule (Newton iteration on P_n), n >= 1.
Rule gauss_legendre(int n);

/// n-point composite trapezoid rule including both endpoints, n >= 2.
Rule trapezoid(int n);

struct IntegrationResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;
};

/// Adaptive Gauss-Kronrod (7/15) bisection on [a, b]. Stops when the summed
/// error estimate is below max(abs_tol, rel_tol * |value|) or after
/// `max_intervals` subintervals, in which case `converged` is false.
IntegrationResult gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                                double abs_tol, double rel_tol, int max_intervals = 2000);

}  // namespace vacsep::quad
