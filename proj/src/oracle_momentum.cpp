// Copyright 2026 The vacsep Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "vacsep/oracle_momentum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "vacsep/error.hpp"
#include "vacsep/quadrature.hpp"

namespace vacsep {

namespace {

using std::numbers::pi;

void check_inputs(double R, double epsilon, const MomentumOracleOptions& options,
                  const char* who) {
  if (!(R > 0.0) || !(epsilon > 0.0))
    throw PreconditionError(std::string(who) + ": requires R > 0 and epsilon > 0");
  if (epsilon < options.regulator_floor * R) {
    std::ostringstream os;
    os << who << ": epsilon/R = " << epsilon / R << " is below the floor "
       << options.regulator_floor << "; the oscillatory tail would dominate";
    throw PreconditionError(os.str());
  }
}

// int_0^kmax k^power sin(kR) exp(-eps k) dk, panel by panel over half periods
// of the sine so every panel integrand has a fixed sign.
RegulatedIntegral radial_integral(double R, double epsilon, int power,
                                  const MomentumOracleOptions& options, const char* who) {
  check_inputs(R, epsilon, options, who);
  RegulatedIntegral out;
  out.R = R;
  out.epsilon = epsilon;
  out.k_max = options.cutoff_factor / epsilon;

  auto integrand = [&](double k) {
    return std::pow(k, power) * std::sin(k * R) * std::exp(-epsilon * k);
  };
  const double panel = pi / R;
  const auto n_panels = static_cast<std::size_t>(std::ceil(out.k_max / panel));
  double sum = 0.0;
  double abs_sum = 0.0;
  for (std::size_t p = 0; p < n_panels; ++p) {
    const double a = p * panel;
    const double b = std::min(out.k_max, (p + 1) * panel);
    // Panel integrals shrink geometrically; an absolute floor relative to the
    // largest panel seen so far keeps late panels from over-refining.
    const double abs_tol = 1e-3 * options.relative_tolerance * std::max(abs_sum, 1e-300);
    const auto r = quad::gauss_kronrod(integrand, a, b, abs_tol, options.relative_tolerance,
                                       options.max_intervals_per_panel);
    if (!r.converged) {
      std::ostringstream os;
      os << who << ": panel [" << a << ", " << b << "] did not converge (R=" << R
         << ", epsilon=" << epsilon << ")";
      throw ConvergenceError(os.str());
    }
    sum += r.value;
    abs_sum += std::abs(r.value);
    out.quadrature_error += r.error;
    out.evaluations += r.evaluations;
  }
  out.panels = n_panels;

  // |int_kmax^inf k^n e^{-eps k} dk| = e^{-x} sum_j n!/(n-j)! k_max^{n-j} / eps^{j+1}.
  const double x = epsilon * out.k_max;
  double tail = 0.0;
  double falling = 1.0;
  for (int j = 0; j <= power; ++j) {
    tail += falling * std::pow(out.k_max, power - j) / std::pow(epsilon, j + 1);
    falling *= (power - j);
  }
  out.tail_bound = std::exp(-x) * tail;

  // Panels cancel heavily for k^2 (largest panel ~ 1e5 x the sum at small eps),
  // so per-panel relative accuracy does not carry over to the sum one-to-one.
  const double tolerance = 1e-6 * std::abs(sum);
  if (out.tail_bound > tolerance || out.quadrature_error > tolerance) {
    std::ostringstream os;
    os << who << ": truncation or quadrature error above tolerance (tail " << out.tail_bound
       << ", quadrature " << out.quadrature_error << ", value " << sum << ")";
    throw ConvergenceError(os.str());
  }

  const double prefactor = -1.0 / (4.0 * pi * pi * R);
  out.value = prefactor * sum;
  out.quadrature_error *= std::abs(prefactor);
  out.tail_bound *= std::abs(prefactor);
  return out;
}

}  // namespace

RegulatedIntegral phi_phi_image_integral(double R, double epsilon,
                                         const MomentumOracleOptions& options) {
  return radial_integral(R, epsilon, 0, options, "phi_phi_image_integral");
}

RegulatedIntegral pi_pi_image_integral(double R, double epsilon,
                                       const MomentumOracleOptions& options) {
  return radial_integral(R, epsilon, 2, options, "pi_pi_image_integral");
}

Extrapolation extrapolate_regulator(const std::vector<std::pair<double, double>>& samples,
                                    double relative_tolerance) {
  const std::size_t n = samples.size();
  if (n < 3) throw PreconditionError("extrapolate_regulator: needs at least three samples");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(samples[i].first > 0.0))
      throw PreconditionError("extrapolate_regulator: epsilons must be positive");
    if (i > 0 && !(samples[i].first < samples[i - 1].first))
      throw PreconditionError("extrapolate_regulator: epsilons must be strictly decreasing");
  }

  // Neville on x = eps^2, evaluated at x = 0. After column j, row i holds the
  // interpolant through samples i-j..i.
  std::vector<double> x(n);
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = samples[i].first * samples[i].first;
    t[i] = samples[i].second;
  }
  Extrapolation out;
  double previous = t[n - 1];
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      t[i] = (x[i - j] * t[i] - x[i] * t[i - 1]) / (x[i - j] - x[i]);
      if (i == j) break;
    }
    out.corrections.push_back(std::abs(t[n - 1] - previous));
    previous = t[n - 1];
  }
  out.value = t[n - 1];
  out.error_estimate = out.corrections.back();

  const std::size_t m = out.corrections.size();
  const bool growing = m >= 2 && out.corrections[m - 1] > out.corrections[m - 2];
  if (growing && out.error_estimate > relative_tolerance * std::abs(out.value)) {
    std::ostringstream os;
    os << "extrapolate_regulator: tableau corrections grow (" << out.corrections[m - 2]
       << " -> " << out.corrections[m - 1] << "); samples too noisy to extrapolate";
    throw ConvergenceError(os.str());
  }
  return out;
}

std::vector<double> default_regulator_fractions() { return {0.1, 0.05, 0.025, 0.0125}; }

MomentumOracleEstimate momentum_oracle(double R, ImageCorrelation kind,
                                       const std::vector<double>& fractions,
                                       const MomentumOracleOptions& options) {
  MomentumOracleEstimate out;
  out.R = R;
  out.kind = kind;
  std::vector<std::pair<double, double>> points;
  for (double f : fractions) {
    const double eps = f * R;
    out.samples.push_back(kind == ImageCorrelation::FieldField
                              ? phi_phi_image_integral(R, eps, options)
                              : pi_pi_image_integral(R, eps, options));
    points.emplace_back(eps, out.samples.back().value);
  }
  out.extrapolation = extrapolate_regulator(points);
  return out;
}

}  // namespace vacsep
