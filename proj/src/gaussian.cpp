// Copyright 2026 The vacsep Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "vacsep/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "vacsep/error.hpp"

namespace vacsep {

namespace {

double det2(double a, double b, double c, double d) { return a * d - b * c; }

std::string describe(const VarianceMatrix& v) {
  std::ostringstream os;
  os.precision(17);
  os << '[';
  for (std::size_t i = 0; i < 4; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < 4; ++j) os << (j ? " " : "") << v(i, j);
  }
  os << ']';
  return os.str();
}

}  // namespace

VarianceMatrix::VarianceMatrix(const Entries& entries) : entries_(entries) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (entries_[i][j] != entries_[j][i])
        throw PreconditionError("VarianceMatrix: entries are not symmetric");
}

VarianceMatrix VarianceMatrix::vacuum() {
  return build_variance_matrix(0.5, 0.5, 0.5, 0.5, 0.0, 0.0, 1.0);
}

VarianceMatrix VarianceMatrix::two_mode_squeezed(double s) {
  const double ch = 0.5 * std::cosh(2.0 * s);
  const double sh = 0.5 * std::sinh(2.0 * s);
  return VarianceMatrix(Entries{{
      {ch, 0.0, sh, 0.0},
      {0.0, ch, 0.0, -sh},
      {sh, 0.0, ch, 0.0},
      {0.0, -sh, 0.0, ch},
  }});
}

double VarianceMatrix::det_a() const {
  const auto& m = entries_;
  return det2(m[0][0], m[0][1], m[1][0], m[1][1]);
}

double VarianceMatrix::det_b() const {
  const auto& m = entries_;
  return det2(m[2][2], m[2][3], m[3][2], m[3][3]);
}

double VarianceMatrix::det_g() const {
  const auto& m = entries_;
  return det2(m[0][2], m[0][3], m[1][2], m[1][3]);
}

double VarianceMatrix::det() const {
  // Laplace expansion along the first two rows.
  const auto& m = entries_;
  auto top = [&](int i, int j) { return det2(m[0][i], m[0][j], m[1][i], m[1][j]); };
  auto bot = [&](int i, int j) { return det2(m[2][i], m[2][j], m[3][i], m[3][j]); };
  return top(0, 1) * bot(2, 3) - top(0, 2) * bot(1, 3) + top(0, 3) * bot(1, 2) +
         top(1, 2) * bot(0, 3) - top(1, 3) * bot(0, 2) + top(2, 3) * bot(0, 1);
}

bool VarianceMatrix::has_block_pattern(double tol) const {
  constexpr std::array<std::pair<int, int>, 4> mixed{{{0, 1}, {0, 3}, {1, 2}, {2, 3}}};
  return std::all_of(mixed.begin(), mixed.end(), [&](auto ij) {
    return std::abs(entries_[ij.first][ij.second]) <= tol;
  });
}

VarianceMatrix build_variance_matrix(double a, double b, double a_prime, double b_prime,
                                     double c, double d, double length_scale) {
  const double s = std::pow(length_scale, 6);
  return VarianceMatrix(VarianceMatrix::Entries{{
      {a, 0.0, c, 0.0},
      {0.0, s * b, 0.0, s * d},
      {c, 0.0, a_prime, 0.0},
      {0.0, s * d, 0.0, s * b_prime},
  }});
}

VarianceMatrix partial_transpose(const VarianceMatrix& v) {
  auto m = v.entries();
  for (std::size_t k = 0; k < 4; ++k) {
    if (k == 3) continue;
    m[3][k] = -m[3][k];
    m[k][3] = -m[k][3];
  }
  return VarianceMatrix(m);
}

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::Separable ? "separable" : "entangled";
}

std::string_view to_string(EvaluationForm form) {
  return form == EvaluationForm::DeterminantForm ? "determinant" : "expanded";
}

Verdict classify(double F) { return F <= 0.0 ? Verdict::Separable : Verdict::Entangled; }

SeparabilityReport simon_ppt_functional(const VarianceMatrix& v) {
  if (!v.has_block_pattern(1e-12))
    throw PreconditionError("simon_ppt_functional: matrix violates the (A, B, G) block pattern " +
                            describe(v));
  SeparabilityReport report;
  report.det_a = v.det_a();
  report.det_b = v.det_b();
  report.det_g = v.det_g();
  report.det_v = v.det();
  report.sigma_tilde = report.det_a + report.det_b - 2.0 * report.det_g;
  report.F = report.sigma_tilde - (0.25 + 4.0 * report.det_v);
  report.verdict = classify(report.F);
  report.path = EvaluationForm::DeterminantForm;
  return report;
}

SymplecticSpectrum symplectic_eigenvalues(const VarianceMatrix& v, bool transpose) {
  const double sign = transpose ? -1.0 : 1.0;
  const double delta = v.det_a() + v.det_b() + sign * 2.0 * v.det_g();
  const double det_v = v.det();
  double disc = delta * delta - 4.0 * det_v;
  // Pure states have disc = 0 after cancelling terms of size (detA + detB)^2.
  const double terms = std::abs(v.det_a()) + std::abs(v.det_b()) + 2.0 * std::abs(v.det_g());
  const double scale = std::max(terms * terms, std::abs(det_v));
  if (std::abs(disc) <= 64.0 * std::numeric_limits<double>::epsilon() * scale) disc = 0.0;
  const double hi = 0.5 * (delta + std::sqrt(disc));
  // Product of the roots is det V; avoids the sqrt(disc) cancellation near a double root.
  const double lo = hi > 0.0 ? det_v / hi : 0.5 * (delta - std::sqrt(disc));
  if (!(disc >= 0.0) || !(lo >= 0.0) || !std::isfinite(hi))
    throw ConvergenceError("symplectic_eigenvalues: no real symplectic spectrum for " +
                           describe(v));
  return {std::sqrt(std::min(lo, hi)), std::sqrt(std::max(lo, hi))};
}

bool is_physical(const VarianceMatrix& v, double tol) {
  try {
    // det V carries rounding of order eps * (detA + detB)^2 from cancellation.
    const double terms = std::abs(v.det_a()) + std::abs(v.det_b()) + 2.0 * std::abs(v.det_g());
    const double guard = 16.0 * std::numeric_limits<double>::epsilon() * terms * terms;
    return symplectic_eigenvalues(v, false).nu_minus >= 0.5 - tol - guard;
  } catch (const ConvergenceError&) {
    return false;
  }
}

double logarithmic_negativity(const VarianceMatrix& v) {
  if (!is_physical(v))
    throw PreconditionError("logarithmic_negativity: unphysical covariance " + describe(v));
  const double nu = symplectic_eigenvalues(v, true).nu_minus;
  return std::max(0.0, -std::log(2.0 * nu));
}

}  // namespace vacsep
