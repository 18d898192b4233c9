// Copyright 2026 The vacsep Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file gaussian.hpp
 * @brief Two-mode Gaussian covariance machinery.
 *
 * Conventions are fixed: hbar = 1, [phi, pi] = i, a single vacuum mode has
 * variance 1/2. The operator ordering of every 4x4 matrix is
 * (Phi, Pi, Phi', Pi'), so the 2x2 blocks are
 *
 *     V = | A   G |
 *         | G^T B |
 *
 * with A the first mode, B the second mode and G the cross correlations.
 */

#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <utility>

namespace vacsep {

class VarianceMatrix {
 public:
  using Entries = std::array<std::array<double, 4>, 4>;

  /// Zero matrix.
  VarianceMatrix() = default;

  /// Throws PreconditionError unless `entries` is exactly symmetric.
  explicit VarianceMatrix(const Entries& entries);

  /// (1/2) * identity, the product vacuum of two oscillators.
  static VarianceMatrix vacuum();

  /// Two-mode squeezed vacuum with squeezing parameter s.
  static VarianceMatrix two_mode_squeezed(double s);

  double operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const Entries& entries() const { return entries_; }

  double det_a() const;
  double det_b() const;
  double det_g() const;
  double det() const;

  /// True when every (field, momentum) mixed entry is zero within `tol`:
  /// (0,1), (0,3), (1,2), (2,3) and their mirrors.
  bool has_block_pattern(double tol = 1e-12) const;

  friend bool operator==(const VarianceMatrix&, const VarianceMatrix&) = default;

 private:
  Entries entries_{};
};

/// Omega = diag(J, J), J = [[0, 1], [-1, 0]].
struct SymplecticForm {
  static constexpr std::array<std::array<double, 4>, 4> omega{{
      {0.0, 1.0, 0.0, 0.0},
      {-1.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 1.0},
      {0.0, 0.0, -1.0, 0.0},
  }};
};

/// Diagonal (a, s*b, a', s*b'), off-block diagonal (c, s*d), s = length_scale^6.
/// length_scale = 1 gives the point-operator matrix.
VarianceMatrix build_variance_matrix(double a, double b, double a_prime, double b_prime,
                                     double c, double d, double length_scale);

/// Flips the sign of the second mode's momentum (row and column 3).
VarianceMatrix partial_transpose(const VarianceMatrix& v);

enum class Verdict { Separable, Entangled };
enum class EvaluationForm { DeterminantForm, ExpandedForm };

std::string_view to_string(Verdict verdict);
std::string_view to_string(EvaluationForm form);

/// PPT functional F = sigma_tilde - (1/4 + 4 det V), verdict Separable iff F <= 0.
struct SeparabilityReport {
  double F = 0.0;
  double sigma_tilde = 0.0;
  double det_a = 0.0;
  double det_b = 0.0;
  double det_g = 0.0;
  double det_v = 0.0;
  Verdict verdict = Verdict::Separable;
  EvaluationForm path = EvaluationForm::DeterminantForm;
};

/// Throws PreconditionError if `v` breaks the block pattern beyond 1e-12.
/// Negative diagonals are accepted: boundary-regularized matrices have them.
SeparabilityReport simon_ppt_functional(const VarianceMatrix& v);

/// Verdict for a given F; ties at zero are separable.
Verdict classify(double F);

struct SymplecticSpectrum {
  double nu_minus = 0.0;  ///< smaller eigenvalue
  double nu_plus = 0.0;
};

/// Moduli of the eigenvalues of i*Omega*V, each doubly degenerate. With
/// `partial_transpose` the second mode's momentum sign is flipped first.
///
/// Uses the two-mode symplectic invariants: nu^2 solves
/// x^2 - Delta x + det V = 0 with Delta = det A + det B + 2 det G.
/// Throws ConvergenceError when that quadratic has no non-negative real roots.
SymplecticSpectrum symplectic_eigenvalues(const VarianceMatrix& v, bool partial_transpose);

/// Opt-in physicality check: smallest symplectic eigenvalue >= 1/2 - tol.
bool is_physical(const VarianceMatrix& v, double tol = 1e-12);

/// max(0, -ln(2 nu_min~)) in natural-log units, so a two-mode squeezed state
/// with parameter s gives exactly 2s. Throws PreconditionError on unphysical input.
double logarithmic_negativity(const VarianceMatrix& v);

}  // namespace vacsep
