// Copyright 2026 The vacsep Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file separability.hpp
 * @brief The PPT functional F over the boundary geometry, scans and bounds.
 *
 * F is evaluated two ways: as the explicit polynomial in L^6 (expanded form)
 * and by assembling the smeared covariance and taking determinants. Both agree
 * identically; the expanded form is the one used for sorting and searching.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "vacsep/gaussian.hpp"
#include "vacsep/greens.hpp"

namespace vacsep {

/// F + 1/4 from the expanded polynomial. Non-positive for every valid geometry
/// and exactly zero on the coincidence line r = 0, z = z'. Kept separate
/// because adding -1/4 discards the low-order digits that a maximizer needs.
double f_expanded_excess(const PairGeometry& geom);

/// F = -1/4 - (L^6 / 4 pi^4) [1/(2^7 z^6) + 1/(2^7 z'^6) - 1/R^6]
///          - (L^12 / 2^4 pi^8) [1/(2^12 z^6 z'^6) - 1/(2^4 z^2 z'^2 R^8)
///                               - 1/(2^8 z^4 z'^4 R^4) + 1/R^12].
double f_expanded(const PairGeometry& geom);

/// F from the smeared covariance via the determinant form.
double f_detform(const PairGeometry& geom);

/// Full report (determinants and verdict) from the determinant form.
SeparabilityReport separability_report(const PairGeometry& geom);

struct ScanRange {
  std::vector<double> r_values;
  std::vector<double> z_values;
  std::vector<double> zprime_values;
  std::vector<double> L_values;
};

struct ScanRecord {
  PairGeometry geometry;
  double F_expanded = 0.0;
  double F_detform = 0.0;
  Verdict verdict = Verdict::Separable;
  bool max_flag = false;
};

struct ScanResult {
  std::vector<ScanRecord> records;
  std::size_t skipped = 0;  ///< Cartesian points violating PairGeometry rules
};

/// Evaluates every point of the Cartesian product. Records are ordered by
/// F_expanded descending, ties broken by (r, z, z', L) ascending; every record
/// attaining the supremum carries max_flag. Output does not depend on
/// `workers`. Throws PreconditionError when the product is empty or no point
/// is valid.
ScanResult scan(const ScanRange& ranges, unsigned workers = 1);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
};

struct SearchRegion {
  Interval r;
  Interval z;
  Interval z_prime;
  double L = 0.1;
};

struct MaxSearchOptions {
  int grid_points = 9;        ///< per axis and level
  int max_depth = 80;
  double tolerance = 1e-9;    ///< stop once every box side is below this
};

struct MaxSearchResult {
  PairGeometry geometry;
  double F = 0.0;
  int depth = 0;
};

/// Deterministic nested grid refinement of F over the region at fixed L.
/// Each level evaluates a grid, keeps the best point and shrinks the box to one
/// grid step around it. Throws ConvergenceError if the box is still wider than
/// the tolerance after `max_depth` levels, PreconditionError for a region
/// that is empty or reaches z <= L/2.
MaxSearchResult find_max_f(const SearchRegion& region, const MaxSearchOptions& options = {});

struct InequalityCheck {
  bool holds = false;
  bool equality = false;  ///< both sides exactly equal
  bool exact = false;     ///< decided by rational arithmetic
};

/// 1/(X+Y)^n <= (1/X^n + 1/Y^n) / 2^(n+1) for X, Y > 0.
InequalityCheck check_power_mean_inequality(double X, double Y, int n);

/// X^3 + Y^3 >= X Y^2 + Y X^2 for X, Y > 0.
InequalityCheck check_cubic_rearrangement(double X, double Y);

}  // namespace vacsep
