// Copyright 2026 The vacsep Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "vacsep/separability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

#include "vacsep/collective.hpp"
#include "vacsep/error.hpp"
#include "vacsep/parallel.hpp"

namespace vacsep {

namespace {

using std::numbers::pi;
using Rational = boost::multiprecision::cpp_rational;

Rational rational_pow(const Rational& base, int n) {
  Rational out = 1;
  for (int i = 0; i < n; ++i) out *= base;
  return out;
}

// Decides lhs <= rhs. Doubles settle it outside a guard band of a few ulps;
// near ties (or overflow) fall through to `exact`, which returns the sign of
// rhs - lhs in rational arithmetic.
template <class Exact>
InequalityCheck decide(double lhs, double rhs, Exact&& exact) {
  constexpr double guard = 16.0 * std::numeric_limits<double>::epsilon();
  if (std::isfinite(lhs) && std::isfinite(rhs) && lhs > 0.0 && rhs > 0.0) {
    const double scale = std::max(lhs, rhs);
    if (rhs - lhs > guard * scale) return {true, false, false};
    if (lhs - rhs > guard * scale) return {false, false, false};
  }
  const int sign = exact();
  return {sign >= 0, sign == 0, true};
}

bool lexicographic_less(const PairGeometry& a, const PairGeometry& b) {
  return std::tie(a.r, a.z, a.z_prime, a.L) < std::tie(b.r, b.z, b.z_prime, b.L);
}

std::vector<double> grid(const Interval& iv, int points) {
  if (iv.width() == 0.0 || points < 2) return {iv.lo};
  std::vector<double> out(points);
  for (int i = 0; i < points; ++i)
    out[i] = i == points - 1 ? iv.hi : iv.lo + iv.width() * i / (points - 1);
  return out;
}

Interval shrink_around(double best, double step, const Interval& bounds) {
  return {std::max(bounds.lo, best - step), std::min(bounds.hi, best + step)};
}

}  // namespace

double f_expanded_excess(const PairGeometry& geom) {
  geom.validate();
  const double z2 = geom.z * geom.z;
  const double zp2 = geom.z_prime * geom.z_prime;
  const double z6 = z2 * z2 * z2;
  const double zp6 = zp2 * zp2 * zp2;
  const double R2 = geom.image_distance_squared();
  const double R4 = R2 * R2;
  const double R6 = R4 * R2;
  const double L6 = std::pow(geom.L, 6);
  const double pi4 = std::pow(pi, 4);

  const double first = 1.0 / (128.0 * z6) + 1.0 / (128.0 * zp6) - 1.0 / R6;
  const double second = 1.0 / (4096.0 * z6 * zp6) - 1.0 / (16.0 * z2 * zp2 * R4 * R4) -
                        1.0 / (256.0 * z2 * z2 * zp2 * zp2 * R4) + 1.0 / (R6 * R6);
  return -(L6 / (4.0 * pi4)) * first - (L6 * L6 / (16.0 * pi4 * pi4)) * second;
}

double f_expanded(const PairGeometry& geom) { return -0.25 + f_expanded_excess(geom); }

SeparabilityReport separability_report(const PairGeometry& geom) {
  return simon_ppt_functional(tilde_variance_closed_form(geom).matrix);
}

double f_detform(const PairGeometry& geom) { return separability_report(geom).F; }

ScanResult scan(const ScanRange& ranges, unsigned workers) {
  const std::size_t total = ranges.r_values.size() * ranges.z_values.size() *
                            ranges.zprime_values.size() * ranges.L_values.size();
  if (total == 0) throw PreconditionError("scan: empty parameter range");

  std::vector<PairGeometry> points;
  points.reserve(total);
  ScanResult result;
  for (double r : ranges.r_values)
    for (double z : ranges.z_values)
      for (double zp : ranges.zprime_values)
        for (double L : ranges.L_values) {
          const PairGeometry g{r, z, zp, L};
          if (g.is_valid()) points.push_back(g);
          else ++result.skipped;
        }
  if (points.empty())
    throw PreconditionError("scan: every grid point violates the geometry constraints");

  result.records.resize(points.size());
  parallel_for(points.size(), workers, [&](std::size_t i) {
    ScanRecord& rec = result.records[i];
    rec.geometry = points[i];
    rec.F_expanded = f_expanded(points[i]);
    rec.F_detform = f_detform(points[i]);
    rec.verdict = classify(rec.F_expanded);
  });

  std::sort(result.records.begin(), result.records.end(),
            [](const ScanRecord& a, const ScanRecord& b) {
              if (a.F_expanded != b.F_expanded) return a.F_expanded > b.F_expanded;
              return lexicographic_less(a.geometry, b.geometry);
            });
  const double sup = result.records.front().F_expanded;
  for (auto& rec : result.records) rec.max_flag = rec.F_expanded == sup;
  return result;
}

MaxSearchResult find_max_f(const SearchRegion& region, const MaxSearchOptions& options) {
  for (const Interval* iv : {&region.r, &region.z, &region.z_prime})
    if (!(iv->lo <= iv->hi))
      throw PreconditionError("find_max_f: interval with lo > hi");
  if (region.r.lo < 0.0) throw PreconditionError("find_max_f: r must be non-negative");
  if (!(region.L > 0.0) || !(region.z.lo - 0.5 * region.L > 0.0) ||
      !(region.z_prime.lo - 0.5 * region.L > 0.0))
    throw PreconditionError("find_max_f: region allows boxes crossing the wall (z - L/2 <= 0)");
  if (options.grid_points < 2 || options.max_depth < 1 || !(options.tolerance > 0.0))
    throw PreconditionError("find_max_f: invalid search options");

  Interval r = region.r;
  Interval z = region.z;
  Interval zp = region.z_prime;
  for (int depth = 1; depth <= options.max_depth; ++depth) {
    const auto rs = grid(r, options.grid_points);
    const auto zs = grid(z, options.grid_points);
    const auto zps = grid(zp, options.grid_points);

    PairGeometry best{rs[0], zs[0], zps[0], region.L};
    double best_value = -std::numeric_limits<double>::infinity();
    for (double rv : rs)
      for (double zv : zs)
        for (double zpv : zps) {
          const PairGeometry g{rv, zv, zpv, region.L};
          const double v = f_expanded_excess(g);
          if (v > best_value) {
            best_value = v;
            best = g;
          }
        }

    if (std::max({r.width(), z.width(), zp.width()}) <= options.tolerance)
      return {best, f_expanded(best), depth};

    auto step = [&](const Interval& iv) { return iv.width() / (options.grid_points - 1); };
    r = shrink_around(best.r, step(r), region.r);
    z = shrink_around(best.z, step(z), region.z);
    zp = shrink_around(best.z_prime, step(zp), region.z_prime);
  }
  throw ConvergenceError("find_max_f: region not resolved to the tolerance within max_depth");
}

InequalityCheck check_power_mean_inequality(double X, double Y, int n) {
  if (!(X > 0.0) || !(Y > 0.0) || n < 1 || !std::isfinite(X) || !std::isfinite(Y))
    throw PreconditionError("check_power_mean_inequality: requires X, Y > 0 and n >= 1");
  const double lhs = std::pow(X + Y, -n);
  const double rhs = (std::pow(X, -n) + std::pow(Y, -n)) / std::ldexp(1.0, n + 1);
  return decide(lhs, rhs, [&] {
    // Multiplied through by 2^(n+1) (X+Y)^n X^n Y^n > 0.
    const Rational x(X);
    const Rational y(Y);
    const Rational left = rational_pow(Rational(2), n + 1) * rational_pow(x * y, n);
    const Rational right = rational_pow(x + y, n) * (rational_pow(x, n) + rational_pow(y, n));
    return right > left ? 1 : (right == left ? 0 : -1);
  });
}

InequalityCheck check_cubic_rearrangement(double X, double Y) {
  if (!(X > 0.0) || !(Y > 0.0) || !std::isfinite(X) || !std::isfinite(Y))
    throw PreconditionError("check_cubic_rearrangement: requires X, Y > 0");
  // Compared as lhs <= rhs with lhs = X Y^2 + Y X^2 and rhs = X^3 + Y^3.
  const double lhs = X * Y * Y + Y * X * X;
  const double rhs = X * X * X + Y * Y * Y;
  return decide(lhs, rhs, [&] {
    const Rational x(X);
    const Rational y(Y);
    const Rational left = x * y * y + y * x * x;
    const Rational right = x * x * x + y * y * y;
    return right > left ? 1 : (right == left ? 0 : -1);
  });
}

}  // namespace vacsep
