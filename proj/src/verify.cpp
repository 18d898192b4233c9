// Copyright 2026 The vacsep Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "vacsep/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "vacsep/collective.hpp"
#include "vacsep/gaussian.hpp"
#include "vacsep/greens.hpp"
#include "vacsep/oracle_lattice.hpp"
#include "vacsep/oracle_momentum.hpp"
#include "vacsep/separability.hpp"

namespace vacsep {

namespace {

using std::numbers::pi;

class Suite {
 public:
  Suite(std::string name, double tolerance) {
    result_.name = std::move(name);
    result_.tolerance = tolerance;
  }

  /// Records a deviation; fails when it exceeds the tolerance (or is NaN).
  void deviation(double value) {
    ++result_.checked;
    if (!(value <= result_.tolerance)) ++result_.failures;
    if (std::isnan(value) || value > result_.worst) result_.worst = value;
  }

  void expect(bool ok) {
    ++result_.checked;
    if (!ok) ++result_.failures;
  }

  SuiteResult result() const { return result_; }

 private:
  SuiteResult result_;
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

struct Sampler {
  std::mt19937_64 rng;

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

  /// z, z' in [0.1, 10], r in [0, 10], L in (0, min(z, z')/5].
  PairGeometry geometry() {
    const double z = uniform(0.1, 10.0);
    const double zp = uniform(0.1, 10.0);
    const double r = uniform(0.0, 10.0);
    const double L = std::min(z, zp) / 5.0 * (1.0 - uniform(0.0, 1.0));
    return {r, z, zp, L};
  }

  VarianceMatrix block_matrix() {
    return build_variance_matrix(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1),
                                 uniform(-1, 1), uniform(-1, 1), uniform(0.5, 2.0));
  }

  VarianceMatrix symmetric_matrix() {
    VarianceMatrix::Entries m{};
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) m[i][j] = m[j][i] = uniform(-1, 1);
    return VarianceMatrix(m);
  }
};

}  // namespace

std::vector<SuiteResult> run_verify_suites(std::uint64_t seed, std::size_t samples) {
  Sampler s{std::mt19937_64(seed)};
  std::vector<SuiteResult> out;
  const std::size_t n = std::max<std::size_t>(samples, 1);

  {
    Suite t("gaussian.vacuum", 0.0);
    t.deviation(std::abs(simon_ppt_functional(VarianceMatrix::vacuum()).F));
    out.push_back(t.result());
  }
  {
    Suite t("gaussian.squeezed_family", 1e-10);
    const std::size_t points = std::min<std::size_t>(n, 401);
    for (std::size_t i = 0; i < points; ++i) {
      const double sq = points == 1 ? 0.5 : 2.0 * i / (points - 1);
      const double F = simon_ppt_functional(VarianceMatrix::two_mode_squeezed(sq)).F;
      const double expected = 0.5 * (std::cosh(4.0 * sq) - 1.0);
      t.deviation(std::abs(F - expected) / std::max(1.0, std::abs(expected)));
    }
    out.push_back(t.result());
  }
  {
    Suite t("gaussian.determinant_consistency", 1e-12);
    for (std::size_t i = 0; i < n; ++i) {
      const VarianceMatrix v = s.block_matrix();
      const SeparabilityReport rep = simon_ppt_functional(v);
      // Reordered to (Phi, Phi', Pi, Pi') the matrix is block diagonal.
      const double field = v(0, 0) * v(2, 2) - v(0, 2) * v(0, 2);
      const double mom = v(1, 1) * v(3, 3) - v(1, 3) * v(1, 3);
      const double dA = v(0, 0) * v(1, 1);
      const double dB = v(2, 2) * v(3, 3);
      const double dG = v(0, 2) * v(1, 3);
      const double F = dA + dB - 2.0 * dG - (0.25 + 4.0 * field * mom);
      const double scale = std::max({1.0, std::abs(dA), std::abs(dB), std::abs(dG),
                                     std::abs(4.0 * field * mom)});
      t.deviation(std::abs(rep.F - F) / scale);
    }
    out.push_back(t.result());
  }
  {
    Suite t("gaussian.partial_transpose_invariants", 1e-12);
    for (std::size_t i = 0; i < n; ++i) {
      const VarianceMatrix v = s.symmetric_matrix();
      const VarianceMatrix pt = partial_transpose(v);
      t.deviation(std::abs(pt.det_a() - v.det_a()));
      t.deviation(std::abs(pt.det_b() - v.det_b()));
      t.deviation(std::abs(pt.det_g() + v.det_g()));
      t.deviation(std::abs(pt.det() - v.det()));
    }
    out.push_back(t.result());
  }
  {
    Suite t("gaussian.symplectic_vs_eigensolver", 1e-10);
    const std::size_t m = std::min<std::size_t>(n, 2000);
    Eigen::Matrix4d omega;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) omega(i, j) = SymplecticForm::omega[i][j];
    for (std::size_t i = 0; i < m; ++i) {
      // Thermal two-mode state S diag(n1, n1, n2, n2) S^T with S a two-mode
      // squeezer, then a local rotation of mode 1. Well-separated n1, n2 keep
      // the spectrum away from the sqrt(eps) sensitivity of a double root.
      const double sq = s.uniform(0.0, 1.5);
      const double th = s.uniform(0.0, 2.0 * pi);
      const double n1 = s.uniform(0.5, 3.0);
      const double n2 = n1 + s.uniform(0.1, 2.0);
      const double ch = std::cosh(sq), sh = std::sinh(sq);
      Eigen::Matrix4d S;
      S << ch, 0, sh, 0, 0, ch, 0, -sh, sh, 0, ch, 0, 0, -sh, 0, ch;
      const Eigen::Vector4d thermal(n1, n1, n2, n2);
      Eigen::Matrix4d V = S * thermal.asDiagonal() * S.transpose();
      Eigen::Matrix4d rot = Eigen::Matrix4d::Identity();
      rot(0, 0) = rot(1, 1) = std::cos(th);
      rot(0, 1) = std::sin(th);
      rot(1, 0) = -std::sin(th);
      V = (rot * V * rot.transpose()).eval();
      V = 0.5 * (V + V.transpose()).eval();
      VarianceMatrix::Entries e{};
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) e[a][b] = V(a, b);
      const VarianceMatrix v(e);
      Eigen::EigenSolver<Eigen::Matrix4d> solver(omega * V);
      std::array<double, 4> mods{};
      for (int a = 0; a < 4; ++a) mods[a] = std::abs(solver.eigenvalues()[a]);
      std::sort(mods.begin(), mods.end());
      const SymplecticSpectrum spec = symplectic_eigenvalues(v, false);
      t.deviation(rel(spec.nu_minus, mods[0]));
      t.deviation(rel(spec.nu_plus, mods[3]));
      t.deviation(rel(spec.nu_minus, n1));
      t.deviation(rel(spec.nu_plus, n2));
    }
    out.push_back(t.result());
  }
  {
    Suite t("greens.dirichlet", 1e-12);
    for (std::size_t i = 0; i < n; ++i) {
      const SpacetimeEvent wall{s.uniform(-5, 5), s.uniform(-5, 5), 0.0, s.uniform(-1, 1)};
      const SpacetimeEvent other{s.uniform(-5, 5), s.uniform(-5, 5), s.uniform(2.0, 10.0),
                                 s.uniform(-1, 1)};
      const double scale = std::abs(g_free(wall, other));
      t.deviation(std::abs(g_boundary(wall, other)) / scale);
      t.deviation(std::abs(g_boundary(other, wall)) / scale);
    }
    out.push_back(t.result());
  }
  {
    Suite t("greens.coincidence_consistency", 1e-14);
    for (std::size_t i = 0; i < n; ++i) {
      const double z = s.uniform(0.1, 10.0);
      const ComponentSet k = components({0.0, z, z, z / 20.0});
      t.deviation(rel(k.a, k.c));
      t.deviation(rel(k.b, k.d));
    }
    out.push_back(t.result());
  }
  {
    Suite t("greens.image_distance_dependence", 1e-14);
    for (std::size_t i = 0; i < n; ++i) {
      const PairGeometry g = s.geometry();
      const double R2 = g.image_distance_squared();
      // Same R^2 with r = 0: z + z' = sqrt(R^2) split at a random ratio.
      const double sum = std::sqrt(R2);
      const double f = s.uniform(0.2, 0.8);
      const PairGeometry h{0.0, f * sum, (1.0 - f) * sum, 1e-3 * sum};
      const ComponentSet a = components(g);
      const ComponentSet b = components(h);
      t.deviation(rel(a.c, b.c));
      t.deviation(rel(a.d, b.d));
    }
    out.push_back(t.result());
  }
  {
    Suite t("greens.scaling", 1e-12);
    for (std::size_t i = 0; i < n; ++i) {
      const PairGeometry g = s.geometry();
      const double lambda = s.uniform(0.1, 10.0);
      const ComponentSet a = components(g);
      const ComponentSet b = components(g.scaled(lambda));
      const double l2 = lambda * lambda;
      t.deviation(rel(b.a * l2, a.a));
      t.deviation(rel(b.c * l2, a.c));
      t.deviation(rel(b.b * l2 * l2, a.b));
      t.deviation(rel(b.d * l2 * l2, a.d));
    }
    out.push_back(t.result());
  }
  {
    Suite t("greens.casimir_z4", 1e-10);
    const double expected = -1.0 / (16.0 * pi * pi);
    for (std::size_t i = 0; i < n; ++i) {
      const double z = s.uniform(0.1, 10.0);
      t.deviation(rel(casimir_energy_density(z) * std::pow(z, 4), expected));
    }
    out.push_back(t.result());
  }
  {
    Suite t("collective.overlap_symmetry", 1e-15);
    for (std::size_t i = 0; i < n; ++i) {
      const double L = s.uniform(0.1, 2.0);
      const SpatialPoint a{s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1)};
      const SpatialPoint b{s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1)};
      const SpatialPoint shift{s.uniform(-3, 3), s.uniform(-3, 3), s.uniform(-3, 3)};
      const double ab = box_overlap_fraction(a, b, L);
      t.deviation(std::abs(ab - box_overlap_fraction(b, a, L)));
      const double moved = box_overlap_fraction({a.x + shift.x, a.y + shift.y, a.z + shift.z},
                                                {b.x + shift.x, b.y + shift.y, b.z + shift.z}, L);
      // Shifting rounds the center differences, so translation holds to roundoff only.
      t.expect(std::abs(ab - moved) <= 1e-12);
      t.expect(ab >= 0.0 && ab <= 1.0);
    }
    out.push_back(t.result());
  }
  {
    Suite t("collective.unit_scale_reproduces_point_matrix", 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      PairGeometry g = s.geometry();
      const ComponentSet k = components(g);
      const VarianceMatrix point = build_variance_matrix(k.a, k.b, k.a_prime, k.b_prime, k.c, k.d, 1.0);
      g.L = 1.0;
      if (!g.is_valid()) continue;
      const VarianceMatrix smeared = tilde_variance_closed_form(g).matrix;
      double worst = 0.0;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) worst = std::max(worst, std::abs(point(a, b) - smeared(a, b)));
      t.deviation(worst);
    }
    out.push_back(t.result());
  }
  {
    Suite t("separability.path_identity", 1e-10);
    for (std::size_t i = 0; i < n; ++i) {
      const PairGeometry g = s.geometry();
      const double fe = f_expanded(g);
      t.deviation(std::abs(fe - f_detform(g)) / std::max(1.0, std::abs(fe)));
    }
    out.push_back(t.result());
  }
  {
    Suite t("separability.global_bound", 1e-12);
    for (std::size_t i = 0; i < n; ++i) {
      const PairGeometry g = s.geometry();
      const SeparabilityReport rep = separability_report(g);
      t.deviation(std::max(0.0, f_expanded(g) + 0.25));
      t.deviation(std::max(0.0, rep.F + 0.25));
      t.expect(rep.verdict == Verdict::Separable);
    }
    out.push_back(t.result());
  }
  {
    Suite t("separability.scale_invariance", 1e-12);
    for (std::size_t i = 0; i < n; ++i) {
      const PairGeometry g = s.geometry();
      for (double lambda : {0.5, 2.0, 10.0}) t.deviation(std::abs(f_expanded(g.scaled(lambda)) - f_expanded(g)));
    }
    out.push_back(t.result());
  }
  {
    Suite t("separability.swap_symmetry", 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const PairGeometry g = s.geometry();
      t.deviation(std::abs(f_expanded(g) - f_expanded(g.swapped())));
    }
    out.push_back(t.result());
  }
  {
    Suite t("separability.monotone_decay_in_r", 0.0);
    const std::size_t lines = std::max<std::size_t>(n / 100, 1);
    for (std::size_t i = 0; i < lines; ++i) {
      const double z = s.uniform(0.1, 10.0);
      const double L = z / 5.0 * (1.0 - s.uniform(0.0, 1.0));
      double previous = f_expanded_excess({0.0, z, z, L});
      for (int k = 1; k <= 50; ++k) {
        const double current = f_expanded_excess({0.2 * z * k, z, z, L});
        t.deviation(std::max(0.0, current - previous));
        previous = current;
      }
    }
    out.push_back(t.result());
  }
  {
    Suite t("lemmas.power_mean", 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double X = 10.0 * (1.0 - s.uniform(0.0, 1.0));
      const double Y = 10.0 * (1.0 - s.uniform(0.0, 1.0));
      const int k = 1 + static_cast<int>(i % 6);
      t.expect(check_power_mean_inequality(X, Y, k).holds);
      const InequalityCheck tie = check_power_mean_inequality(X, X, k);
      t.expect(tie.holds && tie.equality);
    }
    out.push_back(t.result());
  }
  {
    Suite t("lemmas.cubic_rearrangement", 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double X = 10.0 * (1.0 - s.uniform(0.0, 1.0));
      const double Y = 10.0 * (1.0 - s.uniform(0.0, 1.0));
      t.expect(check_cubic_rearrangement(X, Y).holds);
      const InequalityCheck tie = check_cubic_rearrangement(Y, Y);
      t.expect(tie.holds && tie.equality);
    }
    out.push_back(t.result());
  }
  {
    Suite t("oracle_momentum.closed_form_agreement", 1e-3);
    for (double R : {0.5, 1.0, 2.0, 4.0}) {
      const ComponentSet k = components({0.0, R / 2.0, R / 2.0, R / 40.0});
      t.deviation(rel(momentum_oracle(R, ImageCorrelation::FieldField).extrapolation.value, k.c));
      t.deviation(rel(momentum_oracle(R, ImageCorrelation::MomentumMomentum).extrapolation.value, k.d));
    }
    out.push_back(t.result());
  }
  {
    Suite t("oracle_lattice.uncertainty_bound", 1e-10);
    for (int i = 0; i < 12; ++i) {
      const int sites = 16 + static_cast<int>(s.uniform(0.0, 48.0));
      const double spacing = s.uniform(0.05, 1.0);
      const double k = s.uniform(0.0, 3.0);
      const ChainBoundary b = i % 2 ? ChainBoundary::DirichletWall : ChainBoundary::FreeExtended;
      const ChainCovariance cov = chain_ground_covariance({sites, spacing, k + 0.01, b});
      const Eigen::VectorXcd ev = (cov.phi_phi * cov.pi_pi).eigenvalues();
      for (Eigen::Index m = 0; m < ev.size(); ++m) t.deviation(std::max(0.0, 0.25 - ev[m].real()));
    }
    out.push_back(t.result());
  }
  {
    // At large k z the wall effect drops below rounding; allow that much.
    Suite t("oracle_lattice.dirichlet_suppression", 1e-12);
    LatticeResolution lattice;
    lattice.sites = 64;
    for (int i = 0; i < 12; ++i) {
      const double z = lattice.spacing * (1 + static_cast<int>(s.uniform(0.0, 32.0)));
      const double k = s.uniform(0.01, 10.0);
      const double wall = chain_field_correlation(z, z, k, ChainBoundary::DirichletWall, lattice);
      const double bulk = chain_field_correlation(z, z, k, ChainBoundary::FreeExtended, lattice);
      t.deviation(std::max(0.0, wall - bulk) / bulk);
    }
    out.push_back(t.result());
  }
  return out;
}

}  // namespace vacsep
