// Copyright 2026 The vacsep Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "vacsep/oracle_lattice.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "vacsep/error.hpp"
#include "vacsep/greens.hpp"
#include "vacsep/parallel.hpp"
#include "vacsep/quadrature.hpp"

namespace vacsep {

namespace {

using std::numbers::pi;

int to_sites(double length, double spacing, const char* what) {
  const double n = length / spacing;
  const double rounded = std::round(n);
  if (std::abs(n - rounded) > 1e-9 * std::max(1.0, n)) {
    std::ostringstream os;
    os << "halfspace_component: " << what << " = " << length
       << " is not a whole number of lattice spacings (" << spacing << ")";
    throw PreconditionError(os.str());
  }
  return static_cast<int>(rounded);
}

struct ProbeLayout {
  int wall_i, wall_j;  // wall-chain indices of the probes (site n sits at z = n h)
  int free_i, free_j;  // same probes inside the open reference chain
  int free_sites;
};

ProbeLayout layout(int n, int n_prime, const LatticeResolution& lattice) {
  const int free_sites = lattice.free_extension * lattice.sites + 1;
  const int offset = (free_sites - 1) / 2;
  return {n - 1, n_prime - 1, offset + n - 1, offset + n_prime - 1, free_sites};
}

}  // namespace

void ChainSpec::validate() const {
  if (sites < 2) throw PreconditionError("ChainSpec: need at least two sites");
  if (!(spacing > 0.0)) throw PreconditionError("ChainSpec: spacing must be positive");
  if (!(k_perp >= 0.0)) throw PreconditionError("ChainSpec: k_perp must be non-negative");
}

double ChainSpectrum::entry(int i, int j, double power) const {
  double sum = 0.0;
  for (Eigen::Index m = 0; m < eigenvalues.size(); ++m)
    sum += vectors(i, m) * vectors(j, m) * std::pow(eigenvalues[m], power);
  return sum;
}

ChainSpectrum diagonalize_chain(const ChainSpec& spec) {
  spec.validate();
  const int n = spec.sites;
  const double hop = 1.0 / (spec.spacing * spec.spacing);
  std::vector<double> diag(n, 2.0 * hop + spec.k_perp * spec.k_perp);
  std::vector<double> off(n, -hop);  // dstevr wants n entries of workspace here
  if (spec.boundary == ChainBoundary::FreeExtended) {
    diag.front() -= hop;
    diag.back() -= hop;
  }

  ChainSpectrum out;
  out.eigenvalues.resize(n);
  out.vectors.resize(n, n);
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(n));
  lapack_int found = 0;
  const lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'A', n, diag.data(), off.data(),
                                         0.0, 0.0, 0, 0, 0.0, &found, out.eigenvalues.data(),
                                         out.vectors.data(), n, support.data());
  if (info != 0 || found != n) {
    std::ostringstream os;
    os << "diagonalize_chain: LAPACK dstevr failed (info=" << info << ", sites=" << n
       << ", k_perp=" << spec.k_perp << ")";
    throw ConvergenceError(os.str());
  }
  // Eigenvalues of this operator are at least k_perp^2; anything near roundoff
  // of the largest one is a zero mode.
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * out.eigenvalues[n - 1];
  if (!(out.eigenvalues[0] > floor)) {
    std::ostringstream os;
    os << "diagonalize_chain: non-positive stiffness eigenvalue " << out.eigenvalues[0]
       << " (k_perp=" << spec.k_perp << "); the open chain needs k_perp > 0";
    throw ConvergenceError(os.str());
  }
  return out;
}

ChainCovariance chain_ground_covariance(const ChainSpec& spec) {
  const ChainSpectrum s = diagonalize_chain(spec);
  const Eigen::VectorXd inv_root = s.eigenvalues.array().rsqrt();
  const Eigen::VectorXd root = s.eigenvalues.array().sqrt();
  ChainCovariance out;
  out.phi_phi = 0.5 * s.vectors * inv_root.asDiagonal() * s.vectors.transpose();
  out.pi_pi = 0.5 * s.vectors * root.asDiagonal() * s.vectors.transpose();
  return out;
}

void LatticeResolution::validate() const {
  if (!(spacing > 0.0)) throw PreconditionError("LatticeResolution: spacing must be positive");
  if (sites < 16) throw PreconditionError("LatticeResolution: need at least 16 sites");
  if (k_nodes < 4) throw PreconditionError("LatticeResolution: need at least 4 k_perp nodes");
  if (free_extension < 2)
    throw PreconditionError("LatticeResolution: free_extension must be >= 2");
  if (!(k_cutoff > 0.0)) throw PreconditionError("LatticeResolution: k_cutoff must be positive");
}

double chain_field_correlation(double z, double z_prime, double k_perp, ChainBoundary boundary,
                               const LatticeResolution& lattice) {
  lattice.validate();
  const int n = to_sites(z, lattice.spacing, "z");
  const int n_prime = to_sites(z_prime, lattice.spacing, "zprime");
  if (n < 1 || n_prime < 1 || std::max(n, n_prime) > lattice.sites)
    throw PreconditionError("chain_field_correlation: probe outside the chain");
  const ProbeLayout p = layout(n, n_prime, lattice);
  const bool wall = boundary == ChainBoundary::DirichletWall;
  const ChainSpec spec{wall ? lattice.sites : p.free_sites, lattice.spacing, k_perp, boundary};
  const ChainSpectrum s = diagonalize_chain(spec);
  const double e = wall ? s.entry(p.wall_i, p.wall_j, -0.5) : s.entry(p.free_i, p.free_j, -0.5);
  return 0.5 * e / lattice.spacing;
}

HalfspaceEstimate halfspace_component(double z, double z_prime, double r,
                                      const LatticeResolution& lattice) {
  lattice.validate();
  if (!(r >= 0.0)) throw PreconditionError("halfspace_component: r must be non-negative");
  HalfspaceEstimate out;
  out.z_sites = to_sites(z, lattice.spacing, "z");
  out.zprime_sites = to_sites(z_prime, lattice.spacing, "zprime");
  const int nearest = std::min(out.z_sites, out.zprime_sites);
  const int farthest = std::max(out.z_sites, out.zprime_sites);
  if (nearest < 8) {
    std::ostringstream os;
    os << "halfspace_component: probes must sit at least 8 spacings from the wall (got "
       << nearest << ")";
    throw PreconditionError(os.str());
  }
  // The reference chain keeps >= 4x the probe height of bulk on both sides.
  if (2 * farthest > lattice.sites) {
    std::ostringstream os;
    os << "halfspace_component: probe at " << farthest << " sites needs a chain of at least "
       << 2 * farthest << " sites";
    throw PreconditionError(os.str());
  }

  const double image = z + z_prime;
  out.k_max = lattice.k_cutoff / image;
  if (out.k_max * r > 2.0 * lattice.k_nodes) {
    std::ostringstream os;
    os << "halfspace_component: transverse offset r = " << r << " oscillates faster than "
       << lattice.k_nodes << " k_perp nodes can resolve";
    throw PreconditionError(os.str());
  }

  const ProbeLayout p = layout(out.z_sites, out.zprime_sites, lattice);
  const quad::Rule rule = quad::gauss_legendre(lattice.k_nodes).mapped(0.0, out.k_max);
  std::vector<double> c_terms(rule.size());
  std::vector<double> d_terms(rule.size());
  parallel_for(rule.size(), lattice.workers, [&](std::size_t q) {
    const double k = rule.nodes[q];
    const ChainSpectrum wall =
        diagonalize_chain({lattice.sites, lattice.spacing, k, ChainBoundary::DirichletWall});
    const ChainSpectrum bulk =
        diagonalize_chain({p.free_sites, lattice.spacing, k, ChainBoundary::FreeExtended});
    const double phi = wall.entry(p.wall_i, p.wall_j, -0.5) - bulk.entry(p.free_i, p.free_j, -0.5);
    const double pi_ = wall.entry(p.wall_i, p.wall_j, 0.5) - bulk.entry(p.free_i, p.free_j, 0.5);
    // d^2k/(2 pi)^2 -> k dk J0(k r) / (2 pi); lattice -> continuum fields: 1/h.
    const double weight = rule.weights[q] * k * std::cyl_bessel_j(0.0, k * r) /
                          (2.0 * pi * lattice.spacing);
    c_terms[q] = weight * 0.5 * phi;
    d_terms[q] = weight * 0.5 * pi_;
  });
  for (std::size_t q = 0; q < rule.size(); ++q) {
    out.c_est += c_terms[q];
    out.d_est += d_terms[q];
  }
  return out;
}

std::vector<OracleComparison> oracle_report(const std::vector<LatticeGeometry>& geometries,
                                            const LatticeResolution& lattice) {
  std::vector<OracleComparison> rows;
  for (const auto& g : geometries) {
    const HalfspaceEstimate est = halfspace_component(g.z, g.z_prime, g.r, lattice);
    const ComponentSet exact = components({g.r, g.z, g.z_prime, std::min(g.z, g.z_prime)});
    auto row = [&](const char* name, double closed, double estimate) {
      return OracleComparison{name,     g.z,     g.z_prime, g.r, closed, estimate,
                              (estimate - closed) / std::abs(closed), lattice.spacing,
                              lattice.sites, lattice.k_nodes};
    };
    rows.push_back(row("c", exact.c, est.c_est));
    rows.push_back(row("d", exact.d, est.d_est));
  }
  return rows;
}

std::vector<LatticeGeometry> standard_lattice_geometries() {
  return {{1.0, 1.0, 0.0}, {1.0, 2.0, 0.0}, {1.5, 1.5, 0.0}, {1.0, 1.0, 1.0}};
}

}  // namespace vacsep
