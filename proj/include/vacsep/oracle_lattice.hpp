// Copyright 2026 The vacsep Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oracle_lattice.hpp
 * @brief Brute-force lattice check of the regularized field correlations.
 *
 * The half-space is discretized along z only. After a transverse Fourier
 * transform every k_perp decouples into a 1D harmonic chain with stiffness
 * K = tridiag(-1/h^2, 2/h^2 + k_perp^2, -1/h^2); its ground state has
 * <q q> = K^{-1/2}/2 and <p p> = K^{1/2}/2 in lattice variables q_j = sqrt(h) phi(z_j).
 * The wall chain fixes phi = 0 at z = 0; the reference chain is an open chain
 * with the probes deep in its bulk. Their difference, integrated over k_perp
 * with a J0(k_perp r) weight, estimates the image-term correlations c and d.
 */

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace vacsep {

enum class ChainBoundary {
  DirichletWall,  ///< fixed ends: phi vanishes one site beyond each end
  FreeExtended,   ///< open ends; has a zero mode at k_perp = 0
};

struct ChainSpec {
  int sites = 256;
  double spacing = 0.125;
  double k_perp = 0.0;
  ChainBoundary boundary = ChainBoundary::DirichletWall;

  void validate() const;
};

/// Eigen-decomposition of a chain's stiffness matrix.
struct ChainSpectrum {
  Eigen::VectorXd eigenvalues;  ///< ascending
  Eigen::MatrixXd vectors;      ///< orthonormal columns

  /// (K^power)_{ij}.
  double entry(int i, int j, double power) const;
};

/// Diagonalizes the symmetric tridiagonal stiffness matrix. Throws
/// ConvergenceError for a non-positive eigenvalue (the open chain at k_perp = 0).
ChainSpectrum diagonalize_chain(const ChainSpec& spec);

struct ChainCovariance {
  Eigen::MatrixXd phi_phi;  ///< K^{-1/2} / 2
  Eigen::MatrixXd pi_pi;    ///< K^{+1/2} / 2
};

/// Ground-state covariances in lattice variables. O(sites^3); meant for
/// moderate chains. The half-space estimate works from the spectrum directly.
ChainCovariance chain_ground_covariance(const ChainSpec& spec);

struct LatticeResolution {
  double spacing = 0.125;
  int sites = 256;             ///< wall chain length
  int k_nodes = 64;            ///< Gauss-Legendre nodes in k_perp
  int free_extension = 4;      ///< reference chain has free_extension * sites + 1 sites
  double k_cutoff = 40.0;      ///< k_perp integrated up to k_cutoff / (z + z')
  unsigned workers = 1;

  void validate() const;
};

struct HalfspaceEstimate {
  double c_est = 0.0;
  double d_est = 0.0;
  int z_sites = 0;
  int zprime_sites = 0;
  double k_max = 0.0;
};

/// Lattice estimates of c and d at wall distances z, z' and transverse offset r.
/// z and z' must be whole multiples of the spacing and at least 8 sites from the
/// wall. Throws PreconditionError for geometries the lattice cannot resolve.
HalfspaceEstimate halfspace_component(double z, double z_prime, double r,
                                      const LatticeResolution& lattice = {});

/// Field correlation per transverse mode, <phi phi>(z, z'; k_perp), for the
/// wall chain or the open reference chain, in continuum normalization.
double chain_field_correlation(double z, double z_prime, double k_perp, ChainBoundary boundary,
                               const LatticeResolution& lattice = {});

struct LatticeGeometry {
  double z = 1.0;
  double z_prime = 1.0;
  double r = 0.0;
};

/// One row of an oracle-versus-closed-form table.
struct OracleComparison {
  std::string quantity;  ///< "c" or "d"
  double z = 0.0;
  double z_prime = 0.0;
  double r = 0.0;
  double closed_form = 0.0;
  double estimate = 0.0;
  double relative_error = 0.0;
  double spacing = 0.0;
  int sites = 0;
  int k_nodes = 0;
};

/// c and d rows for every geometry, compared against the closed forms.
std::vector<OracleComparison> oracle_report(const std::vector<LatticeGeometry>& geometries,
                                            const LatticeResolution& lattice = {});

/// Four geometries at z = 8..16 sites of the default spacing.
std::vector<LatticeGeometry> standard_lattice_geometries();

}  // namespace vacsep
