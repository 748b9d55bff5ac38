#ifndef VIBRONIC_SPECTRAL_HPP
#define VIBRONIC_SPECTRAL_HPP

#include <vector>

#include "vibronic/hamiltonian.hpp"
#include "vibronic/model.hpp"

namespace vibronic {

/// Eigenvalues (ascending) and the transfer matrix T whose column l holds
/// eigenvector v^l in the diabatic basis. Immutable after construction;
/// safe to share across threads.
struct EigenSystem {
  BasisPtr basis;
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;

  /// Coefficients of psi in the eigenbasis, c = T^T psi.
  Eigen::VectorXcd to_eigenbasis(const Eigen::VectorXcd& psi) const;
  /// psi = T c with per-eigenstate phases exp(-i lambda t) applied first.
  Eigen::VectorXcd from_eigenbasis_at(const Eigen::VectorXcd& coeffs, double t) const;
};

EigenSystem diagonalize(const HamiltonianMatrix& h);

/// psi(t) = T diag(e^{-i lambda t}) T^T psi(0); norm-conserving.
StateVector propagate(const StateVector& psi0, double t, const EigenSystem& eig);

struct EigenstateMomentum {
  double p_par_mean, p_perp_mean;  // first moments (zero for real eigenvectors)
  double p_par_rms, p_perp_rms;    // sqrt(<p^2>) along the rotated modes
};

/// Momentum structure of every eigenstate, rotated into
/// p_par = (p_a + p_b)/sqrt(2) and p_perp = (-p_a + p_b)/sqrt(2).
std::vector<EigenstateMomentum> eigen_momentum_map(const EigenSystem& eig,
                                                   const DimerParams& params);

/// Expansion weights |<l|psi>|^2 of a diabatic state over the eigenbasis.
Eigen::VectorXd eigen_weights(const EigenSystem& eig, const StateVector& psi);

/// FNV-1a hash of the matrix bytes; used to tag solver failures.
unsigned long long matrix_hash(const Eigen::MatrixXd& m);

}  // namespace vibronic

#endif
