#ifndef VIBRONIC_HAMILTONIAN_HPP
#define VIBRONIC_HAMILTONIAN_HPP

#include <iosfwd>
#include <utility>

#include "vibronic/franck_condon.hpp"
#include "vibronic/model.hpp"

namespace vibronic {

/// Dense real-symmetric dimer Hamiltonian in the truncated vibronic basis,
/// energies in units of omega.
struct HamiltonianMatrix {
  BasisPtr basis;
  Eigen::MatrixXd mat;
};

HamiltonianMatrix build_hamiltonian(const DimerParams& params, BasisPtr basis);

/// Nuclear overlap matrix <to, M', N' | from, M, N> between the oscillator
/// bases of two electronic surfaces, restricted to the cutoff triangle.
/// This is the Condon nuclear-identity block used by both the dipole
/// operators and the J-coupling assembly.
Eigen::MatrixXd surface_overlap_matrix(ElectronicState to, ElectronicState from,
                                       const DimerParams& params, const VibronicBasis& basis);

struct DiabaticPotentials {
  double v0, v1, v1p, v2;
};

DiabaticPotentials diabatic_potentials(double qa, double qb, const DimerParams& params);

/// Locus v1 = v1': qb = qa - (eps1 - eps1')/(m omega^2 d).
struct RidgeLine {
  double offset;  // qb(qa) = qa + offset
  double qb(double qa) const { return qa + offset; }
};

RidgeLine ridge_line(const DimerParams& params);  // throws NumericalError when d == 0

/// Lower/upper adiabatic one-exciton surfaces: exact eigenvalues of
/// [[v1, J], [J, v1']].
std::pair<double, double> adiabatic_surfaces(double qa, double qb, const DimerParams& params);

/// Debug dump: "row,col,value" for non-zero entries, row-major order.
void dump_csv(const HamiltonianMatrix& h, std::ostream& os);

}  // namespace vibronic

#endif
