#ifndef VIBRONIC_OBSERVABLES_HPP
#define VIBRONIC_OBSERVABLES_HPP

#include <string>
#include <vector>

#include "vibronic/model.hpp"
#include "vibronic/spectral.hpp"

namespace vibronic {

/// Electronic population of block j; populations over all blocks sum to |psi|^2.
double population(const StateVector& psi, ElectronicState j);

/// Block-restricted inner product, conjugate-linear in the first argument,
/// so overlap(psi, psi, j) reduces to population(psi, j).
Complex overlap(const StateVector& psi_tilde, const StateVector& psi, ElectronicState j);

struct MeanPoint {
  double a = 0.0, b = 0.0;
};

/// Mean nuclear position (absolute coordinates) of the block-j packet,
/// normalized by the block population. Undefined for an empty block.
MeanPoint mean_position(const StateVector& psi, ElectronicState j, const DimerParams& params);
MeanPoint mean_momentum(const StateVector& psi, ElectronicState j, const DimerParams& params);

/// Ladder expectation <a> per mode over block j, relative to the surface-j
/// minimum, normalized by the block population.
std::pair<Complex, Complex> mean_ladder(const StateVector& psi, ElectronicState j);

/// Expected vibrational quanta <N_a>, <N_b> over block j (not normalized
/// by block population when `normalized` is false).
std::pair<double, double> mean_quanta(const StateVector& psi, ElectronicState j,
                                      bool normalized = true);

struct GridSpec {
  double qa_min, qa_max;
  int na;
  double qb_min, qb_max;
  int nb;
  double qa(int i) const { return qa_min + (qa_max - qa_min) * i / (na - 1); }
  double qb(int i) const { return qb_min + (qb_max - qb_min) * i / (nb - 1); }
};

/// Harmonic oscillator eigenfunction phi_n centered at c, unit mass*omega
/// scale set by params; evaluated by the stable upward recurrence.
double oscillator_eigenfunction(int n, double q, double center, const DimerParams& params);

/// Coordinate-space wavefunction of the block-j packet on a rectangular
/// grid (row index a, column index b).
Eigen::MatrixXcd wavefunction_grid(const StateVector& psi, ElectronicState j,
                                   const GridSpec& grid, const DimerParams& params);

/// Sum of block wavefunctions, e.g. the one-exciton field psi_1 + psi_1'.
Eigen::MatrixXcd wavefunction_grid(const StateVector& psi,
                                   const std::vector<ElectronicState>& blocks,
                                   const GridSpec& grid, const DimerParams& params);

/// Short-time envelope (1/2) e^{-Lambda/(2 omega)} J^2 t^2, valid t << 1/(2J).
double short_time_law(double t, const DimerParams& params);

/// Perturbative donor-acceptor pair-level sum: each initially populated
/// donor level drives each acceptor level as an isolated two-level system
/// with coupling J*FC and splitting Omega_lk.
double pair_level_population(const HamiltonianMatrix& h, const StateVector& psi0, double t);

/// Jaynes-Cummings population formula e^{-|a|^2} sum_N |a|^{2N}/N! cos^2(g sqrt(N+1) t).
double jcm_curve(double t, double g, double alpha);

/// First ridge-crossing time of the Franck-Condon trajectory as a fraction
/// of the vibrational period: arccos(1 - deteps/(2 Lambda)) / (2 pi).
/// Signals when the ridge is unreachable.
double transfer_instant(const DimerParams& params);

/// Exact time average (1/T) int_0^T P_j(t) dt in the eigenbasis.
double time_averaged_population(const EigenSystem& eig, const StateVector& psi0,
                                ElectronicState j, double t_total);

/// Sampled time series of an observable; written as CSV columns.
struct Trajectory {
  std::vector<std::string> columns;  // first column is "t"
  Eigen::MatrixXd data;              // one row per sample
};

Trajectory population_trajectory(const EigenSystem& eig, const StateVector& psi0,
                                 const std::vector<double>& times);
Trajectory mean_position_trajectory(const EigenSystem& eig, const StateVector& psi0,
                                    ElectronicState j, const std::vector<double>& times,
                                    const DimerParams& params);

std::vector<double> linspace(double a, double b, int n);

}  // namespace vibronic

#endif
