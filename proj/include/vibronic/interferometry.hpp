#ifndef VIBRONIC_INTERFEROMETRY_HPP
#define VIBRONIC_INTERFEROMETRY_HPP

#include <functional>

#include "vibronic/observables.hpp"
#include "vibronic/pulses.hpp"

namespace vibronic {

/// Delays and phase-locking angles of the four-pulse sequence
/// A_y B_x C_x D_x. Times are in raw units (1/omega); t_w defaults to half
/// a vibrational period to keep a single transfer act inside the sequence.
struct Schedule {
  double t_p = 0.0;
  double t_w = M_PI;
  double t_d = 0.0;
  double phi_p = 0.0;  // Phi_B - Phi_A
  double phi_d = 0.0;  // Phi_D - Phi_C
  double theta = 1.0;  // common pulse strength

  static Schedule in_tau(double tp_tau, double tw_tau, double td_tau, const DimerParams& p) {
    return {tp_tau * p.tau_vib(), tw_tau * p.tau_vib(), td_tau * p.tau_vib(), 0.0, 0.0, 1.0};
  }
};

/// Ket side of the detected pathway: ground state promoted to the donor by
/// B_x, evolved for t_w under the full Hamiltonian (transfer included),
/// projected onto the acceptor block.
StateVector target_wavepacket(const Schedule& s, const DimerParams& params,
                              const EigenSystem& eig);

/// Bra side: A_y from the ground state, free evolution t_p + t_w + t_d,
/// D_x up, backward evolution -t_d, C_x down, projected onto the acceptor
/// block. Pass a J-disabled eigensystem to reproduce the closed-form
/// coherent reference trajectories.
StateVector reference_wavepacket(const Schedule& s, const DimerParams& params,
                                 const EigenSystem& eig_ref);

/// Locking factor e^{-i(Omega_p t_p - Omega_d t_d)} applied to the detected
/// pathway overlap.
Complex locking_factor(const Schedule& s, const DimerParams& params);

/// The isolated interferometry pathway: locking factor times
/// overlap(reference, target) over the acceptor block.
Complex interference_term(const Schedule& s, const DimerParams& params, const EigenSystem& eig,
                          const EigenSystem& eig_ref);

/// Quadrilinear fluorescence population 2 Re{<ref|target>_1'} at the
/// schedule's phase-locking angles. The remaining quadrilinear processes
/// vanish at the detection time in this representation.
double quadrilinear_population(const Schedule& s, double phi_p, double phi_d,
                               const DimerParams& params, const EigenSystem& eig,
                               const EigenSystem& eig_ref);

/// Phase-cycling combination (1/4){P(0,0) - P(pi/2,-pi/2) + i P(pi/2,0)
/// - i P(0,pi/2)} isolating the pathway coefficient.
Complex phase_cycle_isolate(double p_00, double p_hp_mh, double p_hp_0, double p_0_hp);

/// Shared immutable evaluation context for interferogram scans:
/// diagonalize once, evaluate the signal at many delay pairs.
class SignalEvaluator {
 public:
  SignalEvaluator(const DimerParams& params, int cutoff, double t_w, bool j_active_reference,
                  double theta = 1.0);

  /// Normalized signal W(t_p, t_d) = locking * <ref|target> / theta^4.
  Complex operator()(double t_p, double t_d) const;

  const EigenSystem& eig() const { return eig_; }
  const DimerParams& params() const { return params_; }
  double t_w() const { return t_w_; }

 private:
  DimerParams params_;
  double t_w_;
  double theta_;
  EigenSystem eig_;
  EigenSystem eig_ref_;
  bool j_ref_;
  Eigen::VectorXcd ref_seed_;      // eigen coefficients of A_y|0>
  Eigen::VectorXcd target_block_;  // acceptor block of the target packet
};

struct InterferogramGrid {
  Eigen::VectorXd tp;  // strictly increasing, raw time units
  Eigen::VectorXd td;
  Eigen::MatrixXcd signal;  // row = tp index, col = td index
};

struct InterferogramSpec {
  int n_tp = 64;
  int n_td = 64;
  double tp_min = 0.0, tp_max = 0.0;  // raw units; max <= min means [0, 2 tau]
  double td_min = 0.0, td_max = 0.0;
  int workers = 0;  // 0 = hardware concurrency
};

InterferogramGrid interferogram_scan(const InterferogramSpec& spec, const SignalEvaluator& eval);

struct PeakReport {
  double tp_star = 0.0, td_star = 0.0;  // raw units
  Complex rate_tp, rate_td;             // -i d(ln W)/dt at the maximum, units of omega
  double magnitude = 0.0;
};

/// Grid-only analysis: parabolic sub-cell peak refinement plus phase
/// gradients by central differences at the peak cell.
PeakReport peak_and_fringe_analysis(const InterferogramGrid& grid);

/// Refined analysis: iterative 8x local re-evaluation around the grid
/// maximum, then central differences on the exact signal.
PeakReport analyze_peak(const InterferogramGrid& grid, const SignalEvaluator& eval);

/// Closed-form semiclassical matching delays, in units of tau_vib:
/// t_p = (m + 1 - A/2), t_d = (n + A/2). `a_frac` is the transfer instant
/// as a fraction of the waiting time t_w.
struct MatchPoint {
  double tp_tau, td_tau;
};
MatchPoint semiclassical_match(double a_frac, int m, int n);

/// Direct numerical root of the phase-space matching conditions on the
/// coherent-trajectory model; requires t_w = tau/2.
MatchPoint semiclassical_match_root(double a_frac, int m, int n, const DimerParams& params,
                                    double t_w);

/// Per-mode mean position/momentum of the target packet over a time range.
Trajectory target_phase_space(const DimerParams& params, const EigenSystem& eig, double t0,
                              double t1, int samples);

}  // namespace vibronic

#endif
