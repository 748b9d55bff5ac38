#ifndef VIBRONIC_STATES_HPP
#define VIBRONIC_STATES_HPP

#include "vibronic/model.hpp"

namespace vibronic {

/// Frame of the coherent amplitudes: relative to the chosen surface's own
/// minimum, or relative to the ground potential. Frame conversion shifts
/// the displaced mode amplitudes by delta = sqrt(m omega / 2) d.
enum class AmplitudeFrame { SurfaceRelative, Ground };

struct CoherentSpec {
  ElectronicState surface = ElectronicState::Donor;
  Complex alpha;  // mode a
  Complex beta;   // mode b
  AmplitudeFrame frame = AmplitudeFrame::SurfaceRelative;
};

/// Two-mode coherent state on one electronic surface, expanded over number
/// states and truncated at the cutoff. Rejects states whose truncation
/// loss 1 - |psi|^2 exceeds 1e-6.
StateVector coherent_state(const CoherentSpec& spec, const DimerParams& params, BasisPtr basis);

/// Nuclear ground state of `from` promoted vertically onto `surface`
/// (the Franck-Condon excitation when from = ground).
StateVector franck_condon_excitation(ElectronicState surface, const DimerParams& params,
                                     BasisPtr basis);

enum class ExcitationDirection { ModeA, ModeB, Parallel, Perpendicular, Circular };

ExcitationDirection excitation_direction_from_string(const std::string& name);

struct RotatedSpec {
  ExcitationDirection direction = ExcitationDirection::ModeA;
  double gamma = 0.0;  // total amplitude, gamma^2 quanta of vibrational energy
  double phi = 0.0;
};

/// Surface-relative coherent excitation of gamma^2 quanta apportioned along
/// one nuclear direction: mode a, mode b, q_par, q_perp, or circular.
StateVector rotated_coherent(const RotatedSpec& spec, ElectronicState surface,
                             const DimerParams& params, BasisPtr basis);

/// Fock state with p quanta along q_par and q quanta along q_perp, built by
/// applying the rotated raising operators to |j,0,0>. Requires p + q <= cutoff.
StateVector fock_rotated(int p, int q, ElectronicState surface, BasisPtr basis);

/// Frame conversion of coherent amplitudes for surface j.
std::pair<Complex, Complex> to_ground_frame(Complex alpha_rel, Complex beta_rel,
                                            ElectronicState j, const DimerParams& params);
std::pair<Complex, Complex> to_surface_frame(Complex alpha_ground, Complex beta_ground,
                                             ElectronicState j, const DimerParams& params);

}  // namespace vibronic

#endif
