#ifndef VIBRONIC_PULSES_HPP
#define VIBRONIC_PULSES_HPP

#include <vector>

#include "vibronic/model.hpp"
#include "vibronic/spectral.hpp"

namespace vibronic {

enum class Polarization { X, Y };

Polarization polarization_from_string(const std::string& name);

/// Impulsive polarized pulse. Polarization x addresses mu_a transitions
/// (|0>-|1> and |1'>-|2>), y addresses mu_b (|0>-|1'> and |1>-|2>).
struct PulseSpec {
  char label = 'A';
  Polarization pol = Polarization::X;
  double t_arrival = 0.0;
  double phase = 0.0;     // locked phase Phi_I
  double carrier = 0.0;   // Omega_I, bookkeeping only
  double strength = 1.0;  // dimensionless area theta
};

/// Which first-order piece of the pulse propagator acts: exciton number
/// raised, lowered, or both.
enum class PulseAction { Up, Down, Both };

/// First order of the pulse-dimer interaction in the impulsive limit:
/// -i theta e^{-i Phi} (raising block) and/or -i theta e^{+i Phi}
/// (lowering block). The Condon vertex keeps the nuclear wavefunction
/// intact, which in the surface-adapted bases is the displacement-matrix
/// block between the two surfaces.
StateVector apply_pulse_first_order(const StateVector& psi, const PulseSpec& pulse,
                                    PulseAction action, const DimerParams& params);

struct TrainStep {
  PulseSpec pulse;
  PulseAction action = PulseAction::Up;
  double wait_after = 0.0;  // free evolution gap following the pulse
};

/// Alternates first-order pulse actions and free evolution.
StateVector pulse_train(const StateVector& psi0, const std::vector<TrainStep>& schedule,
                        const EigenSystem& eig, const DimerParams& params);

}  // namespace vibronic

#endif
