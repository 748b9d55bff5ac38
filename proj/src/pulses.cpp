#include "vibronic/pulses.hpp"

#include <cmath>

#include "vibronic/hamiltonian.hpp"

namespace vibronic {

Polarization polarization_from_string(const std::string& name) {
  if (name == "x" || name == "X") return Polarization::X;
  if (name == "y" || name == "Y") return Polarization::Y;
  throw std::invalid_argument("unknown polarization '" + name + "'");
}

namespace {

struct Channel {
  ElectronicState lower, upper;
};

std::array<Channel, 2> channels(Polarization pol) {
  if (pol == Polarization::X)
    return {{{ElectronicState::Ground, ElectronicState::Donor},
             {ElectronicState::Acceptor, ElectronicState::Biexciton}}};
  return {{{ElectronicState::Ground, ElectronicState::Acceptor},
           {ElectronicState::Donor, ElectronicState::Biexciton}}};
}

void add_channel(StateVector& out, const StateVector& psi, ElectronicState from,
                 ElectronicState to, Complex factor, const DimerParams& params) {
  const auto& b = *psi.basis;
  const int bs = b.block_size();
  if (!b.has_state(from)) return;
  const double src_norm = psi.amp.segment(b.block_offset(from), bs).norm();
  if (src_norm <= 1e-300) return;
  if (!b.has_state(to))
    throw std::invalid_argument("apply_pulse_first_order: target block " + to_string(to) +
                                " absent from basis");
  const Eigen::MatrixXd fc = surface_overlap_matrix(to, from, params, b);
  const auto src = psi.amp.segment(b.block_offset(from), bs);
  Eigen::VectorXd re = fc * src.real();
  Eigen::VectorXd im = fc * src.imag();
  out.amp.segment(b.block_offset(to), bs) += factor * (re + Complex(0.0, 1.0) * im).eval();
}

}  // namespace

StateVector apply_pulse_first_order(const StateVector& psi, const PulseSpec& pulse,
                                    PulseAction action, const DimerParams& params) {
  StateVector out(psi.basis);
  const Complex minus_i(0.0, -1.0);
  const auto ch = channels(pulse.pol);
  if (action == PulseAction::Up || action == PulseAction::Both) {
    const Complex f = minus_i * pulse.strength * std::polar(1.0, -pulse.phase);
    for (const auto& c : ch) add_channel(out, psi, c.lower, c.upper, f, params);
  }
  if (action == PulseAction::Down || action == PulseAction::Both) {
    const Complex f = minus_i * pulse.strength * std::polar(1.0, +pulse.phase);
    for (const auto& c : ch) add_channel(out, psi, c.upper, c.lower, f, params);
  }
  return out;
}

StateVector pulse_train(const StateVector& psi0, const std::vector<TrainStep>& schedule,
                        const EigenSystem& eig, const DimerParams& params) {
  StateVector psi = psi0;
  for (const auto& step : schedule) {
    if (step.wait_after < 0.0) throw std::invalid_argument("pulse_train: negative wait");
    psi = apply_pulse_first_order(psi, step.pulse, step.action, params);
    if (step.wait_after > 0.0) psi = propagate(psi, step.wait_after, eig);
  }
  return psi;
}

}  // namespace vibronic
