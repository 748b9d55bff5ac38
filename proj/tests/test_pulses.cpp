#include <doctest.h>

#include "oracles.hpp"
#include "vibronic/observables.hpp"
#include "vibronic/pulses.hpp"
#include "vibronic/states.hpp"

using namespace vibronic;

namespace {

const DimerParams kP = [] {
  DimerParams p;
  p.coupling = 0.1;
  return p;
}();

StateVector vacuum(BasisPtr basis) {
  StateVector psi(std::move(basis));
  psi.amp(psi.basis->index_of(ElectronicState::Ground, 0, 0)) = 1.0;
  return psi;
}

}  // namespace

TEST_CASE("x-pulse promotes the ground packet to the donor franck-condon state") {
  const auto basis = make_full_basis(17);
  const PulseSpec pulse{'B', Polarization::X, 0.0, 0.0, 0.0, 1.0};
  const StateVector up = apply_pulse_first_order(vacuum(basis), pulse, PulseAction::Up, kP);
  const StateVector fc = franck_condon_excitation(ElectronicState::Donor, kP, basis);
  // equal to -i theta |fc>
  CHECK((up.amp - Complex(0.0, -1.0) * fc.amp).cwiseAbs().maxCoeff() < 1e-7);
  CHECK(population(up, ElectronicState::Acceptor) == 0.0);
  CHECK(population(up, ElectronicState::Biexciton) == 0.0);
}

TEST_CASE("y-pulse on donor amplitude reaches only the biexciton block") {
  const auto basis = make_full_basis(20);
  StateVector psi(basis);
  psi.amp(basis->index_of(ElectronicState::Donor, 1, 0)) = 1.0;
  const PulseSpec pulse{'A', Polarization::Y, 0.0, 0.3, 0.0, 1.0};
  const StateVector out = apply_pulse_first_order(psi, pulse, PulseAction::Up, kP);
  CHECK(population(out, ElectronicState::Ground) == 0.0);
  CHECK(population(out, ElectronicState::Donor) == 0.0);
  CHECK(population(out, ElectronicState::Acceptor) == 0.0);
  CHECK(population(out, ElectronicState::Biexciton) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("selection rules in first order") {
  const auto basis = make_full_basis(10);
  const StateVector vac = vacuum(basis);
  const StateVector ux = apply_pulse_first_order(vac, {'B', Polarization::X, 0, 0, 0, 1},
                                                 PulseAction::Up, kP);
  CHECK(population(ux, ElectronicState::Acceptor) == 0.0);
  const StateVector uy = apply_pulse_first_order(vac, {'A', Polarization::Y, 0, 0, 0, 1},
                                                 PulseAction::Up, kP);
  CHECK(population(uy, ElectronicState::Donor) == 0.0);
}

TEST_CASE("exciton number changes by one per application") {
  const auto basis = make_full_basis(20);
  const StateVector vac = vacuum(basis);
  const StateVector one = apply_pulse_first_order(vac, {'B', Polarization::X, 0, 0, 0, 1},
                                                  PulseAction::Up, kP);
  CHECK(population(one, ElectronicState::Ground) == 0.0);
  const StateVector two = apply_pulse_first_order(one, {'C', Polarization::Y, 0, 0, 0, 1},
                                                  PulseAction::Up, kP);
  CHECK(population(two, ElectronicState::Donor) == 0.0);
  CHECK(population(two, ElectronicState::Acceptor) == 0.0);
  CHECK(population(two, ElectronicState::Biexciton) > 0.0);
  const StateVector down = apply_pulse_first_order(one, {'C', Polarization::X, 0, 0, 0, 1},
                                                   PulseAction::Down, kP);
  CHECK(population(down, ElectronicState::Ground) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("two successive up pulses build theta^4 biexciton population") {
  const auto basis = make_full_basis(24);
  const double theta = 0.8;
  const StateVector x = apply_pulse_first_order(vacuum(basis), {'B', Polarization::X, 0, 0.9, 0, theta},
                                                PulseAction::Up, kP);
  const StateVector xy = apply_pulse_first_order(x, {'C', Polarization::Y, 0, -0.4, 0, theta},
                                                 PulseAction::Up, kP);
  CHECK(population(xy, ElectronicState::Biexciton) ==
        doctest::Approx(std::pow(theta, 4)).epsilon(1e-5));
  // phases do not affect the single-pathway population
  const StateVector x2 = apply_pulse_first_order(vacuum(basis), {'B', Polarization::X, 0, 0, 0, theta},
                                                 PulseAction::Up, kP);
  const StateVector xy2 = apply_pulse_first_order(x2, {'C', Polarization::Y, 0, 0, 0, theta},
                                                  PulseAction::Up, kP);
  CHECK(population(xy2, ElectronicState::Biexciton) ==
        doctest::Approx(population(xy, ElectronicState::Biexciton)).epsilon(1e-12));
}

TEST_CASE("linearity in the pulse strength") {
  const auto basis = make_full_basis(10);
  const StateVector a = apply_pulse_first_order(vacuum(basis), {'B', Polarization::X, 0, 0.2, 0, 0.5},
                                                PulseAction::Up, kP);
  const StateVector b = apply_pulse_first_order(vacuum(basis), {'B', Polarization::X, 0, 0.2, 0, 1.5},
                                                PulseAction::Up, kP);
  CHECK((b.amp - 3.0 * a.amp).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("condon vertex preserves the nuclear norm") {
  const auto basis = make_full_basis(20);
  StateVector psi(basis);
  // a mildly excited nuclear packet in the ground block
  const StateVector coh = coherent_state({ElectronicState::Ground, 0.7, -0.5}, kP, basis);
  psi.amp = coh.amp;
  const StateVector up = apply_pulse_first_order(psi, {'B', Polarization::X, 0, 0, 0, 1.0},
                                                 PulseAction::Up, kP);
  CHECK(up.norm() == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("missing target block is reported") {
  const auto basis = make_one_exciton_basis(6);  // no ground, no biexciton
  StateVector psi(basis);
  psi.amp(basis->index_of(ElectronicState::Acceptor, 0, 0)) = 1.0;
  CHECK_THROWS_AS(
      apply_pulse_first_order(psi, {'D', Polarization::X, 0, 0, 0, 1}, PulseAction::Up, kP),
      std::invalid_argument);
}

TEST_CASE("pulse trains") {
  const auto basis = make_full_basis(18);
  DimerParams p = kP;
  p.coupling = 0.0;
  const auto eig = diagonalize(build_hamiltonian(p, basis));
  const double tau = p.tau_vib();

  SUBCASE("single pulse with zero wait equals the bare application") {
    const PulseSpec b{'B', Polarization::X, 0, 0, 0, 1.0};
    const StateVector lhs = pulse_train(vacuum(basis), {{b, PulseAction::Up, 0.0}}, eig, p);
    const StateVector rhs = apply_pulse_first_order(vacuum(basis), b, PulseAction::Up, p);
    CHECK((lhs.amp - rhs.amp).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("y/x/y quarter-period train launches the circular donor orbit") {
    // smaller displacement keeps the 5 delta^2 quanta of the final packet
    // well inside the cutoff
    DimerParams ps = p;
    ps.d = 1.0;
    const auto eig_s = diagonalize(build_hamiltonian(ps, basis));
    const std::vector<TrainStep> train = {
        {{'A', Polarization::Y, 0, 0, 0, 1.0}, PulseAction::Up, 0.25 * tau},
        {{'B', Polarization::X, 0, 0, 0, 1.0}, PulseAction::Up, 0.25 * tau},
        {{'C', Polarization::Y, 0, 0, 0, 1.0}, PulseAction::Down, 0.0}};
    const StateVector psi = pulse_train(vacuum(basis), train, eig_s, ps);
    CHECK(population(psi, ElectronicState::Donor) > 0.999);  // only truncation loss
    const auto q = mean_position(psi, ElectronicState::Donor, ps);
    // packet lands at (d, 2d): a circle of radius 2d about the donor minimum
    CHECK(q.a == doctest::Approx(ps.d).epsilon(1e-6));
    CHECK(q.b == doctest::Approx(2.0 * ps.d).epsilon(1e-6));
    const double r = std::hypot(q.a - ps.d, q.b);
    CHECK(r == doctest::Approx(2.0 * ps.d).epsilon(1e-6));
  }

  SUBCASE("up, half period, down returns to the ground block at the far turning point") {
    const std::vector<TrainStep> train = {
        {{'B', Polarization::X, 0, 0, 0, 1.0}, PulseAction::Up, 0.5 * tau},
        {{'C', Polarization::X, 0, 0, 0, 1.0}, PulseAction::Down, 0.0}};
    const StateVector psi = pulse_train(vacuum(basis), train, eig, p);
    CHECK(population(psi, ElectronicState::Donor) == 0.0);
    CHECK(population(psi, ElectronicState::Acceptor) == 0.0);
    const StateVector vac = vacuum(basis);
    const double delta = p.delta();
    // |<0|coherent(2 delta)>| in the a-mode
    const double expected = std::abs(oracle::coherent_overlap(0.0, 0.0, 2.0 * delta, 0.0));
    CHECK(std::abs(vac.amp.dot(psi.amp)) == doctest::Approx(expected).epsilon(1e-5));
  }
}
