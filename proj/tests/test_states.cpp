#include <doctest.h>

#include "oracles.hpp"
#include "vibronic/observables.hpp"
#include "vibronic/spectral.hpp"
#include "vibronic/states.hpp"

using namespace vibronic;

namespace {

const DimerParams kP = [] {
  DimerParams p;
  p.coupling = 0.1;
  return p;
}();

}  // namespace

TEST_CASE("vacuum amplitudes give the pure number state") {
  const auto basis = make_one_exciton_basis(6);
  const StateVector psi = coherent_state({ElectronicState::Donor, 0.0, 0.0}, kP, basis);
  CHECK(std::abs(psi.amp(basis->index_of(ElectronicState::Donor, 0, 0)) - 1.0) < 1e-15);
  CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("franck-condon excitation is the -delta coherent state on the donor") {
  const auto basis = make_one_exciton_basis(17);
  const StateVector fc = franck_condon_excitation(ElectronicState::Donor, kP, basis);
  const StateVector coh =
      coherent_state({ElectronicState::Donor, -kP.delta(), 0.0}, kP, basis);
  CHECK((fc.amp - coh.amp).cwiseAbs().maxCoeff() < 1e-14);
  // vertical energy above the donor minimum: E_FC of vibrational quanta
  const auto [na, nb] = mean_quanta(fc, ElectronicState::Donor);
  CHECK(na * kP.omega == doctest::Approx(kP.lambda()).epsilon(1e-6));
  CHECK(nb == doctest::Approx(0.0));
  const auto q = mean_position(fc, ElectronicState::Donor, kP);
  CHECK(std::abs(q.a) < 2e-6);  // truncation shifts the mean slightly
  CHECK(std::abs(q.b) < 1e-12);
}

TEST_CASE("number expectations match the amplitudes") {
  const auto basis = make_one_exciton_basis(20);
  const Complex alpha(0.9, -0.4), beta(-0.6, 0.2);
  const StateVector psi = coherent_state({ElectronicState::Acceptor, alpha, beta}, kP, basis);
  const auto [na, nb] = mean_quanta(psi, ElectronicState::Acceptor);
  CHECK(na == doctest::Approx(std::norm(alpha)).epsilon(1e-8));
  CHECK(nb == doctest::Approx(std::norm(beta)).epsilon(1e-8));
}

TEST_CASE("mean position follows the ground-frame amplitude") {
  const auto basis = make_one_exciton_basis(18);
  const Complex alpha(0.8, 0.3);
  const StateVector psi = coherent_state({ElectronicState::Donor, alpha, 0.0}, kP, basis);
  const auto q = mean_position(psi, ElectronicState::Donor, kP);
  const auto [ag, bg] = to_ground_frame(alpha, 0.0, ElectronicState::Donor, kP);
  CHECK(q.a == doctest::Approx(std::sqrt(2.0 / (kP.mass * kP.omega)) * ag.real()).epsilon(1e-8));
  CHECK(q.b == doctest::Approx(std::sqrt(2.0 / (kP.mass * kP.omega)) * bg.real()).epsilon(1e-8));
}

TEST_CASE("frame conversion round trip") {
  for (ElectronicState j : kAllStates) {
    const Complex a(0.3, -1.1), b(-0.2, 0.8);
    const auto [ag, bg] = to_ground_frame(a, b, j, kP);
    const auto [ar, br] = to_surface_frame(ag, bg, j, kP);
    CHECK(std::abs(ar - a) < 1e-15);
    CHECK(std::abs(br - b) < 1e-15);
  }
}

TEST_CASE("truncation loss is rejected with a cutoff hint") {
  const auto basis = make_one_exciton_basis(6);
  try {
    coherent_state({ElectronicState::Donor, 3.0, 0.0}, kP, basis);
    FAIL("expected truncation rejection");
  } catch (const NumericalError& e) {
    CHECK(std::string(e.what()).find("raise cutoff") != std::string::npos);
  }
}

TEST_CASE("rotated excitations carry gamma^2 quanta regardless of direction") {
  const auto basis = make_one_exciton_basis(20);
  const double gamma = kP.delta();
  for (auto dir : {ExcitationDirection::ModeA, ExcitationDirection::ModeB,
                   ExcitationDirection::Parallel, ExcitationDirection::Perpendicular,
                   ExcitationDirection::Circular}) {
    const StateVector psi = rotated_coherent({dir, gamma, 0.4}, ElectronicState::Donor, kP, basis);
    const auto [na, nb] = mean_quanta(psi, ElectronicState::Donor);
    CHECK(na + nb == doctest::Approx(gamma * gamma).epsilon(1e-7));
  }
}

TEST_CASE("perpendicular phase flip mirrors the packet through the donor minimum") {
  const auto basis = make_one_exciton_basis(20);
  const double gamma = kP.delta();
  const StateVector p0 = rotated_coherent({ExcitationDirection::Perpendicular, gamma, 0.0},
                                          ElectronicState::Donor, kP, basis);
  const StateVector ppi = rotated_coherent({ExcitationDirection::Perpendicular, gamma, M_PI},
                                           ElectronicState::Donor, kP, basis);
  const auto q0 = mean_position(p0, ElectronicState::Donor, kP);
  const auto qpi = mean_position(ppi, ElectronicState::Donor, kP);
  // mirror through the donor minimum (d, 0)
  CHECK(q0.a - kP.d == doctest::Approx(-(qpi.a - kP.d)).epsilon(1e-8));
  CHECK(q0.b == doctest::Approx(-qpi.b).epsilon(1e-8));
  CHECK(std::abs(q0.b) > 0.1);  // actually displaced along q_perp
}

TEST_CASE("mode-a excitation traces the franck-condon orbit") {
  DimerParams p = kP;
  p.coupling = 0.0;  // pure harmonic motion
  const auto basis = make_one_exciton_basis(20);
  const auto eig = diagonalize(build_hamiltonian(p, basis));
  const StateVector psi =
      rotated_coherent({ExcitationDirection::ModeA, p.delta(), 0.0}, ElectronicState::Donor, p, basis);
  double qa_min = 1e9, qa_max = -1e9;
  for (double t : linspace(0.0, p.tau_vib(), 65)) {
    const auto q = mean_position(propagate(psi, t, eig), ElectronicState::Donor, p);
    CHECK(q.b == doctest::Approx(0.0).epsilon(1e-8));
    qa_min = std::min(qa_min, q.a);
    qa_max = std::max(qa_max, q.a);
  }
  CHECK(qa_min == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(qa_max == doctest::Approx(2.0 * p.d).epsilon(1e-6));
}

TEST_CASE("rotated fock states") {
  const auto basis = make_one_exciton_basis(8);
  SUBCASE("vacuum") {
    const StateVector f = fock_rotated(0, 0, ElectronicState::Donor, basis);
    CHECK(std::abs(f.amp(basis->index_of(ElectronicState::Donor, 0, 0)) - 1.0) < 1e-15);
  }
  SUBCASE("one parallel quantum is the symmetric single-excitation state") {
    const StateVector f = fock_rotated(1, 0, ElectronicState::Donor, basis);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(f.amp(basis->index_of(ElectronicState::Donor, 1, 0)) - inv_sqrt2) < 1e-12);
    CHECK(std::abs(f.amp(basis->index_of(ElectronicState::Donor, 0, 1)) - inv_sqrt2) < 1e-12);
  }
  SUBCASE("orthonormal family") {
    std::vector<StateVector> family;
    for (int p = 0; p + 0 <= 4; ++p)
      for (int q = 0; p + q <= 4; ++q)
        family.push_back(fock_rotated(p, q, ElectronicState::Donor, basis));
    for (size_t i = 0; i < family.size(); ++i)
      for (size_t k = 0; k < family.size(); ++k) {
        const Complex g = family[i].amp.dot(family[k].amp);
        CHECK(std::abs(g - (i == k ? 1.0 : 0.0)) < 1e-12);
      }
  }
  SUBCASE("cutoff overflow rejected") {
    CHECK_THROWS_AS(fock_rotated(5, 4, ElectronicState::Donor, basis), std::invalid_argument);
  }
}
