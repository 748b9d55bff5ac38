#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vibronic/spectral.hpp"
#include "vibronic/states.hpp"

using namespace vibronic;

namespace {

StateVector random_state(BasisPtr basis, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd v(basis->size());
  for (int i = 0; i < v.size(); ++i) v(i) = Complex(gauss(rng), gauss(rng));
  v /= v.norm();
  return {std::move(basis), std::move(v)};
}

}  // namespace

TEST_CASE("diagonal Hamiltonian: sorted eigenvalues, permutation vectors") {
  DimerParams p;
  p.coupling = 0.0;
  p.epsilon_1 = 0.3;
  const auto basis = make_one_exciton_basis(2);
  const auto eig = diagonalize(build_hamiltonian(p, basis));
  for (int l = 1; l < eig.values.size(); ++l) CHECK(eig.values(l) >= eig.values(l - 1));
  // each column has exactly one unit entry
  for (int c = 0; c < eig.vectors.cols(); ++c) {
    CHECK(eig.vectors.col(c).cwiseAbs().maxCoeff() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eig.vectors.col(c).norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("displacement-free dimer gap matches the closed form") {
  DimerParams p;
  p.d = 0.0;
  p.coupling = 0.17;
  p.epsilon_1 = 0.4;
  const auto eig = diagonalize(build_hamiltonian(p, make_one_exciton_basis(0)));
  const double gap = std::sqrt(p.detuning() * p.detuning() + 4.0 * p.coupling * p.coupling);
  CHECK(eig.values(1) - eig.values(0) == doctest::Approx(gap).epsilon(1e-12));
}

TEST_CASE("propagation basics") {
  DimerParams p;
  p.coupling = 0.1;
  const auto basis = make_one_exciton_basis(6);
  const auto eig = diagonalize(build_hamiltonian(p, basis));

  SUBCASE("t = 0 is the identity") {
    const StateVector psi = random_state(basis, 1u);
    const StateVector out = propagate(psi, 0.0, eig);
    CHECK((out.amp - psi.amp).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("eigenstates only rotate in phase") {
    StateVector psi(basis);
    psi.amp = eig.vectors.col(3).cast<Complex>();
    const StateVector out = propagate(psi, 2.3, eig);
    CHECK(std::abs(std::abs(psi.amp.dot(out.amp)) - 1.0) < 1e-12);
    for (int i = 0; i < psi.amp.size(); ++i)
      CHECK(std::norm(out.amp(i)) == doctest::Approx(std::norm(psi.amp(i))).epsilon(1e-10));
  }
  SUBCASE("unitarity and composition over random times") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(0.0, 100.0 * p.tau_vib());
    const StateVector psi = random_state(basis, 2u);
    for (int k = 0; k < 25; ++k) {
      const double t1 = u(rng), t2 = u(rng);
      const StateVector a = propagate(psi, t1, eig);
      CHECK(std::abs(a.norm() - 1.0) < 1e-12);
      const StateVector ab = propagate(a, t2, eig);
      const StateVector b = propagate(psi, t1 + t2, eig);
      CHECK((ab.amp - b.amp).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
  SUBCASE("basis mismatch rejected") {
    const StateVector psi = random_state(make_one_exciton_basis(5), 3u);
    CHECK_THROWS_AS(propagate(psi, 1.0, eig), std::invalid_argument);
  }
}

TEST_CASE("eigenbasis propagation agrees with direct integration") {
  DimerParams p;
  p.coupling = 0.1;
  const auto basis = make_one_exciton_basis(10);
  const auto h = build_hamiltonian(p, basis);
  const auto eig = diagonalize(h);
  const StateVector psi0 =
      coherent_state({ElectronicState::Donor, -1.0, 0.4}, p, basis);
  const double t = 2.0 * p.tau_vib();
  const StateVector fast = propagate(psi0, t, eig);
  const Eigen::VectorXcd slow = oracle::rk4_schrodinger(h.mat, psi0.amp, t, 40000);
  CHECK((fast.amp - slow).cwiseAbs().maxCoeff() < 1e-7);
}

TEST_CASE("energy is conserved along the flow") {
  DimerParams p;
  p.coupling = 0.1;
  p.epsilon_1 = 0.25;
  const auto basis = make_one_exciton_basis(8);
  const auto h = build_hamiltonian(p, basis);
  const auto eig = diagonalize(h);
  const StateVector psi = random_state(basis, 9u);
  const Complex e0 = psi.amp.dot((h.mat * psi.amp.real()).cast<Complex>() +
                                 Complex(0, 1) * (h.mat * psi.amp.imag()).cast<Complex>());
  for (double t : {1.0, 7.7, 31.4}) {
    const StateVector a = propagate(psi, t, eig);
    const Complex et = a.amp.dot((h.mat * a.amp.real()).cast<Complex>() +
                                 Complex(0, 1) * (h.mat * a.amp.imag()).cast<Complex>());
    CHECK(std::abs(et - e0) < 1e-10);
  }
}

TEST_CASE("eigen residuals stay below the spectral norm scale") {
  DimerParams p;
  p.coupling = 0.1;
  p.epsilon_1 = 1.0;
  const auto h = build_hamiltonian(p, make_one_exciton_basis(10));
  const auto eig = diagonalize(h);
  const double hnorm =
      std::max(std::abs(eig.values(0)), std::abs(eig.values(eig.values.size() - 1)));
  for (int l = 0; l < eig.values.size(); ++l)
    CHECK((h.mat * eig.vectors.col(l) - eig.values(l) * eig.vectors.col(l)).norm() <=
          1e-10 * hnorm);
  CHECK((eig.vectors.transpose() * eig.vectors -
         Eigen::MatrixXd::Identity(eig.values.size(), eig.values.size()))
            .cwiseAbs()
            .maxCoeff() < 1e-10);
}

TEST_CASE("momentum map") {
  SUBCASE("uncoupled undisplaced dimer has stationary Fock eigenstates") {
    DimerParams p;
    p.coupling = 0.0;
    p.d = 0.0;
    const auto eig = diagonalize(build_hamiltonian(p, make_one_exciton_basis(4)));
    for (const auto& m : eigen_momentum_map(eig, p)) {
      CHECK(std::abs(m.p_par_mean) < 1e-12);
      CHECK(std::abs(m.p_perp_mean) < 1e-12);
    }
  }
  SUBCASE("weights are a resolution of unity") {
    DimerParams p;
    p.coupling = 0.1;
    const auto basis = make_one_exciton_basis(8);
    const auto eig = diagonalize(build_hamiltonian(p, basis));
    const StateVector psi = random_state(basis, 5u);
    CHECK(eigen_weights(eig, psi).sum() == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("ground diabatic state weights the low-momentum eigenstates") {
    DimerParams p;
    p.coupling = 0.1;
    const auto basis = make_one_exciton_basis(12);
    const auto eig = diagonalize(build_hamiltonian(p, basis));
    const auto momenta = eigen_momentum_map(eig, p);
    StateVector ground(basis);
    ground.amp(basis->index_of(ElectronicState::Donor, 0, 0)) = 1.0;
    const Eigen::VectorXd wg = eigen_weights(eig, ground);
    const StateVector fock = fock_rotated(2, 0, ElectronicState::Donor, basis);
    const Eigen::VectorXd wf = eigen_weights(eig, fock);
    double pg = 0.0, pf = 0.0;
    for (int l = 0; l < wg.size(); ++l) {
      const double prms = std::hypot(momenta[size_t(l)].p_par_rms, momenta[size_t(l)].p_perp_rms);
      pg += wg(l) * prms;
      pf += wf(l) * prms;
    }
    CHECK(pg < pf);  // more vibrational excitation reaches higher-momentum eigenstates
  }
}
