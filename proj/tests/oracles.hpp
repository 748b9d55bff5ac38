#ifndef VIBRONIC_TEST_ORACLES_HPP
#define VIBRONIC_TEST_ORACLES_HPP

#include <Eigen/Dense>
#include <complex>

// Independent reference computations for the test suites. Nothing here may
// call into the library code paths under test.
namespace oracle {

/// Normalized harmonic oscillator eigenfunction, unit mass and frequency.
double hermite_psi(int n, double x);

/// <m|exp(l a^+ - l a)|n> by composite Gauss-Legendre quadrature of the two
/// displaced eigenfunctions.
double fc_quadrature(int m, int n, double lambda);

/// Two-mode overlap with the a-mode shifted by -delta and the b-mode by
/// +delta (quadrature in each factor).
double fc2d_quadrature(int mp, int np, int m, int n, double delta);

/// Fixed-step fourth-order integration of i psi' = H psi.
Eigen::VectorXcd rk4_schrodinger(const Eigen::MatrixXd& h, Eigen::VectorXcd psi, double t_final,
                                 int steps);

/// <a1,b1|a2,b2> for two-mode coherent states.
std::complex<double> coherent_overlap(std::complex<double> a1, std::complex<double> b1,
                                      std::complex<double> a2, std::complex<double> b2);

}  // namespace oracle

#endif
