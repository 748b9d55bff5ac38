#ifndef VIBRONIC_FRANCK_CONDON_HPP
#define VIBRONIC_FRANCK_CONDON_HPP

#include <Eigen/Dense>

namespace vibronic {

/// Hard cap on oscillator quanta in overlap evaluations.
constexpr int kMaxQuanta = 512;

/// Displaced harmonic oscillator overlap <m|exp(lambda a^+ - lambda a)|n>
/// for real lambda. Evaluated by the stable ladder recurrence; equals
/// e^{-l^2/2} sqrt(n!/m!) l^{m-n} L_n^{(m-n)}(l^2) for m >= n.
double franck_condon_1d(int m, int n, double lambda);

/// Full matrix D_{m,n} = <m|exp(lambda a^+ - lambda a)|n> for m,n < size.
Eigen::MatrixXd displacement_matrix(int size, double lambda);

/// Two-mode overlap between acceptor |1', M', N'> and donor |1, M, N>
/// oscillator states with dimensionless displacement delta: the a-mode
/// relaxes by -delta, the b-mode displaces by +delta.
double franck_condon_2d(int mp, int np, int m, int n, double delta);

}  // namespace vibronic

#endif
