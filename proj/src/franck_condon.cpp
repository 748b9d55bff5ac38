#include "vibronic/franck_condon.hpp"

#include <cmath>
#include <stdexcept>

namespace vibronic {

namespace {

void check_quanta(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("franck_condon: quanta must be >= 0");
  if (m > kMaxQuanta || n > kMaxQuanta)
    throw std::invalid_argument("franck_condon: quanta above hard cap");
}

// Fills table(m,n) = <m|D(lambda)|n> for m < rows, n < cols using
//   sqrt(m+1) D_{m+1,n} = lambda D_{m,n} + sqrt(n) D_{m,n-1}
//   sqrt(n+1) D_{m,n+1} = sqrt(m) D_{m-1,n} - lambda D_{m,n}
// seeded by D_{0,0} = e^{-lambda^2/2}. All coefficients stay bounded.
Eigen::MatrixXd displacement_table(int rows, int cols, double lambda) {
  Eigen::MatrixXd t(rows, cols);
  t(0, 0) = std::exp(-0.5 * lambda * lambda);
  for (int m = 1; m < rows; ++m) t(m, 0) = lambda * t(m - 1, 0) / std::sqrt(double(m));
  for (int n = 1; n < cols; ++n) {
    t(0, n) = -lambda * t(0, n - 1) / std::sqrt(double(n));
    for (int m = 1; m < rows; ++m)
      t(m, n) = (std::sqrt(double(m)) * t(m - 1, n - 1) - lambda * t(m, n - 1)) /
                std::sqrt(double(n));
  }
  return t;
}

}  // namespace

double franck_condon_1d(int m, int n, double lambda) {
  check_quanta(m, n);
  if (!std::isfinite(lambda)) throw std::invalid_argument("franck_condon: lambda not finite");
  return displacement_table(m + 1, n + 1, lambda)(m, n);
}

Eigen::MatrixXd displacement_matrix(int size, double lambda) {
  if (size <= 0 || size > kMaxQuanta + 1)
    throw std::invalid_argument("displacement_matrix: bad size");
  return displacement_table(size, size, lambda);
}

double franck_condon_2d(int mp, int np, int m, int n, double delta) {
  return franck_condon_1d(mp, m, -delta) * franck_condon_1d(np, n, delta);
}

}  // namespace vibronic
