#include "vibronic/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstring>

namespace vibronic {

unsigned long long matrix_hash(const Eigen::MatrixXd& m) {
  unsigned long long h = 1469598103934665603ull;
  const auto* bytes = reinterpret_cast<const unsigned char*>(m.data());
  const size_t len = sizeof(double) * static_cast<size_t>(m.size());
  for (size_t i = 0; i < len; ++i) {
    h ^= bytes[i];
    h *= 1099511628211ull;
  }
  return h;
}

EigenSystem diagonalize(const HamiltonianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.mat);
  if (solver.info() != Eigen::Success) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%016llx", matrix_hash(h.mat));
    throw NumericalError(std::string("eigensolver failed to converge, matrix hash ") + buf);
  }
  Eigen::MatrixXd t = solver.eigenvectors();
  // sign convention: largest-magnitude component positive (first on ties)
  for (int c = 0; c < t.cols(); ++c) {
    int imax = 0;
    double amax = 0.0;
    for (int r = 0; r < t.rows(); ++r)
      if (std::abs(t(r, c)) > amax) {
        amax = std::abs(t(r, c));
        imax = r;
      }
    if (t(imax, c) < 0.0) t.col(c) = -t.col(c);
  }
  return {h.basis, solver.eigenvalues(), std::move(t)};
}

namespace {

// real matrix times complex vector, done as two real products
Eigen::VectorXcd real_times_complex(const Eigen::MatrixXd& m, const Eigen::VectorXcd& v,
                                    bool transpose) {
  Eigen::VectorXd re, im;
  if (transpose) {
    re = m.transpose() * v.real();
    im = m.transpose() * v.imag();
  } else {
    re = m * v.real();
    im = m * v.imag();
  }
  Eigen::VectorXcd out(re.size());
  out.real() = re;
  out.imag() = im;
  return out;
}

}  // namespace

Eigen::VectorXcd EigenSystem::to_eigenbasis(const Eigen::VectorXcd& psi) const {
  return real_times_complex(vectors, psi, true);
}

Eigen::VectorXcd EigenSystem::from_eigenbasis_at(const Eigen::VectorXcd& coeffs, double t) const {
  Eigen::VectorXcd c(coeffs.size());
  for (int l = 0; l < coeffs.size(); ++l)
    c(l) = coeffs(l) * std::polar(1.0, -values(l) * t);
  return real_times_complex(vectors, c, false);
}

StateVector propagate(const StateVector& psi0, double t, const EigenSystem& eig) {
  if (!psi0.basis->same_layout(*eig.basis))
    throw std::invalid_argument("propagate: state/eigensystem basis mismatch");
  if (t == 0.0) return psi0;
  return {psi0.basis, eig.from_eigenbasis_at(eig.to_eigenbasis(psi0.amp), t)};
}

namespace {

// p = i sqrt(m w / 2) (a^+ - a), acting blockwise in each surface basis
Eigen::VectorXcd apply_momentum(const VibronicBasis& basis, const Eigen::VectorXcd& psi,
                                bool mode_a, const DimerParams& params) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.size());
  const Complex unit(0.0, std::sqrt(0.5 * params.mass * params.omega));
  for (int i = 0; i < basis.size(); ++i) {
    const auto& e = basis.entry(i);
    const int q = mode_a ? e.m : e.n;
    // raising: |q+1> gains sqrt(q+1) psi_q
    const int m2 = mode_a ? e.m + 1 : e.m;
    const int n2 = mode_a ? e.n : e.n + 1;
    if (m2 + n2 <= basis.cutoff())
      out(basis.index_of(e.state, m2, n2)) += unit * std::sqrt(double(q + 1)) * psi(i);
    // lowering: |q-1> loses sqrt(q) psi_q
    if (q > 0) {
      const int m1 = mode_a ? e.m - 1 : e.m;
      const int n1 = mode_a ? e.n : e.n - 1;
      out(basis.index_of(e.state, m1, n1)) -= unit * std::sqrt(double(q)) * psi(i);
    }
  }
  return out;
}

}  // namespace

std::vector<EigenstateMomentum> eigen_momentum_map(const EigenSystem& eig,
                                                   const DimerParams& params) {
  const int n = static_cast<int>(eig.values.size());
  std::vector<EigenstateMomentum> out;
  out.reserve(static_cast<size_t>(n));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int l = 0; l < n; ++l) {
    Eigen::VectorXcd v = eig.vectors.col(l).cast<Complex>();
    const Eigen::VectorXcd pa = apply_momentum(*eig.basis, v, true, params);
    const Eigen::VectorXcd pb = apply_momentum(*eig.basis, v, false, params);
    const Eigen::VectorXcd ppar = inv_sqrt2 * (pa + pb);
    const Eigen::VectorXcd pperp = inv_sqrt2 * (pb - pa);
    out.push_back({(v.dot(ppar)).real(), (v.dot(pperp)).real(), ppar.norm(), pperp.norm()});
  }
  return out;
}

Eigen::VectorXd eigen_weights(const EigenSystem& eig, const StateVector& psi) {
  if (!psi.basis->same_layout(*eig.basis))
    throw std::invalid_argument("eigen_weights: basis mismatch");
  return eig.to_eigenbasis(psi.amp).cwiseAbs2();
}

}  // namespace vibronic
