#include "vibronic/observables.hpp"

#include <cmath>

namespace vibronic {

double population(const StateVector& psi, ElectronicState j) {
  const auto& b = *psi.basis;
  return psi.amp.segment(b.block_offset(j), b.block_size()).squaredNorm();
}

Complex overlap(const StateVector& psi_tilde, const StateVector& psi, ElectronicState j) {
  require_same_basis(psi_tilde, psi);
  const auto& b = *psi.basis;
  const int off = b.block_offset(j);
  const int bs = b.block_size();
  return psi_tilde.amp.segment(off, bs).dot(psi.amp.segment(off, bs));
}

std::pair<Complex, Complex> mean_ladder(const StateVector& psi, ElectronicState j) {
  const auto& b = *psi.basis;
  const double pop = population(psi, j);
  if (pop <= 0.0) throw NumericalError("mean_ladder: empty block " + to_string(j));
  Complex ea(0.0), eb(0.0);
  const int off = b.block_offset(j);
  for (int n = 0; n <= b.cutoff(); ++n)
    for (int m = 0; m + n <= b.cutoff(); ++m) {
      const Complex c = psi.amp(off + b.index_in_block(m, n));
      if (m > 0)
        ea += std::conj(psi.amp(off + b.index_in_block(m - 1, n))) * std::sqrt(double(m)) * c;
      if (n > 0)
        eb += std::conj(psi.amp(off + b.index_in_block(m, n - 1))) * std::sqrt(double(n)) * c;
    }
  return {ea / pop, eb / pop};
}

MeanPoint mean_position(const StateVector& psi, ElectronicState j, const DimerParams& params) {
  const auto [ea, eb] = mean_ladder(psi, j);
  const double scale = std::sqrt(2.0 / (params.mass * params.omega));
  return {params.center_a(j) + scale * ea.real(), params.center_b(j) + scale * eb.real()};
}

MeanPoint mean_momentum(const StateVector& psi, ElectronicState j, const DimerParams& params) {
  const auto [ea, eb] = mean_ladder(psi, j);
  const double scale = std::sqrt(2.0 * params.mass * params.omega);
  return {scale * ea.imag(), scale * eb.imag()};
}

std::pair<double, double> mean_quanta(const StateVector& psi, ElectronicState j, bool normalized) {
  const auto& b = *psi.basis;
  double na = 0.0, nb = 0.0;
  const int off = b.block_offset(j);
  for (int n = 0; n <= b.cutoff(); ++n)
    for (int m = 0; m + n <= b.cutoff(); ++m) {
      const double w = std::norm(psi.amp(off + b.index_in_block(m, n)));
      na += m * w;
      nb += n * w;
    }
  if (normalized) {
    const double pop = population(psi, j);
    if (pop <= 0.0) throw NumericalError("mean_quanta: empty block");
    na /= pop;
    nb /= pop;
  }
  return {na, nb};
}

double oscillator_eigenfunction(int n, double q, double center, const DimerParams& params) {
  const double mw = params.mass * params.omega;
  const double x = std::sqrt(mw) * (q - center);
  // phi_0 = (mw/pi)^(1/4) e^{-x^2/2}; upward recurrence
  double prev = 0.0;
  double cur = std::pow(mw / M_PI, 0.25) * std::exp(-0.5 * x * x);
  for (int k = 0; k < n; ++k) {
    const double next =
        std::sqrt(2.0 / (k + 1.0)) * x * cur - std::sqrt(double(k) / (k + 1.0)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Eigen::MatrixXcd wavefunction_grid(const StateVector& psi,
                                   const std::vector<ElectronicState>& blocks,
                                   const GridSpec& grid, const DimerParams& params) {
  if (grid.na < 2 || grid.nb < 2) throw std::invalid_argument("wavefunction_grid: grid too small");
  const auto& b = *psi.basis;
  Eigen::MatrixXcd field = Eigen::MatrixXcd::Zero(grid.na, grid.nb);
  const int nq = b.cutoff() + 1;
  for (ElectronicState j : blocks) {
    const int off = b.block_offset(j);
    // tabulate 1-D eigenfunctions on the grid axes
    Eigen::MatrixXd fa(nq, grid.na), fb(nq, grid.nb);
    for (int i = 0; i < grid.na; ++i)
      for (int m = 0; m < nq; ++m)
        fa(m, i) = oscillator_eigenfunction(m, grid.qa(i), params.center_a(j), params);
    for (int i = 0; i < grid.nb; ++i)
      for (int n = 0; n < nq; ++n)
        fb(n, i) = oscillator_eigenfunction(n, grid.qb(i), params.center_b(j), params);
    for (int n = 0; n <= b.cutoff(); ++n)
      for (int m = 0; m + n <= b.cutoff(); ++m) {
        const Complex c = psi.amp(off + b.index_in_block(m, n));
        if (c == Complex(0.0)) continue;
        for (int ia = 0; ia < grid.na; ++ia) {
          const Complex ca = c * fa(m, ia);
          for (int ib = 0; ib < grid.nb; ++ib) field(ia, ib) += ca * fb(n, ib);
        }
      }
  }
  return field;
}

Eigen::MatrixXcd wavefunction_grid(const StateVector& psi, ElectronicState j,
                                   const GridSpec& grid, const DimerParams& params) {
  return wavefunction_grid(psi, std::vector<ElectronicState>{j}, grid, params);
}

double short_time_law(double t, const DimerParams& params) {
  const double env = std::exp(-0.25 * params.lambda() / params.omega);
  return 0.5 * env * env * params.coupling * params.coupling * t * t;
}

double pair_level_population(const HamiltonianMatrix& h, const StateVector& psi0, double t) {
  const auto& b = *h.basis;
  if (!psi0.basis->same_layout(b)) throw std::invalid_argument("pair_level: basis mismatch");
  const int off_d = b.block_offset(ElectronicState::Donor);
  const int off_a = b.block_offset(ElectronicState::Acceptor);
  const int bs = b.block_size();
  double p = 0.0;
  for (int k = 0; k < bs; ++k) {
    const double w = std::norm(psi0.amp(off_d + k));
    if (w == 0.0) continue;
    const double hkk = h.mat(off_d + k, off_d + k);
    for (int l = 0; l < bs; ++l) {
      const double v = h.mat(off_d + k, off_a + l);  // J * FC(l,k)
      if (v == 0.0) continue;
      const double hll = h.mat(off_a + l, off_a + l);
      const double omega_lk = std::sqrt((hkk - hll) * (hkk - hll) + 4.0 * v * v);
      const double amp = 2.0 * v / omega_lk;
      const double s = std::sin(0.5 * omega_lk * t);
      p += amp * amp * s * s * w;
    }
  }
  return p;
}

double jcm_curve(double t, double g, double alpha) {
  const double a2 = alpha * alpha;
  double p = 0.0;
  double poisson = std::exp(-a2);  // N = 0 weight
  const int n_max = 16 + static_cast<int>(a2 + 12.0 * std::sqrt(a2 + 1.0));
  for (int n = 0; n <= n_max; ++n) {
    const double c = std::cos(g * std::sqrt(n + 1.0) * t);
    p += poisson * c * c;
    poisson *= a2 / (n + 1.0);
  }
  return p;
}

double transfer_instant(const DimerParams& params) {
  const double lambda = params.lambda();
  if (lambda <= 0.0) throw NumericalError("transfer_instant: vanishing displacement");
  const double x = 1.0 - params.detuning() / (2.0 * lambda);
  if (x < -1.0 || x > 1.0)
    throw NumericalError("transfer_instant: ridge unreachable by the Franck-Condon trajectory");
  return std::acos(x) / (2.0 * M_PI);
}

double time_averaged_population(const EigenSystem& eig, const StateVector& psi0,
                                ElectronicState j, double t_total) {
  if (!psi0.basis->same_layout(*eig.basis))
    throw std::invalid_argument("time_averaged_population: basis mismatch");
  if (t_total <= 0.0) throw std::invalid_argument("time_averaged_population: T must be positive");
  const auto& b = *eig.basis;
  const int off = b.block_offset(j);
  const int bs = b.block_size();
  const Eigen::VectorXcd c = eig.to_eigenbasis(psi0.amp);
  // S_{ll'} = sum_{k in block} T_{kl} T_{kl'}
  const Eigen::MatrixXd tb = eig.vectors.middleRows(off, bs);
  const Eigen::MatrixXd s = tb.transpose() * tb;
  const int n = static_cast<int>(c.size());
  double avg = 0.0;
  for (int l = 0; l < n; ++l) {
    avg += std::norm(c(l)) * s(l, l);
    for (int lp = l + 1; lp < n; ++lp) {
      if (s(l, lp) == 0.0) continue;
      const double dw = eig.values(l) - eig.values(lp);
      // (1/T) int_0^T e^{-i dw t} dt, paired with its conjugate
      Complex f;
      if (std::abs(dw) * t_total < 1e-9)
        f = Complex(1.0, -0.5 * dw * t_total);
      else
        f = (Complex(1.0) - std::polar(1.0, -dw * t_total)) / (Complex(0.0, 1.0) * dw * t_total);
      avg += 2.0 * s(l, lp) * (c(l) * std::conj(c(lp)) * f).real();
    }
  }
  return avg;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = a + (b - a) * i / (n - 1);
  return out;
}

Trajectory population_trajectory(const EigenSystem& eig, const StateVector& psi0,
                                 const std::vector<double>& times) {
  Trajectory tr;
  tr.columns = {"t"};
  for (ElectronicState s : eig.basis->states()) tr.columns.push_back("p_" + to_string(s));
  tr.data.resize(static_cast<Eigen::Index>(times.size()),
                 static_cast<Eigen::Index>(tr.columns.size()));
  const Eigen::VectorXcd c = eig.to_eigenbasis(psi0.amp);
  for (size_t i = 0; i < times.size(); ++i) {
    const StateVector psi{eig.basis, eig.from_eigenbasis_at(c, times[i])};
    tr.data(static_cast<Eigen::Index>(i), 0) = times[i];
    int col = 1;
    for (ElectronicState s : eig.basis->states())
      tr.data(static_cast<Eigen::Index>(i), col++) = population(psi, s);
  }
  return tr;
}

Trajectory mean_position_trajectory(const EigenSystem& eig, const StateVector& psi0,
                                    ElectronicState j, const std::vector<double>& times,
                                    const DimerParams& params) {
  Trajectory tr;
  tr.columns = {"t", "qa", "qb", "pa", "pb"};
  tr.data.resize(static_cast<Eigen::Index>(times.size()), 5);
  const Eigen::VectorXcd c = eig.to_eigenbasis(psi0.amp);
  for (size_t i = 0; i < times.size(); ++i) {
    const StateVector psi{eig.basis, eig.from_eigenbasis_at(c, times[i])};
    const auto q = mean_position(psi, j, params);
    const auto p = mean_momentum(psi, j, params);
    tr.data(static_cast<Eigen::Index>(i), 0) = times[i];
    tr.data(static_cast<Eigen::Index>(i), 1) = q.a;
    tr.data(static_cast<Eigen::Index>(i), 2) = q.b;
    tr.data(static_cast<Eigen::Index>(i), 3) = p.a;
    tr.data(static_cast<Eigen::Index>(i), 4) = p.b;
  }
  return tr;
}

}  // namespace vibronic
