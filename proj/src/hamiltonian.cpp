#include "vibronic/hamiltonian.hpp"

#include <cmath>
#include <ostream>

namespace vibronic {

Eigen::MatrixXd surface_overlap_matrix(ElectronicState to, ElectronicState from,
                                       const DimerParams& params, const VibronicBasis& basis) {
  const int nq = basis.cutoff() + 1;
  const double scale = std::sqrt(0.5 * params.mass * params.omega);
  // <to,m'|from,m> = <m'|D(lambda)|m> with lambda set by the shift of the
  // source surface minimum relative to the target one.
  const double la = scale * (params.center_a(from) - params.center_a(to));
  const double lb = scale * (params.center_b(from) - params.center_b(to));
  const Eigen::MatrixXd da = displacement_matrix(nq, la);
  const Eigen::MatrixXd db = displacement_matrix(nq, lb);

  const int bs = basis.block_size();
  Eigen::MatrixXd out(bs, bs);
  for (int n2 = 0; n2 <= basis.cutoff(); ++n2)
    for (int m2 = 0; m2 + n2 <= basis.cutoff(); ++m2) {
      const int row = basis.index_in_block(m2, n2);
      for (int n1 = 0; n1 <= basis.cutoff(); ++n1)
        for (int m1 = 0; m1 + n1 <= basis.cutoff(); ++m1)
          out(row, basis.index_in_block(m1, n1)) = da(m2, m1) * db(n2, n1);
    }
  return out;
}

HamiltonianMatrix build_hamiltonian(const DimerParams& params, BasisPtr basis) {
  params.validate();
  if (!basis->has_state(ElectronicState::Donor) || !basis->has_state(ElectronicState::Acceptor))
    throw std::invalid_argument("build_hamiltonian: basis must contain both one-exciton blocks");

  const int n = basis->size();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& e = basis->entry(i);
    h(i, i) = params.epsilon(e.state) + params.omega * (1.0 + e.m + e.n);
  }

  // J couples |1,M,N> and |1',M',N'> through the nuclear overlap of the two
  // displaced oscillator bases; |0> and |2> stay uncoupled.
  const Eigen::MatrixXd fc =
      surface_overlap_matrix(ElectronicState::Donor, ElectronicState::Acceptor, params, *basis);
  const int off_d = basis->block_offset(ElectronicState::Donor);
  const int off_a = basis->block_offset(ElectronicState::Acceptor);
  const int bs = basis->block_size();
  for (int r = 0; r < bs; ++r)
    for (int c = 0; c < bs; ++c) {
      const double v = params.coupling * fc(r, c);
      h(off_d + r, off_a + c) = v;
      h(off_a + c, off_d + r) = v;
    }
  return {std::move(basis), std::move(h)};
}

DiabaticPotentials diabatic_potentials(double qa, double qb, const DimerParams& p) {
  const double k = 0.5 * p.mass * p.omega * p.omega;
  const double da = qa - p.d;
  const double db = qb - p.d;
  return {k * (qa * qa + qb * qb), p.epsilon_1 + k * (da * da + qb * qb),
          p.epsilon_1p + k * (qa * qa + db * db), p.epsilon2() + k * (da * da + db * db)};
}

RidgeLine ridge_line(const DimerParams& p) {
  if (p.d <= 0.0)
    throw NumericalError("ridge_line: surfaces are parallel for d = 0, no ridge exists");
  return {-p.detuning() / (p.mass * p.omega * p.omega * p.d)};
}

std::pair<double, double> adiabatic_surfaces(double qa, double qb, const DimerParams& p) {
  const auto v = diabatic_potentials(qa, qb, p);
  const double mean = 0.5 * (v.v1 + v.v1p);
  const double half = 0.5 * (v.v1 - v.v1p);
  const double gap = std::sqrt(half * half + p.coupling * p.coupling);
  return {mean - gap, mean + gap};
}

void dump_csv(const HamiltonianMatrix& h, std::ostream& os) {
  os << "row,col,value\n";
  char buf[64];
  for (int r = 0; r < h.mat.rows(); ++r)
    for (int c = 0; c < h.mat.cols(); ++c)
      if (h.mat(r, c) != 0.0) {
        std::snprintf(buf, sizeof buf, "%d,%d,%.17g\n", r, c, h.mat(r, c));
        os << buf;
      }
}

}  // namespace vibronic
