#include "vibronic/states.hpp"

#include <cmath>

namespace vibronic {

std::pair<Complex, Complex> to_ground_frame(Complex alpha_rel, Complex beta_rel,
                                            ElectronicState j, const DimerParams& params) {
  const double scale = std::sqrt(0.5 * params.mass * params.omega);
  return {alpha_rel + scale * params.center_a(j), beta_rel + scale * params.center_b(j)};
}

std::pair<Complex, Complex> to_surface_frame(Complex alpha_ground, Complex beta_ground,
                                             ElectronicState j, const DimerParams& params) {
  const double scale = std::sqrt(0.5 * params.mass * params.omega);
  return {alpha_ground - scale * params.center_a(j), beta_ground - scale * params.center_b(j)};
}

StateVector coherent_state(const CoherentSpec& spec, const DimerParams& params, BasisPtr basis) {
  Complex alpha = spec.alpha;
  Complex beta = spec.beta;
  if (spec.frame == AmplitudeFrame::Ground)
    std::tie(alpha, beta) = to_surface_frame(alpha, beta, spec.surface, params);

  StateVector psi(std::move(basis));
  const auto& b = *psi.basis;
  const int cutoff = b.cutoff();
  const double mean = std::norm(alpha) + std::norm(beta);
  const double gauss = std::exp(-0.5 * mean);

  // c(M,N) = e^{-(|a|^2+|b|^2)/2} a^M b^N / sqrt(M! N!), built by running products
  std::vector<Complex> apow(static_cast<size_t>(cutoff) + 1), bpow(apow.size());
  apow[0] = bpow[0] = Complex(1.0, 0.0);
  for (int k = 1; k <= cutoff; ++k) {
    apow[static_cast<size_t>(k)] = apow[static_cast<size_t>(k - 1)] * alpha / std::sqrt(double(k));
    bpow[static_cast<size_t>(k)] = bpow[static_cast<size_t>(k - 1)] * beta / std::sqrt(double(k));
  }
  const int off = b.block_offset(spec.surface);
  for (int n = 0; n <= cutoff; ++n)
    for (int m = 0; m + n <= cutoff; ++m)
      psi.amp(off + b.index_in_block(m, n)) =
          gauss * apow[static_cast<size_t>(m)] * bpow[static_cast<size_t>(n)];

  const double loss = 1.0 - psi.squared_norm();
  if (loss > 1e-6) {
    // Poisson tail estimate of the cutoff needed to hold this state
    const int hint = static_cast<int>(std::ceil(mean + 8.0 * std::sqrt(mean + 1.0)));
    throw NumericalError("coherent_state: truncation loss " + std::to_string(loss) +
                         " exceeds 1e-6; raise cutoff to about " + std::to_string(hint));
  }
  return psi;
}

StateVector franck_condon_excitation(ElectronicState surface, const DimerParams& params,
                                     BasisPtr basis) {
  return coherent_state({surface, Complex(0.0), Complex(0.0), AmplitudeFrame::Ground}, params,
                        std::move(basis));
}

ExcitationDirection excitation_direction_from_string(const std::string& name) {
  if (name == "a" || name == "mode-a") return ExcitationDirection::ModeA;
  if (name == "b" || name == "mode-b") return ExcitationDirection::ModeB;
  if (name == "parallel" || name == "par") return ExcitationDirection::Parallel;
  if (name == "perpendicular" || name == "perp") return ExcitationDirection::Perpendicular;
  if (name == "circular") return ExcitationDirection::Circular;
  throw std::invalid_argument("unknown excitation direction '" + name + "'");
}

StateVector rotated_coherent(const RotatedSpec& spec, ElectronicState surface,
                             const DimerParams& params, BasisPtr basis) {
  const Complex g = std::polar(spec.gamma, spec.phi);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Complex alpha, beta;
  switch (spec.direction) {
    case ExcitationDirection::ModeA: alpha = g; break;
    case ExcitationDirection::ModeB: beta = g; break;
    case ExcitationDirection::Parallel: alpha = beta = g * inv_sqrt2; break;
    case ExcitationDirection::Perpendicular:
      alpha = -g * inv_sqrt2;
      beta = g * inv_sqrt2;
      break;
    case ExcitationDirection::Circular:
      alpha = g * inv_sqrt2;
      beta = Complex(0.0, 1.0) * g * inv_sqrt2;
      break;
  }
  return coherent_state({surface, alpha, beta, AmplitudeFrame::SurfaceRelative}, params,
                        std::move(basis));
}

StateVector fock_rotated(int p, int q, ElectronicState surface, BasisPtr basis) {
  if (p < 0 || q < 0) throw std::invalid_argument("fock_rotated: quanta must be >= 0");
  if (p + q > basis->cutoff())
    throw std::invalid_argument("fock_rotated: p + q exceeds basis cutoff");

  const auto& b = *basis;
  const int off = b.block_offset(surface);
  const int bs = b.block_size();
  Eigen::VectorXcd block = Eigen::VectorXcd::Zero(bs);
  block(b.index_in_block(0, 0)) = 1.0;

  // apply (s_a a_a^+ + s_b a_b^+)/sqrt(2) repeatedly; quanta stay within the
  // cutoff because each application raises M+N by one and p+q <= cutoff
  auto raise = [&](double sa, double sb) {
    Eigen::VectorXcd next = Eigen::VectorXcd::Zero(bs);
    for (int n = 0; n <= b.cutoff(); ++n)
      for (int m = 0; m + n <= b.cutoff(); ++m) {
        const Complex c = block(b.index_in_block(m, n));
        if (c == Complex(0.0)) continue;
        if (m + 1 + n <= b.cutoff())
          next(b.index_in_block(m + 1, n)) += sa * std::sqrt(double(m + 1)) * c;
        if (m + n + 1 <= b.cutoff())
          next(b.index_in_block(m, n + 1)) += sb * std::sqrt(double(n + 1)) * c;
      }
    block = next;
  };
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < p; ++i) raise(inv_sqrt2, inv_sqrt2);    // a_par^+
  for (int i = 0; i < q; ++i) raise(-inv_sqrt2, inv_sqrt2);   // a_perp^+

  StateVector psi(std::move(basis));
  psi.amp.segment(off, bs) = block / block.norm();
  return psi;
}

}  // namespace vibronic
