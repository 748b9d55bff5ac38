#include "vibronic/interferometry.hpp"

#include <cmath>
#include <thread>

namespace vibronic {

namespace {

StateVector ground_vacuum(BasisPtr basis) {
  StateVector psi(std::move(basis));
  psi.amp(psi.basis->index_of(ElectronicState::Ground, 0, 0)) = 1.0;
  return psi;
}

StateVector project_block(const StateVector& psi, ElectronicState j) {
  StateVector out(psi.basis);
  const int off = psi.basis->block_offset(j);
  const int bs = psi.basis->block_size();
  out.amp.segment(off, bs) = psi.amp.segment(off, bs);
  return out;
}

}  // namespace

StateVector target_wavepacket(const Schedule& s, const DimerParams& params,
                              const EigenSystem& eig) {
  StateVector psi = ground_vacuum(eig.basis);
  // pre-pulse segment: the vacuum picks up its zero-point phase over t_p
  psi = propagate(psi, s.t_p, eig);
  const PulseSpec b{'B', Polarization::X, s.t_p, s.phi_p, 0.0, s.theta};
  psi = apply_pulse_first_order(psi, b, PulseAction::Up, params);
  psi = propagate(psi, s.t_w, eig);
  return project_block(psi, ElectronicState::Acceptor);
}

StateVector reference_wavepacket(const Schedule& s, const DimerParams& params,
                                 const EigenSystem& eig_ref) {
  StateVector psi = ground_vacuum(eig_ref.basis);
  const PulseSpec a{'A', Polarization::Y, 0.0, 0.0, 0.0, s.theta};
  psi = apply_pulse_first_order(psi, a, PulseAction::Up, params);
  psi = propagate(psi, s.t_p + s.t_w + s.t_d, eig_ref);
  const PulseSpec d{'D', Polarization::X, s.t_p + s.t_w + s.t_d, s.phi_d, 0.0, s.theta};
  psi = apply_pulse_first_order(psi, d, PulseAction::Up, params);
  psi = propagate(psi, -s.t_d, eig_ref);
  const PulseSpec c{'C', Polarization::X, s.t_p + s.t_w, 0.0, 0.0, s.theta};
  psi = apply_pulse_first_order(psi, c, PulseAction::Down, params);
  return project_block(psi, ElectronicState::Acceptor);
}

Complex locking_factor(const Schedule& s, const DimerParams& params) {
  return std::polar(1.0, -(params.lock_p() * s.t_p - params.lock_d() * s.t_d));
}

Complex interference_term(const Schedule& s, const DimerParams& params, const EigenSystem& eig,
                          const EigenSystem& eig_ref) {
  const StateVector tgt = target_wavepacket(s, params, eig);
  const StateVector ref = reference_wavepacket(s, params, eig_ref);
  return locking_factor(s, params) * overlap(ref, tgt, ElectronicState::Acceptor);
}

double quadrilinear_population(const Schedule& s, double phi_p, double phi_d,
                               const DimerParams& params, const EigenSystem& eig,
                               const EigenSystem& eig_ref) {
  Schedule sp = s;
  sp.phi_p = phi_p;
  sp.phi_d = phi_d;
  const StateVector tgt = target_wavepacket(sp, params, eig);
  const StateVector ref = reference_wavepacket(sp, params, eig_ref);
  return 2.0 * overlap(ref, tgt, ElectronicState::Acceptor).real();
}

Complex phase_cycle_isolate(double p_00, double p_hp_mh, double p_hp_0, double p_0_hp) {
  return 0.25 * (Complex(p_00 - p_hp_mh, 0.0) + Complex(0.0, 1.0) * (p_hp_0 - p_0_hp));
}

SignalEvaluator::SignalEvaluator(const DimerParams& params, int cutoff, double t_w,
                                 bool j_active_reference, double theta)
    : params_(params), t_w_(t_w), theta_(theta), j_ref_(j_active_reference) {
  params_.validate();
  BasisPtr basis = make_full_basis(cutoff);
  eig_ = diagonalize(build_hamiltonian(params_, basis));
  if (j_active_reference) {
    eig_ref_ = eig_;
  } else {
    DimerParams off = params_;
    off.coupling = 0.0;
    eig_ref_ = diagonalize(build_hamiltonian(off, basis));
  }
  // target depends on t_w only; A_y|0> feeds every reference evaluation
  Schedule s;
  s.t_w = t_w_;
  s.theta = theta_;
  const StateVector tgt = target_wavepacket(s, params_, eig_);
  target_block_ = tgt.amp.segment(tgt.basis->block_offset(ElectronicState::Acceptor),
                                  tgt.basis->block_size());
  StateVector psi_a = ground_vacuum(basis);
  const PulseSpec a{'A', Polarization::Y, 0.0, 0.0, 0.0, theta_};
  psi_a = apply_pulse_first_order(psi_a, a, PulseAction::Up, params_);
  ref_seed_ = eig_ref_.to_eigenbasis(psi_a.amp);
}

Complex SignalEvaluator::operator()(double t_p, double t_d) const {
  const auto& basis = *eig_.basis;
  // target side: only the vacuum phase over t_p changes with the delays
  const double e_vac = params_.omega;  // zero-point energy of the two modes
  const Complex tgt_phase = std::polar(1.0, -e_vac * t_p);

  StateVector psi{eig_.basis, eig_ref_.from_eigenbasis_at(ref_seed_, t_p + t_w_ + t_d)};
  const PulseSpec dpulse{'D', Polarization::X, 0.0, 0.0, 0.0, theta_};
  psi = apply_pulse_first_order(psi, dpulse, PulseAction::Up, params_);
  psi = propagate(psi, -t_d, eig_ref_);
  const PulseSpec cpulse{'C', Polarization::X, 0.0, 0.0, 0.0, theta_};
  psi = apply_pulse_first_order(psi, cpulse, PulseAction::Down, params_);

  const int off = basis.block_offset(ElectronicState::Acceptor);
  const int bs = basis.block_size();
  const Complex ov = psi.amp.segment(off, bs).dot(tgt_phase * target_block_);
  Schedule s;
  s.t_p = t_p;
  s.t_w = t_w_;
  s.t_d = t_d;
  const double th2 = theta_ * theta_;
  return locking_factor(s, params_) * ov / (th2 * th2);
}

InterferogramGrid interferogram_scan(const InterferogramSpec& spec, const SignalEvaluator& eval) {
  if (spec.n_tp < 2 || spec.n_td < 2)
    throw std::invalid_argument("interferogram_scan: need at least a 2x2 grid");
  const double tau = eval.params().tau_vib();
  const double tp_max = spec.tp_max > spec.tp_min ? spec.tp_max : 2.0 * tau;
  const double td_max = spec.td_max > spec.td_min ? spec.td_max : 2.0 * tau;

  InterferogramGrid grid;
  grid.tp.resize(spec.n_tp);
  grid.td.resize(spec.n_td);
  for (int i = 0; i < spec.n_tp; ++i)
    grid.tp(i) = spec.tp_min + (tp_max - spec.tp_min) * i / (spec.n_tp - 1);
  for (int i = 0; i < spec.n_td; ++i)
    grid.td(i) = spec.td_min + (td_max - spec.td_min) * i / (spec.n_td - 1);
  grid.signal.resize(spec.n_tp, spec.n_td);

  int workers = spec.workers > 0 ? spec.workers
                                 : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = std::min(workers, spec.n_tp);

  auto run_rows = [&](int first, int stride) {
    for (int r = first; r < spec.n_tp; r += stride)
      for (int c = 0; c < spec.n_td; ++c) grid.signal(r, c) = eval(grid.tp(r), grid.td(c));
  };
  if (workers == 1) {
    run_rows(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_rows, w, workers);
    for (auto& t : pool) t.join();
  }
  return grid;
}

namespace {

// parabolic vertex of three equidistant samples; offset in cell units
double parabolic_offset(double ym, double y0, double yp) {
  const double denom = ym - 2.0 * y0 + yp;
  if (denom == 0.0) return 0.0;
  double off = 0.5 * (ym - yp) / denom;
  return std::clamp(off, -0.5, 0.5);
}

std::pair<int, int> grid_argmax(const InterferogramGrid& grid) {
  int rmax = 0, cmax = 0;
  double best = -1.0;
  for (int r = 0; r < grid.signal.rows(); ++r)
    for (int c = 0; c < grid.signal.cols(); ++c) {
      const double a = std::abs(grid.signal(r, c));
      if (a > best) {
        best = a;
        rmax = r;
        cmax = c;
      }
    }
  if (best <= 0.0) throw NumericalError("interferogram is identically zero");
  return {rmax, cmax};
}

Complex log_ratio_rate(Complex plus, Complex minus, double h) {
  // -i ln(W+/W-) / (2h), principal branch
  const Complex ratio = plus / minus;
  return Complex(0.0, -1.0) * std::log(ratio) / (2.0 * h);
}

}  // namespace

PeakReport peak_and_fringe_analysis(const InterferogramGrid& grid) {
  const auto [r, c] = grid_argmax(grid);
  PeakReport rep;
  const double htp = grid.tp(1) - grid.tp(0);
  const double htd = grid.td(1) - grid.td(0);
  double dr = 0.0, dc = 0.0;
  if (r > 0 && r + 1 < grid.signal.rows())
    dr = parabolic_offset(std::abs(grid.signal(r - 1, c)), std::abs(grid.signal(r, c)),
                          std::abs(grid.signal(r + 1, c)));
  if (c > 0 && c + 1 < grid.signal.cols())
    dc = parabolic_offset(std::abs(grid.signal(r, c - 1)), std::abs(grid.signal(r, c)),
                          std::abs(grid.signal(r, c + 1)));
  rep.tp_star = grid.tp(r) + dr * htp;
  rep.td_star = grid.td(c) + dc * htd;
  rep.magnitude = std::abs(grid.signal(r, c));
  const int rm = std::max(r - 1, 0), rp = std::min<int>(r + 1, grid.signal.rows() - 1);
  const int cm = std::max(c - 1, 0), cp = std::min<int>(c + 1, grid.signal.cols() - 1);
  rep.rate_tp = log_ratio_rate(grid.signal(rp, c), grid.signal(rm, c),
                               0.5 * (grid.tp(rp) - grid.tp(rm)));
  rep.rate_td = log_ratio_rate(grid.signal(r, cp), grid.signal(r, cm),
                               0.5 * (grid.td(cp) - grid.td(cm)));
  return rep;
}

PeakReport analyze_peak(const InterferogramGrid& grid, const SignalEvaluator& eval) {
  const auto [r, c] = grid_argmax(grid);
  double tp = grid.tp(r), td = grid.td(c);
  double span_tp = grid.tp(1) - grid.tp(0);
  double span_td = grid.td(1) - grid.td(0);
  // iterative 8x local refinement on the exact signal
  for (int round = 0; round < 3; ++round) {
    const int half = 8;
    double best = -1.0, btp = tp, btd = td;
    for (int i = -half; i <= half; ++i)
      for (int k = -half; k <= half; ++k) {
        const double xtp = tp + span_tp * i / half;
        const double xtd = td + span_td * k / half;
        const double a = std::abs(eval(xtp, xtd));
        if (a > best) {
          best = a;
          btp = xtp;
          btd = xtd;
        }
      }
    tp = btp;
    td = btd;
    span_tp /= 8.0;
    span_td /= 8.0;
  }
  PeakReport rep;
  rep.tp_star = tp;
  rep.td_star = td;
  rep.magnitude = std::abs(eval(tp, td));
  if (rep.magnitude <= 0.0) throw NumericalError("interferogram peak has zero magnitude");
  const double h = eval.params().tau_vib() / 1024.0;
  rep.rate_tp = log_ratio_rate(eval(tp + h, td), eval(tp - h, td), h);
  rep.rate_td = log_ratio_rate(eval(tp, td + h), eval(tp, td - h), h);
  return rep;
}

MatchPoint semiclassical_match(double a_frac, int m, int n) {
  return {m + 1.0 - 0.5 * a_frac, n + 0.5 * a_frac};
}

MatchPoint semiclassical_match_root(double a_frac, int m, int n, const DimerParams& params,
                                    double t_w) {
  const double tau = params.tau_vib();
  if (std::abs(t_w - 0.5 * tau) > 1e-9 * tau)
    throw std::invalid_argument("semiclassical_match_root requires t_w = tau/2");
  const double w = params.omega;
  // a-mode: e^{i w t_d} = 1 - (e^{i w A t_w} - 1) e^{-i w t_w}
  const Complex rhs =
      Complex(1.0) - (std::polar(1.0, w * a_frac * t_w) - Complex(1.0)) * std::polar(1.0, -w * t_w);
  double td = std::arg(rhs) / w;
  if (td < 0.0) td += tau;
  // b-mode: (1 - A) t_w + t_d = t_p + t_w + t_d (mod tau)
  double tp = std::fmod(-a_frac * t_w, tau);
  if (tp <= 0.0) tp += tau;
  return {tp / tau + m, td / tau + n};
}

Trajectory target_phase_space(const DimerParams& params, const EigenSystem& eig, double t0,
                              double t1, int samples) {
  Schedule s;
  s.t_w = 0.0;
  StateVector psi = ground_vacuum(eig.basis);
  const PulseSpec b{'B', Polarization::X, 0.0, 0.0, 0.0, 1.0};
  psi = apply_pulse_first_order(psi, b, PulseAction::Up, params);
  std::vector<double> times = samples > 1 ? linspace(t0, t1, samples)
                                          : std::vector<double>{t0};
  return mean_position_trajectory(eig, psi, ElectronicState::Acceptor, times, params);
}

}  // namespace vibronic
