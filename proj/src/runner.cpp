#include "vibronic/runner.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace vibronic {

namespace {

std::string hex16(unsigned long long h) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<double> sample_times(const DimerParams& p, double t_max_tau, int per_period) {
  const int n = static_cast<int>(std::lround(t_max_tau * per_period)) + 1;
  return linspace(0.0, t_max_tau * p.tau_vib(), n);
}

Trajectory in_tau_units(Trajectory tr, const DimerParams& p) {
  tr.data.col(0) /= p.tau_vib();
  if (!tr.columns.empty()) tr.columns[0] = "t_tau";
  return tr;
}

std::string state_csv(const StateVector& psi) {
  std::string out = "j,m,n,re,im\n";
  for (int i = 0; i < psi.basis->size(); ++i) {
    const auto& e = psi.basis->entry(i);
    out += to_string(e.state) + "," + std::to_string(e.m) + "," + std::to_string(e.n) + "," +
           fmt(psi.amp(i).real()) + "," + fmt(psi.amp(i).imag()) + "\n";
  }
  return out;
}

void for_each_index(int count, int workers, const std::function<void(int)>& fn) {
  int w = workers > 0 ? workers : static_cast<int>(std::thread::hardware_concurrency());
  if (w < 1) w = 1;
  w = std::min(w, count);
  if (w <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(w));
  for (int k = 0; k < w; ++k)
    pool.emplace_back([&, k] {
      for (int i = k; i < count; i += w) fn(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace

std::string params_tag(const DimerParams& p) {
  std::string s = fmt(p.epsilon_1) + "," + fmt(p.epsilon_1p) + "," + fmt(p.epsilon2()) + "," +
                  fmt(p.omega) + "," + fmt(p.mass) + "," + fmt(p.d) + "," + fmt(p.coupling);
  return hex16(fnv1a64(s));
}

void run_dynamics(const RunConfig& cfg, OutputWriter& out) {
  BasisPtr basis = make_basis(cfg.basis.states, cfg.basis.cutoff);
  const EigenSystem eig = diagonalize(build_hamiltonian(cfg.params, basis));
  const StateVector psi0 = prepare_initial_state(cfg.initial, cfg.params, basis);
  const auto times = sample_times(cfg.params, cfg.dynamics.t_max_tau,
                                  cfg.dynamics.samples_per_period);

  const std::string tag = "observable=populations params=" + params_tag(cfg.params) +
                          " t in units of tau_vib";
  out.write("populations.csv",
            csv_from_trajectory(in_tau_units(population_trajectory(eig, psi0, times), cfg.params),
                                tag));
  out.write("state_initial.csv", state_csv(psi0));

  if (basis->has_state(ElectronicState::Acceptor)) {
    std::vector<double> occupied;
    const Eigen::VectorXcd c = eig.to_eigenbasis(psi0.amp);
    for (double t : times) {
      const StateVector psi{basis, eig.from_eigenbasis_at(c, t)};
      if (population(psi, ElectronicState::Acceptor) > 1e-12) occupied.push_back(t);
    }
    if (!occupied.empty()) {
      const std::string ttag = "observable=acceptor_mean params=" + params_tag(cfg.params) +
                               " t in units of tau_vib";
      out.write("trajectory_acceptor.csv",
                csv_from_trajectory(
                    in_tau_units(mean_position_trajectory(eig, psi0, ElectronicState::Acceptor,
                                                          occupied, cfg.params),
                                 cfg.params),
                    ttag));
    }
  }
}

void run_eigen(const RunConfig& cfg, OutputWriter& out, bool dump_hamiltonian) {
  BasisPtr basis = make_basis(cfg.basis.states, cfg.basis.cutoff);
  const HamiltonianMatrix h = build_hamiltonian(cfg.params, basis);
  const EigenSystem eig = diagonalize(h);

  std::vector<std::vector<double>> rows;
  for (int i = 0; i < eig.values.size(); ++i)
    rows.push_back({double(i), eig.values(i)});
  out.write("eigenvalues.csv",
            csv_from_rows({"index", "energy"}, rows, "params=" + params_tag(cfg.params)));

  const auto momenta = eigen_momentum_map(eig, cfg.params);
  Eigen::VectorXd w_ground, w_fock;
  if (basis->has_state(ElectronicState::Donor)) {
    StateVector ground(basis);
    ground.amp(basis->index_of(ElectronicState::Donor, 0, 0)) = 1.0;
    w_ground = eigen_weights(eig, ground);
    if (basis->cutoff() >= 1)
      w_fock = eigen_weights(eig, fock_rotated(1, 0, ElectronicState::Donor, basis));
  }
  std::vector<std::vector<double>> mrows;
  for (size_t i = 0; i < momenta.size(); ++i) {
    const auto& m = momenta[i];
    std::vector<double> row = {double(i),       eig.values(Eigen::Index(i)),
                               m.p_par_mean,    m.p_perp_mean,
                               m.p_par_rms,     m.p_perp_rms,
                               w_ground.size() ? w_ground(Eigen::Index(i)) : 0.0,
                               w_fock.size() ? w_fock(Eigen::Index(i)) : 0.0};
    mrows.push_back(std::move(row));
  }
  out.write("momentum_map.csv",
            csv_from_rows({"index", "energy", "p_par_mean", "p_perp_mean", "p_par_rms",
                           "p_perp_rms", "w_ground", "w_fock"},
                          mrows, "params=" + params_tag(cfg.params)));

  if (dump_hamiltonian) {
    std::ostringstream ss;
    dump_csv(h, ss);
    out.write("hamiltonian.csv", ss.str());
  }
}

namespace {

std::string peak_line(const std::string& label, double tp_tau, double td_tau, Complex rtp,
                      Complex rtd) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s  tp/tau=%.3f  td/tau=%.3f  rate_tp/w=%+.2f%+.2fi  rate_td/w=%+.2f%+.2fi\n",
                label.c_str(), tp_tau, td_tau, rtp.real(), rtp.imag(), rtd.real(), rtd.imag());
  return buf;
}

}  // namespace

void run_interferogram(const RunConfig& cfg, OutputWriter& out) {
  const double tau = cfg.params.tau_vib();
  const SignalEvaluator eval(cfg.params, cfg.basis.cutoff, cfg.schedule.tw_tau * tau,
                             cfg.schedule.j_active_reference, cfg.schedule.theta);
  InterferogramSpec spec;
  spec.n_tp = spec.n_td = cfg.schedule.grid_n;
  spec.tp_max = cfg.schedule.grid_tp_max_tau * tau;
  spec.td_max = cfg.schedule.grid_td_max_tau * tau;
  spec.workers = cfg.run.workers;
  const InterferogramGrid grid = interferogram_scan(spec, eval);

  InterferogramGrid gtau = grid;  // axes in tau units for the exported files
  gtau.tp /= tau;
  gtau.td /= tau;
  out.write("interferogram_re.csv", csv_from_grid(gtau, true));
  out.write("interferogram_im.csv", csv_from_grid(gtau, false));
  out.write("interferogram_re.pgm", pgm_from_grid(gtau));

  const PeakReport rep = analyze_peak(grid, eval);
  std::string peaks = "# interferogram peak report, params=" + params_tag(cfg.params) + "\n";
  peaks += "# columns: tp/tau  td/tau  rate_tp/omega  rate_td/omega\n";
  peaks += peak_line("quantum      ", rep.tp_star / tau, rep.td_star / tau,
                     rep.rate_tp / cfg.params.omega, rep.rate_td / cfg.params.omega);
  try {
    const double a_tau = transfer_instant(cfg.params);
    const MatchPoint mp = semiclassical_match(2.0 * a_tau, 0, 1);
    peaks += peak_line("semiclassical", mp.tp_tau, mp.td_tau, 0.0, 0.0);
  } catch (const NumericalError&) {
    peaks += "semiclassical  (ridge unreachable)\n";
  }
  out.write("peaks.txt", peaks);
}

void run_match(const RunConfig& cfg, OutputWriter& out) {
  const double a_tau = transfer_instant(cfg.params);  // fraction of tau_vib
  const double a_tw = 2.0 * a_tau;                    // fraction of t_w = tau/2
  std::vector<std::vector<double>> rows;
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      const MatchPoint closed = semiclassical_match(a_tw, m, n);
      const MatchPoint root =
          semiclassical_match_root(a_tw, m, n, cfg.params, 0.5 * cfg.params.tau_vib());
      rows.push_back({double(m), double(n), closed.tp_tau, closed.td_tau, root.tp_tau,
                      root.td_tau});
    }
  out.write("match.csv",
            csv_from_rows({"m", "n", "tp_closed", "td_closed", "tp_root", "td_root"}, rows,
                          "transfer instant A = " + fmt(a_tau) + " tau_vib (" + fmt(a_tw) +
                              " of t_w); params=" + params_tag(cfg.params)));
}

void run_sweep(const RunConfig& cfg, OutputWriter& out) {
  const double efc = cfg.params.lambda();
  const double scale = cfg.sweep.in_efc ? efc : 1.0;
  const int n = cfg.sweep.points;
  std::vector<double> axis(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    axis[size_t(i)] =
        scale * (cfg.sweep.e_da_min + (cfg.sweep.e_da_max - cfg.sweep.e_da_min) * i / (n - 1));

  std::vector<std::vector<double>> rows(static_cast<size_t>(n));
  const double t2 = cfg.sweep.sample_tau * cfg.params.tau_vib();
  const double tavg = cfg.sweep.average_tau * cfg.params.tau_vib();
  for_each_index(n, cfg.run.workers, [&](int i) {
    DimerParams p = cfg.params;
    // sweep axis is the acceptor-minus-donor site energy difference
    p.epsilon_1 = 0.0;
    p.epsilon_1p = axis[size_t(i)];
    BasisPtr basis = make_one_exciton_basis(cfg.basis.cutoff);
    const EigenSystem eig = diagonalize(build_hamiltonian(p, basis));
    StateVector ground(basis);
    ground.amp(basis->index_of(ElectronicState::Donor, 0, 0)) = 1.0;
    const StateVector fock = fock_rotated(1, 0, ElectronicState::Donor, basis);

    const StateVector g2 = propagate(ground, t2, eig);
    const StateVector f2 = propagate(fock, t2, eig);
    rows[size_t(i)] = {axis[size_t(i)],
                       population(g2, ElectronicState::Acceptor),
                       time_averaged_population(eig, ground, ElectronicState::Acceptor, tavg),
                       population(f2, ElectronicState::Acceptor),
                       time_averaged_population(eig, fock, ElectronicState::Acceptor, tavg)};
  });
  out.write("sweep.csv",
            csv_from_rows({"e_da", "p_ground_snapshot", "p_ground_avg", "p_fock_snapshot",
                           "p_fock_avg"},
                          rows,
                          "snapshot at t=" + fmt(cfg.sweep.sample_tau) + " tau, average over " +
                              fmt(cfg.sweep.average_tau) + " tau; J=" + fmt(cfg.params.coupling)));
}

namespace {

RunConfig base_config() {
  RunConfig cfg;
  cfg.params.epsilon_1 = 0.0;
  cfg.params.epsilon_1p = 0.0;
  cfg.params.coupling = 0.1;
  cfg.basis.cutoff = 17;
  return cfg;
}

void scenario_kinetics_family(OutputWriter& out, const std::string& stem,
                              const std::vector<double>& detunings, double j, double t_max_tau,
                              int per_period) {
  std::string echo;
  for (size_t i = 0; i < detunings.size(); ++i) {
    RunConfig cfg = base_config();
    cfg.params.epsilon_1 = detunings[i];
    cfg.params.coupling = j;
    cfg.dynamics.t_max_tau = t_max_tau;
    cfg.dynamics.samples_per_period = per_period;
    BasisPtr basis = make_one_exciton_basis(cfg.basis.cutoff);
    const EigenSystem eig = diagonalize(build_hamiltonian(cfg.params, basis));
    const StateVector psi0 = franck_condon_excitation(ElectronicState::Donor, cfg.params, basis);
    const auto times = sample_times(cfg.params, t_max_tau, per_period);
    out.write(stem + "_" + std::to_string(i) + ".csv",
              csv_from_trajectory(
                  in_tau_units(population_trajectory(eig, psi0, times), cfg.params),
                  "deps=" + fmt(detunings[i]) + " J=" + fmt(j) + " params=" +
                      params_tag(cfg.params)));
    echo += "# " + stem + "_" + std::to_string(i) + ": deps = " + fmt(detunings[i]) + "\n";
  }
  RunConfig cfg = base_config();
  cfg.params.coupling = j;
  out.write_manifest(echo + cfg.to_ini().serialize());
}

}  // namespace

std::vector<std::string> scenario_names() {
  return {"stepwise",     "detuning",  "revivals",   "elementary", "table1",
          "marcus",       "trajectories", "vib_influence", "perp_phase"};
}

void run_scenario(const std::string& name, OutputWriter& out, int workers) {
  if (name == "stepwise") {
    scenario_kinetics_family(out, "stepwise", {0.0, 0.5, 7.0, 7.39}, 0.1, 5.0, 256);
    return;
  }
  if (name == "detuning") {
    scenario_kinetics_family(out, "detuning", {0.0, 1.0 / 16, 1.0 / 8, 1.0 / 4}, 0.1, 20.0, 128);
    return;
  }
  if (name == "revivals") {
    scenario_kinetics_family(out, "revivals", {0.0}, 0.1, 100.0, 64);
    return;
  }
  if (name == "elementary") {
    RunConfig cfg = base_config();
    cfg.params.coupling = 0.01;
    cfg.dynamics.t_max_tau = 5.0;
    cfg.dynamics.samples_per_period = 512;
    cfg.basis.states = {ElectronicState::Donor, ElectronicState::Acceptor};
    OutputWriter& w = out;
    run_dynamics(cfg, w);
    w.write_manifest(cfg.to_ini().serialize());
    return;
  }
  if (name == "table1") {
    std::string peaks = "# signal amplitude maximum and phase-change rate at the maximum\n";
    peaks += "# columns: tp/tau  td/tau  rate_tp/omega  rate_td/omega\n";
    const std::vector<std::pair<std::string, double>> configs = {{"equal", 0.0},
                                                                 {"downhill", 7.39}};
    for (const auto& [label, deps] : configs) {
      RunConfig cfg = base_config();
      cfg.params.epsilon_1 = deps;
      cfg.params.coupling = 0.1;
      cfg.run.workers = workers;
      const double tau = cfg.params.tau_vib();
      const SignalEvaluator eval(cfg.params, cfg.basis.cutoff, 0.5 * tau, true);
      InterferogramSpec spec;
      spec.workers = workers;
      const InterferogramGrid grid = interferogram_scan(spec, eval);
      InterferogramGrid gtau = grid;
      gtau.tp /= tau;
      gtau.td /= tau;
      out.write("interferogram_" + label + "_re.csv", csv_from_grid(gtau, true));
      out.write("interferogram_" + label + "_im.csv", csv_from_grid(gtau, false));
      out.write("interferogram_" + label + "_re.pgm", pgm_from_grid(gtau));
      const PeakReport rep = analyze_peak(grid, eval);
      peaks += peak_line(label + " quantum      ", rep.tp_star / tau, rep.td_star / tau,
                         rep.rate_tp / cfg.params.omega, rep.rate_td / cfg.params.omega);
      const double a_tw = 2.0 * transfer_instant(cfg.params);
      const MatchPoint mp = semiclassical_match(a_tw, 0, 1);
      peaks += peak_line(label + " semiclassical", mp.tp_tau, mp.td_tau, 0.0, 0.0);
    }
    out.write("table1_peaks.txt", peaks);
    RunConfig cfg = base_config();
    out.write_manifest("# table1: equal (deps=0) and downhill (deps=7.39)\n" +
                       cfg.to_ini().serialize());
    return;
  }
  if (name == "marcus") {
    RunConfig cfg = base_config();
    cfg.params.coupling = 0.5;
    cfg.run.workers = workers;
    run_sweep(cfg, out);
    out.write_manifest(cfg.to_ini().serialize());
    return;
  }
  if (name == "trajectories") {
    RunConfig cfg = base_config();
    cfg.params.coupling = 0.1;
    const double tau = cfg.params.tau_vib();
    const std::vector<std::pair<std::string, double>> configs = {
        {"equal", 0.0}, {"efc", 3.695}, {"2efc", 7.39}};
    std::string echo = "# target wavepacket trajectories\n";
    for (const auto& [label, deps] : configs) {
      DimerParams p = cfg.params;
      p.epsilon_1 = deps;
      BasisPtr basis = make_full_basis(cfg.basis.cutoff);
      const EigenSystem eig = diagonalize(build_hamiltonian(p, basis));
      Trajectory pos = target_phase_space(p, eig, tau / 256.0, 1.5 * tau, 384);
      out.write("trajectory_" + label + ".csv",
                csv_from_trajectory(in_tau_units(std::move(pos), p),
                                    "deps=" + fmt(deps) + " params=" + params_tag(p)));
      echo += "# trajectory_" + label + ": deps = " + fmt(deps) + "\n";
    }
    out.write_manifest(echo + cfg.to_ini().serialize());
    return;
  }
  if (name == "vib_influence") {
    RunConfig cfg = base_config();
    cfg.params.coupling = 0.1;
    const double delta = cfg.params.delta();
    BasisPtr basis = make_one_exciton_basis(cfg.basis.cutoff);
    const EigenSystem eig = diagonalize(build_hamiltonian(cfg.params, basis));
    const auto times = sample_times(cfg.params, 20.0, 64);
    struct Case {
      std::string name;
      StateVector psi;
    };
    std::vector<Case> cases;
    {
      StateVector ground(basis);
      ground.amp(basis->index_of(ElectronicState::Donor, 0, 0)) = 1.0;
      cases.push_back({"ground", std::move(ground)});
    }
    const DimerParams& p = cfg.params;
    cases.push_back({"mode_a", rotated_coherent({ExcitationDirection::ModeA, delta, 0.0},
                                                ElectronicState::Donor, p, basis)});
    cases.push_back({"perp", rotated_coherent({ExcitationDirection::Perpendicular, delta, 0.0},
                                              ElectronicState::Donor, p, basis)});
    cases.push_back({"par", rotated_coherent({ExcitationDirection::Parallel, delta, 0.0},
                                             ElectronicState::Donor, p, basis)});
    cases.push_back({"circular", rotated_coherent({ExcitationDirection::Circular, delta, 0.0},
                                                  ElectronicState::Donor, p, basis)});
    for (const auto& c : cases) {
      out.write("vib_influence_" + c.name + ".csv",
                csv_from_trajectory(in_tau_units(population_trajectory(eig, c.psi, times), p),
                                    "initial=" + c.name + " params=" + params_tag(p)));
      out.write("vib_influence_traj_" + c.name + ".csv",
                csv_from_trajectory(
                    in_tau_units(mean_position_trajectory(
                                     eig, c.psi, ElectronicState::Donor,
                                     linspace(0.0, 2.0 * p.tau_vib(), 257), p),
                                 p),
                    "donor mean position, initial=" + c.name));
    }
    out.write_manifest(cfg.to_ini().serialize());
    return;
  }
  if (name == "perp_phase") {
    RunConfig cfg = base_config();
    cfg.params.coupling = 0.1;
    const double delta = cfg.params.delta();
    std::vector<std::vector<double>> rows;
    for (double deps : {7.39, -7.39})
      for (double phi : {0.0, M_PI}) {
        DimerParams p = cfg.params;
        p.epsilon_1 = deps;
        BasisPtr basis = make_one_exciton_basis(cfg.basis.cutoff);
        const EigenSystem eig = diagonalize(build_hamiltonian(p, basis));
        const StateVector psi = rotated_coherent({ExcitationDirection::Perpendicular, delta, phi},
                                                 ElectronicState::Donor, p, basis);
        const double rate = time_averaged_population(eig, psi, ElectronicState::Acceptor,
                                                     2.0 * p.tau_vib());
        rows.push_back({deps, phi, rate});
      }
    out.write("perp_phase.csv",
              csv_from_rows({"deps", "phi_perp", "rate"}, rows,
                            "rate = mean acceptor population over 2 tau_vib; J=" +
                                fmt(cfg.params.coupling)));
    out.write_manifest(cfg.to_ini().serialize());
    return;
  }
  throw ConfigError("unknown scenario '" + name + "'");
}

int run_validate(bool quick, std::ostream& os) {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    os << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  {
    bool ok = true;
    for (int c = 0; c <= (quick ? 6 : 12) && ok; ++c) {
      const auto basis = make_one_exciton_basis(c);
      if (basis->size() != 2 * (c + 1) * (c + 2) / 2) ok = false;
      for (int i = 0; i < basis->size() && ok; ++i) {
        const auto& e = basis->entry(i);
        if (basis->index_of(e.state, e.m, e.n) != i) ok = false;
      }
    }
    check("basis bijection and sizes", ok);
  }
  {
    bool ok = true;
    for (int j = 0; j < 2 && ok; ++j)
      for (int m = 0; m < 6 && ok; ++m)
        for (int n = 0; n < 6 && ok; ++n) {
          const auto inv = superindex_invert(superindex(j, m, n, 6), 6);
          if (inv[0] != j || inv[1] != m || inv[2] != n) ok = false;
        }
    check("superindex round trip", ok);
  }
  {
    DimerParams p;
    check("reorganization energy identity", p.lambda() == p.delta_sq() * p.omega &&
                                                std::abs(p.lambda() - 3.695) < 1e-12);
  }
  {
    bool ok = true;
    for (double l : {-1.7, 0.4, 2.3}) {
      if (std::abs(franck_condon_1d(0, 0, l) - std::exp(-0.5 * l * l)) > 1e-12) ok = false;
      for (int m = 0; m < 6 && ok; ++m)
        for (int n = 0; n < 6 && ok; ++n)
          if (std::abs(std::abs(franck_condon_1d(m, n, l)) -
                       std::abs(franck_condon_1d(n, m, -l))) > 1e-12)
            ok = false;
    }
    const int ns = 48;
    const Eigen::MatrixXd dmat = displacement_matrix(ns, 1.2);
    const Eigen::MatrixXd gram = dmat.transpose() * dmat;
    // truncated unitarity holds away from the cutoff edge
    bool uok = (gram.topLeftCorner(16, 16) - Eigen::MatrixXd::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-10;
    check("displacement overlaps", ok && uok);
  }
  DimerParams p;
  p.epsilon_1 = 0.5;
  p.coupling = 0.1;
  BasisPtr basis = make_one_exciton_basis(quick ? 8 : 12);
  const HamiltonianMatrix h = build_hamiltonian(p, basis);
  check("hermitian assembly", (h.mat - h.mat.transpose()).cwiseAbs().maxCoeff() == 0.0);
  const EigenSystem eig = diagonalize(h);
  {
    const double hnorm = std::max(std::abs(eig.values(0)), std::abs(eig.values(eig.values.size() - 1)));
    double rmax = 0.0;
    for (int l = 0; l < eig.values.size(); ++l)
      rmax = std::max(rmax, (h.mat * eig.vectors.col(l) - eig.values(l) * eig.vectors.col(l)).norm());
    check("eigen residuals", rmax <= 1e-10 * hnorm);
    check("eigenvector orthonormality",
          (eig.vectors.transpose() * eig.vectors - Eigen::MatrixXd::Identity(eig.values.size(), eig.values.size()))
                  .cwiseAbs()
                  .maxCoeff() < 1e-10);
  }
  {
    std::mt19937 rng(20240817u);
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> ut(0.0, 100.0 * p.tau_vib());
    bool okn = true, okc = true, oke = true;
    const int reps = quick ? 20 : 200;
    for (int r = 0; r < reps; ++r) {
      Eigen::VectorXcd v(basis->size());
      for (int i = 0; i < v.size(); ++i) v(i) = Complex(gauss(rng), gauss(rng));
      v /= v.norm();
      StateVector psi{basis, v};
      const double t1 = ut(rng), t2 = ut(rng);
      const StateVector a = propagate(psi, t1, eig);
      if (std::abs(a.norm() - 1.0) > 1e-12) okn = false;
      const StateVector ab = propagate(a, t2, eig);
      const StateVector b = propagate(psi, t1 + t2, eig);
      if ((ab.amp - b.amp).cwiseAbs().maxCoeff() > 1e-10) okc = false;
      const Complex e0 = psi.amp.dot(h.mat * psi.amp);
      const Complex e1 = a.amp.dot(h.mat * a.amp);
      if (std::abs(e0 - e1) > 1e-10) oke = false;
    }
    check("propagation unitarity", okn);
    check("propagation composition", okc);
    check("energy conservation", oke);
  }
  {
    const auto wide = make_one_exciton_basis(18);
    const StateVector fc = franck_condon_excitation(ElectronicState::Donor, p, wide);
    const auto quanta = mean_quanta(fc, ElectronicState::Donor);
    check("franck-condon excitation energy",
          std::abs(fc.norm() - 1.0) < 1e-6 &&
              std::abs(quanta.first - p.delta_sq()) < 1e-5 && std::abs(quanta.second) < 1e-9);
  }
  {
    BasisPtr full = make_full_basis(6);
    DimerParams pf = p;
    StateVector vac(full);
    vac.amp(full->index_of(ElectronicState::Ground, 0, 0)) = 1.0;
    const PulseSpec px{'B', Polarization::X, 0, 0, 0, 0.7};
    const StateVector up = apply_pulse_first_order(vac, px, PulseAction::Up, pf);
    const bool sel = population(up, ElectronicState::Acceptor) == 0.0 &&
                     population(up, ElectronicState::Biexciton) == 0.0;
    const PulseSpec px2{'B', Polarization::X, 0, 0, 0, 1.4};
    const StateVector up2 = apply_pulse_first_order(vac, px2, PulseAction::Up, pf);
    const bool lin = (up2.amp - 2.0 * up.amp).cwiseAbs().maxCoeff() < 1e-12;
    check("pulse selection rules and linearity", sel && lin);
  }
  {
    const Complex z(0.37, -1.21), other(-0.4, 0.9);
    const double c0 = 0.77;
    auto signal = [&](double fp, double fd) {
      return 2.0 * (z * std::polar(1.0, -fp + fd)).real() + c0 +
             2.0 * (other * std::polar(1.0, -fp - fd)).real();
    };
    const Complex got = phase_cycle_isolate(signal(0, 0), signal(M_PI_2, -M_PI_2),
                                            signal(M_PI_2, 0), signal(0, M_PI_2));
    check("phase cycling synthetic identity", std::abs(got - z) < 1e-12);
  }
  {
    RunConfig cfg;
    cfg.params = p;
    const Ini ini = cfg.to_ini();
    const RunConfig back = RunConfig::from_ini(ini);
    check("config round trip", back.to_ini().serialize() == ini.serialize());
  }
  {
    DimerParams pt;
    pt.epsilon_1 = 2.0 * pt.lambda();
    const bool quarter = std::abs(transfer_instant(pt) - 0.25) < 1e-12;
    pt.epsilon_1 = 0.0;
    const bool zero = transfer_instant(pt) == 0.0;
    pt.epsilon_1 = 4.0 * pt.lambda();
    const bool half = std::abs(transfer_instant(pt) - 0.5) < 1e-12;
    check("transfer instant anchors", quarter && zero && half);
  }
  return failures;
}

}  // namespace vibronic
