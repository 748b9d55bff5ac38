#include "vibronic/config.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace vibronic {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) ||
          c == '_'))
      return false;
  return true;
}

double parse_double(const std::string& section, const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for " + section + "." + key + ": '" + v + "'");
  }
}

int parse_int(const std::string& section, const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::exception&) {
    throw ConfigError("bad integer value for " + section + "." + key + ": '" + v + "'");
  }
}

bool parse_bool(const std::string& section, const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("bad boolean value for " + section + "." + key + ": '" + v + "'");
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// tracks which keys were consumed so strict parsing can reject leftovers
class Reader {
 public:
  explicit Reader(const Ini& ini) : ini_(ini) {}

  bool has(const std::string& s, const std::string& k) {
    if (ini_.has(s, k)) {
      used_.insert(s + "." + k);
      return true;
    }
    return false;
  }
  std::string str(const std::string& s, const std::string& k, const std::string& dflt) {
    return has(s, k) ? ini_.get(s, k) : dflt;
  }
  double num(const std::string& s, const std::string& k, double dflt) {
    return has(s, k) ? parse_double(s, k, ini_.get(s, k)) : dflt;
  }
  int integer(const std::string& s, const std::string& k, int dflt) {
    return has(s, k) ? parse_int(s, k, ini_.get(s, k)) : dflt;
  }
  bool boolean(const std::string& s, const std::string& k, bool dflt) {
    return has(s, k) ? parse_bool(s, k, ini_.get(s, k)) : dflt;
  }

  void reject_unknown() const {
    for (const auto& [sec, kv] : ini_.sections())
      for (const auto& [key, value] : kv)
        if (!used_.count(sec + "." + key))
          throw ConfigError("unknown config key " + sec + "." + key);
  }

 private:
  const Ini& ini_;
  std::set<std::string> used_;
};

}  // namespace

Ini Ini::parse(const std::string& text) {
  Ini ini;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("line " + std::to_string(lineno) + ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (!valid_name(section))
        throw ConfigError("line " + std::to_string(lineno) + ": bad section name '" + section + "'");
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!valid_name(key))
      throw ConfigError("line " + std::to_string(lineno) + ": bad key name '" + key + "'");
    if (section.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": key outside any section");
    if (ini.has(section, key))
      throw ConfigError("line " + std::to_string(lineno) + ": duplicate key " + section + "." + key);
    ini.set(section, key, value);
  }
  return ini;
}

std::string Ini::serialize() const {
  std::string out;
  for (const auto& [sec, kv] : sections_) {
    out += "[" + sec + "]\n";
    for (const auto& [key, value] : kv) out += key + " = " + value + "\n";
    out += "\n";
  }
  return out;
}

bool Ini::has(const std::string& section, const std::string& key) const {
  const auto it = sections_.find(section);
  return it != sections_.end() && it->second.count(key) > 0;
}

void Ini::set(const std::string& section, const std::string& key, const std::string& value) {
  sections_[section][key] = value;
}

std::string Ini::get(const std::string& section, const std::string& key) const {
  return sections_.at(section).at(key);
}

StateVector prepare_initial_state(const InitialSpec& spec, const DimerParams& params,
                                  BasisPtr basis) {
  switch (spec.kind) {
    case InitialKind::Ground: {
      StateVector psi(std::move(basis));
      psi.amp(psi.basis->index_of(spec.surface, 0, 0)) = 1.0;
      return psi;
    }
    case InitialKind::FranckCondon:
      return franck_condon_excitation(spec.surface, params, std::move(basis));
    case InitialKind::Coherent:
      return coherent_state({spec.surface, spec.alpha, spec.beta, spec.frame}, params,
                            std::move(basis));
    case InitialKind::Rotated:
      return rotated_coherent(spec.rotated, spec.surface, params, std::move(basis));
    case InitialKind::Fock:
      return fock_rotated(spec.fock_par, spec.fock_perp, spec.surface, std::move(basis));
  }
  throw std::logic_error("unreachable");
}

RunConfig RunConfig::from_ini(const Ini& ini) {
  Reader r(ini);
  RunConfig cfg;

  cfg.params.epsilon_1 = r.num("params", "epsilon_1", 0.0);
  cfg.params.epsilon_1p = r.num("params", "epsilon_1p", 0.0);
  if (r.has("params", "epsilon_2"))
    cfg.params.epsilon_2 = parse_double("params", "epsilon_2", ini.get("params", "epsilon_2"));
  cfg.params.omega = r.num("params", "omega", 1.0);
  cfg.params.mass = r.num("params", "mass", 1.0);
  if (r.has("params", "lambda")) {
    const double lam = parse_double("params", "lambda", ini.get("params", "lambda"));
    if (lam < 0.0) throw ConfigError("params.lambda must be >= 0");
    cfg.params.d = std::sqrt(2.0 * lam / (cfg.params.mass * cfg.params.omega * cfg.params.omega));
  }
  if (r.has("params", "d"))
    cfg.params.d = parse_double("params", "d", ini.get("params", "d"));
  cfg.params.coupling = r.num("params", "coupling_j", cfg.params.coupling);
  if (r.has("params", "omega_lock_p"))
    cfg.params.omega_lock_p =
        parse_double("params", "omega_lock_p", ini.get("params", "omega_lock_p"));
  if (r.has("params", "omega_lock_d"))
    cfg.params.omega_lock_d =
        parse_double("params", "omega_lock_d", ini.get("params", "omega_lock_d"));
  try {
    cfg.params.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid [params]: ") + e.what());
  }

  cfg.basis.cutoff = r.integer("basis", "cutoff", 17);
  if (cfg.basis.cutoff < 0) throw ConfigError("basis.cutoff must be >= 0");
  if (r.has("basis", "states")) {
    cfg.basis.states.clear();
    std::istringstream ss(ini.get("basis", "states"));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok = trim(tok);
      try {
        cfg.basis.states.push_back(electronic_state_from_string(tok));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("basis.states: ") + e.what());
      }
    }
    if (cfg.basis.states.empty()) throw ConfigError("basis.states: empty list");
  }

  const std::string kind = r.str("initial", "kind", "fc");
  if (kind == "ground")
    cfg.initial.kind = InitialKind::Ground;
  else if (kind == "fc" || kind == "franck-condon")
    cfg.initial.kind = InitialKind::FranckCondon;
  else if (kind == "coherent")
    cfg.initial.kind = InitialKind::Coherent;
  else if (kind == "rotated")
    cfg.initial.kind = InitialKind::Rotated;
  else if (kind == "fock")
    cfg.initial.kind = InitialKind::Fock;
  else
    throw ConfigError("initial.kind must be ground|fc|coherent|rotated|fock");
  if (r.has("initial", "surface")) {
    try {
      cfg.initial.surface = electronic_state_from_string(ini.get("initial", "surface"));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("initial.surface: ") + e.what());
    }
  }
  cfg.initial.alpha = Complex(r.num("initial", "alpha_re", 0.0), r.num("initial", "alpha_im", 0.0));
  cfg.initial.beta = Complex(r.num("initial", "beta_re", 0.0), r.num("initial", "beta_im", 0.0));
  const std::string frame = r.str("initial", "frame", "surface");
  if (frame == "surface")
    cfg.initial.frame = AmplitudeFrame::SurfaceRelative;
  else if (frame == "ground")
    cfg.initial.frame = AmplitudeFrame::Ground;
  else
    throw ConfigError("initial.frame must be surface|ground");
  if (r.has("initial", "direction")) {
    try {
      cfg.initial.rotated.direction =
          excitation_direction_from_string(ini.get("initial", "direction"));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("initial.direction: ") + e.what());
    }
  }
  cfg.initial.rotated.gamma = r.num("initial", "gamma", 0.0);
  cfg.initial.rotated.phi = r.num("initial", "phi", 0.0);
  cfg.initial.fock_par = r.integer("initial", "fock_par", 0);
  cfg.initial.fock_perp = r.integer("initial", "fock_perp", 0);

  cfg.dynamics.t_max_tau = r.num("dynamics", "t_max", 20.0);
  cfg.dynamics.samples_per_period = r.integer("dynamics", "samples_per_period", 64);
  if (cfg.dynamics.t_max_tau <= 0.0 || cfg.dynamics.samples_per_period < 2)
    throw ConfigError("invalid [dynamics] sampling");

  cfg.schedule.tp_tau = r.num("schedule", "t_p", 0.0);
  cfg.schedule.tw_tau = r.num("schedule", "t_w", 0.5);
  cfg.schedule.td_tau = r.num("schedule", "t_d", 0.0);
  cfg.schedule.phi_p = r.num("schedule", "phi_p", 0.0);
  cfg.schedule.phi_d = r.num("schedule", "phi_d", 0.0);
  cfg.schedule.theta = r.num("schedule", "theta", 1.0);
  cfg.schedule.j_active_reference = r.boolean("schedule", "j_active_reference", true);
  cfg.schedule.grid_n = r.integer("schedule", "grid_n", 64);
  cfg.schedule.grid_tp_max_tau = r.num("schedule", "grid_tp_max", 2.0);
  cfg.schedule.grid_td_max_tau = r.num("schedule", "grid_td_max", 2.0);
  if (cfg.schedule.grid_n < 2) throw ConfigError("schedule.grid_n must be >= 2");
  if (cfg.schedule.tp_tau < 0.0 || cfg.schedule.tw_tau < 0.0 || cfg.schedule.td_tau < 0.0)
    throw ConfigError("schedule delays must be non-negative");

  cfg.sweep.e_da_min = r.num("sweep", "e_da_min", -4.0);
  cfg.sweep.e_da_max = r.num("sweep", "e_da_max", 4.0);
  cfg.sweep.in_efc = r.boolean("sweep", "in_efc", true);
  cfg.sweep.points = r.integer("sweep", "points", 33);
  cfg.sweep.average_tau = r.num("sweep", "average_t", 100.0);
  cfg.sweep.sample_tau = r.num("sweep", "sample_t", 2.0);
  if (cfg.sweep.points < 2) throw ConfigError("sweep.points must be >= 2");

  cfg.run.scenario = r.str("run", "scenario", "");
  cfg.run.output_dir = r.str("run", "output_dir", "out");
  cfg.run.workers = r.integer("run", "workers", 0);
  if (cfg.run.workers < 0) throw ConfigError("run.workers must be >= 0");

  r.reject_unknown();
  return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_ini(Ini::parse(ss.str()));
}

Ini RunConfig::to_ini() const {
  Ini ini;
  ini.set("params", "epsilon_1", format_double(params.epsilon_1));
  ini.set("params", "epsilon_1p", format_double(params.epsilon_1p));
  if (params.epsilon_2) ini.set("params", "epsilon_2", format_double(*params.epsilon_2));
  ini.set("params", "omega", format_double(params.omega));
  ini.set("params", "mass", format_double(params.mass));
  ini.set("params", "d", format_double(params.d));
  ini.set("params", "coupling_j", format_double(params.coupling));
  if (params.omega_lock_p) ini.set("params", "omega_lock_p", format_double(*params.omega_lock_p));
  if (params.omega_lock_d) ini.set("params", "omega_lock_d", format_double(*params.omega_lock_d));

  ini.set("basis", "cutoff", std::to_string(basis.cutoff));
  std::string states;
  for (ElectronicState s : basis.states) {
    if (!states.empty()) states += ",";
    states += to_string(s);
  }
  ini.set("basis", "states", states);

  const char* kind = "fc";
  switch (initial.kind) {
    case InitialKind::Ground: kind = "ground"; break;
    case InitialKind::FranckCondon: kind = "fc"; break;
    case InitialKind::Coherent: kind = "coherent"; break;
    case InitialKind::Rotated: kind = "rotated"; break;
    case InitialKind::Fock: kind = "fock"; break;
  }
  ini.set("initial", "kind", kind);
  ini.set("initial", "surface", to_string(initial.surface));
  if (initial.kind == InitialKind::Coherent) {
    ini.set("initial", "alpha_re", format_double(initial.alpha.real()));
    ini.set("initial", "alpha_im", format_double(initial.alpha.imag()));
    ini.set("initial", "beta_re", format_double(initial.beta.real()));
    ini.set("initial", "beta_im", format_double(initial.beta.imag()));
    ini.set("initial", "frame",
            initial.frame == AmplitudeFrame::Ground ? "ground" : "surface");
  }
  if (initial.kind == InitialKind::Rotated) {
    const char* dir = "a";
    switch (initial.rotated.direction) {
      case ExcitationDirection::ModeA: dir = "a"; break;
      case ExcitationDirection::ModeB: dir = "b"; break;
      case ExcitationDirection::Parallel: dir = "parallel"; break;
      case ExcitationDirection::Perpendicular: dir = "perpendicular"; break;
      case ExcitationDirection::Circular: dir = "circular"; break;
    }
    ini.set("initial", "direction", dir);
    ini.set("initial", "gamma", format_double(initial.rotated.gamma));
    ini.set("initial", "phi", format_double(initial.rotated.phi));
  }
  if (initial.kind == InitialKind::Fock) {
    ini.set("initial", "fock_par", std::to_string(initial.fock_par));
    ini.set("initial", "fock_perp", std::to_string(initial.fock_perp));
  }

  ini.set("dynamics", "t_max", format_double(dynamics.t_max_tau));
  ini.set("dynamics", "samples_per_period", std::to_string(dynamics.samples_per_period));

  ini.set("schedule", "t_p", format_double(schedule.tp_tau));
  ini.set("schedule", "t_w", format_double(schedule.tw_tau));
  ini.set("schedule", "t_d", format_double(schedule.td_tau));
  ini.set("schedule", "phi_p", format_double(schedule.phi_p));
  ini.set("schedule", "phi_d", format_double(schedule.phi_d));
  ini.set("schedule", "theta", format_double(schedule.theta));
  ini.set("schedule", "j_active_reference", schedule.j_active_reference ? "true" : "false");
  ini.set("schedule", "grid_n", std::to_string(schedule.grid_n));
  ini.set("schedule", "grid_tp_max", format_double(schedule.grid_tp_max_tau));
  ini.set("schedule", "grid_td_max", format_double(schedule.grid_td_max_tau));

  ini.set("sweep", "e_da_min", format_double(sweep.e_da_min));
  ini.set("sweep", "e_da_max", format_double(sweep.e_da_max));
  ini.set("sweep", "in_efc", sweep.in_efc ? "true" : "false");
  ini.set("sweep", "points", std::to_string(sweep.points));
  ini.set("sweep", "average_t", format_double(sweep.average_tau));
  ini.set("sweep", "sample_t", format_double(sweep.sample_tau));

  if (!run.scenario.empty()) ini.set("run", "scenario", run.scenario);
  ini.set("run", "output_dir", run.output_dir);
  ini.set("run", "workers", std::to_string(run.workers));
  return ini;
}

}  // namespace vibronic
