#ifndef VIBRONIC_CONFIG_HPP
#define VIBRONIC_CONFIG_HPP

#include <map>
#include <string>

#include "vibronic/interferometry.hpp"
#include "vibronic/model.hpp"
#include "vibronic/states.hpp"

namespace vibronic {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sectioned key-value text. Grammar: '[section]' headers, 'key = value'
/// lines, '#' comments (full-line or trailing), blank lines ignored.
/// Section and key names are [a-z0-9_]+. Duplicate keys are rejected.
class Ini {
 public:
  static Ini parse(const std::string& text);
  std::string serialize() const;

  bool has(const std::string& section, const std::string& key) const;
  const std::map<std::string, std::map<std::string, std::string>>& sections() const {
    return sections_;
  }

  void set(const std::string& section, const std::string& key, const std::string& value);
  std::string get(const std::string& section, const std::string& key) const;

 private:
  std::map<std::string, std::map<std::string, std::string>> sections_;
};

enum class InitialKind { Ground, FranckCondon, Coherent, Rotated, Fock };

struct InitialSpec {
  InitialKind kind = InitialKind::FranckCondon;
  ElectronicState surface = ElectronicState::Donor;
  // coherent
  Complex alpha, beta;
  AmplitudeFrame frame = AmplitudeFrame::SurfaceRelative;
  // rotated
  RotatedSpec rotated;
  // fock
  int fock_par = 0, fock_perp = 0;
};

StateVector prepare_initial_state(const InitialSpec& spec, const DimerParams& params,
                                  BasisPtr basis);

struct BasisSpec {
  int cutoff = 17;
  std::vector<ElectronicState> states = {ElectronicState::Donor, ElectronicState::Acceptor};
};

struct DynamicsSpec {
  double t_max_tau = 20.0;
  int samples_per_period = 64;
};

struct ScheduleSpec {
  double tp_tau = 0.0, tw_tau = 0.5, td_tau = 0.0;
  double phi_p = 0.0, phi_d = 0.0;
  double theta = 1.0;
  bool j_active_reference = true;
  int grid_n = 64;
  double grid_tp_max_tau = 2.0, grid_td_max_tau = 2.0;
};

struct SweepSpec {
  // 1-D sweep of the acceptor-minus-donor site energy difference
  double e_da_min = -4.0, e_da_max = 4.0;  // units of E_FC when in_efc, else omega
  bool in_efc = true;
  int points = 33;
  double average_tau = 100.0;  // window for the time-averaged population
  double sample_tau = 2.0;     // snapshot time for the pointwise population
};

struct RunSpec {
  std::string scenario;
  std::string output_dir = "out";
  int workers = 0;
};

struct RunConfig {
  DimerParams params;
  BasisSpec basis;
  InitialSpec initial;
  DynamicsSpec dynamics;
  ScheduleSpec schedule;
  SweepSpec sweep;
  RunSpec run;

  static RunConfig from_ini(const Ini& ini);  // strict: unknown keys rejected
  static RunConfig from_file(const std::string& path);
  Ini to_ini() const;
};

}  // namespace vibronic

#endif
