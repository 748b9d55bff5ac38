#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "vibronic/runner.hpp"

namespace {

// exit codes: 0 success, 2 config error, 3 numerical/runtime failure
constexpr int kConfigError = 2;
constexpr int kNumericalError = 3;

std::string resolve_output_dir(const std::string& flag_value, const std::string& config_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("VIBRONIC_OUTPUT_DIR"); env && *env) return env;
  return config_value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vibronic dimer energy-transfer simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  bool dump_h = false;
  bool quick = false;
  std::string scenario;

  auto add_common = [&](CLI::App* sub, bool config_required) {
    sub->add_option("--config,-c", config_path, "config file (INI)")->required(config_required);
    sub->add_option("--out,-o", out_dir, "output directory");
  };

  CLI::App* dynamics = app.add_subcommand("dynamics", "population kinetics and trajectories");
  add_common(dynamics, true);
  CLI::App* eigencmd = app.add_subcommand("eigen", "spectrum and eigenstate momentum map");
  add_common(eigencmd, true);
  eigencmd->add_flag("--dump-h", dump_h, "also dump the Hamiltonian matrix as CSV");
  CLI::App* interf = app.add_subcommand("interferogram", "delay-grid scan and peak report");
  add_common(interf, true);
  CLI::App* match = app.add_subcommand("match", "semiclassical matching-time predictor");
  add_common(match, true);
  CLI::App* scan = app.add_subcommand("scan", "1-D site-energy-difference sweep");
  add_common(scan, true);
  CLI::App* validate = app.add_subcommand("validate", "run the invariant suite");
  validate->add_flag("--quick", quick, "reduced repetition counts");
  CLI::App* scen = app.add_subcommand("scenario", "run a named scenario");
  scen->add_option("name", scenario, "scenario name")->required();
  add_common(scen, false);

  CLI11_PARSE(app, argc, argv);

  try {
    using namespace vibronic;
    if (validate->parsed()) {
      const int failures = run_validate(quick, std::cout);
      if (failures) {
        std::cerr << "error: validation: " << failures << " check(s) failed\n";
        return kNumericalError;
      }
      return 0;
    }
    if (scen->parsed()) {
      RunConfig defaults;
      OutputWriter out(resolve_output_dir(out_dir, defaults.run.output_dir + "/" + scenario));
      run_scenario(scenario, out, 0);
      std::cout << "wrote " << out.files().size() << " file(s) to " << out.dir().string() << "\n";
      return 0;
    }

    const RunConfig cfg = RunConfig::from_file(config_path);
    OutputWriter out(resolve_output_dir(out_dir, cfg.run.output_dir));
    if (dynamics->parsed()) run_dynamics(cfg, out);
    if (eigencmd->parsed()) run_eigen(cfg, out, dump_h);
    if (interf->parsed()) run_interferogram(cfg, out);
    if (match->parsed()) run_match(cfg, out);
    if (scan->parsed()) run_sweep(cfg, out);
    out.write_manifest(cfg.to_ini().serialize());
    std::cout << "wrote " << out.files().size() << " file(s) to " << out.dir().string() << "\n";
    return 0;
  } catch (const vibronic::ConfigError& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return kConfigError;
  } catch (const vibronic::NumericalError& e) {
    std::cerr << "error: numerical: " << e.what() << "\n";
    return kNumericalError;
  } catch (const std::exception& e) {
    std::cerr << "error: runtime: " << e.what() << "\n";
    return kNumericalError;
  }
}
