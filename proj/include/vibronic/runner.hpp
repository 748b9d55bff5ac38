#ifndef VIBRONIC_RUNNER_HPP
#define VIBRONIC_RUNNER_HPP

#include <iosfwd>

#include "vibronic/config.hpp"
#include "vibronic/io.hpp"

namespace vibronic {

void run_dynamics(const RunConfig& cfg, OutputWriter& out);
void run_eigen(const RunConfig& cfg, OutputWriter& out, bool dump_hamiltonian = false);
void run_interferogram(const RunConfig& cfg, OutputWriter& out);
void run_match(const RunConfig& cfg, OutputWriter& out);
void run_sweep(const RunConfig& cfg, OutputWriter& out);

/// Named scenario presets; each writes the figure-grade outputs for one
/// configuration family plus the manifest.
void run_scenario(const std::string& name, OutputWriter& out, int workers);
std::vector<std::string> scenario_names();

/// Invariant suite; prints one line per check, returns the failure count.
int run_validate(bool quick, std::ostream& os);

/// Short parameter tag used in CSV headers.
std::string params_tag(const DimerParams& params);

}  // namespace vibronic

#endif
