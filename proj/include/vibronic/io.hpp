#ifndef VIBRONIC_IO_HPP
#define VIBRONIC_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "vibronic/interferometry.hpp"
#include "vibronic/observables.hpp"

namespace vibronic {

/// Atomic file write: temp file in the same directory, then rename.
void atomic_write(const std::filesystem::path& path, const std::string& bytes);

unsigned long long fnv1a64(const std::string& bytes);

std::string csv_from_trajectory(const Trajectory& tr, const std::string& comment = "");

/// Matrix CSV with a leading axis header row and a leading axis column.
std::string csv_from_grid(const InterferogramGrid& grid, bool real_part);

/// 8-bit binary PGM of Re(signal), min-max normalized.
std::string pgm_from_grid(const InterferogramGrid& grid);

std::string csv_from_rows(const std::vector<std::string>& columns,
                          const std::vector<std::vector<double>>& rows,
                          const std::string& comment = "");

/// Collects written files and emits a manifest (config echo + content
/// hashes; the timestamp is isolated on its own line).
class OutputWriter {
 public:
  explicit OutputWriter(std::filesystem::path dir);
  void write(const std::string& filename, const std::string& bytes);
  void write_manifest(const std::string& config_echo);
  const std::vector<std::string>& files() const { return files_; }
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::vector<std::string> files_;
  std::vector<unsigned long long> hashes_;
};

}  // namespace vibronic

#endif
