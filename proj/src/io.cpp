#include "vibronic/io.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>

namespace vibronic {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void atomic_write(const std::filesystem::path& path, const std::string& bytes) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

unsigned long long fnv1a64(const std::string& bytes) {
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string csv_from_trajectory(const Trajectory& tr, const std::string& comment) {
  std::string out;
  if (!comment.empty()) out += "# " + comment + "\n";
  for (size_t i = 0; i < tr.columns.size(); ++i) {
    if (i) out += ",";
    out += tr.columns[i];
  }
  out += "\n";
  for (Eigen::Index r = 0; r < tr.data.rows(); ++r) {
    for (Eigen::Index c = 0; c < tr.data.cols(); ++c) {
      if (c) out += ",";
      out += fmt(tr.data(r, c));
    }
    out += "\n";
  }
  return out;
}

std::string csv_from_grid(const InterferogramGrid& grid, bool real_part) {
  std::string out = "tp\\td";
  for (Eigen::Index c = 0; c < grid.td.size(); ++c) out += "," + fmt(grid.td(c));
  out += "\n";
  for (Eigen::Index r = 0; r < grid.tp.size(); ++r) {
    out += fmt(grid.tp(r));
    for (Eigen::Index c = 0; c < grid.td.size(); ++c) {
      const Complex v = grid.signal(r, c);
      out += "," + fmt(real_part ? v.real() : v.imag());
    }
    out += "\n";
  }
  return out;
}

std::string pgm_from_grid(const InterferogramGrid& grid) {
  double lo = grid.signal(0, 0).real(), hi = lo;
  for (Eigen::Index r = 0; r < grid.signal.rows(); ++r)
    for (Eigen::Index c = 0; c < grid.signal.cols(); ++c) {
      const double v = grid.signal(r, c).real();
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  const double span = hi > lo ? hi - lo : 1.0;
  std::string out = "P5\n" + std::to_string(grid.signal.cols()) + " " +
                    std::to_string(grid.signal.rows()) + "\n255\n";
  // top row = largest tp so the image reads like a plot
  for (Eigen::Index r = grid.signal.rows() - 1; r >= 0; --r)
    for (Eigen::Index c = 0; c < grid.signal.cols(); ++c) {
      const double v = (grid.signal(r, c).real() - lo) / span;
      out.push_back(static_cast<char>(static_cast<unsigned char>(std::lround(v * 255.0))));
    }
  return out;
}

std::string csv_from_rows(const std::vector<std::string>& columns,
                          const std::vector<std::vector<double>>& rows,
                          const std::string& comment) {
  std::string out;
  if (!comment.empty()) out += "# " + comment + "\n";
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ",";
    out += columns[i];
  }
  out += "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += fmt(row[i]);
    }
    out += "\n";
  }
  return out;
}

OutputWriter::OutputWriter(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

void OutputWriter::write(const std::string& filename, const std::string& bytes) {
  atomic_write(dir_ / filename, bytes);
  files_.push_back(filename);
  hashes_.push_back(fnv1a64(bytes));
}

void OutputWriter::write_manifest(const std::string& config_echo) {
  std::string m = "# output manifest\n";
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char stamp[64];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  m += std::string("timestamp = ") + stamp + "\n";
  for (size_t i = 0; i < files_.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", hashes_[i]);
    m += "hash." + files_[i] + " = " + buf + "\n";
  }
  m += "\n# config echo\n" + config_echo;
  atomic_write(dir_ / "manifest.txt", m);
}

}  // namespace vibronic
