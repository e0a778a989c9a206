#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace rnls {

/// All floating-point output goes through this: 9 significant digits, so
/// repeated runs produce byte-identical files.
std::string fmt9(double v);

/// Minimal CSV emitter with a fixed header.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);
  void row(const std::vector<std::string>& cells);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ofstream out_;
  size_t columns_;
};

/// Ordered key = value manifest; every knob that affects an output number
/// belongs here.
class Manifest {
 public:
  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, double value) { set(key, fmt9(value)); }
  void set(const std::string& key, long long value) { set(key, std::to_string(value)); }
  void set(const std::string& key, int value) { set(key, std::to_string(value)); }
  void write(const std::string& path) const;
  std::string text() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

void ensure_directory(const std::string& path);

}  // namespace rnls
