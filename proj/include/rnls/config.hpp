#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rnls/rational.hpp"

namespace rnls {

/// Line-oriented config text: [section] headers over key = value lines,
/// '#' comments, lists comma-separated. Diff-friendly on purpose.
class ConfigFile {
 public:
  static ConfigFile parse_file(const std::string& path);
  static ConfigFile parse_text(const std::string& text, const std::string& origin = "<text>");

  std::optional<std::string> get(const std::string& section, const std::string& key) const;
  double get_double(const std::string& section, const std::string& key, double fallback) const;
  long long get_int(const std::string& section, const std::string& key, long long fallback) const;
  bool get_bool(const std::string& section, const std::string& key, bool fallback) const;
  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const;
  std::vector<std::string> get_list(const std::string& section, const std::string& key) const;

 private:
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> sections_;
};

struct RunConfig {
  struct Problem {
    int n = 3;
    std::string p = "11/5";
    double lambda_re = 1.0;
    double lambda_im = 0.0;
  } problem;

  struct Grid {
    long long points = 1024;
    double r_max = 40.0;
    double rho_max = 80.0;
  } grid;

  struct Time {
    double t_min = 0.0;
    double t_max = 4.0;
    long long samples = 129;
  } time;

  struct Solver {
    double delta = 0.02;
    double data_norm = 0.01;  ///< target data norm; the member is scaled to it
    double tol = 1e-10;
    long long max_iter = 12;
    std::string family = "gaussian";
    bool splitting_check = true;
    long long splitting_substeps = 8;
    double splitting_t_max = 1.0;
  } solver;

  struct Sweep {
    std::vector<std::string> families = {"gaussian", "bump", "chirp4", "chirp16", "annulus"};
    std::vector<double> dilations = {0.25, 0.5, 1.0, 2.0, 4.0};
    double t_base = 0.2;
    long long time_samples = 201;
    double stretch = 4.0;
    double invariance_tol = 0.02;
    double slope_tol = 0.10;
    std::string alpha_perturb;  ///< rational offset for the negative test, empty = skip
    std::string q, alpha, s;    ///< optional rational triple override
  } sweep;

  struct Duhamel {
    double t_max = 4.0;
    long long samples = 129;
    double forcing_width = 1.0;
    double support = 1.0;
    bool refine = false;
  } duhamel;

  struct Run {
    std::string out_dir = "out";
    int threads = 1;
    long long seed = 12345;
  } run;

  std::string two_over_q0_override;  ///< exponents subcommand policy override

  static RunConfig from_file(const std::string& path);
  static RunConfig from_config(const ConfigFile& cfg);
};

}  // namespace rnls
