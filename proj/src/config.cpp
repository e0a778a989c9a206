#include "rnls/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rnls {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

ConfigFile ConfigFile::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

ConfigFile ConfigFile::parse_text(const std::string& text, const std::string& origin) {
  ConfigFile cfg;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty())
        throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": empty section name");
      cfg.sections_[section];
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": empty key");
    cfg.sections_[section].emplace_back(key, value);
  }
  return cfg;
}

std::optional<std::string> ConfigFile::get(const std::string& section, const std::string& key) const {
  auto it = sections_.find(section);
  if (it == sections_.end()) return std::nullopt;
  for (auto rit = it->second.rbegin(); rit != it->second.rend(); ++rit)
    if (rit->first == key) return rit->second;
  return std::nullopt;
}

double ConfigFile::get_double(const std::string& section, const std::string& key,
                              double fallback) const {
  auto v = get(section, key);
  if (!v) return fallback;
  size_t pos = 0;
  double d = std::stod(*v, &pos);
  if (pos != v->size()) throw std::runtime_error("bad numeric value '" + *v + "' for " + section + "." + key);
  return d;
}

long long ConfigFile::get_int(const std::string& section, const std::string& key,
                              long long fallback) const {
  auto v = get(section, key);
  if (!v) return fallback;
  size_t pos = 0;
  long long i = std::stoll(*v, &pos);
  if (pos != v->size()) throw std::runtime_error("bad integer value '" + *v + "' for " + section + "." + key);
  return i;
}

bool ConfigFile::get_bool(const std::string& section, const std::string& key, bool fallback) const {
  auto v = get(section, key);
  if (!v) return fallback;
  if (*v == "true" || *v == "1" || *v == "yes") return true;
  if (*v == "false" || *v == "0" || *v == "no") return false;
  throw std::runtime_error("bad boolean value '" + *v + "' for " + section + "." + key);
}

std::string ConfigFile::get_string(const std::string& section, const std::string& key,
                                   const std::string& fallback) const {
  auto v = get(section, key);
  return v ? *v : fallback;
}

std::vector<std::string> ConfigFile::get_list(const std::string& section,
                                              const std::string& key) const {
  std::vector<std::string> out;
  auto v = get(section, key);
  if (!v) return out;
  std::istringstream in(*v);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

RunConfig RunConfig::from_file(const std::string& path) {
  return from_config(ConfigFile::parse_file(path));
}

RunConfig RunConfig::from_config(const ConfigFile& cfg) {
  RunConfig rc;
  rc.problem.n = static_cast<int>(cfg.get_int("problem", "n", rc.problem.n));
  rc.problem.p = cfg.get_string("problem", "p", rc.problem.p);
  rc.problem.lambda_re = cfg.get_double("problem", "lambda_re", rc.problem.lambda_re);
  rc.problem.lambda_im = cfg.get_double("problem", "lambda_im", rc.problem.lambda_im);

  rc.grid.points = cfg.get_int("grid", "points", rc.grid.points);
  rc.grid.r_max = cfg.get_double("grid", "r_max", rc.grid.r_max);
  rc.grid.rho_max = cfg.get_double("grid", "rho_max", rc.grid.rho_max);

  rc.time.t_min = cfg.get_double("time", "t_min", rc.time.t_min);
  rc.time.t_max = cfg.get_double("time", "t_max", rc.time.t_max);
  rc.time.samples = cfg.get_int("time", "samples", rc.time.samples);

  rc.solver.delta = cfg.get_double("solver", "delta", rc.solver.delta);
  rc.solver.data_norm = cfg.get_double("solver", "data_norm", rc.solver.data_norm);
  rc.solver.tol = cfg.get_double("solver", "tol", rc.solver.tol);
  rc.solver.max_iter = cfg.get_int("solver", "max_iter", rc.solver.max_iter);
  rc.solver.family = cfg.get_string("solver", "family", rc.solver.family);
  rc.solver.splitting_check = cfg.get_bool("solver", "splitting_check", rc.solver.splitting_check);
  rc.solver.splitting_substeps =
      cfg.get_int("solver", "splitting_substeps", rc.solver.splitting_substeps);
  rc.solver.splitting_t_max = cfg.get_double("solver", "splitting_t_max", rc.solver.splitting_t_max);

  if (auto fam = cfg.get("sweep", "families")) {
    (void)fam;
    rc.sweep.families = cfg.get_list("sweep", "families");
  }
  if (auto dil = cfg.get("sweep", "dilations")) {
    (void)dil;
    rc.sweep.dilations.clear();
    for (const auto& s : cfg.get_list("sweep", "dilations")) rc.sweep.dilations.push_back(std::stod(s));
  }
  rc.sweep.t_base = cfg.get_double("sweep", "t_base", rc.sweep.t_base);
  rc.sweep.time_samples = cfg.get_int("sweep", "time_samples", rc.sweep.time_samples);
  rc.sweep.stretch = cfg.get_double("sweep", "stretch", rc.sweep.stretch);
  rc.sweep.invariance_tol = cfg.get_double("sweep", "invariance_tol", rc.sweep.invariance_tol);
  rc.sweep.slope_tol = cfg.get_double("sweep", "slope_tol", rc.sweep.slope_tol);
  rc.sweep.alpha_perturb = cfg.get_string("sweep", "alpha_perturb", rc.sweep.alpha_perturb);
  rc.sweep.q = cfg.get_string("sweep", "q", rc.sweep.q);
  rc.sweep.alpha = cfg.get_string("sweep", "alpha", rc.sweep.alpha);
  rc.sweep.s = cfg.get_string("sweep", "s", rc.sweep.s);

  rc.duhamel.t_max = cfg.get_double("duhamel", "t_max", rc.duhamel.t_max);
  rc.duhamel.samples = cfg.get_int("duhamel", "samples", rc.duhamel.samples);
  rc.duhamel.forcing_width = cfg.get_double("duhamel", "forcing_width", rc.duhamel.forcing_width);
  rc.duhamel.support = cfg.get_double("duhamel", "support", rc.duhamel.support);
  rc.duhamel.refine = cfg.get_bool("duhamel", "refine", rc.duhamel.refine);

  rc.run.out_dir = cfg.get_string("run", "out_dir", rc.run.out_dir);
  rc.run.threads = static_cast<int>(cfg.get_int("run", "threads", rc.run.threads));
  rc.run.seed = cfg.get_int("run", "seed", rc.run.seed);

  rc.two_over_q0_override = cfg.get_string("exponents", "two_over_q0", rc.two_over_q0_override);
  return rc;
}

}  // namespace rnls
