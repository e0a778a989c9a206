#include <CLI11.hpp>

#include <iostream>

#include "rnls/cli.hpp"

namespace {

// config file first, then flag overrides
struct CommonFlags {
  std::string config_path;
  std::string out_dir;
  int threads = 0;
};

void add_common(CLI::App* app, CommonFlags& flags) {
  app->add_option("--config", flags.config_path, "config file (sections of key = value lines)");
  app->add_option("--out", flags.out_dir, "output directory");
  app->add_option("--threads", flags.threads, "worker threads");
}

rnls::RunConfig load_config(const CommonFlags& flags) {
  rnls::RunConfig cfg =
      flags.config_path.empty() ? rnls::RunConfig{} : rnls::RunConfig::from_file(flags.config_path);
  if (!flags.out_dir.empty()) cfg.run.out_dir = flags.out_dir;
  if (flags.threads > 0) cfg.run.threads = flags.threads;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for the radial Schrodinger evolution:\n"
               "exponent algebra, weighted space-time estimate sweeps, Duhamel checks,\n"
               "and the small-data fixed-point solver"};
  app.require_subcommand(1);

  CommonFlags exp_flags, sweep_flags, duh_flags, solve_flags;
  int exp_n = 3;
  std::string exp_p = "11/5", exp_two_over_q0;
  auto* exponents = app.add_subcommand("exponents", "exact exponent relations for (n, p)");
  add_common(exponents, exp_flags);
  exponents->add_option("-n,--dimension", exp_n, "spatial dimension");
  exponents->add_option("-p,--power", exp_p, "nonlinearity power, rational like 11/5");
  exponents->add_option("--two-over-q0", exp_two_over_q0, "override the 2/q0 selection");

  auto* sweep = app.add_subcommand("strichartz-sweep", "ratio sweep over families and dilations");
  add_common(sweep, sweep_flags);
  std::string sweep_perturb;
  sweep->add_option("--alpha-perturb", sweep_perturb, "also run a perturbed-alpha negative test");

  auto* duh = app.add_subcommand("duhamel-check", "inhomogeneous estimate ratios");
  add_common(duh, duh_flags);
  bool duh_refine = false;
  duh->add_flag("--refine", duh_refine, "re-run at doubled resolution and compare");

  auto* solve = app.add_subcommand("solve", "Picard fixed point with diagnostics");
  add_common(solve, solve_flags);
  double solve_data_norm = -1, solve_delta = -1, solve_tol = -1;
  int solve_max_iter = -1;
  std::string solve_family;
  solve->add_option("--data-norm", solve_data_norm, "target data norm");
  solve->add_option("--delta", solve_delta, "admissible data-norm scale");
  solve->add_option("--tol", solve_tol, "fixed-point tolerance");
  solve->add_option("--max-iter", solve_max_iter, "iteration cap");
  solve->add_option("--family", solve_family, "data family");

  std::string report_dir = "out";
  auto* report = app.add_subcommand("report", "summarize a run directory");
  report->add_option("dir", report_dir, "run directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (exponents->parsed()) {
      rnls::RunConfig cfg = load_config(exp_flags);
      if (exponents->count("-n") || exponents->count("--dimension")) cfg.problem.n = exp_n;
      if (exponents->count("-p") || exponents->count("--power")) cfg.problem.p = exp_p;
      if (!exp_two_over_q0.empty()) cfg.two_over_q0_override = exp_two_over_q0;
      return rnls::cmd_exponents(cfg, std::cout);
    }
    if (sweep->parsed()) {
      rnls::RunConfig cfg = load_config(sweep_flags);
      if (!sweep_perturb.empty()) cfg.sweep.alpha_perturb = sweep_perturb;
      return rnls::cmd_strichartz_sweep(cfg, std::cout);
    }
    if (duh->parsed()) {
      rnls::RunConfig cfg = load_config(duh_flags);
      if (duh_refine) cfg.duhamel.refine = true;
      return rnls::cmd_duhamel_check(cfg, std::cout);
    }
    if (solve->parsed()) {
      rnls::RunConfig cfg = load_config(solve_flags);
      if (solve_data_norm >= 0) cfg.solver.data_norm = solve_data_norm;
      if (solve_delta >= 0) cfg.solver.delta = solve_delta;
      if (solve_tol >= 0) cfg.solver.tol = solve_tol;
      if (solve_max_iter >= 0) cfg.solver.max_iter = solve_max_iter;
      if (!solve_family.empty()) cfg.solver.family = solve_family;
      return rnls::cmd_solve(cfg, std::cout);
    }
    if (report->parsed()) return rnls::cmd_report(report_dir, std::cout);
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return rnls::kDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return rnls::kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return rnls::kUsage;
  }
  return rnls::kUsage;
}
