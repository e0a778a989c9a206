#include "rnls/cli.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rnls/estimates.hpp"
#include "rnls/io.hpp"
#include "rnls/solver.hpp"

namespace rnls {

namespace {

using nlohmann::json;

long long to_int64(Rational::Int v) {
  if (v > Rational::Int(INT64_MAX) || v < Rational::Int(INT64_MIN))
    throw std::overflow_error("rational component exceeds 64 bits");
  return static_cast<long long>(v);
}

json rational_json(const Rational& r) {
  return json{{"num", to_int64(r.num())}, {"den", to_int64(r.den())}};
}

std::string rat_line(const Rational& r) { return r.str() + " (" + fmt9(r.to_double()) + ")"; }

ProblemParams problem_from(const RunConfig& cfg) {
  ProblemParams p;
  p.n = cfg.problem.n;
  p.p = Rational::parse(cfg.problem.p);
  p.lambda_re = cfg.problem.lambda_re;
  p.lambda_im = cfg.problem.lambda_im;
  return p;
}

void validate_common(const RunConfig& cfg) {
  if (cfg.problem.n < 2) throw std::domain_error("problem.n must be >= 2");
  if (cfg.grid.points < 8) throw std::domain_error("grid.points must be >= 8");
  if (!(cfg.grid.r_max > 0) || !(cfg.grid.rho_max > 0))
    throw std::domain_error("grid extents must be positive");
  if (cfg.run.threads < 1) throw std::domain_error("run.threads must be >= 1");
}

void put_problem_manifest(Manifest& m, const RunConfig& cfg) {
  m.set("problem.n", cfg.problem.n);
  m.set("problem.p", cfg.problem.p);
  m.set("problem.lambda_re", cfg.problem.lambda_re);
  m.set("problem.lambda_im", cfg.problem.lambda_im);
  m.set("grid.points", cfg.grid.points);
  m.set("grid.r_max", cfg.grid.r_max);
  m.set("grid.rho_max", cfg.grid.rho_max);
  m.set("run.threads", cfg.run.threads);
  m.set("run.seed", cfg.run.seed);
}

const std::vector<std::string> kSweepHeader = {"family", "param1", "param2", "mu",        "q",
                                               "alpha",  "s",      "ratio",  "tail_bound", "verdict"};

void write_sweep_rows(CsvWriter& csv, const SweepReport& report) {
  for (const auto& r : report.rows)
    csv.row({r.family, fmt9(r.param1), fmt9(r.param2), fmt9(r.mu), fmt9(r.q), fmt9(r.alpha),
             fmt9(r.s), fmt9(r.ratio), fmt9(r.tail_bound), r.verdict});
}

}  // namespace

std::string resolve_out_dir(const RunConfig& cfg) {
  if (const char* env = std::getenv("RNLS_OUT_DIR"); env && *env) return env;
  return cfg.run.out_dir;
}

int cmd_exponents(const RunConfig& cfg, std::ostream& out) {
  std::string dir = resolve_out_dir(cfg);
  ensure_directory(dir);

  ProblemParams params = problem_from(cfg);
  SelectionPolicy policy;
  if (!cfg.two_over_q0_override.empty())
    policy.two_over_q0 = Rational::parse(cfg.two_over_q0_override);

  std::ostringstream report;
  report << "n = " << params.n << "\n";
  report << "p = " << params.p.str() << " (" << fmt9(params.p.to_double()) << ")\n";

  ExponentSet set;
  try {
    set = select_exponents(params, policy);
  } catch (const std::exception& e) {
    report << "status = rejected\n";
    report << "reason = " << e.what() << "\n";
    out << report.str();
    std::ofstream(dir + "/exponents.txt") << report.str();
    return kDomain;
  }

  WindowParts w = window_parts(params.n, params.p);
  report << "status = ok\n";
  report << "s0 = " << rat_line(set.s0) << "\n";
  report << "q0 = " << rat_line(set.q0) << "\n";
  report << "alpha0 = " << rat_line(set.alpha0) << "\n";
  report << "q1 = " << rat_line(set.q1) << "\n";
  report << "alpha1 = " << rat_line(set.alpha1) << "\n";
  report << "two_over_q0 = " << rat_line(set.two_over_q0()) << "\n";
  report << "window.inv_p = " << rat_line(w.inv_p) << "\n";
  report << "window.smoothing = " << rat_line(w.smoothing) << "\n";
  report << "window.lower = " << rat_line(w.lower()) << "\n";
  report << "window.upper = " << rat_line(w.upper) << "\n";
  report << "window.holds = " << (w.holds() ? "true" : "false") << "\n";

  Rational n2(params.n, 2);
  auto weight_window = [&](const char* tag, const Rational& q, const Rational& a) {
    Rational nq = Rational(params.n) / q;
    report << tag << ".lower = " << rat_line(nq - Rational(params.n - 1, 2)) << "\n";
    report << tag << ".value = " << rat_line(a) << "\n";
    report << tag << ".upper = " << rat_line(nq) << "\n";
  };
  weight_window("alpha0_window", set.q0, set.alpha0);
  weight_window("alpha1_window", set.q1, set.alpha1);

  Rational sum = (-set.alpha0 + Rational(params.n + 2) / set.q0 - n2) +
                 (-set.alpha1 + Rational(params.n + 2) / set.q1 - n2);
  report << "sum_condition = " << sum.str() << "\n";
  report << "s0_in_range = " << ((Rational(0) < set.s0 && set.s0 < Rational(1, 2)) ? "true" : "false")
         << "\n";
  bool adm0 = check_thm21_admissible(params.n, {set.q0, set.alpha0, set.s0});
  bool adm1 = check_thm21_admissible(params.n, {set.q1, set.alpha1, -set.s0});
  report << "triple_q0_admissible = " << (adm0 ? "true" : "false") << "\n";
  report << "triple_q1_admissible = " << (adm1 ? "true" : "false") << "\n";

  out << report.str();
  std::ofstream(dir + "/exponents.txt") << report.str();

  json j;
  j["n"] = params.n;
  j["p"] = rational_json(params.p);
  j["s0"] = rational_json(set.s0);
  j["q0"] = rational_json(set.q0);
  j["alpha0"] = rational_json(set.alpha0);
  j["q1"] = rational_json(set.q1);
  j["alpha1"] = rational_json(set.alpha1);
  j["two_over_q0"] = rational_json(set.two_over_q0());
  j["window"] = {{"lower", rational_json(w.lower())}, {"upper", rational_json(w.upper)}};
  j["admissible"] = {{"q0_triple", adm0}, {"q1_triple", adm1}};
  std::ofstream(dir + "/exponents.json") << j.dump(2) << "\n";
  return kOk;
}

int cmd_strichartz_sweep(const RunConfig& cfg, std::ostream& out) {
  validate_common(cfg);
  if (cfg.sweep.families.empty()) throw std::invalid_argument("sweep.families must not be empty");
  if (cfg.sweep.dilations.empty()) throw std::invalid_argument("sweep.dilations must not be empty");

  std::string dir = resolve_out_dir(cfg);
  ensure_directory(dir);
  ProblemParams params = problem_from(cfg);

  AdmissibilityTriple triple;
  if (!cfg.sweep.q.empty()) {
    triple.q = Rational::parse(cfg.sweep.q);
    triple.alpha = Rational::parse(cfg.sweep.alpha);
    triple.s = Rational::parse(cfg.sweep.s);
  } else {
    ExponentSet set = select_exponents(params);
    triple = {set.q0, set.alpha0, set.s0};
  }

  auto radial = make_radial_grid(params.n, cfg.grid.points, cfg.grid.r_max);
  auto spectral = make_spectral_grid(params.n, cfg.grid.points, cfg.grid.rho_max);
  TransformPlan plan(radial, spectral);

  std::vector<DataFamily> families;
  for (const auto& name : cfg.sweep.families) families.push_back(parse_family(name));

  SweepConfig sc;
  sc.t_base = cfg.sweep.t_base;
  sc.time_samples = cfg.sweep.time_samples;
  sc.stretch = cfg.sweep.stretch;
  sc.dilations = cfg.sweep.dilations;
  sc.invariance_tol = cfg.sweep.invariance_tol;
  sc.slope_tol = cfg.sweep.slope_tol;
  sc.threads = cfg.run.threads;

  SweepReport report = sweep_homogeneous(plan, families, triple, sc);

  CsvWriter csv(dir + "/sweep.csv", kSweepHeader);
  write_sweep_rows(csv, report);

  CsvWriter norms_csv(dir + "/norms.csv", {"family", "mu", "q", "alpha", "value", "tail_bound"});
  for (const auto& r : report.rows) {
    DataFamily fam = parse_family(r.family);
    double l2 = l2_norm(fam.sample(radial, r.mu));
    norms_csv.row({r.family, fmt9(r.mu), fmt9(r.q), fmt9(r.alpha), fmt9(r.ratio * l2),
                   fmt9(r.tail_bound)});
  }

  bool all_pass = report.summary.all_pass;
  out << "sweep: max_ratio = " << fmt9(report.summary.max_ratio)
      << ", max_dilation_variation = " << fmt9(report.summary.max_dilation_variation) << "\n";

  SweepReport perturbed;
  bool have_perturbed = !cfg.sweep.alpha_perturb.empty();
  if (have_perturbed) {
    AdmissibilityTriple bad = triple;
    bad.alpha = bad.alpha + Rational::parse(cfg.sweep.alpha_perturb);
    perturbed = sweep_homogeneous(plan, families, bad, sc);
    write_sweep_rows(csv, perturbed);
    csv.row({"slope", fmt9(perturbed.summary.gamma),
             fmt9(std::abs(perturbed.summary.fitted_slope - perturbed.summary.gamma)), "0",
             fmt9(bad.q.to_double()), fmt9(bad.alpha.to_double()), fmt9(bad.s.to_double()),
             fmt9(perturbed.summary.fitted_slope), "0",
             perturbed.summary.all_pass ? "expected-fail" : "slope-mismatch"});
    out << "perturbed sweep: gamma = " << fmt9(perturbed.summary.gamma)
        << ", fitted slope = " << fmt9(perturbed.summary.fitted_slope) << "\n";
    all_pass = all_pass && perturbed.summary.all_pass;
  }

  Manifest m;
  put_problem_manifest(m, cfg);
  m.set("sweep.t_base", sc.t_base);
  m.set("sweep.time_samples", static_cast<long long>(sc.time_samples));
  m.set("sweep.stretch", sc.stretch);
  m.set("sweep.invariance_tol", sc.invariance_tol);
  m.set("sweep.slope_tol", sc.slope_tol);
  m.set("sweep.alpha_perturb", have_perturbed ? cfg.sweep.alpha_perturb : "none");
  m.set("triple.q", triple.q.str());
  m.set("triple.alpha", triple.alpha.str());
  m.set("triple.s", triple.s.str());
  m.set("summary.max_ratio", report.summary.max_ratio);
  m.set("summary.max_dilation_variation", report.summary.max_dilation_variation);
  if (have_perturbed) m.set("summary.fitted_slope", perturbed.summary.fitted_slope);
  m.write(dir + "/manifest.txt");

  out << (all_pass ? "verdict: pass" : "verdict: tolerance failure") << "\n";
  return all_pass ? kOk : kToleranceFailure;
}

int cmd_duhamel_check(const RunConfig& cfg, std::ostream& out) {
  validate_common(cfg);
  std::string dir = resolve_out_dir(cfg);
  ensure_directory(dir);
  ProblemParams params = problem_from(cfg);
  ExponentSet set = select_exponents(params);

  auto make_ratios = [&](Eigen::Index points, Eigen::Index samples) {
    auto radial = make_radial_grid(params.n, points, cfg.grid.r_max);
    auto spectral = make_spectral_grid(params.n, points, cfg.grid.rho_max);
    TransformPlan plan(radial, spectral);
    TimeGrid times = TimeGrid::uniform(0.0, cfg.duhamel.t_max, samples);
    SpaceTimeField forcing(radial, times);
    const double w = cfg.duhamel.forcing_width;
    const double support = cfg.duhamel.support;
    for (Eigen::Index k = 0; k < times.size(); ++k) {
      double tau = times.t(k);
      double y = 2.0 * tau / support - 1.0;
      double g = std::abs(y) < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - y * y)) : 0.0;
      forcing.values.col(k) =
          (g * (-0.5 * (radial->r / w).square()).exp()).cast<Complex>().matrix();
    }
    return inhomogeneous_check(plan, forcing, set, cfg.run.threads);
  };

  InhomogeneousRatios base = make_ratios(cfg.grid.points, cfg.duhamel.samples);
  out << "duhamel: ratio_lq = " << fmt9(base.ratio_lq) << ", ratio_sup = " << fmt9(base.ratio_sup)
      << ", rhs = " << fmt9(base.rhs) << "\n";

  CsvWriter csv(dir + "/duhamel.csv", kSweepHeader);
  csv.row({"duhamel-lq", fmt9(cfg.duhamel.forcing_width), fmt9(cfg.duhamel.support), "1",
           fmt9(set.q0.to_double()), fmt9(set.alpha0.to_double()), "0", fmt9(base.ratio_lq), "0",
           std::isfinite(base.ratio_lq) ? "pass" : "fail"});
  csv.row({"duhamel-sup", fmt9(cfg.duhamel.forcing_width), fmt9(cfg.duhamel.support), "1", "inf",
           "0", fmt9(-set.s0.to_double()), fmt9(base.ratio_sup), "0",
           std::isfinite(base.ratio_sup) ? "pass" : "fail"});

  bool pass = std::isfinite(base.ratio_lq) && std::isfinite(base.ratio_sup) && base.ratio_lq > 0 &&
              base.ratio_sup > 0;
  double drift_lq = 0, drift_sup = 0;
  if (cfg.duhamel.refine) {
    InhomogeneousRatios fine = make_ratios(cfg.grid.points * 2, cfg.duhamel.samples * 2 - 1);
    drift_lq = std::abs(fine.ratio_lq / base.ratio_lq - 1.0);
    drift_sup = std::abs(fine.ratio_sup / base.ratio_sup - 1.0);
    out << "refinement drift: lq = " << fmt9(drift_lq) << ", sup = " << fmt9(drift_sup) << "\n";
    pass = pass && drift_lq < 0.03 && drift_sup < 0.03;
  }

  Manifest m;
  put_problem_manifest(m, cfg);
  m.set("duhamel.t_max", cfg.duhamel.t_max);
  m.set("duhamel.samples", cfg.duhamel.samples);
  m.set("duhamel.forcing_width", cfg.duhamel.forcing_width);
  m.set("duhamel.support", cfg.duhamel.support);
  m.set("duhamel.refine", cfg.duhamel.refine ? "true" : "false");
  m.set("ratio_lq", base.ratio_lq);
  m.set("ratio_sup", base.ratio_sup);
  m.set("rhs", base.rhs);
  if (cfg.duhamel.refine) {
    m.set("refine.drift_lq", drift_lq);
    m.set("refine.drift_sup", drift_sup);
  }
  m.write(dir + "/manifest.txt");

  out << (pass ? "verdict: pass" : "verdict: tolerance failure") << "\n";
  return pass ? kOk : kToleranceFailure;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  validate_common(cfg);
  std::string dir = resolve_out_dir(cfg);
  ensure_directory(dir);
  ProblemParams params = problem_from(cfg);
  ExponentSet set = select_exponents(params);

  auto radial = make_radial_grid(params.n, cfg.grid.points, cfg.grid.r_max);
  auto spectral = make_spectral_grid(params.n, cfg.grid.points, cfg.grid.rho_max);
  TransformPlan plan(radial, spectral);

  DataFamily family = parse_family(cfg.solver.family);
  RadialProfile phi = family.sample(radial, 1.0);
  const double s0 = set.s0.to_double();
  double shape_norm = sobolev_norm(plan, phi, -s0);
  if (cfg.solver.data_norm > 0 && shape_norm > 0)
    phi.values *= cfg.solver.data_norm / shape_norm;

  SolverConfig sc;
  sc.delta = cfg.solver.delta;
  sc.tol = cfg.solver.tol;
  sc.max_iter = static_cast<int>(cfg.solver.max_iter);
  sc.t_min = cfg.time.t_min;
  sc.t_max = cfg.time.t_max;
  sc.time_samples = cfg.time.samples;
  sc.threads = cfg.run.threads;

  auto [u, diag] = picard_solve(plan, phi, params, set, sc);

  CsvWriter csv(dir + "/timeseries.csv", {"t", "l2", "sobolev_minus_s0"});
  for (Eigen::Index k = 0; k < u.time_samples(); ++k) {
    RadialProfile uk = u.at(k);
    csv.row({fmt9(u.times.t(k)), fmt9(l2_norm(uk)), fmt9(sobolev_norm(plan, uk, -s0))});
  }

  double c_measured = 0;
  bool bound_ok = verify_global_bound(plan, u, phi, set, &c_measured, cfg.run.threads);

  double splitting_diff = -1;
  if (cfg.solver.splitting_check && diag.converged && std::abs(params.lambda()) >= 0) {
    // compare at the solver node closest to the requested cross-check time
    Eigen::Index k_star = 0;
    for (Eigen::Index k = 0; k < u.time_samples(); ++k)
      if (std::abs(u.times.t(k) - cfg.solver.splitting_t_max) <
          std::abs(u.times.t(k_star) - cfg.solver.splitting_t_max))
        k_star = k;
    if (k_star > 0 && u.times.t(0) == 0.0) {
      TimeGrid sub;
      sub.t = u.times.t.head(k_star + 1);
      SplittingConfig spc;
      spc.substeps_per_interval = cfg.solver.splitting_substeps;
      spc.threads = cfg.run.threads;
      SpaceTimeField w = splitting_solve(plan, phi, params, sub, spc);
      RadialProfile a = u.at(k_star), b = w.at(k_star);
      RadialProfile d{a.grid, a.values - b.values};
      splitting_diff = l2_norm(d) / l2_norm(a);
    }
  }

  std::ostringstream diag_text;
  diag_text << "converged = " << (diag.converged ? "true" : "false") << "\n";
  diag_text << "diverged = " << (diag.diverged ? "true" : "false") << "\n";
  diag_text << "iterations = " << diag.iterations << "\n";
  for (size_t i = 0; i < diag.distances.size(); ++i)
    diag_text << "distance_" << i + 1 << " = " << fmt9(diag.distances[i]) << "\n";
  for (size_t i = 0; i < diag.ratios.size(); ++i)
    diag_text << "ratio_" << i + 1 << " = " << fmt9(diag.ratios[i]) << "\n";
  diag_text << "xnorm.sup_sobolev = " << fmt9(diag.final_norm.sup_sobolev) << "\n";
  diag_text << "xnorm.weighted_lq = " << fmt9(diag.final_norm.weighted_lq) << "\n";
  diag_text << "xnorm.total = " << fmt9(diag.final_norm.total) << "\n";
  diag_text << "global_bound.finite = " << (bound_ok ? "true" : "false") << "\n";
  diag_text << "global_bound.c_measured = " << fmt9(c_measured) << "\n";
  if (splitting_diff >= 0) diag_text << "splitting.rel_l2_diff = " << fmt9(splitting_diff) << "\n";
  std::ofstream(dir + "/diagnostics.txt") << diag_text.str();
  out << diag_text.str();

  Manifest m;
  put_problem_manifest(m, cfg);
  m.set("time.t_min", cfg.time.t_min);
  m.set("time.t_max", cfg.time.t_max);
  m.set("time.samples", cfg.time.samples);
  m.set("solver.delta", sc.delta);
  m.set("solver.data_norm", cfg.solver.data_norm);
  m.set("solver.tol", sc.tol);
  m.set("solver.max_iter", static_cast<long long>(sc.max_iter));
  m.set("solver.family", cfg.solver.family);
  m.set("solver.splitting_check", cfg.solver.splitting_check ? "true" : "false");
  m.set("solver.splitting_substeps", cfg.solver.splitting_substeps);
  m.set("solver.splitting_t_max", cfg.solver.splitting_t_max);
  m.set("exponents.s0", set.s0.str());
  m.set("exponents.q0", set.q0.str());
  m.set("exponents.alpha0", set.alpha0.str());
  m.set("exponents.q1", set.q1.str());
  m.set("exponents.alpha1", set.alpha1.str());
  m.set("tail_bound.weighted_lq",
        free_tail_bound(params.n, set.q0.to_double(), set.alpha0.to_double(), sc.t_max,
                        l1_norm(phi), l2_norm(phi), sc.t_min < 0));
  m.write(dir + "/manifest.txt");

  if (!diag.converged) {
    out << "verdict: no convergence within max_iter\n";
    return kNoConvergence;
  }
  out << "verdict: " << (bound_ok ? "pass" : "tolerance failure") << "\n";
  return bound_ok ? kOk : kToleranceFailure;
}

int cmd_report(const std::string& dir, std::ostream& out) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw std::invalid_argument("'" + dir + "' is not a directory");
  bool found = false;
  if (fs::exists(dir + "/manifest.txt")) {
    found = true;
    out << "== manifest ==\n" << std::ifstream(dir + "/manifest.txt").rdbuf();
  }
  for (const char* name : {"exponents.txt", "diagnostics.txt"}) {
    std::string path = dir + "/" + name;
    if (fs::exists(path)) {
      found = true;
      out << "== " << name << " ==\n" << std::ifstream(path).rdbuf();
    }
  }
  for (const char* name : {"sweep.csv", "duhamel.csv", "timeseries.csv", "norms.csv"}) {
    std::string path = dir + "/" + name;
    if (!fs::exists(path)) continue;
    found = true;
    std::ifstream f(path);
    std::string line;
    long rows = -1;
    while (std::getline(f, line)) ++rows;
    out << name << ": " << rows << " rows\n";
  }
  if (!found) {
    out << "no run artifacts found in '" << dir << "'\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace rnls
