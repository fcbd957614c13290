// fracstefan — closed-form solver and verifier for one-phase Stefan problems
// of the time-fractional diffusion equation.
//
// Subcommands: solve, verify, equiv, limit, sweep. Structured single-run
// results go out as JSON, grids and sweeps as CSV (header row always
// present). All numbers carry 17 significant digits and identical
// invocations produce byte-identical files.
//
// Exit codes: 0 success; 1 a verify bound was exceeded; 2 invalid problem
// specification or usage; 3 solver failure (bracket/series/consistency).

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracstefan/equivalence.hpp"
#include "fracstefan/stefan.hpp"
#include "fracstefan/verification.hpp"
#include "output_format.hpp"

namespace fs = fracstefan;
using fracstefan_cli::Csv;
using fracstefan_cli::fmt17;
using fracstefan_cli::Json;
using fracstefan_cli::json_array;
using fracstefan_cli::json_array_raw;

namespace {

constexpr int kExitBoundExceeded = 1;
constexpr int kExitInvalidSpec = 2;
constexpr int kExitSolverFailure = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ProblemOptions {
  std::string problem;
  double alpha = 0.0;
  double lambda = 1.0;
  double k = 1.0;
  double C = 0.0;
  double B = 0.0, q = 0.0, m = 0.0, h = 0.0, D = 0.0;
  CLI::Option *opt_B = nullptr, *opt_q = nullptr, *opt_m = nullptr, *opt_h = nullptr,
              *opt_D = nullptr;
};

void add_problem_options(CLI::App* cmd, ProblemOptions& o, bool with_variant = true,
                         bool with_alpha = true) {
  // keep -h free for the convective transfer coefficient
  cmd->set_help_flag("--help", "print this help message and exit");
  if (with_variant)
    cmd->add_option("--problem", o.problem,
                    "boundary condition variant: dirichlet | flux | convective")
        ->required()
        ->check(CLI::IsMember({"dirichlet", "flux", "convective"}));
  if (with_alpha)
    cmd->add_option("--alpha", o.alpha, "fractional order, strictly inside (0,1)")
        ->required();
  cmd->add_option("--lambda", o.lambda, "diffusivity scale, > 0 (default 1)");
  cmd->add_option("--k", o.k, "front-condition constant, > 0 (default 1)");
  cmd->add_option("--C", o.C, "temperature at the moving front (default 0)");
  o.opt_B = cmd->add_option("--B", o.B, "dirichlet: fixed wall temperature, B > C");
  o.opt_q = cmd->add_option("--q", o.q, "flux: wall gradient scale, q > 0");
  o.opt_m = cmd->add_option("--m", o.m, "convective: flux-side factor, m > 0");
  o.opt_h = cmd->add_option("--h", o.h, "convective: transfer coefficient, h > 0");
  o.opt_D = cmd->add_option("--D", o.D, "convective: ambient temperature, D > C");
}

void require_only(const ProblemOptions& o, const std::vector<CLI::Option*>& needed) {
  const CLI::Option* all[] = {o.opt_B, o.opt_q, o.opt_m, o.opt_h, o.opt_D};
  for (const CLI::Option* opt : all) {
    const bool is_needed =
        std::find(needed.begin(), needed.end(), opt) != needed.end();
    if (is_needed && opt->count() == 0)
      throw UsageError("missing " + opt->get_name() + " for this problem variant");
    if (!is_needed && opt->count() > 0)
      throw UsageError(opt->get_name() + " does not belong to this problem variant");
  }
}

fs::ProblemSpec build_spec(const ProblemOptions& o) {
  const fs::FractionalOrder order(o.alpha);
  if (o.problem == "dirichlet") {
    require_only(o, {o.opt_B});
    return fs::ProblemSpec::dirichlet(order, o.lambda, o.k, o.C, o.B);
  }
  if (o.problem == "flux") {
    require_only(o, {o.opt_q});
    return fs::ProblemSpec::flux(order, o.lambda, o.k, o.C, o.q);
  }
  require_only(o, {o.opt_m, o.opt_h, o.opt_D});
  return fs::ProblemSpec::convective(order, o.lambda, o.k, o.C, o.m, o.h, o.D);
}

struct NumericOptions {
  double tol = 1e-12;
  double series_tol = 1e-14;
  int max_terms = 500;
};

void add_numeric_options(CLI::App* cmd, NumericOptions& n) {
  cmd->add_option("--tol", n.tol, "root residual tolerance (default 1e-12)");
  cmd->add_option("--series-tol", n.series_tol,
                  "series stopping tolerance (default 1e-14; the environment "
                  "variable FRAC_STEFAN_SERIES_TOL overrides the default)");
  cmd->add_option("--max-terms", n.max_terms, "series term budget (default 500)");
}

fs::SeriesControl series_control(const NumericOptions& n) {
  if (!(n.tol > 0.0)) throw UsageError("--tol must be positive");
  fs::SeriesControl ctl;
  ctl.abs_tol = n.series_tol;
  ctl.max_terms = n.max_terms;
  if (!(ctl.abs_tol > 0.0)) throw UsageError("--series-tol must be positive");
  if (ctl.max_terms < 1) throw UsageError("--max-terms must be at least 1");
  return ctl;
}

void apply_series_tol_env(NumericOptions& n) {
  const char* env = std::getenv("FRAC_STEFAN_SERIES_TOL");
  if (!env || !*env) return;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0))
    throw UsageError("FRAC_STEFAN_SERIES_TOL must be a positive number, got '" +
                     std::string(env) + "'");
  n.series_tol = v;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file '" + path + "'");
  out << text;
}

std::string bc_json(const fs::ProblemSpec& spec) {
  Json bc;
  if (const auto* d = std::get_if<fs::DirichletBc>(&spec.bc)) {
    bc.text("type", "dirichlet").num("b", d->B);
  } else if (const auto* f = std::get_if<fs::FluxBc>(&spec.bc)) {
    bc.text("type", "flux").num("q", f->q);
  } else {
    const auto& c = std::get<fs::ConvectiveBc>(spec.bc);
    bc.text("type", "convective").num("m", c.m).num("h", c.h).num("d", c.D);
  }
  return bc.str();
}

std::string spec_json(const fs::ProblemSpec& spec) {
  Json j;
  j.num("alpha", spec.order.value())
      .num("lambda", spec.lambda)
      .num("k", spec.k)
      .num("c", spec.C)
      .raw("bc", bc_json(spec));
  return j.str();
}

std::string settings_json(const NumericOptions& n) {
  Json j;
  j.num("tol", n.tol).num("series_tol", n.series_tol).integer("max_terms", n.max_terms);
  return j.str();
}

// ---------------------------------------------------------------- solve ----

struct SolveConfig {
  ProblemOptions problem;
  NumericOptions numeric;
  std::string out = "-";
  std::string profile_out;
  std::vector<double> profile_times = {0.25, 1.0, 4.0};
  int x_steps = 50;
};

int run_solve(const SolveConfig& cfg) {
  const fs::ProblemSpec spec = build_spec(cfg.problem);
  const fs::SeriesControl ctl = series_control(cfg.numeric);
  const double root = fs::solve_front_coefficient(spec, cfg.numeric.tol, ctl);
  const fs::ClosedFormSolution sol = fs::assemble(spec, root, ctl);
  const double residual =
      std::abs(fs::front_lhs(spec, root, ctl) - fs::front_target(spec).value);

  Json j;
  j.num("alpha", spec.order.value())
      .num("lambda", spec.lambda)
      .num("k", spec.k)
      .num("c", spec.C)
      .raw("bc", bc_json(spec))
      .num("root", root)
      .num("a", sol.a())
      .num("b", sol.b())
      .num("residual_of_transcendental", residual)
      .raw("settings", settings_json(cfg.numeric));
  write_output(cfg.out, j.str() + "\n");

  if (!cfg.profile_out.empty()) {
    // x runs to 1.2 * s(t) so rows outside the physical domain appear with
    // in_domain = 0 (the closed form continues analytically).
    Csv csv({"t", "x", "u", "s_of_t", "in_domain"});
    for (double t : cfg.profile_times) {
      const double s = sol.front(t);
      for (int i = 0; i <= cfg.x_steps; ++i) {
        const double x = 1.2 * s * i / cfg.x_steps;
        const auto e = sol.u_checked(x, t);
        csv.row({fmt17(t), fmt17(x), fmt17(e.value), fmt17(s), e.in_domain ? "1" : "0"});
      }
    }
    write_output(cfg.profile_out, csv.str());
  }
  return 0;
}

// --------------------------------------------------------------- verify ----

struct VerifyConfig {
  ProblemOptions problem;
  NumericOptions numeric;
  std::string out = "-";
  std::vector<double> t_values = {0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
  std::vector<double> x_fracs = {0.25, 0.5, 0.75};
  double pde_t = 1.0;
  int pde_steps = 1000;
  double pde_bound = 1e-3;       // relative to |lambda^2 u_xx|
  double stefan_bound = 1e-10;   // normalized
  double boundary_bound = 1e-10; // normalized
};

int run_verify(const VerifyConfig& cfg) {
  const fs::ProblemSpec spec = build_spec(cfg.problem);
  const fs::SeriesControl ctl = series_control(cfg.numeric);
  const fs::ClosedFormSolution sol = fs::solve(spec, cfg.numeric.tol, ctl);

  double pde_rel_max = 0.0, pde_abs_max = 0.0;
  for (const auto& p : fs::pde_residual(sol, cfg.x_fracs, cfg.pde_t, cfg.pde_steps)) {
    pde_abs_max = std::max(pde_abs_max, p.residual);
    pde_rel_max = std::max(pde_rel_max, p.residual / std::abs(p.diffusion_rhs));
  }
  double stefan_max = 0.0;
  for (const auto& r : fs::stefan_residual(sol, spec, cfg.t_values))
    stefan_max = std::max(stefan_max, r.normalized);
  double boundary_max = 0.0;
  for (const auto& r : fs::boundary_residual(sol, spec, cfg.t_values))
    boundary_max = std::max(boundary_max, r.normalized);

  const bool pde_ok = pde_rel_max <= cfg.pde_bound;
  const bool stefan_ok = stefan_max <= cfg.stefan_bound;
  const bool boundary_ok = boundary_max <= cfg.boundary_bound;

  Json grids;
  grids.raw("t_values", json_array(cfg.t_values))
      .raw("x_fracs", json_array(cfg.x_fracs))
      .num("pde_t", cfg.pde_t)
      .integer("pde_steps", cfg.pde_steps);
  Json bounds;
  bounds.num("pde_relative", cfg.pde_bound)
      .num("stefan_normalized", cfg.stefan_bound)
      .num("boundary_normalized", cfg.boundary_bound);
  Json j;
  j.raw("problem", spec_json(spec))
      .num("root", sol.root())
      .num("pde_residual_max", pde_abs_max)
      .num("pde_residual_relative_max", pde_rel_max)
      .num("stefan_residual_max", stefan_max)
      .num("boundary_residual_max", boundary_max)
      .raw("grids", grids.str())
      .raw("bounds", bounds.str())
      .boolean("pde_pass", pde_ok)
      .boolean("stefan_pass", stefan_ok)
      .boolean("boundary_pass", boundary_ok)
      .boolean("pass", pde_ok && stefan_ok && boundary_ok)
      .raw("settings", settings_json(cfg.numeric));
  write_output(cfg.out, j.str() + "\n");
  return (pde_ok && stefan_ok && boundary_ok) ? 0 : kExitBoundExceeded;
}

// ---------------------------------------------------------------- equiv ----

struct EquivConfig {
  ProblemOptions problem;
  NumericOptions numeric;
  std::string out = "-";
  std::string map = "all";
};

std::string mapping_json(const std::string& target, const fs::MappedProblem& mapped,
                         const fs::EquivalenceReport& rep) {
  Json j;
  j.text("target", target)
      .num("mapped_parameter", mapped.mapped_parameter)
      .num("alternate_parameter", mapped.alternate_parameter)
      .num("root_source", rep.root_source)
      .num("root_mapped", rep.root_target)
      .num("root_difference", rep.root_difference)
      .num("max_u_difference", rep.max_u_difference)
      .raw("grid_times", json_array(rep.grid.times))
      .integer("grid_x_points", rep.grid.x_points);
  return j.str();
}

int run_equiv(const EquivConfig& cfg) {
  const fs::ProblemSpec spec = build_spec(cfg.problem);
  const fs::SeriesControl ctl = series_control(cfg.numeric);
  const double tol = cfg.numeric.tol;

  std::vector<std::string> mappings;
  if (spec.equation() == fs::FrontEquation::convective) {
    if (cfg.map != "all" && cfg.map != "dirichlet" && cfg.map != "flux")
      throw UsageError("--map must be all, dirichlet or flux for a convective source");
    if (cfg.map == "all" || cfg.map == "dirichlet") {
      const auto mapped = fs::dirichlet_from_convective(spec, tol, ctl);
      const auto rep =
          fs::verify_equivalence(spec, mapped.spec, mapped.mapped_parameter, {}, tol, ctl);
      mappings.push_back(mapping_json("dirichlet", mapped, rep));
    }
    if (cfg.map == "all" || cfg.map == "flux") {
      const auto mapped = fs::flux_from_convective(spec, tol, ctl);
      const auto rep =
          fs::verify_equivalence(spec, mapped.spec, mapped.mapped_parameter, {}, tol, ctl);
      mappings.push_back(mapping_json("flux", mapped, rep));
    }
  } else if (spec.equation() == fs::FrontEquation::flux) {
    if (cfg.map != "all" && cfg.map != "dirichlet")
      throw UsageError("--map must be all or dirichlet for a flux source");
    const auto mapped = fs::dirichlet_from_flux(spec, tol, ctl);
    const auto rep =
        fs::verify_equivalence(spec, mapped.spec, mapped.mapped_parameter, {}, tol, ctl);
    mappings.push_back(mapping_json("dirichlet", mapped, rep));
  } else {
    throw UsageError("equiv maps convective or flux sources; a dirichlet problem "
                     "is already in target form");
  }

  Json j;
  j.raw("source", spec_json(spec))
      .raw("mappings", json_array_raw(mappings))
      .raw("settings", settings_json(cfg.numeric));
  write_output(cfg.out, j.str() + "\n");
  return 0;
}

// ---------------------------------------------------------------- limit ----

struct LimitConfig {
  ProblemOptions problem;
  NumericOptions numeric;
  std::string out = "-";
  std::string csv_out;
  std::vector<double> alphas = {0.90, 0.99, 0.999};
};

int run_limit(const LimitConfig& cfg) {
  ProblemOptions po = cfg.problem;
  po.problem = "convective";
  // alpha comes per ladder entry; the base problem carries the shared constants
  po.alpha = cfg.alphas.empty() ? 0.5 : cfg.alphas.front();
  const fs::ProblemSpec base = build_spec(po);
  const fs::SeriesControl ctl = series_control(cfg.numeric);
  const fs::LimitStudy study = fs::limit_study(base, cfg.alphas, cfg.numeric.tol, ctl);

  if (!cfg.csv_out.empty()) {
    Csv csv({"alpha", "eta_frac", "eta_classical", "front_error", "field_error_max"});
    for (std::size_t i = 0; i < study.alphas.size(); ++i) {
      csv.row({fmt17(study.alphas[i]), fmt17(study.roots[i]), fmt17(study.eta_classical),
               fmt17(study.front_errors[i]), fmt17(study.field_errors[i])});
    }
    write_output(cfg.csv_out, csv.str());
  }

  Json j;
  j.raw("alphas", json_array(study.alphas))
      .raw("eta_frac", json_array(study.roots))
      .num("eta_classical", study.eta_classical)
      .raw("front_errors", json_array(study.front_errors))
      .raw("field_errors", json_array(study.field_errors))
      .raw("x_samples", json_array(study.x_samples))
      .boolean("front_errors_strictly_decreasing", study.front_errors_strictly_decreasing)
      .boolean("field_errors_strictly_decreasing", study.field_errors_strictly_decreasing)
      .raw("settings", settings_json(cfg.numeric));
  write_output(cfg.out, j.str() + "\n");
  return 0;
}

// ---------------------------------------------------------------- sweep ----

struct SweepConfig {
  std::string problem;
  NumericOptions numeric;
  std::string out = "-";
  std::vector<double> alphas;
  std::vector<double> lambdas = {1.0};
  std::vector<double> ks = {1.0};
  std::vector<double> Cs = {0.0};
  std::vector<double> Bs, qs, ms, hs, Ds;
  std::vector<double> t_values = {0.1, 1.0, 10.0};
};

int run_sweep(const SweepConfig& cfg) {
  const fs::SeriesControl ctl = series_control(cfg.numeric);
  std::vector<std::string> header = {"alpha", "lambda", "k", "c"};
  if (cfg.problem == "dirichlet") {
    if (cfg.Bs.empty()) throw UsageError("--B-values required for a dirichlet sweep");
    header.push_back("b");
  } else if (cfg.problem == "flux") {
    if (cfg.qs.empty()) throw UsageError("--q-values required for a flux sweep");
    header.push_back("q");
  } else if (cfg.problem == "convective") {
    if (cfg.ms.empty() || cfg.hs.empty() || cfg.Ds.empty())
      throw UsageError("--m-values, --h-values and --D-values required for a "
                       "convective sweep");
    header.push_back("m");
    header.push_back("h");
    header.push_back("d");
  } else {
    throw UsageError("--problem must be dirichlet, flux or convective");
  }
  header.insert(header.end(),
                {"root", "a_coef", "b_coef", "trans_residual", "stefan_residual_max",
                 "boundary_residual_max"});
  Csv csv(header);

  // Cartesian product in flag order: alpha, lambda, k, C, then the variant
  // parameters, each list in the order the user gave it.
  auto emit_case = [&](const fs::ProblemSpec& spec, std::vector<std::string> inputs) {
    const double root = fs::solve_front_coefficient(spec, cfg.numeric.tol, ctl);
    const auto sol = fs::assemble(spec, root, ctl);
    const double trans =
        std::abs(fs::front_lhs(spec, root, ctl) - fs::front_target(spec).value);
    double stefan_max = 0.0, boundary_max = 0.0;
    for (const auto& r : fs::stefan_residual(sol, spec, cfg.t_values))
      stefan_max = std::max(stefan_max, r.normalized);
    for (const auto& r : fs::boundary_residual(sol, spec, cfg.t_values))
      boundary_max = std::max(boundary_max, r.normalized);
    inputs.insert(inputs.end(),
                  {fmt17(root), fmt17(sol.a()), fmt17(sol.b()), fmt17(trans),
                   fmt17(stefan_max), fmt17(boundary_max)});
    csv.row(inputs);
  };

  for (double alpha : cfg.alphas)
    for (double lambda : cfg.lambdas)
      for (double k : cfg.ks)
        for (double C : cfg.Cs) {
          const fs::FractionalOrder order(alpha);
          const std::vector<std::string> base = {fmt17(alpha), fmt17(lambda), fmt17(k),
                                                 fmt17(C)};
          if (cfg.problem == "dirichlet") {
            for (double B : cfg.Bs) {
              auto in = base;
              in.push_back(fmt17(B));
              emit_case(fs::ProblemSpec::dirichlet(order, lambda, k, C, B), in);
            }
          } else if (cfg.problem == "flux") {
            for (double q : cfg.qs) {
              auto in = base;
              in.push_back(fmt17(q));
              emit_case(fs::ProblemSpec::flux(order, lambda, k, C, q), in);
            }
          } else {
            for (double m : cfg.ms)
              for (double h : cfg.hs)
                for (double D : cfg.Ds) {
                  auto in = base;
                  in.push_back(fmt17(m));
                  in.push_back(fmt17(h));
                  in.push_back(fmt17(D));
                  emit_case(fs::ProblemSpec::convective(order, lambda, k, C, m, h, D),
                            in);
                }
          }
        }
  write_output(cfg.out, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fracstefan: closed-form solutions of one-phase Stefan problems for the\n"
      "time-fractional diffusion equation (Dirichlet, flux and convective wall\n"
      "conditions), with residual verification, problem equivalences and the\n"
      "classical-limit study."};
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);

  SolveConfig solve_cfg;
  auto* solve_cmd = app.add_subcommand(
      "solve", "solve one problem; JSON result, optional CSV profile");
  add_problem_options(solve_cmd, solve_cfg.problem);
  add_numeric_options(solve_cmd, solve_cfg.numeric);
  solve_cmd->add_option("--out", solve_cfg.out, "output path for JSON ('-' = stdout)");
  solve_cmd->add_option("--profile-out", solve_cfg.profile_out,
                        "also write a CSV profile (t,x,u,s_of_t,in_domain)");
  solve_cmd->add_option("--t-values", solve_cfg.profile_times,
                        "profile times (default 0.25,1,4)")
      ->delimiter(',');
  solve_cmd->add_option("--x-steps", solve_cfg.x_steps,
                        "profile resolution per time (default 50)");

  VerifyConfig verify_cfg;
  auto* verify_cmd = app.add_subcommand(
      "verify", "residual checks of the governing equation, front condition and "
                "wall condition; nonzero exit if a bound is exceeded");
  add_problem_options(verify_cmd, verify_cfg.problem);
  add_numeric_options(verify_cmd, verify_cfg.numeric);
  verify_cmd->add_option("--out", verify_cfg.out, "output path for JSON ('-' = stdout)");
  verify_cmd->add_option("--t-values", verify_cfg.t_values,
                         "times for front/wall residuals (default 0.1,0.5,1,2,5,10)")
      ->delimiter(',');
  verify_cmd->add_option("--x-fracs", verify_cfg.x_fracs,
                         "x as fractions of the front for the equation residual "
                         "(default 0.25,0.5,0.75)")
      ->delimiter(',');
  verify_cmd->add_option("--pde-t", verify_cfg.pde_t,
                         "evaluation time for the equation residual (default 1)");
  verify_cmd->add_option("--pde-steps", verify_cfg.pde_steps,
                         "time quadrature steps (default 1000)");
  verify_cmd->add_option("--pde-bound", verify_cfg.pde_bound,
                         "bound on the relative equation residual (default 1e-3)");
  verify_cmd->add_option("--stefan-bound", verify_cfg.stefan_bound,
                         "bound on the normalized front-condition residual "
                         "(default 1e-10)");
  verify_cmd->add_option("--boundary-bound", verify_cfg.boundary_bound,
                         "bound on the normalized wall-condition residual "
                         "(default 1e-10)");

  EquivConfig equiv_cfg;
  auto* equiv_cmd = app.add_subcommand(
      "equiv", "map a problem onto the equivalent ones and verify shared fronts "
               "and fields");
  add_problem_options(equiv_cmd, equiv_cfg.problem);
  add_numeric_options(equiv_cmd, equiv_cfg.numeric);
  equiv_cmd->add_option("--out", equiv_cfg.out, "output path for JSON ('-' = stdout)");
  equiv_cmd->add_option("--map", equiv_cfg.map,
                        "which mapping(s): all | dirichlet | flux (default all)");

  LimitConfig limit_cfg;
  auto* limit_cmd = app.add_subcommand(
      "limit", "alpha -> 1 study of the convective problem against the classical "
               "solution; JSON summary, optional CSV table");
  add_problem_options(limit_cmd, limit_cfg.problem, /*with_variant=*/false,
                      /*with_alpha=*/false);
  limit_cfg.problem.problem = "convective";
  add_numeric_options(limit_cmd, limit_cfg.numeric);
  limit_cmd->add_option("--alpha-values", limit_cfg.alphas,
                        "increasing ladder in (0,1) (default 0.9,0.99,0.999)")
      ->delimiter(',');
  limit_cmd->add_option("--out", limit_cfg.out, "output path for JSON ('-' = stdout)");
  limit_cmd->add_option("--csv-out", limit_cfg.csv_out,
                        "also write the per-alpha CSV table");

  SweepConfig sweep_cfg;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Cartesian parameter sweep; one CSV row per case in deterministic "
               "order (alpha, lambda, k, C, then variant parameters)");
  sweep_cmd->set_help_flag("--help", "print this help message and exit");
  sweep_cmd->add_option("--problem", sweep_cfg.problem,
                        "boundary condition variant: dirichlet | flux | convective")
      ->required()
      ->check(CLI::IsMember({"dirichlet", "flux", "convective"}));
  add_numeric_options(sweep_cmd, sweep_cfg.numeric);
  sweep_cmd->add_option("--alpha-values", sweep_cfg.alphas, "fractional orders")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--lambda-values", sweep_cfg.lambdas, "default 1")->delimiter(',');
  sweep_cmd->add_option("--k-values", sweep_cfg.ks, "default 1")->delimiter(',');
  sweep_cmd->add_option("--C-values", sweep_cfg.Cs, "default 0")->delimiter(',');
  sweep_cmd->add_option("--B-values", sweep_cfg.Bs, "dirichlet wall values")
      ->delimiter(',');
  sweep_cmd->add_option("--q-values", sweep_cfg.qs, "flux scales")->delimiter(',');
  sweep_cmd->add_option("--m-values", sweep_cfg.ms, "convective m values")->delimiter(',');
  sweep_cmd->add_option("--h-values", sweep_cfg.hs, "convective h values")->delimiter(',');
  sweep_cmd->add_option("--D-values", sweep_cfg.Ds, "convective ambient values")
      ->delimiter(',');
  sweep_cmd->add_option("--t-values", sweep_cfg.t_values,
                        "times for the residual maxima (default 0.1,1,10)")
      ->delimiter(',');
  sweep_cmd->add_option("--out", sweep_cfg.out, "output path for CSV ('-' = stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidSpec;
  }

  try {
    NumericOptions* numeric = nullptr;
    if (solve_cmd->parsed()) numeric = &solve_cfg.numeric;
    if (verify_cmd->parsed()) numeric = &verify_cfg.numeric;
    if (equiv_cmd->parsed()) numeric = &equiv_cfg.numeric;
    if (limit_cmd->parsed()) numeric = &limit_cfg.numeric;
    if (sweep_cmd->parsed()) numeric = &sweep_cfg.numeric;
    // flag beats environment beats default
    if (numeric) {
      CLI::App* active = app.get_subcommands().front();
      if (active->count("--series-tol") == 0) apply_series_tol_env(*numeric);
    }

    if (solve_cmd->parsed()) return run_solve(solve_cfg);
    if (verify_cmd->parsed()) return run_verify(verify_cfg);
    if (equiv_cmd->parsed()) return run_equiv(equiv_cfg);
    if (limit_cmd->parsed()) return run_limit(limit_cfg);
    return run_sweep(sweep_cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidSpec;
  } catch (const fs::DegenerateProblem& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidSpec;
  } catch (const fs::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidSpec;
  } catch (const fs::BracketFailure& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolverFailure;
  } catch (const fs::NonConvergence& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolverFailure;
  } catch (const fs::ConsistencyFailure& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolverFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolverFailure;
  }
}
