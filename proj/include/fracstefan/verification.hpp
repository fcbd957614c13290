#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fracstefan/caputo.hpp"
#include "fracstefan/errors.hpp"
#include "fracstefan/special.hpp"
#include "fracstefan/stefan.hpp"

// Residual checks of an assembled solution against routes that do not share
// code with it: the governing equation via an L1 Caputo quadrature in time,
// the Stefan condition via the exact power rule, the boundary condition via
// direct evaluation — plus the classical (alpha -> 1) limit study.

namespace fracstefan {

struct PdeResidualPoint {
  double x_frac = 0.0;   // x as a fraction of s(t_eval)
  double x = 0.0;
  double t = 0.0;
  double dt = 0.0;       // quadrature step
  double caputo_lhs = 0.0;
  double diffusion_rhs = 0.0;  // lambda^2 u_xx
  double residual = 0.0;
};

// |D^a u - lambda^2 u_xx| at x = x_frac * s(t_eval). D^a u is an L1 quadrature
// of t -> u(x, t) on a uniform grid with n_steps subintervals (u(x, 0+) = a,
// since W vanishes at -infinity); u_xx comes from the series derivative.
inline std::vector<PdeResidualPoint> pde_residual(const ClosedFormSolution& sol,
                                                  const std::vector<double>& x_fracs,
                                                  double t_eval, int n_steps) {
  if (!(t_eval > 0.0)) throw DomainError("pde_residual: t_eval > 0 required");
  if (n_steps < 2) throw DomainError("pde_residual: need at least 2 steps");
  std::vector<PdeResidualPoint> out;
  out.reserve(x_fracs.size());
  for (double frac : x_fracs) {
    if (!(frac > 0.0) || !(frac < 1.0))
      throw DomainError("pde_residual: x fractions must lie in (0,1)");
    const double x = frac * sol.front(t_eval);
    std::vector<double> t(n_steps + 1), f(n_steps + 1);
    t[0] = 0.0;
    f[0] = sol.a();
    for (int j = 1; j <= n_steps; ++j) {
      t[j] = t_eval * j / n_steps;
      f[j] = sol.u(x, t[j]);
    }
    const TimeSamples samples(std::move(t), std::move(f));
    PdeResidualPoint p;
    p.x_frac = frac;
    p.x = x;
    p.t = t_eval;
    p.dt = t_eval / n_steps;
    p.caputo_lhs = caputo_l1(samples, sol.order(), n_steps);
    p.diffusion_rhs = sol.lambda() * sol.lambda() * sol.uxx(x, t_eval);
    p.residual = std::abs(p.caputo_lhs - p.diffusion_rhs);
    out.push_back(p);
  }
  return out;
}

struct ResidualSample {
  double t = 0.0;
  double residual = 0.0;    // raw defect
  double normalized = 0.0;  // defect / max(1, |lhs|, |rhs|), time scaling removed
};

// |D^a s(t) + k u_x(s(t), t)| per grid time. D^a s is exact via the power
// rule on s(t) = lambda * root * t^{a/2}; both sides scale as t^{-a/2}.
inline std::vector<ResidualSample> stefan_residual(const ClosedFormSolution& sol,
                                                   const ProblemSpec& spec,
                                                   const std::vector<double>& t_grid) {
  std::vector<ResidualSample> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    const double ds = sol.lambda() * sol.root() *
                      caputo_power(sol.order().half(), sol.order(), t);
    const double flux = spec.k * sol.ux(sol.front(t), t);
    ResidualSample r;
    r.t = t;
    r.residual = std::abs(ds + flux);
    r.normalized = r.residual / std::max({1.0, std::abs(ds), std::abs(flux)});
    out.push_back(r);
  }
  return out;
}

// Boundary defect per grid time, variant-specific. The normalized value
// multiplies out the t^{-a/2} scaling shared by both sides.
inline std::vector<ResidualSample> boundary_residual(const ClosedFormSolution& sol,
                                                     const ProblemSpec& spec,
                                                     const std::vector<double>& t_grid) {
  std::vector<ResidualSample> out;
  out.reserve(t_grid.size());
  const double a2 = spec.order.half();
  for (double t : t_grid) {
    double lhs = 0.0, rhs = 0.0;
    if (const auto* d = std::get_if<DirichletBc>(&spec.bc)) {
      lhs = sol.u(0.0, t);
      rhs = d->B;
    } else if (const auto* f = std::get_if<FluxBc>(&spec.bc)) {
      lhs = sol.ux(0.0, t) * std::pow(t, a2);
      rhs = -f->q;
    } else {
      const auto& c = std::get<ConvectiveBc>(spec.bc);
      lhs = c.m * sol.ux(0.0, t) * std::pow(t, a2);
      rhs = c.h * (sol.u(0.0, t) - c.D);
    }
    ResidualSample r;
    r.t = t;
    r.residual = std::abs(lhs - rhs);
    r.normalized = r.residual / std::max({1.0, std::abs(lhs), std::abs(rhs)});
    out.push_back(r);
  }
  return out;
}

struct ResidualReport {
  double pde_residual_max = 0.0;
  double stefan_residual_max = 0.0;     // normalized
  double boundary_residual_max = 0.0;   // normalized
  std::vector<double> t_grid;
  std::vector<double> x_fracs;
  double pde_dt = 0.0;
};

inline ResidualReport residual_report(const ClosedFormSolution& sol, const ProblemSpec& spec,
                                      const std::vector<double>& t_grid,
                                      const std::vector<double>& x_fracs, double pde_t_eval,
                                      int pde_steps) {
  ResidualReport rep;
  rep.t_grid = t_grid;
  rep.x_fracs = x_fracs;
  rep.pde_dt = pde_t_eval / pde_steps;
  for (const auto& p : pde_residual(sol, x_fracs, pde_t_eval, pde_steps))
    rep.pde_residual_max = std::max(rep.pde_residual_max, p.residual);
  for (const auto& r : stefan_residual(sol, spec, t_grid))
    rep.stefan_residual_max = std::max(rep.stefan_residual_max, r.normalized);
  for (const auto& r : boundary_residual(sol, spec, t_grid))
    rep.boundary_residual_max = std::max(rep.boundary_residual_max, r.normalized);
  return rep;
}

// Classical convective Stefan problem (heat equation, u = a + b erf(x/(2
// lambda sqrt(t))), front s = lambda eta sqrt(t)): eta solves
//   eta [erf(eta/2) + m/(h lambda sqrt(pi))] exp(eta^2/4)
//       = 2 k (D - C) / (lambda^2 sqrt(pi)).
// The left side increases strictly from 0 to infinity.
inline double classical_front_lhs(double eta, double m, double h, double lambda) {
  return eta * (std::erf(0.5 * eta) + m / (h * lambda * std::sqrt(detail::kPi))) *
         std::exp(0.25 * eta * eta);
}

inline double classical_front_target(double k, double lambda, double D, double C) {
  return 2.0 * k * (D - C) / (lambda * lambda * std::sqrt(detail::kPi));
}

inline double classical_root(double m, double h, double lambda, double k, double D,
                             double C) {
  if (!(m > 0.0 && h > 0.0 && lambda > 0.0 && k > 0.0))
    throw DomainError("classical_root: constants must be positive");
  if (!(D > C)) throw DomainError("classical_root: D > C required");
  const double target = classical_front_target(k, lambda, D, C);
  constexpr double kBracketCap = 50.0;
  double lo = 0.0, hi = 1.0;
  while (classical_front_lhs(hi, m, h, lambda) < target) {
    lo = hi;
    hi *= 2.0;
    if (hi > kBracketCap) throw BracketFailure("classical_root: bracket cap exceeded");
  }
  double mid = 0.5 * (lo + hi);
  for (int i = 0; i < 200; ++i) {
    mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (classical_front_lhs(mid, m, h, lambda) < target)
      lo = mid;
    else
      hi = mid;
  }
  return mid;
}

// Classical temperature field for the convective problem.
inline double classical_u(double x, double t, double m, double h, double lambda,
                          double D, double C, double eta_classical) {
  const double P = m / (h * lambda * std::sqrt(detail::kPi));
  return D - (D - C) * (std::erf(x / (2.0 * lambda * std::sqrt(t))) + P) /
                 (std::erf(0.5 * eta_classical) + P);
}

struct LimitStudy {
  std::vector<double> alphas;
  std::vector<double> roots;         // fractional root per alpha
  double eta_classical = 0.0;
  std::vector<double> front_errors;  // |lambda (root(alpha) - eta_classical)|
  std::vector<double> field_errors;  // max over x samples of |u_alpha - u_cl| at t=1
  std::vector<double> x_samples;
  bool front_errors_strictly_decreasing = false;
  bool field_errors_strictly_decreasing = false;
};

// Solve the convective problem across an increasing alpha ladder and compare
// each solution with the classical one, at the roots and in the field at t=1
// (x at {1/4, 1/2, 3/4} of the smallest front among the compared solutions).
inline LimitStudy limit_study(const ProblemSpec& base, const std::vector<double>& alphas,
                              double tol = 1e-12, const SeriesControl& ctl = {}) {
  if (base.equation() != FrontEquation::convective)
    throw DomainError("limit_study: base problem must be convective");
  if (alphas.size() < 2) throw DomainError("limit_study: need at least two alphas");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] > 0.0 && alphas[i] < 1.0))
      throw DomainError("limit_study: alphas must lie in (0,1)");
    if (i > 0 && !(alphas[i] > alphas[i - 1]))
      throw DomainError("limit_study: alphas must be strictly increasing");
  }
  const auto& c = std::get<ConvectiveBc>(base.bc);

  LimitStudy study;
  study.alphas = alphas;
  study.eta_classical = classical_root(c.m, c.h, base.lambda, base.k, c.D, base.C);

  std::vector<ClosedFormSolution> sols;
  sols.reserve(alphas.size());
  for (double alpha : alphas) {
    ProblemSpec spec(FractionalOrder(alpha), base.lambda, base.k, base.C, base.bc);
    sols.push_back(solve(spec, tol, ctl));
    study.roots.push_back(sols.back().root());
    study.front_errors.push_back(base.lambda *
                                 std::abs(sols.back().root() - study.eta_classical));
  }

  double min_front = base.lambda * study.eta_classical;
  for (const auto& s : sols) min_front = std::min(min_front, s.front(1.0));
  study.x_samples = {0.25 * min_front, 0.5 * min_front, 0.75 * min_front};

  for (const auto& s : sols) {
    double worst = 0.0;
    for (double x : study.x_samples)
      worst = std::max(worst, std::abs(s.u(x, 1.0) - classical_u(x, 1.0, c.m, c.h,
                                                                 base.lambda, c.D, base.C,
                                                                 study.eta_classical)));
    study.field_errors.push_back(worst);
  }

  auto strictly_decreasing = [](const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
      if (!(v[i] < v[i - 1])) return false;
    return true;
  };
  study.front_errors_strictly_decreasing = strictly_decreasing(study.front_errors);
  study.field_errors_strictly_decreasing = strictly_decreasing(study.field_errors);
  return study;
}

}  // namespace fracstefan
