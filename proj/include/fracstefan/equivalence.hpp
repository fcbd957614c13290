#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fracstefan/errors.hpp"
#include "fracstefan/special.hpp"
#include "fracstefan/stefan.hpp"

// Parameter mappings under which the three problems share one solution pair
// {u, s}: a solved convective problem determines the Dirichlet datum B (its
// boundary trace u(0,t), time-independent) and the flux datum q (its boundary
// gradient scale); a solved flux problem determines B likewise. Mapped
// problems have the same root, hence the same front, hence the same field.

namespace fracstefan {

struct EquivalenceGrid {
  std::vector<double> times = {0.25, 1.0, 4.0};
  int x_points = 100;
};

struct EquivalenceReport {
  std::string source;
  std::string target;
  double mapped_parameter = 0.0;
  double root_source = 0.0;
  double root_target = 0.0;
  double root_difference = 0.0;
  double max_u_difference = 0.0;
  EquivalenceGrid grid;
};

// Where a second, inequivalent form of the mapped parameter circulates, both
// are computed: `spec` carries the trace-derived value (the one that provably
// reproduces the root), `alternate_parameter` the other form, for comparison.
struct MappedProblem {
  ProblemSpec spec;
  double mapped_parameter;
  double alternate_parameter;
};

// Convective -> Dirichlet: B = D - (D-C) P / (F(eta~) + P), the boundary
// trace of the solved convective problem (P = m/(h lambda Gamma(1-a/2)),
// F = fractional erf at the root).
inline MappedProblem dirichlet_from_convective(const ProblemSpec& spec, double tol = 1e-12,
                                               const SeriesControl& ctl = {}) {
  if (spec.equation() != FrontEquation::convective)
    throw DomainError("dirichlet_from_convective: source must be convective");
  const auto& c = std::get<ConvectiveBc>(spec.bc);
  const double root = solve_front_coefficient(spec, tol, ctl);
  const double F = fractional_erf(root, spec.order, ctl);
  const double P = spec.convective_offset();
  const double B = c.D - (c.D - spec.C) * P / (F + P);
  return {ProblemSpec::dirichlet(spec.order, spec.lambda, spec.k, spec.C, B), B, B};
}

// Convective -> Flux: q = -u_x(0,t) t^{a/2} of the solved convective problem,
//   q = h (D-C) / (m + h lambda Gamma(1-a/2) F(eta~)).
// The alternate form has k in place of the leading h; the two agree only when
// k = h, and only the trace form reproduces the root.
inline MappedProblem flux_from_convective(const ProblemSpec& spec, double tol = 1e-12,
                                          const SeriesControl& ctl = {}) {
  if (spec.equation() != FrontEquation::convective)
    throw DomainError("flux_from_convective: source must be convective");
  const auto& c = std::get<ConvectiveBc>(spec.bc);
  const double root = solve_front_coefficient(spec, tol, ctl);
  const double F = fractional_erf(root, spec.order, ctl);
  const double gm = std::tgamma(1.0 - spec.order.half());
  const double denom = c.m + c.h * spec.lambda * gm * F;
  const double q = c.h * (c.D - spec.C) / denom;
  const double q_alt = spec.k * (c.D - spec.C) / denom;
  return {ProblemSpec::flux(spec.order, spec.lambda, spec.k, spec.C, q), q, q_alt};
}

// Flux -> Dirichlet: B = u_2(0,t) = C + q lambda Gamma(1-a/2) F(mu~), which
// is > C as every Dirichlet datum must be. The alternate form carries the
// opposite sign on the correction term.
inline MappedProblem dirichlet_from_flux(const ProblemSpec& spec, double tol = 1e-12,
                                         const SeriesControl& ctl = {}) {
  if (spec.equation() != FrontEquation::flux)
    throw DomainError("dirichlet_from_flux: source must be flux");
  const auto& f = std::get<FluxBc>(spec.bc);
  const double root = solve_front_coefficient(spec, tol, ctl);
  const double F = fractional_erf(root, spec.order, ctl);
  const double correction = f.q * spec.lambda * std::tgamma(1.0 - spec.order.half()) * F;
  const double B = spec.C + correction;
  return {ProblemSpec::dirichlet(spec.order, spec.lambda, spec.k, spec.C, B), B,
          spec.C - correction};
}

// Solve both problems and compare: root difference and the sup of |u1 - u2|
// over {(x, t) : t in grid.times, x in [0, min front] with grid.x_points nodes}.
inline EquivalenceReport verify_equivalence(const ProblemSpec& source,
                                            const ProblemSpec& mapped,
                                            double mapped_parameter,
                                            const EquivalenceGrid& grid = {},
                                            double tol = 1e-12,
                                            const SeriesControl& ctl = {}) {
  EquivalenceReport rep;
  rep.source = to_string(source.equation());
  rep.target = to_string(mapped.equation());
  rep.mapped_parameter = mapped_parameter;
  rep.grid = grid;

  const ClosedFormSolution s1 = solve(source, tol, ctl);
  const ClosedFormSolution s2 = solve(mapped, tol, ctl);
  rep.root_source = s1.root();
  rep.root_target = s2.root();
  rep.root_difference = std::abs(s1.root() - s2.root());

  double max_du = 0.0;
  for (double t : grid.times) {
    const double xmax = std::min(s1.front(t), s2.front(t));
    for (int i = 0; i < grid.x_points; ++i) {
      const double x = xmax * i / (grid.x_points - 1);
      max_du = std::max(max_du, std::abs(s1.u(x, t) - s2.u(x, t)));
    }
  }
  rep.max_u_difference = max_du;
  return rep;
}

}  // namespace fracstefan
