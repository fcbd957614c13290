#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <variant>

#include "fracstefan/errors.hpp"
#include "fracstefan/special.hpp"

// One-phase Stefan problems for the time-fractional diffusion equation
//   D^a u = lambda^2 u_xx on 0 < x < s(t),   u(s(t),t) = C,
//   D^a s(t) = -k u_x(s(t),t),               s(0) = 0,
// with one of three conditions at x = 0:
//   Dirichlet    u(0,t) = B                    (B > C)
//   Flux         u_x(0,t) = -q / t^{a/2}       (q > 0)
//   Convective   m u_x(0,t) = h/t^{a/2} (u(0,t) - D)   (D > C)
// Each has a closed-form similarity solution u = a + b W(-x/(lambda t^{a/2}))
// with front s(t) = lambda * root * t^{a/2}; the root is the unique zero of a
// strictly increasing transcendental front equation.

namespace fracstefan {

struct DirichletBc {
  double B;  // fixed boundary temperature
};
struct FluxBc {
  double q;  // flux scale, u_x(0,t) = -q t^{-a/2}
};
struct ConvectiveBc {
  double m;  // conductivity-like factor on the flux side
  double h;  // transfer coefficient scale
  double D;  // ambient temperature
};

using BoundaryCondition = std::variant<DirichletBc, FluxBc, ConvectiveBc>;

enum class FrontEquation { dirichlet, flux, convective };

inline const char* to_string(FrontEquation e) {
  switch (e) {
    case FrontEquation::dirichlet: return "dirichlet";
    case FrontEquation::flux: return "flux";
    default: return "convective";
  }
}

// Validated problem statement. Degenerate driving differences (B = C, D = C,
// q = 0) are rejected here: their front never moves.
struct ProblemSpec {
  ProblemSpec(FractionalOrder order_, double lambda_, double k_, double C_,
              BoundaryCondition bc_)
      : order(order_), lambda(lambda_), k(k_), C(C_), bc(std::move(bc_)) {
    if (!(lambda > 0.0)) throw DomainError("ProblemSpec: lambda > 0 required");
    if (!(k > 0.0)) throw DomainError("ProblemSpec: k > 0 required");
    if (const auto* d = std::get_if<DirichletBc>(&bc)) {
      if (d->B == C) throw DegenerateProblem("ProblemSpec: B > C required, got B = C");
      if (!(d->B > C)) throw DomainError("ProblemSpec: B > C required");
    } else if (const auto* f = std::get_if<FluxBc>(&bc)) {
      if (f->q == 0.0) throw DegenerateProblem("ProblemSpec: q > 0 required, got q = 0");
      if (!(f->q > 0.0)) throw DomainError("ProblemSpec: q > 0 required");
    } else {
      const auto& c = std::get<ConvectiveBc>(bc);
      if (!(c.m > 0.0)) throw DomainError("ProblemSpec: m > 0 required");
      if (!(c.h > 0.0)) throw DomainError("ProblemSpec: h > 0 required");
      if (c.D == C) throw DegenerateProblem("ProblemSpec: D > C required, got D = C");
      if (!(c.D > C)) throw DomainError("ProblemSpec: D > C required");
    }
  }

  static ProblemSpec dirichlet(FractionalOrder o, double lambda, double k, double C, double B) {
    return ProblemSpec(o, lambda, k, C, DirichletBc{B});
  }
  static ProblemSpec flux(FractionalOrder o, double lambda, double k, double C, double q) {
    return ProblemSpec(o, lambda, k, C, FluxBc{q});
  }
  static ProblemSpec convective(FractionalOrder o, double lambda, double k, double C,
                                double m, double h, double D) {
    return ProblemSpec(o, lambda, k, C, ConvectiveBc{m, h, D});
  }

  FrontEquation equation() const noexcept {
    if (std::holds_alternative<DirichletBc>(bc)) return FrontEquation::dirichlet;
    if (std::holds_alternative<FluxBc>(bc)) return FrontEquation::flux;
    return FrontEquation::convective;
  }

  // m / (h lambda Gamma(1 - a/2)), the dimensionless convective offset.
  double convective_offset() const {
    const auto& c = std::get<ConvectiveBc>(bc);
    return c.m / (c.h * lambda * std::tgamma(1.0 - order.half()));
  }

  FractionalOrder order;
  double lambda;
  double k;
  double C;
  BoundaryCondition bc;
};

struct TranscendentalTarget {
  double value;
  FrontEquation equation;
};

// Left-hand sides of the three front equations. All are strictly increasing
// from 0 at 0+ to +infinity, which is what makes bisection bulletproof.

// Dirichlet: xi [1 - W(-xi,-a/2,1)] / M_{a/2}(xi).
inline double dirichlet_front_lhs(double xi, const FractionalOrder& order,
                                  const SeriesControl& ctl = {}) {
  if (!(xi > 0.0)) throw DomainError("dirichlet_front_lhs: xi > 0 required");
  return xi * fractional_erf(xi, order, ctl) / mainardi(order.half(), xi, ctl);
}

// Flux: mu / M_{a/2}(mu).
inline double flux_front_lhs(double mu, const FractionalOrder& order,
                             const SeriesControl& ctl = {}) {
  if (!(mu > 0.0)) throw DomainError("flux_front_lhs: mu > 0 required");
  return mu / mainardi(order.half(), mu, ctl);
}

// Convective: eta [1 - W(-eta,-a/2,1) + m/(h lambda Gamma(1-a/2))] / M_{a/2}(eta).
inline double convective_front_lhs(double eta, const ProblemSpec& spec,
                                   const SeriesControl& ctl = {}) {
  if (!(eta > 0.0)) throw DomainError("convective_front_lhs: eta > 0 required");
  if (spec.equation() != FrontEquation::convective)
    throw DomainError("convective_front_lhs: spec must carry a convective condition");
  return eta * (fractional_erf(eta, spec.order, ctl) + spec.convective_offset()) /
         mainardi(spec.order.half(), eta, ctl);
}

inline double front_lhs(const ProblemSpec& spec, double r, const SeriesControl& ctl = {}) {
  switch (spec.equation()) {
    case FrontEquation::dirichlet: return dirichlet_front_lhs(r, spec.order, ctl);
    case FrontEquation::flux: return flux_front_lhs(r, spec.order, ctl);
    default: return convective_front_lhs(r, spec, ctl);
  }
}

// Right-hand side each front equation must reach. Positive for every valid spec.
inline TranscendentalTarget front_target(const ProblemSpec& spec) {
  const double a2 = spec.order.half();
  const double gm = std::tgamma(1.0 - a2);  // Gamma(1 - a/2)
  const double gp = std::tgamma(1.0 + a2);  // Gamma(1 + a/2)
  if (const auto* d = std::get_if<DirichletBc>(&spec.bc)) {
    if (d->B == spec.C) throw DegenerateProblem("front_target: B = C");
    return {spec.k / (spec.lambda * spec.lambda) * gm / gp * (d->B - spec.C),
            FrontEquation::dirichlet};
  }
  if (const auto* f = std::get_if<FluxBc>(&spec.bc)) {
    if (f->q == 0.0) throw DegenerateProblem("front_target: q = 0");
    return {spec.k * f->q / spec.lambda * gm * gm / gp, FrontEquation::flux};
  }
  const auto& c = std::get<ConvectiveBc>(spec.bc);
  if (c.D == spec.C) throw DegenerateProblem("front_target: D = C");
  return {spec.k / (spec.lambda * spec.lambda) * gm / gp * (c.D - spec.C),
          FrontEquation::convective};
}

// Unique positive root of front_lhs = front_target. Bracket by doubling from
// [0,1] (capped at 50: physical roots are O(1) and the series degrades far
// out), then bisect to a 1e-13 bracket and keep halving while the residual
// tolerance |lhs(r) - target| <= tol*max(1,target) is not yet met.
inline double solve_front_coefficient(const ProblemSpec& spec, double tol = 1e-12,
                                      const SeriesControl& ctl = {}) {
  if (!(tol > 0.0)) throw DomainError("solve_front_coefficient: tol > 0 required");
  const TranscendentalTarget target = front_target(spec);
  constexpr double kBracketCap = 50.0;

  double lo = 0.0, hi = 1.0;
  while (front_lhs(spec, hi, ctl) < target.value) {
    lo = hi;
    hi *= 2.0;
    if (hi > kBracketCap)
      throw BracketFailure("solve_front_coefficient: no sign change below " +
                           std::to_string(kBracketCap) +
                           "; series precision is exhausted at this scale");
  }

  const double accept = tol * std::max(1.0, target.value);
  double mid = 0.5 * (lo + hi);
  for (int i = 0; i < 200; ++i) {
    mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // bracket at machine resolution
    const double v = front_lhs(spec, mid, ctl);
    if (v < target.value)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-13 && std::abs(v - target.value) <= accept) break;
  }
  return mid;
}

// Closed-form pair {u, s}: u(x,t) = a + b W(-x/(lambda t^{a/2}), -a/2, 1),
// s(t) = lambda * root * t^{a/2}. Immutable once assembled.
class ClosedFormSolution {
public:
  ClosedFormSolution(FractionalOrder order, double lambda, double a, double b,
                     double root, SeriesControl ctl = {})
      : order_(order), lambda_(lambda), a_(a), b_(b), root_(root), ctl_(ctl) {
    if (!(root > 0.0)) throw DomainError("ClosedFormSolution: root > 0 required");
  }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double root() const noexcept { return root_; }
  double lambda() const noexcept { return lambda_; }
  const FractionalOrder& order() const noexcept { return order_; }
  const SeriesControl& series_control() const noexcept { return ctl_; }

  // Similarity variable x / (lambda t^{a/2}).
  double similarity(double x, double t) const {
    require_time(t);
    if (x < 0.0) throw DomainError("solution: x >= 0 required");
    return x / (lambda_ * std::pow(t, order_.half()));
  }

  double u(double x, double t) const {
    return a_ + b_ * wright_w(-similarity(x, t), -order_.half(), 1.0, ctl_);
  }

  // u_x = -(b / (lambda t^{a/2})) M_{a/2}(x / (lambda t^{a/2})).
  double ux(double x, double t) const {
    const double z = similarity(x, t);
    return -b_ / (lambda_ * std::pow(t, order_.half())) * mainardi(order_.half(), z, ctl_);
  }

  // u_xx = (b / (lambda^2 t^a)) W(-z, -a/2, 1-a), by differentiating the
  // series twice (each z-derivative of W shifts its second parameter by a).
  double uxx(double x, double t) const {
    const double z = similarity(x, t);
    return b_ / (lambda_ * lambda_ * std::pow(t, order_.value())) *
           wright_w(-z, -order_.half(), 1.0 - order_.value(), ctl_);
  }

  // Front position s(t) = lambda * root * t^{a/2}; s(0) = 0.
  double front(double t) const {
    if (t < 0.0) throw DomainError("solution: t >= 0 required for the front");
    return lambda_ * root_ * std::pow(t, order_.half());
  }

  struct Evaluation {
    double value;
    bool in_domain;  // x <= s(t); outside, the value is the analytic continuation
  };
  Evaluation u_checked(double x, double t) const {
    return {u(x, t), x <= front(t)};
  }

private:
  void require_time(double t) const {
    if (!(t > 0.0)) throw DomainError("solution: t > 0 required");
  }

  FractionalOrder order_;
  double lambda_;
  double a_, b_;
  double root_;
  SeriesControl ctl_;
};

// Build the closed form for a solved root. The (a,b) pairs come from imposing
// u(s(t),t) = C together with the x = 0 condition; the assembled object is
// checked against both conditions at t = 1 before it leaves the factory.
inline ClosedFormSolution assemble(const ProblemSpec& spec, double root,
                                   const SeriesControl& ctl = {}) {
  if (!(root > 0.0)) throw DomainError("assemble: root > 0 required");
  const double a2 = spec.order.half();
  const double F = fractional_erf(root, spec.order, ctl);  // 1 - W(-root)
  double a = 0.0, b = 0.0;
  if (const auto* d = std::get_if<DirichletBc>(&spec.bc)) {
    b = (d->B - spec.C) / F;
    a = d->B - b;
  } else if (const auto* f = std::get_if<FluxBc>(&spec.bc)) {
    b = f->q * spec.lambda * std::tgamma(1.0 - a2);
    a = spec.C + b * (F - 1.0);
  } else {
    const auto& c = std::get<ConvectiveBc>(spec.bc);
    const double P = spec.convective_offset();
    b = (c.D - spec.C) / (F + P);
    a = c.D - (1.0 + P) * b;
  }
  ClosedFormSolution sol(spec.order, spec.lambda, a, b, root, ctl);

  // Postconditions at t = 1.
  const double scale = std::max(1.0, std::abs(sol.a()) + std::abs(sol.b()));
  if (std::abs(sol.u(sol.front(1.0), 1.0) - spec.C) > 1e-9 * scale)
    throw ConsistencyFailure("assemble: front condition u(s(t),t)=C violated");
  double defect = 0.0;
  if (const auto* d = std::get_if<DirichletBc>(&spec.bc)) {
    defect = std::abs(sol.u(0.0, 1.0) - d->B);
  } else if (const auto* f = std::get_if<FluxBc>(&spec.bc)) {
    defect = std::abs(sol.ux(0.0, 1.0) + f->q);
  } else {
    const auto& c = std::get<ConvectiveBc>(spec.bc);
    defect = std::abs(c.m * sol.ux(0.0, 1.0) - c.h * (sol.u(0.0, 1.0) - c.D));
  }
  if (defect > 1e-9 * scale)
    throw ConsistencyFailure("assemble: boundary condition violated at t=1");
  return sol;
}

inline ClosedFormSolution solve(const ProblemSpec& spec, double tol = 1e-12,
                                const SeriesControl& ctl = {}) {
  return assemble(spec, solve_front_coefficient(spec, tol, ctl), ctl);
}

}  // namespace fracstefan
