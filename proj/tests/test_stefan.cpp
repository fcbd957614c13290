#include <catch2/catch.hpp>

#include <cmath>

#include "fracstefan/stefan.hpp"

using namespace fracstefan;

namespace {
const FractionalOrder kHalf(0.5);

ProblemSpec standard_convective(double alpha = 0.5) {
  return ProblemSpec::convective(FractionalOrder(alpha), 1.0, 1.0, 0.0, 1.0, 1.0, 1.0);
}
}  // namespace

TEST_CASE("ProblemSpec validation", "[stefan]") {
  CHECK_THROWS_AS(ProblemSpec::dirichlet(kHalf, 1.0, 1.0, 0.0, 0.0), DegenerateProblem);
  CHECK_THROWS_AS(ProblemSpec::dirichlet(kHalf, 1.0, 1.0, 0.5, 0.2), DomainError);
  CHECK_THROWS_AS(ProblemSpec::flux(kHalf, 1.0, 1.0, 0.0, 0.0), DegenerateProblem);
  CHECK_THROWS_AS(ProblemSpec::flux(kHalf, 1.0, 1.0, 0.0, -1.0), DomainError);
  CHECK_THROWS_AS(ProblemSpec::convective(kHalf, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0),
                  DegenerateProblem);
  CHECK_THROWS_AS(ProblemSpec::convective(kHalf, 1.0, 1.0, 2.0, 1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(ProblemSpec::convective(kHalf, 1.0, 1.0, 0.0, 0.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(ProblemSpec::convective(kHalf, 1.0, 1.0, 0.0, 1.0, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(ProblemSpec::dirichlet(kHalf, 0.0, 1.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(ProblemSpec::dirichlet(kHalf, 1.0, -1.0, 0.0, 1.0), DomainError);
  CHECK(standard_convective().equation() == FrontEquation::convective);
}

TEST_CASE("front_target frozen values", "[stefan]") {
  // Gamma(0.75)/Gamma(1.25) for a unit Dirichlet driving difference
  const auto td = front_target(ProblemSpec::dirichlet(kHalf, 1.0, 1.0, 0.0, 1.0));
  CHECK(td.equation == FrontEquation::dirichlet);
  CHECK(td.value == Approx(1.3519564801345695).epsilon(1e-14));
  // Gamma(0.75)^2/Gamma(1.25) for a unit flux
  const auto tf = front_target(ProblemSpec::flux(kHalf, 1.0, 1.0, 0.0, 1.0));
  CHECK(tf.equation == FrontEquation::flux);
  CHECK(tf.value == Approx(1.6567100517629326).epsilon(1e-14));
  // convective shares the Dirichlet constant for the same driving difference
  const auto tc = front_target(standard_convective());
  CHECK(tc.equation == FrontEquation::convective);
  CHECK(tc.value == Approx(td.value).epsilon(1e-15));
}

TEST_CASE("front equation left-hand sides, frozen at the unit point", "[stefan]") {
  CHECK(dirichlet_front_lhs(1.0, kHalf) == Approx(1.5093170287841581).epsilon(1e-13));
  CHECK(flux_front_lhs(1.0, kHalf) == Approx(2.6086814752103897).epsilon(1e-13));
  CHECK(convective_front_lhs(1.0, standard_convective()) ==
        Approx(3.6381287790748883).epsilon(1e-13));
  CHECK_THROWS_AS(dirichlet_front_lhs(0.0, kHalf), DomainError);
  CHECK_THROWS_AS(flux_front_lhs(-1.0, kHalf), DomainError);
  CHECK_THROWS_AS(convective_front_lhs(1.0, ProblemSpec::dirichlet(kHalf, 1, 1, 0, 1)),
                  DomainError);
}

TEST_CASE("convective lhs decomposes into the Dirichlet lhs plus the offset term",
          "[stefan]") {
  const auto spec = ProblemSpec::convective(FractionalOrder(0.6), 1.3, 0.8, 0.1, 2.0,
                                            0.7, 1.4);
  const double P = spec.convective_offset();
  for (double eta : {0.2, 0.8, 1.7, 3.1}) {
    const double lhs = convective_front_lhs(eta, spec);
    const double parts = dirichlet_front_lhs(eta, spec.order) +
                         eta * P / mainardi(spec.order.half(), eta);
    CHECK(lhs == Approx(parts).epsilon(1e-12));
  }
}

TEST_CASE("front equations vanish at 0+ and grow strictly", "[stefan]") {
  const auto spec = standard_convective();
  CHECK(convective_front_lhs(1e-6, spec) <= 1e-5);
  CHECK(convective_front_lhs(1e-6, spec) > 0.0);
  double prev = 0.0;
  for (double eta = 1e-3; eta <= 4.0 + 1e-9; eta += 1e-3) {
    const double cur = convective_front_lhs(eta, spec);
    REQUIRE(cur > prev);
    prev = cur;
  }
  prev = 0.0;
  for (double xi = 1e-3; xi <= 4.0 + 1e-9; xi += 1e-3) {
    const double cur = dirichlet_front_lhs(xi, kHalf);
    REQUIRE(cur > prev);
    prev = cur;
  }
  prev = 0.0;
  for (double mu = 1e-3; mu <= 4.0 + 1e-9; mu += 1e-3) {
    const double cur = flux_front_lhs(mu, kHalf);
    REQUIRE(cur > prev);
    prev = cur;
  }
}

TEST_CASE("solve_front_coefficient round trips", "[stefan]") {
  const auto base = standard_convective();
  // make a target equal to the lhs at a known tiny root and recover it
  const double eta_known = 1e-3;
  const double lhs_known = convective_front_lhs(eta_known, base);
  const double gm = std::tgamma(0.75), gp = std::tgamma(1.25);
  const double dmc = lhs_known / (gm / gp);  // lambda = k = 1
  const auto crafted = ProblemSpec::convective(kHalf, 1.0, 1.0, 0.0, 1.0, 1.0, dmc);
  CHECK(solve_front_coefficient(crafted) == Approx(eta_known).epsilon(1e-9));

  for (double alpha : {0.3, 0.5, 0.7}) {
    const auto spec = standard_convective(alpha);
    const double root = solve_front_coefficient(spec);
    const auto target = front_target(spec);
    INFO("alpha = " << alpha);
    CHECK(std::abs(convective_front_lhs(root, spec) - target.value) <=
          1e-12 * std::max(1.0, target.value));
  }
}

TEST_CASE("solve_front_coefficient close to the classical coefficient near alpha = 1",
          "[stefan]") {
  const auto spec = standard_convective(0.999);
  // classical value for m=h=lambda=k=1, D-C=1 (50-digit bisection): 0.892401818...
  CHECK(solve_front_coefficient(spec) == Approx(0.89240181851861796).margin(2e-3));
}

TEST_CASE("solve_front_coefficient reports bracket exhaustion", "[stefan]") {
  const auto absurd = ProblemSpec::convective(kHalf, 1.0, 1.0, 0.0, 1.0, 1.0, 1e40);
  CHECK_THROWS_AS(solve_front_coefficient(absurd), BracketFailure);
}

TEST_CASE("assemble honours the boundary data", "[stefan]") {
  const double ts[] = {0.1, 1.0, 10.0};
  SECTION("dirichlet") {
    const auto spec = ProblemSpec::dirichlet(kHalf, 1.0, 1.0, 0.0, 1.0);
    const auto sol = solve(spec);
    for (double t : ts) {
      CHECK(sol.u(0.0, t) == Approx(1.0).margin(1e-12));
      CHECK(sol.u(sol.front(t), t) == Approx(0.0).margin(1e-10));
    }
  }
  SECTION("flux") {
    const auto spec = ProblemSpec::flux(FractionalOrder(0.7), 1.2, 0.9, 0.2, 0.8);
    const auto sol = solve(spec);
    for (double t : ts) {
      CHECK(sol.ux(0.0, t) * std::pow(t, 0.35) == Approx(-0.8).margin(1e-10));
      CHECK(sol.u(sol.front(t), t) == Approx(0.2).margin(1e-10));
    }
  }
  SECTION("convective trace is time independent and below the ambient value") {
    const auto spec = standard_convective();
    const auto sol = solve(spec);
    const double root = sol.root();
    const double P = spec.convective_offset();
    const double F = fractional_erf(root, spec.order);
    const double expected_trace = 1.0 - 1.0 * P / (F + P);  // D - (D-C) P/(F+P)
    for (double t : ts) {
      CHECK(sol.u(0.0, t) == Approx(expected_trace).margin(1e-11));
      CHECK(sol.u(0.0, t) < 1.0);
      CHECK(sol.u(sol.front(t), t) == Approx(0.0).margin(1e-10));
    }
  }
}

TEST_CASE("solution evaluators", "[stefan]") {
  const auto spec = standard_convective();
  const auto sol = solve(spec);

  SECTION("front scaling") {
    CHECK(sol.front(0.0) == 0.0);
    const double c = sol.front(1.0);
    for (double t : {0.1, 0.5, 2.0, 9.0}) {
      CHECK(sol.front(t) / std::pow(t, 0.25) == Approx(c).epsilon(1e-12));
    }
    double prev = 0.0;
    for (double t = 0.1; t <= 5.0; t += 0.1) {
      REQUIRE(sol.front(t) > prev);
      prev = sol.front(t);
    }
  }

  SECTION("self similarity: u depends on x/(lambda t^{a/2}) only") {
    for (double c : {0.5, 2.0}) {
      const double tscale = std::pow(c, 2.0 / 0.5);  // c^{2/alpha}
      for (double x : {0.05, 0.2, 0.4}) {
        CHECK(sol.u(x, 1.0) == Approx(sol.u(c * x, tscale)).margin(1e-12));
      }
    }
  }

  SECTION("monotone decrease and bounds inside the domain") {
    for (double t : {0.25, 1.0, 4.0}) {
      const double s = sol.front(t);
      double prev = sol.u(0.0, t);
      for (int i = 1; i <= 50; ++i) {
        const double cur = sol.u(s * i / 50.0, t);
        REQUIRE(cur < prev);
        CHECK(cur >= spec.C - 1e-10);
        CHECK(cur <= sol.u(0.0, t) + 1e-10);
        prev = cur;
      }
    }
  }

  SECTION("domain handling") {
    CHECK_THROWS_AS(sol.u(0.1, 0.0), DomainError);
    CHECK_THROWS_AS(sol.u(0.1, -1.0), DomainError);
    CHECK_THROWS_AS(sol.u(-0.1, 1.0), DomainError);
    const auto inside = sol.u_checked(0.5 * sol.front(1.0), 1.0);
    CHECK(inside.in_domain);
    const auto outside = sol.u_checked(2.0 * sol.front(1.0), 1.0);
    CHECK_FALSE(outside.in_domain);
    CHECK(std::isfinite(outside.value));
  }

  SECTION("gradient at the wall matches the closed form") {
    // u_x(0,t) = -b / (lambda t^{a/2} Gamma(1 - a/2))
    for (double t : {0.5, 1.0, 3.0}) {
      const double expected =
          -sol.b() / (sol.lambda() * std::pow(t, 0.25) * std::tgamma(0.75));
      CHECK(sol.ux(0.0, t) == Approx(expected).epsilon(1e-12));
    }
  }
}
