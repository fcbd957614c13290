// Solve the convective problem for a few fractional orders and print the
// temperature profile at t = 1 together with the front position.

#include <cstdio>

#include "fracstefan/stefan.hpp"

int main() {
  using namespace fracstefan;
  for (double alpha : {0.3, 0.6, 0.9}) {
    const auto spec =
        ProblemSpec::convective(FractionalOrder(alpha), 1.0, 1.0, 0.0, 1.0, 1.0, 1.0);
    const auto sol = solve(spec);
    std::printf("alpha = %.2f  root = %.12f  s(1) = %.12f  u(0,1) = %.12f\n", alpha,
                sol.root(), sol.front(1.0), sol.u(0.0, 1.0));
    for (int i = 0; i <= 10; ++i) {
      const double x = sol.front(1.0) * i / 10.0;
      std::printf("  x = %.4f  u = %.10f\n", x, sol.u(x, 1.0));
    }
  }
  return 0;
}
