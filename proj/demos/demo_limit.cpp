// Watch the fractional front coefficient approach the classical one as the
// order tends to 1.

#include <cstdio>

#include "fracstefan/verification.hpp"

int main() {
  using namespace fracstefan;
  const auto base =
      ProblemSpec::convective(FractionalOrder(0.5), 1.0, 1.0, 0.0, 1.0, 1.0, 1.0);
  const auto study = limit_study(base, {0.5, 0.7, 0.9, 0.99, 0.999});
  std::printf("classical front coefficient: %.12f\n", study.eta_classical);
  for (std::size_t i = 0; i < study.alphas.size(); ++i) {
    std::printf("alpha = %.3f  root = %.12f  front error = %.3e  field error = %.3e\n",
                study.alphas[i], study.roots[i], study.front_errors[i],
                study.field_errors[i]);
  }
  return 0;
}
