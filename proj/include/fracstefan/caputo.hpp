#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "fracstefan/errors.hpp"
#include "fracstefan/special.hpp"

// Caputo fractional derivative of order alpha in (0,1):
//   D^a f(t) = 1/Gamma(1-a) * int_0^t (t-tau)^{-a} f'(tau) dtau.
// Two routes: the exact power rule for t^beta, and an L1 quadrature of the
// definition that serves as an oracle independent of any closed form.

namespace fracstefan {

// Exact rule D^a t^beta = Gamma(beta+1)/Gamma(1+beta-a) t^{beta-a}, beta > 0.
// The Caputo derivative of a constant is 0, so beta = 0 maps to 0 — the
// Riemann-Liouville version of the rule (valid for beta > -1) does not apply
// here. Domain is restricted to beta >= 0 for that reason.
inline double caputo_power(double beta, const FractionalOrder& order, double t) {
  if (beta < 0.0)
    throw DomainError("caputo_power: beta must be >= 0, got " + std::to_string(beta));
  if (!(t > 0.0)) throw DomainError("caputo_power: t must be > 0");
  if (beta == 0.0) return 0.0;
  const double a = order.value();
  return std::tgamma(beta + 1.0) / std::tgamma(1.0 + beta - a) * std::pow(t, beta - a);
}

// Samples of f on a grid t_0 = 0 < t_1 < ... < t_n.
class TimeSamples {
public:
  TimeSamples(std::vector<double> t_grid, std::vector<double> values)
      : t_(std::move(t_grid)), f_(std::move(values)) {
    if (t_.size() != f_.size()) throw DomainError("TimeSamples: grid/value size mismatch");
    if (t_.size() < 2) throw DomainError("TimeSamples: need at least two nodes");
    if (t_.front() != 0.0) throw DomainError("TimeSamples: grid must start at t=0");
    for (std::size_t j = 1; j < t_.size(); ++j)
      if (!(t_[j] > t_[j - 1]))
        throw DomainError("TimeSamples: grid must be strictly increasing");
  }

  const std::vector<double>& grid() const noexcept { return t_; }
  const std::vector<double>& values() const noexcept { return f_; }
  std::size_t size() const noexcept { return t_.size(); }

private:
  std::vector<double> t_;
  std::vector<double> f_;
};

// L1 quadrature of the Caputo definition at node t_index: piecewise-linear f,
// kernel integrated exactly per subinterval so the (t-tau)^{-a} singularity
// at tau -> t never gets evaluated pointwise.
//   D^a f(t_N) ~= 1/Gamma(2-a) * sum_j (f_{j+1}-f_j)/dt_j *
//                 [(t_N-t_j)^{1-a} - (t_N-t_{j+1})^{1-a}]
// Exact for constants and for f(t) = t; truncation O(dt^{2-a}) for smooth f.
inline double caputo_l1(const TimeSamples& f, const FractionalOrder& order,
                        std::size_t t_index) {
  if (t_index < 1 || t_index >= f.size())
    throw DomainError("caputo_l1: t_index must be in [1, size)");
  const double a = order.value();
  const double one_m_a = 1.0 - a;
  const double t_n = f.grid()[t_index];
  double sum = 0.0, comp = 0.0;
  for (std::size_t j = 0; j < t_index; ++j) {
    const double tl = f.grid()[j], tr = f.grid()[j + 1];
    const double w = std::pow(t_n - tl, one_m_a) - std::pow(t_n - tr, one_m_a);
    detail::compensated_add(sum, comp, (f.values()[j + 1] - f.values()[j]) / (tr - tl) * w);
  }
  return (sum + comp) / std::tgamma(2.0 - a);
}

}  // namespace fracstefan
