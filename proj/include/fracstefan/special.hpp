#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "fracstefan/errors.hpp"

// Wright function W(z,a,b) = sum_n z^n / (n! Gamma(a n + b)), a > -1, and the
// derived special functions used by time-fractional diffusion: the Mainardi
// function M_nu(z) = W(-z,-nu,1-nu) and the fractional error function
// 1 - W(-x,-alpha/2,1). All series go through a reciprocal gamma that is zero
// at the poles of Gamma, so pole terms drop out instead of blowing up.

namespace fracstefan {

// Order of the time-fractional derivative, alpha in (0,1), endpoints excluded.
class FractionalOrder {
public:
  explicit FractionalOrder(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
      throw DomainError("FractionalOrder: alpha must lie strictly in (0,1), got " +
                        std::to_string(alpha));
  }
  double value() const noexcept { return alpha_; }
  // nu = alpha/2, the Mainardi index that appears throughout.
  double half() const noexcept { return 0.5 * alpha_; }

private:
  double alpha_;
};

struct SeriesControl {
  double abs_tol = 1e-14;
  int max_terms = 500;
};

// Everything a series evaluation can tell you besides the value. The flags are
// warnings, not errors: results outside the usual box stay usable.
struct SeriesResult {
  double value = 0.0;
  double max_abs_term = 0.0;
  int terms_used = 0;
  bool precision_loss = false;       // max |term| exceeded 1e12 * |value|
  bool outside_usual_range = false;  // argument left the documented box
};

namespace detail {

constexpr double kPi = 3.14159265358979323846;

inline void check_series_control(const SeriesControl& ctl) {
  if (!(ctl.abs_tol > 0.0)) throw DomainError("SeriesControl: abs_tol must be > 0");
  if (ctl.max_terms < 1) throw DomainError("SeriesControl: max_terms must be >= 1");
}

// sin(pi x) with the integer part of x reduced exactly.
inline double sin_pi(double x) {
  const double r = std::round(x);
  const double s = std::sin(kPi * (x - r));
  return std::fmod(r, 2.0) == 0.0 ? s : -s;
}

// Neumaier-compensated accumulation.
inline void compensated_add(double& sum, double& comp, double term) {
  const double t = sum + term;
  if (std::abs(sum) >= std::abs(term))
    comp += (sum - t) + term;
  else
    comp += (term - t) + sum;
  sum = t;
}

}  // namespace detail

inline bool is_nonpositive_integer(double x) {
  const double r = std::round(x);
  return std::abs(x - r) < 1e-12 && r <= 0.0;
}

// 1/Gamma(x) as a total function: exactly 0 at the poles x = 0, -1, -2, ...
// (integrality detected at the 1e-12 level), reflection for the rest of the
// negative axis. tgamma carries the accuracy-critical range; the log-gamma
// route only serves deep-negative x where Gamma(1-x) itself overflows.
inline double reciprocal_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x >= 0.5) return 1.0 / std::tgamma(x);  // 1/inf -> 0 for huge x, as it should
  const double s = detail::sin_pi(x);
  if (1.0 - x < 171.0) return std::tgamma(1.0 - x) * (s / detail::kPi);
  const double magnitude = std::lgamma(1.0 - x) + std::log(std::abs(s) / detail::kPi);
  return std::copysign(std::exp(magnitude), s);
}

namespace detail {

// Shared stopping machinery: terms come from a callable term(n), summation is
// compensated, and the series stops after three consecutive sub-tolerance
// terms (a single accidentally small term must not stop an alternating
// series).
template <typename TermFn>
SeriesResult sum_series(TermFn term, int first_n, const SeriesControl& ctl,
                        const char* name, double z, double a) {
  double sum = 0.0, comp = 0.0, max_term = 0.0;
  int below = 0;
  int n = first_n;
  for (; n < first_n + ctl.max_terms; ++n) {
    const double t = term(n);
    max_term = std::max(max_term, std::abs(t));
    compensated_add(sum, comp, t);
    if (std::abs(t) < ctl.abs_tol * std::max(1.0, std::abs(sum + comp))) {
      if (++below >= 3) { ++n; break; }
    } else {
      below = 0;
    }
  }
  if (below < 3)
    throw NonConvergence(std::string(name) + ": stopping rule did not fire within " +
                             std::to_string(ctl.max_terms) + " terms (z=" +
                             std::to_string(z) + ", a=" + std::to_string(a) + ")",
                         n - first_n);
  SeriesResult r;
  r.value = sum + comp;
  r.max_abs_term = max_term;
  r.terms_used = n - first_n;
  r.precision_loss = max_term > 1e12 * std::abs(r.value);
  return r;
}

}  // namespace detail

// W(z, a, b) with full diagnostics.
inline SeriesResult wright_w_full(double z, double a, double b,
                                  const SeriesControl& ctl = {}) {
  if (!(a > -1.0)) throw DomainError("wright_w: requires a > -1, got " + std::to_string(a));
  detail::check_series_control(ctl);
  double p = 1.0;  // z^n / n!, advanced after use
  SeriesResult r = detail::sum_series(
      [&, z, a, b](int n) {
        const double t = p * reciprocal_gamma(a * n + b);
        p *= z / (n + 1);
        return t;
      },
      0, ctl, "wright_w", z, a);
  r.outside_usual_range = z > 0.0 || z < -8.0 || a > 0.0;
  return r;
}

inline double wright_w(double z, double a, double b, const SeriesControl& ctl = {}) {
  return wright_w_full(z, a, b, ctl).value;
}

// Term-by-term z-derivative, sum_{n>=1} n z^{n-1} / (n! Gamma(a n + b)).
// Satisfies wright_w_dz(z,a,b) == wright_w(z,a,a+b); the identity is a test
// cross-check, not the implementation.
inline SeriesResult wright_w_dz_full(double z, double a, double b,
                                     const SeriesControl& ctl = {}) {
  if (!(a > -1.0)) throw DomainError("wright_w_dz: requires a > -1, got " + std::to_string(a));
  detail::check_series_control(ctl);
  double q = 1.0;  // z^{n-1} / n!, starting at n = 1
  SeriesResult r = detail::sum_series(
      [&, z, a, b](int n) {
        const double t = n * q * reciprocal_gamma(a * n + b);
        q *= z / (n + 1);
        return t;
      },
      1, ctl, "wright_w_dz", z, a);
  r.outside_usual_range = z > 0.0 || z < -8.0 || a > 0.0;
  return r;
}

inline double wright_w_dz(double z, double a, double b, const SeriesControl& ctl = {}) {
  return wright_w_dz_full(z, a, b, ctl).value;
}

// Mainardi function M_nu(z) = W(-z, -nu, 1-nu); positive and decreasing on
// z >= 0 for 0 < nu < 1, Gaussian e^{-z^2/4}/sqrt(pi) at nu = 1/2.
inline double mainardi(double nu, double z, const SeriesControl& ctl = {}) {
  return wright_w(-z, -nu, 1.0 - nu, ctl);
}

// Fractional error function 1 - W(-x, -alpha/2, 1): zero at 0, increasing,
// limit 1 at infinity, and tending to erf(x/2) as alpha -> 1.
inline double fractional_erf(double x, const FractionalOrder& order,
                             const SeriesControl& ctl = {}) {
  return 1.0 - wright_w(-x, -order.half(), 1.0, ctl);
}

}  // namespace fracstefan
