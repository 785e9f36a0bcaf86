#include <cmath>
#include <mutex>

#include "zkkr/detail/log_gamma_impl.hpp"
#include "zkkr/detail/theta_impl.hpp"
#include "zkkr/error.hpp"
#include "zkkr/roots.hpp"
#include "zkkr/specfun.hpp"

namespace zkkr {

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("log_gamma: non-finite argument");
  }
  return detail::log_gamma_generic<double>(z);
}

double theta_exact(double t) {
  return detail::theta_exact_generic<double, Complex>(t);
}

double theta_series(double t) {
  if (!(t >= kThetaSeriesMinHeight)) {
    throw DomainError("theta_series: asymptotic series needs t >= 10, got " +
                      std::to_string(t));
  }
  return detail::theta_series_generic<double>(t);
}

double gamma_phase_ratio(double t, double s0) {
  if (!(s0 > 0.0)) {
    throw DomainError("gamma_phase_ratio: s0 must be positive");
  }
  return 2.0 * log_gamma(Complex(s0, t)).imag();
}

double phase_monotone_cutoff() {
  static const double cutoff = [] {
    constexpr double h = 1e-5;
    const auto slope = [](double e) {
      return (gamma_phase_ratio(e + h, 0.5) - gamma_phase_ratio(e - h, 0.5)) / (2.0 * h);
    };
    return roots::bisect(slope, {0.1, 5.0}, 1e-12);
  }();
  return cutoff;
}

double theta_minimum() {
  static const double t_min = [] {
    constexpr double h = 1e-5;
    const auto slope = [](double t) {
      return (theta_exact(t + h) - theta_exact(t - h)) / (2.0 * h);
    };
    return roots::bisect(slope, {3.0, 10.0}, 1e-12);
  }();
  return t_min;
}

}  // namespace zkkr
