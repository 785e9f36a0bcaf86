#include <cmath>
#include <numbers>
#include <string>

#include "zkkr/error.hpp"
#include "zkkr/roots.hpp"
#include "zkkr/scatter.hpp"

namespace zkkr {

namespace {

using std::numbers::pi;

double phase(double e_hat) { return gamma_phase_ratio(e_hat, 0.5); }

}  // namespace

QuantizationResult krein_quantization(const QuantizationProblem& p) {
  if (p.m < 1) throw DomainError("krein_quantization requires m >= 1");
  if (p.n_min > p.n_max) throw DomainError("krein_quantization: empty n range");
  if (!std::isfinite(p.theta)) throw DomainError("krein_quantization: theta is not finite");

  const double e_star = phase_monotone_cutoff();
  const double floor_phase = phase(e_star);
  const double m = p.m;
  QuantizationResult out;
  for (int n = p.n_min; n <= p.n_max; ++n) {
    const double target = 2 * pi * n / m - p.theta - pi / 4;
    if (!(target > floor_phase)) {
      out.no_root.push_back(n);
      continue;
    }
    const roots::Bracket b = roots::bracket_increasing(phase, e_star, 2 * e_star + 1.0, target);
    const double e = roots::bisect([&](double x) { return phase(x) - target; }, b, 0.0);
    const double residual = std::abs(m * (p.theta + pi / 4) + m * phase(e) - 2 * pi * n);
    out.roots.push_back({n, e, residual});
  }
  return out;
}

Complex kkr_det_tprime(double e_hat, double chi) {
  return std::polar(1.0, -chi) - std::polar(1.0, phase(e_hat));
}

Complex kkr_det(double e_hat, double theta) { return kkr_det_tprime(e_hat, theta + pi / 4); }

double kkr_det_real(double e_hat, double theta) {
  return 2 * std::sin(0.5 * (phase(e_hat) + theta + pi / 4));
}

std::vector<double> kkr_det_roots(double e_max, double theta) {
  const double e_star = phase_monotone_cutoff();
  if (!(e_max > e_star) || !std::isfinite(e_max)) {
    throw DomainError("kkr_det_roots requires e_max > E* = " + std::to_string(e_star));
  }
  // Keep the phase increment per grid step below π/2 so that no step can
  // contain two zeros of sin((phase + ϑ + π/4)/2).
  const double max_slope = 2 * std::log(std::max(e_max, 1.0)) + 1.0;
  const double step = 0.5 * pi / max_slope;
  const auto f = [theta](double e) { return kkr_det_real(e, theta); };

  std::vector<double> out;
  double lo = e_star;
  double f_lo = f(lo);
  for (long i = 1; lo < e_max; ++i) {
    const double hi = std::min(e_star + static_cast<double>(i) * step, e_max);
    const double f_hi = f(hi);
    if (f_hi == 0.0) {
      out.push_back(hi);
    } else if (f_lo != 0.0 && std::signbit(f_lo) != std::signbit(f_hi)) {
      out.push_back(roots::bisect(f, {lo, hi}, 0.0));
    }
    lo = hi;
    f_lo = f_hi;
  }
  return out;
}

}  // namespace zkkr
