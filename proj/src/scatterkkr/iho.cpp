#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "zkkr/error.hpp"
#include "zkkr/scatter.hpp"

namespace zkkr {

namespace {

using std::numbers::pi;
namespace odeint = boost::numeric::odeint;
using State = std::array<double, 2>;

constexpr double kMinFitStart = 15.0;
constexpr std::size_t kMinFitSamples = 200;
constexpr int kMaxSeriesTerms = 60;

double wrap_angle(double x) { return std::remainder(x, 2 * pi); }

}  // namespace

WOrigin w_origin(double a) {
  const double lq = log_gamma({0.25, a / 2}).real();
  const double l3q = log_gamma({0.75, a / 2}).real();
  return {std::pow(2.0, -0.75) * std::exp(0.5 * (lq - l3q)),
          -std::pow(2.0, -0.25) * std::exp(0.5 * (l3q - lq))};
}

IHOSolution integrate_iho(double e_hat, double xi_max, InitialCondition ic) {
  if (!(e_hat >= 0.0 && e_hat <= kIhoMaxEnergy)) {
    throw DomainError("integrate_iho requires 0 <= e_hat <= 20, got " + std::to_string(e_hat));
  }
  if (!(xi_max >= kIhoMinXiMax) || !std::isfinite(xi_max)) {
    throw DomainError("integrate_iho requires xi_max >= 20, got " + std::to_string(xi_max));
  }

  State x{};
  switch (ic) {
    case InitialCondition::even: x = {1.0, 0.0}; break;
    case InitialCondition::odd: x = {0.0, 1.0}; break;
    case InitialCondition::w_function: {
      // φ(ξ) = W(Ê, √2 ξ), so φ′(0) = √2 W′(Ê, 0).
      const WOrigin w = w_origin(e_hat);
      x = {w.w, std::numbers::sqrt2 * w.dw};
      break;
    }
  }

  const auto rhs = [e_hat](const State& s, State& ds, double xi) {
    ds[0] = s[1];
    ds[1] = (2 * e_hat - xi * xi) * s[0];
  };
  auto stepper = odeint::make_controlled(kIhoStepTolerance * 1e-3, kIhoStepTolerance,
                                         odeint::runge_kutta_fehlberg78<State>());

  const auto n = static_cast<std::size_t>(std::ceil(xi_max / kIhoSampleStep - 1e-9));
  IHOSolution sol{e_hat, ic, {}, {}, {}};
  sol.xi.reserve(n + 1);
  sol.phi.reserve(n + 1);
  sol.dphi.reserve(n + 1);
  sol.xi.push_back(0.0);
  sol.phi.push_back(x[0]);
  sol.dphi.push_back(x[1]);
  try {
    for (std::size_t i = 1; i <= n; ++i) {
      const double t0 = sol.xi.back();
      const double t1 = i == n ? xi_max : static_cast<double>(i) * kIhoSampleStep;
      odeint::integrate_adaptive(stepper, rhs, x, t0, t1, (t1 - t0) / 4);
      sol.xi.push_back(t1);
      sol.phi.push_back(x[0]);
      sol.dphi.push_back(x[1]);
    }
  } catch (const odeint::odeint_error& e) {
    throw ConvergenceError(std::string("IHO integration: step size underflow (") + e.what() +
                           ")");
  }
  return sol;
}

double ode_residual(const IHOSolution& sol) {
  const double e = sol.e_hat;
  double worst = 0.0;
  for (std::size_t j = 0; j + 1 < sol.xi.size(); ++j) {
    const double x0 = sol.xi[j];
    const double h = sol.xi[j + 1] - x0;
    // Taylor coefficients of φ about x0 from φ″ = (2Ê − ξ²)φ.
    const double q0 = 2 * e - x0 * x0, q1 = -2 * x0;
    std::array<double, 48> c{};
    c[0] = sol.phi[j];
    c[1] = sol.dphi[j];
    for (std::size_t k = 0; k + 2 < c.size(); ++k) {
      double acc = q0 * c[k];
      if (k >= 1) acc += q1 * c[k - 1];
      if (k >= 2) acc -= c[k - 2];
      c[k + 2] = acc / static_cast<double>((k + 2) * (k + 1));
    }
    double phi = 0.0, dphi = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) {
      phi = phi * h + c[k];
      if (k >= 1) dphi = dphi * h + static_cast<double>(k) * c[k];
    }
    const double omega = std::sqrt(std::max(1.0, std::abs(x0 * x0 - 2 * e)));
    const double scale =
        std::max({std::abs(sol.phi[j]), std::abs(sol.dphi[j]) / omega, std::abs(sol.phi[j + 1]),
                  std::abs(sol.dphi[j + 1]) / omega});
    if (scale == 0.0) continue;
    const double err =
        std::max(std::abs(phi - sol.phi[j + 1]), std::abs(dphi - sol.dphi[j + 1]) / omega);
    worst = std::max(worst, err / scale);
  }
  return worst;
}

Complex far_field_basis(double e_hat, double xi) {
  // w = Σ b_r ξ^{−2r} solves w″ + 2u′w′ + γw/ξ² = 0 with γ = 3/4 − Ê² + 2iÊ.
  const Complex gamma(0.75 - e_hat * e_hat, 2 * e_hat);
  const Complex four_i(0.0, 4.0);
  const double inv_sq = 1.0 / (xi * xi);
  Complex term = 1.0, sum = 1.0;
  double prev = INFINITY;
  for (int r = 0; r < kMaxSeriesTerms; ++r) {
    const double rr = r;
    const Complex factor = (4 * rr * rr + 4 * rr + Complex(0.0, 4 * e_hat * rr) + gamma) /
                           (four_i * (rr + 1)) * inv_sq;
    const Complex next = term * factor;
    const double mag = std::abs(next);
    if (mag >= prev) break;
    sum += next;
    if (mag < 1e-17) break;
    prev = mag;
    term = next;
  }
  const double phase = 0.5 * xi * xi - e_hat * std::log(std::numbers::sqrt2 * xi);
  return std::polar(1.0 / std::sqrt(xi), phase) * sum;
}

AsymptoticFit fit_asymptotic(const IHOSolution& sol, FitWindow window) {
  if (sol.xi.empty() || !(window.lo < window.hi) || window.lo < kMinFitStart ||
      window.lo < sol.xi.front() || window.hi > sol.xi.back() + 1e-12) {
    throw DomainError("fit window must satisfy 15 <= lo < hi within the solution grid");
  }
  Complex g11 = 0.0, g12 = 0.0, g22 = 0.0, r1 = 0.0, r2 = 0.0;
  std::vector<std::pair<std::size_t, Complex>> basis;
  for (std::size_t j = 0; j < sol.xi.size(); ++j) {
    if (sol.xi[j] < window.lo - 1e-12 || sol.xi[j] > window.hi + 1e-12) continue;
    const Complex fp = far_field_basis(sol.e_hat, sol.xi[j]);
    const Complex fm = std::conj(fp);
    basis.emplace_back(j, fp);
    g11 += std::norm(fp);
    g22 += std::norm(fm);
    g12 += std::conj(fp) * fm;
    r1 += std::conj(fp) * sol.phi[j];
    r2 += std::conj(fm) * sol.phi[j];
  }
  if (basis.size() < kMinFitSamples) {
    throw DomainError("fit window holds " + std::to_string(basis.size()) +
                      " samples, at least 200 required");
  }
  const Complex g21 = std::conj(g12);
  const double half_sum = 0.5 * (g11.real() + g22.real());
  const double radius = std::hypot(0.5 * (g11.real() - g22.real()), std::abs(g12));
  const double lambda_min = half_sum - radius;
  const double cond = lambda_min > 0.0 ? (half_sum + radius) / lambda_min : INFINITY;
  if (!(cond <= kMaxGramCondition)) {
    throw IllConditionedError("far-field fit: Gram condition " + std::to_string(cond) +
                              " exceeds 1e8");
  }
  const Complex det = g11 * g22 - g12 * g21;
  const Complex c1 = (r1 * g22 - g12 * r2) / det;
  const Complex c2 = (g11 * r2 - g21 * r1) / det;

  double res = 0.0, norm = 0.0;
  for (const auto& [j, fp] : basis) {
    const Complex model = c1 * fp + c2 * std::conj(fp);
    res += std::norm(model - sol.phi[j]);
    norm += sol.phi[j] * sol.phi[j];
  }
  const double rel = norm > 0.0 ? std::sqrt(res / norm) : std::sqrt(res);
  return {c1, c2, window, rel, cond, basis.size()};
}

double analytic_phase(double e_hat, double theta) {
  return theta + pi / 4 + gamma_phase_ratio(e_hat, 0.5);
}

double implied_theta(const AsymptoticFit& fit, double e_hat) {
  return wrap_angle(std::arg(fit.c1 / fit.c2) - analytic_phase(e_hat, 0.0));
}

WPhaseReport verify_w_phase(double e_hat) {
  return verify_w_phase(e_hat, kDefaultFitWindow.hi, kDefaultFitWindow);
}

WPhaseReport verify_w_phase(double e_hat, double xi_max, FitWindow window) {
  if (!(e_hat >= 0.5 && e_hat <= 10.0)) {
    throw DomainError("verify_w_phase requires 0.5 <= e_hat <= 10");
  }
  const IHOSolution sol = integrate_iho(e_hat, xi_max, InitialCondition::w_function);
  const AsymptoticFit fit = fit_asymptotic(sol, window);
  const double measured = std::arg(fit.c1);
  const double predicted = pi / 4 + 0.5 * log_gamma({0.5, e_hat}).imag();
  return {e_hat, measured, predicted, std::abs(wrap_angle(measured - predicted)), fit};
}

Complex partial_wave_t(double e_hat, double delta) {
  return -std::sqrt(e_hat) * std::sin(delta) * std::polar(1.0, delta);
}

}  // namespace zkkr
