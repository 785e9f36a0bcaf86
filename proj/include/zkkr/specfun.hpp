#pragma once

// Special functions on and around the critical line: complex log-gamma,
// the Riemann–Siegel theta function (exact and asymptotic), gamma-ratio
// scattering phases, Hardy's Z function and ζ(1/2 + it).
//
// Heights t are dimensionless ordinates on s = 1/2 + it. The same variable
// is called E or Ê (energy in units of ħω = 1) by the scattering modules.
// Every function here is pure and thread-safe.

#include <complex>

namespace zkkr {

using Complex = std::complex<double>;

/// Hardy Z switches from Euler–Maclaurin to Riemann–Siegel above this height.
inline constexpr double kEulerMaclaurinMaxHeight = 50.0;
/// Upper end of the range where hardy_z accuracy is validated by tests.
inline constexpr double kValidatedMaxHeight = 1.0e4;
/// hardy_z refuses heights beyond this bound.
inline constexpr double kRegimeMaxHeight = 1.0e6;
/// theta_series rejects heights below this bound.
inline constexpr double kThetaSeriesMinHeight = 10.0;

/// Principal branch of ln Γ(z), continuous along vertical lines Re z > 0.
/// Throws DomainError at the poles z = 0, -1, -2, ...
Complex log_gamma(Complex z);

/// θ(t) = Im ln Γ(1/4 + it/2) − (t/2) ln π. Odd in t, continuous.
double theta_exact(double t);

/// θ(t) ≈ (t/2) ln(t/2π) − t/2 − π/8 + 1/(48t) + 7/(5760 t³).
/// Throws DomainError for t < 10.
double theta_series(double t);

/// Im ln[Γ(s0 + it) / Γ(s0 − it)] = 2 Im ln Γ(s0 + it), unwrapped.
/// Throws DomainError unless s0 > 0.
double gamma_phase_ratio(double t, double s0);

/// Unique positive root of d/dE gamma_phase_ratio(E, 1/2); the phase is
/// strictly increasing beyond it. Located once by bisection on a central
/// finite difference and cached.
double phase_monotone_cutoff();

/// Location of the minimum of θ(t) on t > 0 (≈ 6.2898); θ is strictly
/// increasing beyond it. Located once by bisection and cached.
double theta_minimum();

/// Hardy's Z(t) = e^{iθ(t)} ζ(1/2 + it), real. Euler–Maclaurin for t ≤ 50,
/// Riemann–Siegel with three remainder terms above.
/// Throws DomainError for t < 0 and RegimeError for t > 1e6.
double hardy_z(double t);

/// ζ(1/2 + it) = Z(t) e^{−iθ(t)}.
Complex zeta_critical(double t);

/// ζ(s) by Euler–Maclaurin summation; s ≠ 1. Cost grows linearly in |Im s|.
Complex zeta_euler_maclaurin(Complex s);

/// Riemann–Siegel evaluation of Z(t) for t ≥ 2π, regardless of the
/// strategy split used by hardy_z.
double hardy_z_riemann_siegel(double t);

/// Riemann–Siegel remainder coefficients C0, C1, C2 at fractional part p.
struct RiemannSiegelCoefficients {
  double c0;
  double c1;
  double c2;
};
RiemannSiegelCoefficients riemann_siegel_coefficients(double p);

}  // namespace zkkr
