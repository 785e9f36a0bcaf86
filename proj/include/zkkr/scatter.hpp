#pragma once

// Scattering off the inverted harmonic oscillator (IHO) and the 1×1 KKR
// determinant built from its phase.
//
// The dimensionless IHO equation is φ″(ξ) + (ξ² − 2Ê)φ(ξ) = 0. It carries
// the same spectral content as the attractive inverse-square potential
// −g/Q² with 2g = Ê² + 1/4, which is not integrated separately. Far from
// the barrier the solutions behave as ξ^{−1/2} exp(±iΦ(ξ)) with
// Φ(ξ) = ξ²/2 − Ê ln(√2 ξ).

#include <limits>
#include <optional>
#include <vector>

#include "zkkr/specfun.hpp"

namespace zkkr {

enum class InitialCondition {
  even,        // φ(0) = 1, φ′(0) = 0
  odd,         // φ(0) = 0, φ′(0) = 1
  w_function,  // φ(ξ) = W(Ê, √2 ξ), the standard parabolic cylinder solution
};

inline constexpr double kIhoMaxEnergy = 20.0;
inline constexpr double kIhoMinXiMax = 20.0;
inline constexpr double kIhoSampleStep = 0.01;
inline constexpr double kIhoStepTolerance = 1e-12;

struct IHOSolution {
  double e_hat = 0.0;
  InitialCondition ic = InitialCondition::even;
  std::vector<double> xi;    // 0, h, 2h, ... with h = kIhoSampleStep
  std::vector<double> phi;
  std::vector<double> dphi;
};

/// W(a, 0) and dW/dx(a, 0) from their closed forms in Γ(1/4 + ia/2) and
/// Γ(3/4 + ia/2).
struct WOrigin {
  double w;
  double dw;
};
WOrigin w_origin(double a);

/// Adaptive Runge–Kutta–Fehlberg 7(8) integration from ξ = 0, local error
/// per step ≤ 1e-12 (relative), sampled every 0.01.
/// Throws DomainError unless xi_max ≥ 20 and 0 ≤ e_hat ≤ 20, and
/// ConvergenceError if the step size underflows.
IHOSolution integrate_iho(double e_hat, double xi_max, InitialCondition ic);

/// Largest discrepancy between consecutive samples and an independent
/// Taylor-series step of the ODE, relative to the solution's scale.
double ode_residual(const IHOSolution& sol);

/// Far-field basis functions f± = ξ^{−1/2} e^{±iΦ(ξ)} (1 + Σ b_r ξ^{−2r}).
/// The correction series is the formal asymptotic solution; it is summed
/// until its terms stop decreasing or fall below 1e-17.
Complex far_field_basis(double e_hat, double xi);  // f+; f− is its conjugate

struct FitWindow {
  double lo;
  double hi;
};

inline constexpr FitWindow kDefaultFitWindow{20.0, 30.0};
inline constexpr double kMaxGramCondition = 1e8;

struct AsymptoticFit {
  Complex c1;  // coefficient of f+
  Complex c2;  // coefficient of f−
  FitWindow window;
  double residual_rms;    // relative to the solution's RMS on the window
  double gram_condition;
  std::size_t samples;
};

/// Complex least squares φ ≈ c1 f+ + c2 f− over the samples in `window`.
/// Throws DomainError if the window leaves the grid, starts below ξ = 15
/// or holds fewer than 200 samples, and IllConditionedError if the Gram
/// matrix condition number exceeds 1e8.
AsymptoticFit fit_asymptotic(const IHOSolution& sol, FitWindow window);

/// 2δ = ϑ + π/4 + 2 Im ln Γ(1/2 + iÊ), unwrapped.
double analytic_phase(double e_hat, double theta);

/// The ϑ for which analytic_phase(Ê, ϑ) equals arg(c1/c2) modulo 2π,
/// reduced to (−π, π].
double implied_theta(const AsymptoticFit& fit, double e_hat);

struct WPhaseReport {
  double e_hat;
  double measured_offset;   // arg c1
  double predicted_offset;  // π/4 + arg Γ(1/2 + iÊ)/2
  double gap;               // |measured − predicted| modulo 2π
  AsymptoticFit fit;
};

/// Integrates the W(Ê, √2ξ) solution to ξ = 30, fits [20, 30] and compares
/// the constant far-field phase with its closed form.
/// Throws DomainError unless 0.5 ≤ Ê ≤ 10.
WPhaseReport verify_w_phase(double e_hat);

/// Same check with an explicit integration range and fit window.
WPhaseReport verify_w_phase(double e_hat, double xi_max, FitWindow window);

/// Partial-wave amplitude −√Ê sin δ e^{iδ}. Not unimodular, so it is for
/// inspection only and plays no part in the determinant.
Complex partial_wave_t(double e_hat, double delta);

// Krein quantization of a chain of m independent scatterers:
// m(ϑ + π/4) + m·2 Im ln Γ(1/2 + iÊ) = 2πn, solved on Ê > Ê*.

struct QuantizationProblem {
  int m = 1;
  double theta = 0.0;
  int n_min = 0;
  int n_max = 10;
};

struct QuantizationRoot {
  int n;
  double e_hat;
  double residual;
};

struct QuantizationResult {
  std::vector<QuantizationRoot> roots;  // strictly increasing in n and Ê
  std::vector<int> no_root;             // n whose target lies below the range
};

/// Roots to machine precision. Throws DomainError for m < 1 or an empty
/// n range, ConvergenceError if bisection stalls.
QuantizationResult krein_quantization(const QuantizationProblem& problem);

/// 1×1 KKR determinant (t′)^{−1} − G′ with unit-modulus t′ = e^{iχ} and
/// G′ = Γ(1/2 + iÊ)/Γ(1/2 − iÊ): e^{−iχ} − e^{i·2 Im ln Γ(1/2 + iÊ)}.
/// |det| = 2|sin((phase + χ)/2)|.
Complex kkr_det_tprime(double e_hat, double chi);

/// Determinant for a scatterer of phase ϑ, whose t′ carries the extra π/4
/// of the scattering phase: kkr_det_tprime(Ê, ϑ + π/4).
Complex kkr_det(double e_hat, double theta);

/// Signed real form 2 sin((phase + ϑ + π/4)/2); |kkr_det| equals its modulus.
double kkr_det_real(double e_hat, double theta);

/// Zeros of kkr_det on (Ê*, e_max] by a sign scan fine enough to see every
/// root, then bisection to machine precision.
std::vector<double> kkr_det_roots(double e_max, double theta);

}  // namespace zkkr
