#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "zkkr/error.hpp"
#include "zkkr/specfun.hpp"

namespace zkkr {
namespace {

// B_2k, k = 1..12
constexpr std::array<double, 12> kBernoulli = {
    1.0 / 6.0,         -1.0 / 30.0,       1.0 / 42.0,          -1.0 / 30.0,
    5.0 / 66.0,        -691.0 / 2730.0,   7.0 / 6.0,           -3617.0 / 510.0,
    43867.0 / 798.0,   -174611.0 / 330.0, 854513.0 / 138.0,    -236364091.0 / 2730.0,
};

// Taylor coefficients of Ψ(p) = cos(2π(p² − p − 1/16)) / cos(2πp) in
// powers of (p − 1/2); odd powers vanish. Ψ is entire, so the series
// converges on all of [0, 1].
constexpr std::array<double, 31> kPsiEven = {
    0.3826834323650897717285,    1.748961872310081797441,    2.118025207685496373185,
    -0.8707216670511480739189,   -3.473311224346516707306,   -1.662694730899932449643,
    1.216731288919232134477,     1.301430416100797577301,    0.03051102182736167242109,
    -0.3755803051545095242798,   -0.1085784416564065974355,  0.05183290299954962337576,
    0.0299994806199022759204,    -0.00227593967061256422602, -0.00438264741658033830594,
    -0.0004064230183729846993072, 0.0004006097785422113927891, 0.00008971057991388841297834,
    -0.0000230256500272391071161, -0.00000938000660190679248472, 6.32351494760910750425e-7,
    6.551022819231501666212e-7,  2.210523745552697258661e-8,  -3.322316176445628835031e-8,
    -3.734910989933656081765e-9, 1.244506706079773919515e-9,  2.476820537650219184251e-10,
    -3.284272816891627194459e-11, -1.130540685229840367788e-11, 4.565463979588693927593e-13,
    3.959848094524921519585e-13,
};

// d-th derivative of Ψ at p.
double psi_derivative(double p, int d) {
  const double x = p - 0.5;
  double sum = 0.0;
  for (int j = static_cast<int>(kPsiEven.size()) - 1; j >= 0; --j) {
    const int k = 2 * j;
    if (k < d) break;
    double falling = 1.0;
    for (int i = 0; i < d; ++i) falling *= static_cast<double>(k - i);
    sum += kPsiEven[j] * falling * std::pow(x, k - d);
  }
  return sum;
}

void check_height(double t) {
  if (!std::isfinite(t) || t < 0.0) {
    throw DomainError("hardy_z: height must be finite and non-negative");
  }
  if (t > kRegimeMaxHeight) {
    throw RegimeError("hardy_z: t = " + std::to_string(t) +
                      " exceeds the validated regime (1e6)");
  }
}

}  // namespace

Complex zeta_euler_maclaurin(Complex s) {
  if (s == Complex(1.0, 0.0)) {
    throw DomainError("zeta: pole at s = 1");
  }
  const int n_terms = 20 + static_cast<int>(std::ceil(std::abs(s.imag()) / 2.0));
  Complex sum(0.0, 0.0);
  for (int n = 1; n < n_terms; ++n) {
    sum += std::exp(-s * std::log(static_cast<double>(n)));
  }
  const double big_n = n_terms;
  const double log_n = std::log(big_n);
  const Complex n_pow_minus_s = std::exp(-s * log_n);
  sum += big_n * n_pow_minus_s / (s - 1.0) + 0.5 * n_pow_minus_s;

  // Tail: B_2k/(2k)! · s(s+1)…(s+2k−2) · N^{−s−2k+1}
  Complex rising = s;
  Complex n_power = n_pow_minus_s / big_n;
  double factorial = 2.0;
  for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
    sum += kBernoulli[k - 1] / factorial * rising * n_power;
    const double kk = static_cast<double>(k);
    rising *= (s + (2.0 * kk - 1.0)) * (s + 2.0 * kk);
    n_power /= big_n * big_n;
    factorial *= (2.0 * kk + 1.0) * (2.0 * kk + 2.0);
  }
  return sum;
}

RiemannSiegelCoefficients riemann_siegel_coefficients(double p) {
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  const double d2 = psi_derivative(p, 2);
  const double d3 = psi_derivative(p, 3);
  const double d6 = psi_derivative(p, 6);
  return {
      .c0 = psi_derivative(p, 0),
      .c1 = -d3 / (96.0 * pi2),
      .c2 = d2 / (64.0 * pi2) + d6 / (18432.0 * pi2 * pi2),
  };
}

double hardy_z_riemann_siegel(double t) {
  check_height(t);
  if (t < 2.0 * std::numbers::pi) {
    throw DomainError("hardy_z_riemann_siegel: needs t >= 2 pi");
  }
  const double tau = std::sqrt(t / (2.0 * std::numbers::pi));
  const auto n_max = static_cast<long>(std::floor(tau));
  const double theta = theta_exact(t);
  double main = 0.0;
  for (long n = 1; n <= n_max; ++n) {
    const double nd = static_cast<double>(n);
    main += std::cos(theta - t * std::log(nd)) / std::sqrt(nd);
  }
  const auto c = riemann_siegel_coefficients(tau - static_cast<double>(n_max));
  const double sign = (n_max % 2 == 1) ? 1.0 : -1.0;  // (-1)^(N-1)
  const double remainder = sign / std::sqrt(tau) * (c.c0 + c.c1 / tau + c.c2 / (tau * tau));
  return 2.0 * main + remainder;
}

double hardy_z(double t) {
  check_height(t);
  if (t <= kEulerMaclaurinMaxHeight) {
    const Complex zeta = zeta_euler_maclaurin(Complex(0.5, t));
    return (std::polar(1.0, theta_exact(t)) * zeta).real();
  }
  return hardy_z_riemann_siegel(t);
}

Complex zeta_critical(double t) {
  return hardy_z(t) * std::polar(1.0, -theta_exact(t));
}

}  // namespace zkkr
