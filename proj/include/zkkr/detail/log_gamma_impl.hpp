#pragma once

// Precision-generic complex log-gamma. Instantiated for std::complex<double>
// by the public API and for a 113-bit complex type by the extended-precision
// cross-checks. All functions are found by ADL so both std:: and
// boost::multiprecision overloads resolve.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

#include <boost/math/constants/constants.hpp>

#include "zkkr/error.hpp"

namespace zkkr::detail {

// B_2k / (2k (2k - 1)) as exact rationals, k = 1..16.
struct StirlingRational {
  double num;
  double den;
};

inline constexpr std::array<StirlingRational, 16> kStirling = {{
    {1.0, 12.0},
    {-1.0, 360.0},
    {1.0, 1260.0},
    {-1.0, 1680.0},
    {1.0, 1188.0},
    {-691.0, 360360.0},
    {1.0, 156.0},
    {-3617.0, 122400.0},
    {43867.0, 244188.0},
    {-174611.0, 125400.0},
    {77683.0, 5796.0},
    {-236364091.0, 1506960.0},
    {657931.0, 300.0},
    {-3392780147.0, 93960.0},
    {1723168255201.0, 2492028.0},
    {-7709321041217.0, 505920.0},
}};

// Stirling's series needs |z| at least this large (with Re z >= 0).
inline constexpr double kStirlingRadius = 20.0;

template <class R, class C>
C stirling_log_gamma(const C& z) {
  using std::log;
  const R half_log_two_pi = log(boost::math::constants::two_pi<R>()) / R(2);
  C result = (z - R(0.5)) * log(z) - z + half_log_two_pi;
  const C inv = C(R(1), R(0)) / z;
  const C inv2 = inv * inv;
  C power = inv;
  for (const auto& c : kStirling) {
    result += power * (R(c.num) / R(c.den));
    power *= inv2;
  }
  return result;
}

// log sin(pi z) with the imaginary part reduced to (-pi, pi]; stays finite
// for |Im z| far beyond where sin(pi z) itself overflows.
template <class R, class C>
C log_sin_pi(const C& z) {
  using std::cos;
  using std::exp;
  using std::floor;
  using std::imag;
  using std::log;
  using std::real;
  using std::sin;
  const R pi = boost::math::constants::pi<R>();
  const R two_pi = boost::math::constants::two_pi<R>();
  const bool lower = imag(z) < R(0);
  const R x = real(z);
  const R y = lower ? R(-imag(z)) : R(imag(z));
  // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}), |e^{2 i pi z}| <= 1 for y >= 0
  const R decay = exp(-two_pi * y);
  const C one_minus_w(R(1) - decay * cos(two_pi * x), -decay * sin(two_pi * x));
  C value = C(-log(R(2)) + pi * y, pi / R(2) - pi * x) + log(one_minus_w);
  R im = imag(value);
  im -= two_pi * floor((im + pi) / two_pi);
  if (im <= -pi) im += two_pi;
  value = C(real(value), lower ? R(-im) : im);
  return value;
}

template <class R, class C>
C log_gamma_generic(const C& z) {
  using std::abs;
  using std::floor;
  using std::imag;
  using std::log;
  using std::real;
  const R x = real(z);
  const R y = imag(z);
  if (y == R(0) && x <= R(0) && floor(x) == x) {
    throw DomainError("log_gamma: pole at non-positive integer");
  }
  if (x < R(0)) {
    // Reflection; the 2 pi floor(x/2 + 1/4) term restores the principal branch.
    const R pi = boost::math::constants::pi<R>();
    const R two_pi = boost::math::constants::two_pi<R>();
    const R branch = (y < R(0) ? -two_pi : two_pi) * floor(x / R(2) + R(0.25));
    return C(log(pi), branch) - log_sin_pi<R>(z) -
           log_gamma_generic<R>(C(R(1), R(0)) - z);
  }
  // Upward recurrence Γ(z) = Γ(z + n) / (z (z+1) ... (z+n-1)).
  C shifted = z;
  C log_product(R(0), R(0));
  while (abs(shifted) < R(kStirlingRadius)) {
    log_product += log(shifted);
    shifted += R(1);
  }
  return stirling_log_gamma<R>(shifted) - log_product;
}

}  // namespace zkkr::detail
