#pragma once

#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "zkkr/detail/log_gamma_impl.hpp"

namespace zkkr::detail {

// θ(t) = Im ln Γ(1/4 + it/2) − (t/2) ln π
template <class R, class C>
R theta_exact_generic(const R& t) {
  using std::imag;
  using std::log;
  const R pi = boost::math::constants::pi<R>();
  const C z(R(0.25), t / R(2));
  return R(imag(log_gamma_generic<R>(z))) - t / R(2) * log(pi);
}

// Asymptotic series truncated after the 7/(5760 t^3) term.
template <class R>
R theta_series_generic(const R& t) {
  using std::log;
  const R pi = boost::math::constants::pi<R>();
  const R two_pi = boost::math::constants::two_pi<R>();
  return t / R(2) * log(t / two_pi) - t / R(2) - pi / R(8) + R(1) / (R(48) * t) +
         R(7) / (R(5760) * t * t * t);
}

}  // namespace zkkr::detail
