#pragma once

#include <cmath>
#include <concepts>
#include <string>

#include "zkkr/error.hpp"

namespace zkkr::roots {

struct Bracket {
  double lo;
  double hi;
};

/// Bisection on a bracket with f(lo)·f(hi) ≤ 0. Stops when the bracket is
/// narrower than `tol` or can no longer be split in double precision.
/// Exact zeros at either end are returned immediately.
template <std::invocable<double> F>
double bisect(F&& f, Bracket b, double tol, int max_iter = 200) {
  double f_lo = f(b.lo);
  double f_hi = f(b.hi);
  if (f_lo == 0.0) return b.lo;
  if (f_hi == 0.0) return b.hi;
  if (std::signbit(f_lo) == std::signbit(f_hi)) {
    throw DomainError("bisect: no sign change on [" + std::to_string(b.lo) + ", " +
                      std::to_string(b.hi) + "]");
  }
  for (int i = 0; i < max_iter; ++i) {
    const double mid = 0.5 * (b.lo + b.hi);
    if (b.hi - b.lo <= tol || mid <= b.lo || mid >= b.hi) return mid;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      b.lo = mid;
      f_lo = f_mid;
    } else {
      b.hi = mid;
    }
  }
  throw ConvergenceError("bisect: no convergence to " + std::to_string(tol) + " in " +
                         std::to_string(max_iter) + " iterations");
}

/// For an increasing, unbounded `f`: returns [lo, hi] with f(lo) ≤ target < f(hi),
/// doubling the upper end from `hi_start`. Throws DomainError if f(lo) > target.
template <std::invocable<double> F>
Bracket bracket_increasing(F&& f, double lo, double hi_start, double target,
                           int max_doublings = 200) {
  if (f(lo) > target) {
    throw DomainError("target " + std::to_string(target) +
                      " lies below the function's range at " + std::to_string(lo));
  }
  double hi = std::max(hi_start, lo + 1.0);
  for (int i = 0; i < max_doublings; ++i) {
    if (f(hi) > target) return {lo, hi};
    lo = hi;
    hi *= 2.0;
  }
  throw ConvergenceError("bracket_increasing: target " + std::to_string(target) +
                         " not reached");
}

}  // namespace zkkr::roots
