#pragma once

// 113-bit evaluations of the two theta routes. Double precision cannot
// resolve |theta_series − theta_exact| once the series remainder drops
// below one ulp of θ (t ≳ 100); these overloads run the same algorithms
// with a quad-precision scalar so the remainder itself can be measured.

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace zkkr {

using QuadReal = boost::multiprecision::cpp_bin_float_quad;

QuadReal theta_exact_extended(const QuadReal& t);
QuadReal theta_series_extended(const QuadReal& t);

}  // namespace zkkr
