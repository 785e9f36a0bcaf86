#include "zkkr/extended_precision.hpp"

#include <boost/multiprecision/cpp_complex.hpp>

#include "zkkr/detail/theta_impl.hpp"

namespace zkkr {

using QuadComplex = boost::multiprecision::cpp_complex_quad;

QuadReal theta_exact_extended(const QuadReal& t) {
  return detail::theta_exact_generic<QuadReal, QuadComplex>(t);
}

QuadReal theta_series_extended(const QuadReal& t) {
  return detail::theta_series_generic<QuadReal>(t);
}

}  // namespace zkkr
