#include "zkkr/zeroscan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include <fmt/format.h>

#include "zkkr/error.hpp"
#include "zkkr/specfun.hpp"

namespace zkkr {

void ScanConfig::validate() const {
  if (!std::isfinite(t_min) || !std::isfinite(t_max) || t_min < 0.0 || t_min >= t_max) {
    throw DomainError("scan range must satisfy 0 <= t_min < t_max");
  }
  if (!(grid_step > 0.0)) throw DomainError("grid_step must be positive");
  if (!(refine_tolerance > 0.0) || refine_tolerance >= grid_step) {
    throw DomainError("refine_tolerance must lie in (0, grid_step)");
  }
  if (max_refinements < 1) throw DomainError("max_refinements must be at least 1");
  if (t_max > kValidatedMaxHeight) {
    throw RegimeError("t_max = " + std::to_string(t_max) +
                      " exceeds the validated Hardy Z range (1e4)");
  }
}

ZeroCatalog::ZeroCatalog(std::vector<double> heights, CatalogSource source,
                         double max_height_scanned)
    : heights_(std::move(heights)), source_(source), max_height_scanned_(max_height_scanned) {
  for (std::size_t i = 0; i < heights_.size(); ++i) {
    if (!(heights_[i] > kFirstZeroLowerBound)) {
      throw DomainError("zero height " + std::to_string(heights_[i]) + " is not above 13");
    }
    if (i > 0 && !(heights_[i] > heights_[i - 1])) {
      throw DomainError("zero heights are not strictly increasing at index " +
                        std::to_string(i));
    }
  }
  if (!heights_.empty() && max_height_scanned_ < heights_.back()) {
    throw DomainError("max_height_scanned lies below the last zero height");
  }
}

namespace {

struct GridSpec {
  double t_min;
  double step;
  double t_max;
  std::size_t intervals;

  double point(std::size_t i) const {
    return i >= intervals ? t_max : t_min + static_cast<double>(i) * step;
  }
};

GridSpec make_grid(const ScanConfig& c) {
  const auto n = static_cast<std::size_t>(std::ceil((c.t_max - c.t_min) / c.grid_step));
  return {c.t_min, c.grid_step, c.t_max, std::max<std::size_t>(n, 1)};
}

double refine(double lo, double hi, double z_lo, const ScanConfig& c) {
  for (int k = 0; k < c.max_refinements; ++k) {
    if (hi - lo <= c.refine_tolerance) return 0.5 * (lo + hi);
    const double mid = 0.5 * (lo + hi);
    const double z_mid = hardy_z(mid);
    if (z_mid == 0.0) return mid;
    if (std::signbit(z_mid) == std::signbit(z_lo)) {
      lo = mid;
      z_lo = z_mid;
    } else {
      hi = mid;
    }
  }
  if (hi - lo <= c.refine_tolerance) return 0.5 * (lo + hi);
  throw ConvergenceError(fmt::format("zero bracket near t = {:.6f} not refined to {:g} in {} "
                                     "bisections",
                                     lo, c.refine_tolerance, c.max_refinements));
}

// Zeros inside grid intervals [first, last). A grid point where Z vanishes
// exactly is reported once, by the interval it opens.
std::vector<double> scan_intervals(const GridSpec& g, const ScanConfig& c, std::size_t first,
                                   std::size_t last) {
  std::vector<double> out;
  if (first >= last) return out;
  double t_lo = g.point(first);
  double z_lo = hardy_z(t_lo);
  for (std::size_t i = first; i < last; ++i) {
    const double t_hi = g.point(i + 1);
    const double z_hi = hardy_z(t_hi);
    if (z_lo == 0.0) {
      if (t_lo > kFirstZeroLowerBound) out.push_back(t_lo);
    } else if (z_hi != 0.0 && std::signbit(z_lo) != std::signbit(z_hi)) {
      out.push_back(refine(t_lo, t_hi, z_lo, c));
    }
    t_lo = t_hi;
    z_lo = z_hi;
  }
  // The final grid point belongs to no later interval.
  if (last == g.intervals && z_lo == 0.0 && t_lo > kFirstZeroLowerBound) out.push_back(t_lo);
  return out;
}

}  // namespace

ZeroCatalog find_zeros(const ScanConfig& config) { return find_zeros_parallel(config, 1); }

ZeroCatalog find_zeros_parallel(const ScanConfig& config, unsigned workers) {
  config.validate();
  const GridSpec grid = make_grid(config);
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::min<std::size_t>(
                                                 grid.intervals, 256)));

  std::vector<std::vector<double>> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  const auto chunk = [&](unsigned w) { return grid.intervals * w / workers; };
  const auto run = [&](unsigned w) {
    try {
      parts[w] = scan_intervals(grid, config, chunk(w), chunk(w + 1));
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<double> heights;
  for (auto& p : parts) heights.insert(heights.end(), p.begin(), p.end());
  return ZeroCatalog(std::move(heights), CatalogSource::computed, config.t_max);
}

RefinementCheck check_refinement_stability(const ScanConfig& config) {
  ScanConfig fine = config;
  fine.grid_step = config.grid_step / 2;
  fine.refine_tolerance = std::min(config.refine_tolerance, fine.grid_step / 2);
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  return {find_zeros_parallel(config, hw).size(), find_zeros_parallel(fine, hw).size()};
}

std::size_t exact_count(const ZeroCatalog& catalog, double E) {
  if (std::isnan(E)) throw DomainError("exact_count: E is NaN");
  if (E > catalog.max_height_scanned()) {
    throw OutOfRangeError("E = " + std::to_string(E) + " exceeds the scanned range (" +
                          std::to_string(catalog.max_height_scanned()) + ")");
  }
  const auto h = catalog.heights();
  return static_cast<std::size_t>(std::upper_bound(h.begin(), h.end(), E) - h.begin());
}

double s_function(const ZeroCatalog& catalog, double E) {
  if (!(E >= 10.0)) throw DomainError("s_function requires E >= 10");
  const auto n = static_cast<double>(exact_count(catalog, E));
  return n - 1.0 - theta_exact(E) / std::numbers::pi;
}

}  // namespace zkkr
