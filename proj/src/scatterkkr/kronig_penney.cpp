#include "zkkr/kronig_penney.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "zkkr/error.hpp"

namespace zkkr {

namespace {

using std::numbers::pi;

constexpr double kPoleGuard = 1e-12;
constexpr double kEdgeGuard = 1e-12;
constexpr double kDispersionCheck = 1e-8;

void check_lattice(double a, double P) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("lattice spacing a must be positive");
  if (!(P >= 0.0) || !std::isfinite(P)) {
    throw DomainError("delta strength P must be finite and non-negative");
  }
}

void check_k(double k, double a) {
  if (!(k >= 0.0 && k <= pi / a * (1 + 1e-12))) {
    throw DomainError(fmt::format("k = {} lies outside the zone [0, pi/a]", k));
  }
}

// Determinant without the pole guard, as a function of u = αa.
double det_u(double u, double cos_ka, double P) {
  const double d = cos_ka - std::cos(u);
  if (P == 0.0) return d;
  return -u / P + std::sin(u) / d;
}

// Poles of the determinant in u: ka, 2π − ka, 2π + ka, 4π − ka, ...
double pole(int i, double ka) {
  if (i == 0) return ka;
  const int j = (i + 1) / 2;
  return i % 2 == 1 ? 2 * pi * j - ka : 2 * pi * j + ka;
}

double band_u(double ka, int band, double P) {
  double lo = pole(band - 1, ka);
  double hi = pole(band, ka);
  if (P == 0.0 || !(hi > lo)) return lo;
  const double c = std::cos(ka);
  // The determinant falls strictly from +∞ to −∞ between the poles.
  for (;;) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return mid;
    const double v = det_u(mid, c, P);
    const bool root_right = std::isfinite(v) ? v > 0.0 : (mid - lo) < (hi - mid);
    (root_right ? lo : hi) = mid;
  }
}

}  // namespace

void KronigPenneyParams::validate() const {
  check_lattice(a, P);
  for (const double k : k_grid) check_k(k, a);
}

std::vector<double> brillouin_grid(double a, std::size_t n) {
  if (n < 2) throw DomainError("brillouin_grid needs at least 2 points");
  check_lattice(a, 0.0);
  std::vector<double> k(n);
  for (std::size_t i = 0; i < n; ++i) {
    k[i] = pi / a * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return k;
}

double kp_det(double E, double k, const KronigPenneyParams& params) {
  check_lattice(params.a, params.P);
  check_k(k, params.a);
  if (!(E > 0.0) || !std::isfinite(E)) throw DomainError("kp_det requires E > 0");
  const double u = std::sqrt(E) * params.a;
  const double c = std::cos(k * params.a);
  if (params.P != 0.0 && std::abs(c - std::cos(u)) < kPoleGuard) {
    throw DomainError(fmt::format("kp_det: E = {} is within 1e-12 of a pole at k = {}", E, k));
  }
  return det_u(u, c, params.P);
}

BandStructure kp_bands(const KronigPenneyParams& params, int n_bands) {
  params.validate();
  if (n_bands < 1) throw DomainError("kp_bands requires n_bands >= 1");
  BandStructure out;
  out.bands.reserve(params.k_grid.size() * static_cast<std::size_t>(n_bands));
  for (const double k : params.k_grid) {
    const double ka = std::min(k * params.a, pi);
    for (int b = 1; b <= n_bands; ++b) {
      const double u = band_u(ka, b, params.P);
      const double disp = std::cos(u) + (params.P == 0.0 ? 0.0 : params.P * std::sin(u) / u);
      if (!(std::abs(disp - std::cos(ka)) <= kDispersionCheck)) {
        throw ConvergenceError(fmt::format("kp_bands: root missed at k = {}, band {}", k, b));
      }
      const double alpha = u / params.a;
      out.bands.push_back({k, b, alpha * alpha});
    }
  }
  return out;
}

LloydTerms lloyd_terms(const KronigPenneyParams& params, double E) {
  check_lattice(params.a, params.P);
  if (!(E > 0.0) || !std::isfinite(E)) throw DomainError("lloyd_integrated_dos requires E > 0");
  const double u = std::sqrt(E) * params.a;
  const double free = u / pi;
  if (params.P == 0.0) return {free, 0.0, 0.0, free};

  const double delta = std::atan(-params.P / u);
  const double big_phi = u + delta;
  const double j = std::floor(big_phi / pi);
  const double ratio = std::cos(big_phi - j * pi) / std::cos(delta);
  if (std::abs(std::abs(ratio) - 1.0) < kEdgeGuard) {
    throw DomainError(fmt::format("lloyd_integrated_dos: E = {} is at a band edge", E));
  }
  const double total = j + std::acos(std::clamp(ratio, -1.0, 1.0)) / pi;
  return {free, delta / pi, total - free - delta / pi, total};
}

double lloyd_integrated_dos(const KronigPenneyParams& params, double E) {
  return lloyd_terms(params, E).total;
}

double transfer_half_trace(double u, double a, double P) {
  const double alpha = u / a;
  const double sin_over_alpha = u == 0.0 ? a : std::sin(u) / alpha;
  // [[cos u, sin u/α], [−α sin u, cos u]] · [[1, 0], [2P/a, 1]]
  const double m00 = std::cos(u) + sin_over_alpha * 2 * P / a;
  const double m11 = std::cos(u);
  return 0.5 * (m00 + m11);
}

double transfer_band_energy(double k, int band, const KronigPenneyParams& params) {
  check_lattice(params.a, params.P);
  check_k(k, params.a);
  if (band < 1) throw DomainError("band index must be >= 1");
  const double ka = k * params.a;
  if (params.P == 0.0) {
    // Free propagation: cos u = cos ka in closed form.
    const double u = band % 2 == 1 ? (band - 1) * pi + ka : band * pi - ka;
    const double alpha = u / params.a;
    return alpha * alpha;
  }
  const double sign = band % 2 == 1 ? 1.0 : -1.0;
  // D(u) − cos ka with the cosine difference in product form, so that the
  // double zeros of the free case at the zone edges keep their sign.
  const auto excess = [&](double u) {
    const double kick = transfer_half_trace(u, params.a, params.P) - std::cos(u);
    return -2 * std::sin(0.5 * (u + ka)) * std::sin(0.5 * (u - ka)) + kick;
  };
  double lo = (band - 1) * pi, hi = band * pi;
  for (;;) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (sign * excess(mid) > 0.0 ? lo : hi) = mid;
  }
  const double alpha = 0.5 * (lo + hi) / params.a;
  return alpha * alpha;
}

double band_counting_dos(const BandStructure& bands, double E) {
  std::map<int, std::pair<std::size_t, std::size_t>> per_band;  // below, total
  for (const auto& p : bands.bands) {
    auto& [below, total] = per_band[p.band_index];
    ++total;
    if (p.E <= E) ++below;
  }
  double n = 0.0;
  for (const auto& [b, counts] : per_band) {
    n += static_cast<double>(counts.first) / static_cast<double>(counts.second);
  }
  return n;
}

}  // namespace zkkr
