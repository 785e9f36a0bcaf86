#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "kp_transfer_oracle.hpp"
#include "zkkr/error.hpp"
#include "zkkr/kronig_penney.hpp"

using namespace zkkr;
using std::numbers::pi;

namespace {

KronigPenneyParams params(double P, std::size_t nk = 101, double a = 1.0) {
  return {a, P, brillouin_grid(a, nk)};
}

double band_energy(const BandStructure& bs, double k, int b) {
  for (const auto& p : bs.bands) {
    if (p.k == k && p.band_index == b) return p.E;
  }
  return NAN;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS((KronigPenneyParams{0.0, 1.0, {}}.validate()), DomainError);
  CHECK_THROWS_AS((KronigPenneyParams{1.0, -1.0, {}}.validate()), DomainError);
  CHECK_THROWS_AS((KronigPenneyParams{1.0, 1.0, {3.5}}.validate()), DomainError);
  CHECK_THROWS_AS((KronigPenneyParams{1.0, 1.0, {-0.1}}.validate()), DomainError);
  CHECK_NOTHROW((KronigPenneyParams{2.0, 1.0, {pi / 2}}.validate()));
  const auto grid = brillouin_grid(2.0, 5);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == doctest::Approx(pi / 2));
  CHECK_THROWS_AS(brillouin_grid(1.0, 1), DomainError);
}

TEST_CASE("kp_det values and poles") {
  const auto p3 = params(3.0);
  const double E = 2.0, k = 0.4;
  const double u = std::sqrt(E);
  CHECK(kp_det(E, k, p3) == doctest::Approx(-u / 3.0 + std::sin(u) / (std::cos(k) - std::cos(u))));
  CHECK(kp_det(E, k, params(0.0)) == doctest::Approx(std::cos(k) - std::cos(u)));
  CHECK_THROWS_AS(kp_det(0.16, 0.4, p3), DomainError);  // u = ka
  CHECK_THROWS_AS(kp_det(0.0, 0.4, p3), DomainError);
  CHECK_THROWS_AS(kp_det(1.0, 4.0, p3), DomainError);
  CHECK_NOTHROW(kp_det(0.16, 0.4, params(0.0)));
}

TEST_CASE("kp_det is decreasing between poles") {
  const auto p = params(3.0);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> kd(0.0, pi);
  for (int trial = 0; trial < 50; ++trial) {
    const double k = kd(rng);
    double prev = INFINITY;
    for (double u = 0.05; u < 12.0; u += 0.05) {
      double cur;
      try {
        cur = kp_det(u * u, k, p);
      } catch (const DomainError&) {
        prev = INFINITY;
        continue;
      }
      if (std::isfinite(prev) && cur > prev) {
        // Only a pole u = ±k + 2πj between the samples can make the value jump up.
        bool pole_between = false;
        for (int j = 0; j <= 2; ++j) {
          for (double pole : {2 * pi * j - k, 2 * pi * j + k}) {
            pole_between = pole_between || (pole > u - 0.05 && pole < u);
          }
        }
        CHECK(pole_between);
      }
      prev = cur;
    }
  }
}

TEST_CASE("free limit") {
  const auto p0 = params(0.0, 41);
  const BandStructure bs = kp_bands(p0, 4);
  for (const auto& pt : bs.bands) {
    // Folded free dispersion: αa = ka, 2π − ka, 2π + ka, 4π − ka.
    const int j = pt.band_index / 2;
    const double u = pt.band_index % 2 == 1 ? 2 * pi * j + pt.k : 2 * pi * j - pt.k;
    CHECK(pt.E == doctest::Approx(u * u).epsilon(1e-15));
  }
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> ed(0.01, 200.0);
  for (int i = 0; i < 50; ++i) {
    const double E = ed(rng);
    CHECK(lloyd_integrated_dos(p0, E) == std::sqrt(E) / pi);
  }
}

TEST_CASE("bands agree with the transfer-matrix oracle") {
  for (double P : {0.5, 3.0, 10.0}) {
    for (double a : {1.0, 2.5}) {
      const auto p = params(P, 101, a);
      const BandStructure bs = kp_bands(p, 3);
      REQUIRE(bs.bands.size() == 303);
      double worst = 0.0;
      for (const auto& pt : bs.bands) {
        worst = std::max(worst, std::abs(pt.E - oracle::transfer_band_energy(pt.k, pt.band_index, a, P)));
      }
      CAPTURE(P);
      CAPTURE(a);
      CHECK(worst < 1e-10);
    }
  }
}

TEST_CASE("band ordering and zone-edge values") {
  const auto p = params(3.0);
  const BandStructure bs = kp_bands(p, 5);
  for (std::size_t i = 1; i < bs.bands.size(); ++i) {
    const auto& prev = bs.bands[i - 1];
    const auto& cur = bs.bands[i];
    if (cur.k == prev.k) {
      CHECK(cur.band_index == prev.band_index + 1);
      CHECK(cur.E > prev.E);
    } else {
      CHECK(cur.k > prev.k);
      CHECK(cur.band_index == 1);
    }
  }
  const double e0 = band_energy(bs, 0.0, 1);
  CHECK(std::abs(e0 - oracle::transfer_band_energy(0.0, 1, 1.0, 3.0)) < 1e-10);
  const double u0 = std::sqrt(e0);
  CHECK(std::abs(std::cos(u0) + 3.0 * std::sin(u0) / u0 - 1.0) < 1e-12);
  // Band 1 tops out at the free value αa = π at k = π/a; band 2 starts above it.
  const double edge = band_energy(bs, pi, 1);
  CHECK(edge == doctest::Approx(pi * pi).epsilon(1e-15));
  CHECK(std::abs(edge - oracle::transfer_band_energy(pi, 1, 1.0, 3.0)) < 1e-10);
  CHECK(band_energy(bs, pi, 2) > edge);
  CHECK(band_energy(bs, 0.0, 2) == doctest::Approx(4 * pi * pi).epsilon(1e-15));
  CHECK_THROWS_AS(kp_bands(p, 0), DomainError);
}

TEST_CASE("gaps open and grow with P") {
  const auto gaps = [](double P) {
    const BandStructure bs = kp_bands(params(P, 3), 4);
    std::vector<double> out;
    for (int b = 1; b < 4; ++b) {
      double top = -INFINITY, bottom = INFINITY;
      for (const auto& pt : bs.bands) {
        if (pt.band_index == b) top = std::max(top, pt.E);
        if (pt.band_index == b + 1) bottom = std::min(bottom, pt.E);
      }
      out.push_back(bottom - top);
    }
    return out;
  };
  const auto g3 = gaps(3.0), g6 = gaps(6.0);
  // Gap 1 sits at k = π/a: compare with the oracle edges there.
  const double oracle_gap =
      oracle::transfer_band_energy(pi, 2, 1.0, 3.0) - oracle::transfer_band_energy(pi, 1, 1.0, 3.0);
  CHECK(g3[0] > 0.0);
  CHECK(std::abs(g3[0] - oracle_gap) < 1e-10);
  for (std::size_t i = 0; i < g3.size(); ++i) {
    CHECK(g3[i] > 0.0);
    CHECK(g6[i] > g3[i]);
  }
}

TEST_CASE("Lloyd formula against band counting") {
  for (double P : {0.5, 3.0, 10.0}) {
    const auto p = params(P, 2001);
    const BandStructure bs = kp_bands(p, 8);
    const double tol = 2.0 / static_cast<double>(p.k_grid.size());
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> ed(0.05, 250.0);
    int checked = 0;
    while (checked < 20) {
      const double E = ed(rng);
      double lloyd;
      try {
        lloyd = lloyd_integrated_dos(p, E);
      } catch (const DomainError&) {
        continue;
      }
      CAPTURE(P);
      CAPTURE(E);
      CHECK(std::abs(lloyd - band_counting_dos(bs, E)) <= tol);
      ++checked;
    }
  }
}

TEST_CASE("Lloyd formula in gaps and its decomposition") {
  const auto p = params(3.0);
  const double top1 = oracle::transfer_band_energy(pi, 1, 1.0, 3.0);
  const double bottom2 = oracle::transfer_band_energy(pi, 2, 1.0, 3.0);
  const double mid = 0.5 * (top1 + bottom2);
  CHECK(std::abs(lloyd_integrated_dos(p, mid) - 1.0) < 1e-6);
  const double top2 = oracle::transfer_band_energy(0.0, 2, 1.0, 3.0);
  const double bottom3 = oracle::transfer_band_energy(0.0, 3, 1.0, 3.0);
  CHECK(std::abs(lloyd_integrated_dos(p, 0.5 * (top2 + bottom3)) - 2.0) < 1e-6);

  const LloydTerms t = lloyd_terms(p, 20.0);
  CHECK(t.free_count == doctest::Approx(std::sqrt(20.0) / pi));
  CHECK(t.krein_phase == doctest::Approx(std::atan(-3.0 / std::sqrt(20.0)) / pi));
  CHECK(t.total == doctest::Approx(t.free_count + t.krein_phase + t.multiple_scattering));
  CHECK(t.total == lloyd_integrated_dos(p, 20.0));

  // Monotone in E.
  double prev = 0.0;
  for (double E = 0.05; E < 150.0; E += 0.05) {
    const double n = lloyd_integrated_dos(p, E);
    CHECK(n >= prev - 1e-12);
    prev = n;
  }
  CHECK_THROWS_AS(lloyd_integrated_dos(p, 0.0), DomainError);
  CHECK_THROWS_AS(lloyd_integrated_dos(p, pi * pi), DomainError);  // band edge
}

TEST_CASE("library transfer-matrix solver against the test oracle") {
  for (double P : {0.0, 0.5, 3.0, 10.0}) {
    const auto p = params(P, 33);
    for (double k : p.k_grid) {
      for (int b = 1; b <= 4; ++b) {
        const double lib = transfer_band_energy(k, b, p);
        if (P == 0.0) {
          const int j = b / 2;
          const double u = b % 2 == 1 ? 2 * pi * j + k : 2 * pi * j - k;
          CHECK(std::abs(lib - u * u) < 1e-12 * std::max(1.0, u * u));
        } else {
          CHECK(std::abs(lib - oracle::transfer_band_energy(k, b, 1.0, P)) < 1e-10);
        }
      }
    }
  }
  CHECK(transfer_half_trace(1.3, 1.0, 3.0) == doctest::Approx(oracle::half_trace(1.3, 1.0, 3.0)));
  CHECK(transfer_half_trace(0.0, 2.0, 3.0) == 4.0);
}
