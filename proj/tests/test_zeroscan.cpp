#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <unistd.h>
#include <numbers>
#include <random>
#include <sstream>

#include <doctest.h>

#include "oracle_values.hpp"
#include "zkkr/error.hpp"
#include "zkkr/specfun.hpp"
#include "zkkr/zeroscan.hpp"

using namespace zkkr;
namespace fs = std::filesystem;

namespace {

const ZeroCatalog& catalog_to(double t_max) {
  static std::map<double, ZeroCatalog> cache;
  auto it = cache.find(t_max);
  if (it == cache.end()) {
    ScanConfig c;
    c.t_max = t_max;
    it = cache.emplace(t_max, find_zeros_parallel(c, 4)).first;
  }
  return it->second;
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("zkkr_test_" + std::to_string(::getpid()) + "_" + name);
}

ZeroCatalog parse(const std::string& text) {
  std::istringstream in(text);
  return parse_catalog(in);
}

}  // namespace

TEST_CASE("zeros up to 100") {
  const auto& cat = catalog_to(100.0);
  REQUIRE(cat.size() == oracle::kZeroCountTo100);
  CHECK(cat.source() == CatalogSource::computed);
  CHECK(cat.max_height_scanned() == 100.0);
  CHECK(std::abs(cat[0] - 14.134725) < 1e-6);
  for (std::size_t i = 0; i < cat.size(); ++i) {
    CAPTURE(i);
    const double tol = cat[i] <= kEulerMaclaurinMaxHeight ? 1e-8 : 1e-5;
    CHECK(std::abs(cat[i] - oracle::kFirstZeros[i]) < tol);
    CHECK(std::abs(hardy_z(cat[i])) < 1e-4);
  }
}

TEST_CASE("zeros up to 50 and below the first zero") {
  ScanConfig c;
  c.t_max = 50.0;
  const ZeroCatalog cat = find_zeros(c);
  REQUIRE(cat.size() == 10);
  CHECK(std::abs(cat[9] - 49.7738) < 1e-4);

  for (double step : {0.05, 0.5, 2.0}) {
    ScanConfig low;
    low.t_max = 13.0;
    low.grid_step = step;
    low.refine_tolerance = 1e-9;
    CHECK(find_zeros(low).empty());
  }
}

TEST_CASE("parallel scan is identical to the serial scan") {
  ScanConfig c;
  c.t_min = 3.7;
  c.t_max = 160.0;
  const ZeroCatalog serial = find_zeros(c);
  for (unsigned workers : {2u, 3u, 7u, 16u}) {
    const ZeroCatalog par = find_zeros_parallel(c, workers);
    REQUIRE(par.size() == serial.size());
    CHECK(std::equal(par.heights().begin(), par.heights().end(), serial.heights().begin()));
  }
}

TEST_CASE("scan configuration validation") {
  ScanConfig c;
  c.t_min = 10.0;
  c.t_max = 5.0;
  CHECK_THROWS_AS(find_zeros(c), DomainError);
  c = {};
  c.grid_step = 0.0;
  CHECK_THROWS_AS(find_zeros(c), DomainError);
  c = {};
  c.refine_tolerance = 0.1;
  CHECK_THROWS_AS(find_zeros(c), DomainError);
  c = {};
  c.max_refinements = 0;
  CHECK_THROWS_AS(find_zeros(c), DomainError);
  c = {};
  c.t_max = 2e4;
  CHECK_THROWS_AS(find_zeros(c), RegimeError);
  c = {};
  c.t_max = 30.0;
  c.max_refinements = 3;
  CHECK_THROWS_AS(find_zeros(c), ConvergenceError);
}

TEST_CASE("scan to 1000: count, refinement stability and gaps") {
  const auto& cat = catalog_to(1000.0);
  CHECK(cat.size() == oracle::kZeroCountTo1000);

  ScanConfig c;
  c.t_max = 1000.0;
  const RefinementCheck check = check_refinement_stability(c);
  CHECK(check.count == oracle::kZeroCountTo1000);
  CHECK(check.count_half_step == oracle::kZeroCountTo1000);
  CHECK(check.stable());

  double min_gap = INFINITY, max_gap = 0.0;
  for (std::size_t i = 1; i < cat.size(); ++i) {
    const double gap = cat[i] - cat[i - 1];
    CHECK(gap > 0.3);
    CHECK(gap < 10.0);
    min_gap = std::min(min_gap, gap);
    max_gap = std::max(max_gap, gap);
  }
  CHECK(min_gap == doctest::Approx(oracle::kMinGapTo1000).epsilon(1e-4));
  CHECK(max_gap == doctest::Approx(oracle::kMaxGapTo1000).epsilon(1e-4));
}

TEST_CASE("exact_count") {
  const auto& cat = catalog_to(100.0);
  CHECK(exact_count(cat, 100.0) == 29);
  CHECK(exact_count(cat, 10.0) == 0);
  CHECK(exact_count(cat, 14.2) == 1);
  CHECK(exact_count(cat, 21.0) == 1);
  CHECK(exact_count(cat, 21.1) == 2);
  CHECK(exact_count(cat, -5.0) == 0);
  CHECK_THROWS_AS(exact_count(cat, 100.5), OutOfRangeError);

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> dist(0.0, 100.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> es(40);
    for (auto& e : es) e = dist(rng);
    std::sort(es.begin(), es.end());
    std::size_t prev = 0;
    for (double e : es) {
      const std::size_t n = exact_count(cat, e);
      CHECK(n >= prev);
      prev = n;
    }
  }
}

TEST_CASE("s_function") {
  const auto& cat = catalog_to(100.0);
  CHECK(std::abs(s_function(cat, 50.0)) < 1.5);
  CHECK(s_function(cat, 10.0) == -1.0 - theta_exact(10.0) / std::numbers::pi);
  for (std::size_t n = 1; n <= 28; ++n) {
    const double mid = 0.5 * (cat[n - 1] + cat[n]);
    CAPTURE(n);
    CHECK(std::abs(s_function(cat, mid)) < 1.5);
  }
  CHECK_THROWS_AS(s_function(cat, 9.0), DomainError);
  CHECK_THROWS_AS(s_function(cat, 101.0), OutOfRangeError);
}

TEST_CASE("count/fluctuation identity and S on a grid to 1000") {
  const auto& cat = catalog_to(1000.0);
  double worst = 0.0;
  for (double e = 20.0; e <= 1000.0; e += 0.5) {
    const double s = s_function(cat, e);
    const double rebuilt = 1.0 + theta_exact(e) / std::numbers::pi + s;
    REQUIRE(static_cast<std::size_t>(std::lround(rebuilt)) == exact_count(cat, e));
    worst = std::max(worst, std::abs(s));
  }
  CHECK(worst == doctest::Approx(oracle::kMaxAbsSOnHalfGrid).epsilon(1e-4));
}

TEST_CASE("catalog invariants") {
  CHECK_THROWS_AS(ZeroCatalog({12.0, 20.0}, CatalogSource::computed, 30.0), DomainError);
  CHECK_THROWS_AS(ZeroCatalog({20.0, 20.0}, CatalogSource::computed, 30.0), DomainError);
  CHECK_THROWS_AS(ZeroCatalog({20.0, 25.0}, CatalogSource::computed, 24.0), DomainError);
  CHECK_NOTHROW(ZeroCatalog({}, CatalogSource::computed, 5.0));
}

TEST_CASE("catalog parsing") {
  const ZeroCatalog three = parse("14.134725\n21.022040\n25.010858\n");
  CHECK(three.size() == 3);
  CHECK(three.source() == CatalogSource::loaded);
  CHECK(three.max_height_scanned() == 25.010858);

  const ZeroCatalog commented = parse("# zeros\n\n  14.5 \n# max_height_scanned = 40\n30\n");
  CHECK(commented.size() == 2);
  CHECK(commented.max_height_scanned() == 40.0);
  CHECK(exact_count(commented, 35.0) == 2);

  const ZeroCatalog csv = parse("# max_height_scanned=50.000000000\nn,t\n1,14.1\n2,21.0\n");
  CHECK(csv.size() == 2);
  CHECK(csv.max_height_scanned() == 50.0);

  CHECK(parse("").empty());

  try {
    parse("14.1\n21.0\n20.0\n");
    FAIL("expected an ordering error");
  } catch (const FormatError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    parse("14.1\n# fine\nabc\n");
    FAIL("expected a parse error");
  } catch (const FormatError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse("14.1\n14.1\n"), FormatError);
  CHECK_THROWS_AS(parse("12.5\n"), FormatError);
  CHECK_THROWS_AS(parse("14.1x\n"), FormatError);
  CHECK_THROWS_AS(parse("nan\n"), FormatError);
  CHECK_THROWS_AS(parse("1,14.1\nn,t\n"), FormatError);
  CHECK_THROWS_AS(parse("# max_height_scanned = 20\n30\n"), FormatError);
  CHECK_THROWS_AS(load_catalog("/nonexistent/zkkr/zeros.txt"), IoError);
}

TEST_CASE("save and load round trip") {
  const auto& cat = catalog_to(100.0);
  const fs::path path = temp_file("roundtrip.txt");
  save_catalog(cat, path);
  const ZeroCatalog back = load_catalog(path);
  fs::remove(path);
  REQUIRE(back.size() == cat.size());
  CHECK(back.max_height_scanned() == cat.max_height_scanned());
  for (std::size_t i = 0; i < cat.size(); ++i) CHECK(std::abs(back[i] - cat[i]) <= 1e-12);
  CHECK_THROWS_AS(save_catalog(cat, "/nonexistent/zkkr/out.txt"), IoError);
}

TEST_CASE("CSV export") {
  const ZeroCatalog cat({14.134725141734694, 21.022039638771555}, CatalogSource::computed, 22.5);
  std::ostringstream out;
  export_csv(cat, out);
  CHECK(out.str() ==
        "# max_height_scanned=22.500000000\nn,t\n1,14.134725142\n2,21.022039639\n");
  const ZeroCatalog back = parse(out.str());
  CHECK(back.size() == 2);
  CHECK(back.max_height_scanned() == 22.5);
  CHECK(std::abs(back[1] - cat[1]) < 1e-9);
}
