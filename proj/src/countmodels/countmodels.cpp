#include "zkkr/countmodels.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>
#include <thread>

#include "zkkr/error.hpp"
#include "zkkr/roots.hpp"
#include "zkkr/specfun.hpp"

namespace zkkr {

namespace {

using std::numbers::e;
using std::numbers::pi;

constexpr double kEstimateTolerance = 1e-9;
constexpr double kBracketOffset = 1e-6;

// Phase-carrying E-term of the kkr_gamma row: 2 Im ln Γ(1/2 + iE/2) or its
// asymptote E ln(E/2e).
double kkr_phase(const CountingModel& m, double E) {
  return m.uses_exact_gamma ? gamma_phase_ratio(E / 2, 0.5) : E * std::log(E / (2 * e));
}

void check_domain(const CountingModel& m, double E) {
  const double lo = domain_min(m);
  if (!(E > lo)) {
    throw DomainError(std::string(model_name(m.id)) + ": E = " + std::to_string(E) +
                      " is outside the monotone domain E > " + std::to_string(lo));
  }
}

}  // namespace

std::string_view model_name(ModelId id) {
  switch (id) {
    case ModelId::riemann_siegel_smooth: return "riemann_siegel_smooth";
    case ModelId::polya: return "polya";
    case ModelId::leclair_mussardo: return "leclair_mussardo";
    case ModelId::sierra: return "sierra";
    case ModelId::kkr_gamma: return "kkr_gamma";
  }
  return "unknown";
}

std::optional<ModelId> parse_model_id(std::string_view name) {
  for (ModelId id : kAllModels) {
    if (name == model_name(id)) return id;
  }
  if (name == "rs") return ModelId::riemann_siegel_smooth;
  if (name == "lm") return ModelId::leclair_mussardo;
  if (name == "kkr") return ModelId::kkr_gamma;
  return std::nullopt;
}

double default_theta(ModelId id) { return id == ModelId::kkr_gamma ? 1.5 * pi : 0.0; }

double literal_offset(ModelId id) { return id == ModelId::polya ? 0.5 : 0.0; }

double domain_min(const CountingModel& model) {
  switch (model.id) {
    case ModelId::riemann_siegel_smooth: return theta_minimum();
    case ModelId::kkr_gamma: return 2 * phase_monotone_cutoff();
    default: return 2 * pi;
  }
}

double smooth_count(const CountingModel& m, double E) {
  check_domain(m, E);
  const double th = m.theta_param;
  const double g = E * std::log(E / (2 * pi * e));
  switch (m.id) {
    case ModelId::riemann_siegel_smooth: return 1.0 + theta_exact(E) / pi;
    case ModelId::polya: return 0.875 + g / (2 * pi);
    case ModelId::leclair_mussardo: return th / pi - 0.5 + g / pi;
    case ModelId::sierra: return -th / (2 * pi) - 0.5 + g / (2 * pi);
    case ModelId::kkr_gamma: return (th + pi / 4 + kkr_phase(m, E)) / (2 * pi);
  }
  throw DomainError("unknown counting model");
}

double two_term_residual(const CountingModel& m, double N, double E) {
  check_domain(m, E);
  const double th = m.theta_param;
  const double g = E * std::log(E / (2 * pi * e));
  switch (m.id) {
    case ModelId::riemann_siegel_smooth: return -N + theta_exact(E) / pi + 1.0;
    case ModelId::polya: return 7 * pi / 8 - (N + 0.5) * pi + g / 2;
    case ModelId::leclair_mussardo: return th - (N + 0.5) * pi + g;
    case ModelId::sierra: return -th - 2 * pi * (N + 0.5) + g;
    case ModelId::kkr_gamma: return th + pi / 4 - 2 * pi * N + kkr_phase(m, E);
  }
  throw DomainError("unknown counting model");
}

double estimate_zero(const CountingModel& m, int n) {
  if (n < 1) throw DomainError("estimate_zero requires n >= 1");
  const double target = n - 0.5;
  const auto f = [&](double E) { return smooth_count(m, E); };
  const double lo = domain_min(m) + kBracketOffset;
  if (f(lo) > target) {
    throw DomainError(std::string(model_name(m.id)) + ": target count " +
                      std::to_string(target) + " lies below the model's range");
  }
  const roots::Bracket b = roots::bracket_increasing(f, lo, std::max(2 * lo, 16.0), target);
  return roots::bisect([&](double E) { return f(E) - target; }, b, kEstimateTolerance);
}

ComparisonReport compare_catalog(const CountingModel& model, const ZeroCatalog& catalog,
                                 int n_max, unsigned workers) {
  if (n_max < 1) throw DomainError("compare_catalog requires n_max >= 1");
  if (catalog.size() < static_cast<std::size_t>(n_max)) {
    throw OutOfRangeError("catalog holds " + std::to_string(catalog.size()) +
                          " zeros, fewer than n_max = " + std::to_string(n_max));
  }

  // NaN marks an unreachable target.
  std::vector<double> estimates(static_cast<std::size_t>(n_max));
  std::vector<std::exception_ptr> errors(workers = std::clamp(workers, 1u, 64u));
  const auto run = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < estimates.size(); i += workers) {
        const int n = static_cast<int>(i) + 1;
        const double lo = domain_min(model) + kBracketOffset;
        estimates[i] = smooth_count(model, lo) > n - 0.5 ? std::nan("") : estimate_zero(model, n);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  ComparisonReport report;
  double abs_sum = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const double est = estimates[static_cast<std::size_t>(n - 1)];
    if (std::isnan(est)) {
      report.unreachable.push_back(n);
      continue;
    }
    const double actual = catalog[static_cast<std::size_t>(n - 1)];
    report.entries.push_back({n, actual, est, est - actual});
    abs_sum += std::abs(est - actual);
  }
  const auto& ent = report.entries;
  if (!ent.empty()) report.mae = abs_sum / static_cast<double>(ent.size());
  if (ent.size() >= 2) {
    const auto gaps = static_cast<double>(ent.size() - 1);
    report.mean_spacing_actual = (ent.back().actual - ent.front().actual) / gaps;
    report.mean_spacing_estimate = (ent.back().estimate - ent.front().estimate) / gaps;
  }
  return report;
}

std::vector<RatioPoint> ratio_scan(std::span<const double> energies) {
  std::vector<RatioPoint> out;
  out.reserve(energies.size());
  for (const double E : energies) {
    if (!(E > 2 * pi * e) || !std::isfinite(E)) {
      throw DomainError("ratio_scan requires E > 2πe, got " + std::to_string(E));
    }
    out.push_back({E, std::log(E / (2 * pi * e)) / std::log(E / (2 * e))});
  }
  return out;
}

}  // namespace zkkr
