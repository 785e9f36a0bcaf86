#pragma once

// Smooth zero-counting models written in the two-term form f(ϑ) + G(E) = 0,
// zero estimates from their roots, and comparison with an exact catalog.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "zkkr/zeroscan.hpp"

namespace zkkr {

enum class ModelId { riemann_siegel_smooth, polya, leclair_mussardo, sierra, kkr_gamma };

inline constexpr ModelId kAllModels[] = {ModelId::riemann_siegel_smooth, ModelId::polya,
                                         ModelId::leclair_mussardo, ModelId::sierra,
                                         ModelId::kkr_gamma};

std::string_view model_name(ModelId id);
/// Accepts the enum spellings; also "rs" for riemann_siegel_smooth, "lm"
/// for leclair_mussardo and "kkr" for kkr_gamma.
std::optional<ModelId> parse_model_id(std::string_view name);

/// 0 for every row except kkr_gamma (3π/2). Polya has no free phase.
double default_theta(ModelId id);

struct CountingModel {
  ModelId id = ModelId::riemann_siegel_smooth;
  double theta_param = 0.0;
  /// kkr_gamma only: exact gamma-ratio phase, or its logarithmic asymptote.
  bool uses_exact_gamma = true;

  static CountingModel make(ModelId id) { return {id, default_theta(id), true}; }
};

/// Lower end of the open interval on which smooth_count is strictly
/// increasing: 2π for the logarithmic rows, theta_minimum() (≈ 6.2898) for
/// riemann_siegel_smooth, and 2E* for kkr_gamma where E* is
/// phase_monotone_cutoff().
double domain_min(const CountingModel& model);

/// Smooth count ⟨N⟩(E), normalized so that every row shares the 7/8 constant
/// of 1 + θ/π at its default phase. Throws DomainError for E ≤ domain_min.
///   riemann_siegel_smooth  1 + θ(E)/π
///   polya                  7/8 + (E/2π) ln(E/2πe)
///   leclair_mussardo       ϑ/π − 1/2 + (E/π) ln(E/2πe)
///   sierra                 −ϑ/2π − 1/2 + (E/2π) ln(E/2πe)
///   kkr_gamma              (ϑ + π/4 + 2 Im ln Γ(1/2 + iE/2)) / 2π
double smooth_count(const CountingModel& model, double E);

/// The row's literal equation f(ϑ) + G(E) evaluated at a given N.
///   riemann_siegel_smooth  −N + (θ(E)/π + 1)
///   polya                  7π/8 − (N + 1/2)π + (E/2) ln(E/2πe)
///   leclair_mussardo       ϑ − (N + 1/2)π + E ln(E/2πe)
///   sierra                 −ϑ − 2π(N + 1/2) + E ln(E/2πe)
///   kkr_gamma              ϑ + π/4 − 2πN + 2 Im ln Γ(1/2 + iE/2)
double two_term_residual(const CountingModel& model, double N, double E);

/// N solving the literal equation equals smooth_count − literal_offset:
/// 1/2 for polya, 0 otherwise.
double literal_offset(ModelId id);

/// Root of smooth_count(E) = n − 1/2 above domain_min, bisected to 1e-9.
/// Throws DomainError when n < 1 or the target lies below the model's range.
double estimate_zero(const CountingModel& model, int n);

struct ComparisonEntry {
  int n;
  double actual;
  double estimate;
  double error;  // estimate − actual
};

struct ComparisonReport {
  std::vector<ComparisonEntry> entries;
  /// n whose target n − 1/2 lies below the model's range (no estimate).
  std::vector<int> unreachable;
  double mae = 0.0;
  double mean_spacing_actual = 0.0;
  double mean_spacing_estimate = 0.0;
};

/// Estimates for n = 1..n_max against the catalog, computed over `workers`
/// threads with ordered output. Throws OutOfRangeError if the catalog holds
/// fewer than n_max zeros and DomainError for n_max < 1.
ComparisonReport compare_catalog(const CountingModel& model, const ZeroCatalog& catalog,
                                 int n_max, unsigned workers = 1);

struct RatioPoint {
  double E;
  double ratio;
};

/// ln(E/2πe) / ln(E/2e), the ratio of the polya and kkr_gamma leading
/// terms. Throws DomainError unless every E > 2πe.
std::vector<RatioPoint> ratio_scan(std::span<const double> energies);

}  // namespace zkkr
