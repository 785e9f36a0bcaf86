#pragma once

// Zeros of ζ on the critical line as sign changes of Hardy's Z, the exact
// counting function N(E) over a zero catalog, and S(E) = N(E) − 1 − θ(E)/π.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace zkkr {

/// Every non-trivial zero lies above this height.
inline constexpr double kFirstZeroLowerBound = 13.0;

enum class CatalogSource { computed, loaded };

struct ScanConfig {
  double t_min = 0.0;
  double t_max = 100.0;
  double grid_step = 0.05;
  double refine_tolerance = 1e-9;
  int max_refinements = 200;

  /// Throws DomainError on inconsistent fields, RegimeError for t_max > 1e4.
  void validate() const;
};

/// Ordered zero heights. Immutable after construction.
class ZeroCatalog {
 public:
  ZeroCatalog() = default;
  /// Throws DomainError unless heights are strictly increasing, all above
  /// 13, and not beyond max_height_scanned.
  ZeroCatalog(std::vector<double> heights, CatalogSource source, double max_height_scanned);

  std::span<const double> heights() const noexcept { return heights_; }
  std::size_t size() const noexcept { return heights_.size(); }
  bool empty() const noexcept { return heights_.empty(); }
  double operator[](std::size_t i) const { return heights_.at(i); }
  CatalogSource source() const noexcept { return source_; }
  double max_height_scanned() const noexcept { return max_height_scanned_; }

 private:
  std::vector<double> heights_;
  CatalogSource source_ = CatalogSource::computed;
  double max_height_scanned_ = 0.0;
};

/// Grid scan of Z on t_min + i·grid_step followed by bisection of every
/// sign change. Throws ConvergenceError if a bracket does not shrink to
/// refine_tolerance within max_refinements halvings.
ZeroCatalog find_zeros(const ScanConfig& config);

/// Same scan split over `workers` threads by contiguous grid-index ranges.
/// The result is identical to find_zeros bit for bit.
ZeroCatalog find_zeros_parallel(const ScanConfig& config, unsigned workers);

struct RefinementCheck {
  std::size_t count;
  std::size_t count_half_step;
  bool stable() const noexcept { return count == count_half_step; }
};

/// Re-runs the scan with grid_step / 2 and compares the counts.
RefinementCheck check_refinement_stability(const ScanConfig& config);

/// Number of catalog heights ≤ E. Throws OutOfRangeError when E exceeds
/// the catalog's scanned range (the count would only be a lower bound).
std::size_t exact_count(const ZeroCatalog& catalog, double E);

/// S(E) = N(E) − 1 − θ(E)/π for E ≥ 10.
double s_function(const ZeroCatalog& catalog, double E);

/// Plain-text zero table: one decimal height per line, '#' comments.
/// A `# max_height_scanned = X` comment restores the scanned range;
/// without it the range ends at the last height. Lines of the form
/// `n,t` (the CSV export) are accepted as well.
/// Throws IoError, or FormatError naming the offending line.
ZeroCatalog load_catalog(const std::filesystem::path& path);
ZeroCatalog parse_catalog(std::istream& in);

/// Writes heights with 17 significant digits plus the range comment.
void save_catalog(const ZeroCatalog& catalog, const std::filesystem::path& path);

/// CSV export: a `# max_height_scanned` comment, header `n,t`, heights to
/// 9 decimal places.
void export_csv(const ZeroCatalog& catalog, std::ostream& out);

}  // namespace zkkr
