#pragma once

// Kronig–Penney chain of repulsive delta scatterers. With α = √E and
// u = αa the KKR determinant is cot ϑ + sin u/(cos ka − cos u) where
// tan ϑ = −P/u, i.e. kp_det = −u/P + sin u/(cos ka − cos u).

#include <vector>

namespace zkkr {

struct KronigPenneyParams {
  double a = 1.0;
  double P = 0.0;  // dimensionless delta strength, P ≥ 0
  std::vector<double> k_grid;

  /// Throws DomainError unless a > 0, P ≥ 0 and every k ∈ [0, π/a].
  void validate() const;
};

/// Uniform grid of n ≥ 2 points on [0, π/a], both ends included.
std::vector<double> brillouin_grid(double a, std::size_t n);

/// KKR residual at energy E > 0. For P = 0 the limit form cos ka − cos u.
/// Throws DomainError within 1e-12 of a pole cos ka = cos u (P > 0).
double kp_det(double E, double k, const KronigPenneyParams& params);

struct BandPoint {
  double k;
  int band_index;  // 1-based
  double E;
};

struct BandStructure {
  std::vector<BandPoint> bands;  // ordered by k, then band_index
};

/// The lowest n_bands zeros of kp_det at each k of the grid. Between
/// consecutive poles u = ±ka + 2πj the determinant decreases strictly, so
/// band b is the unique zero between the (b−1)-th and b-th pole.
/// Throws DomainError for n_bands < 1 and ConvergenceError (naming k and
/// the band) if a root fails its dispersion check.
BandStructure kp_bands(const KronigPenneyParams& params, int n_bands);

/// Integrated density of states per cell from the determinant's phase
/// (Lloyd's formula). Writing D(u) = cos u + P sin u/u = cos Φ / cos Δ with
/// Δ = atan(−P/u) and Φ = u + Δ,
///   N(E) = j + arccos((−1)^j cos Φ / cos Δ)/π,   j = floor(Φ/π),
/// with the argument clamped to [−1, 1] inside gaps.
/// Throws DomainError for E ≤ 0 or within 1e-12 of a band edge.
double lloyd_integrated_dos(const KronigPenneyParams& params, double E);

/// Decomposition of lloyd_integrated_dos: the free count a√E/π, the Krein
/// phase Δ/π, and the multiple-scattering remainder.
struct LloydTerms {
  double free_count;
  double krein_phase;
  double multiple_scattering;
  double total;
};
LloydTerms lloyd_terms(const KronigPenneyParams& params, double E);

/// Half-trace of the one-cell transfer matrix for (ψ, ψ′): a delta kick of
/// strength 2P/a followed by free propagation over a. Equals
/// cos u + P sin u/u with u = αa.
double transfer_half_trace(double u, double a, double P);

/// Band energy from the transfer-matrix dispersion D(u) = cos ka, solved
/// on [(b−1)π, bπ] where (−1)^{b−1}(D − cos ka) changes sign exactly once
/// from non-negative to non-positive (closed form for P = 0). Serves as the
/// oracle for kp_bands.
double transfer_band_energy(double k, int band, const KronigPenneyParams& params);

/// Band counting: Σ_b fraction of k-grid points with E_b(k) ≤ E.
double band_counting_dos(const BandStructure& bands, double E);

}  // namespace zkkr
