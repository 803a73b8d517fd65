#pragma once

// Husimi-type classical densities, expectation equality, informational
// completeness of operator families, and least-squares state reconstruction.

#include "qps/family.hpp"

#include <random>
#include <span>

namespace qps {

/// Throws InputError unless rho is Hermitian, PSD and unit-trace within 1e-9.
void validate_density(const CMatrix& rho);

struct ClassicalDensity {
  std::vector<double> values;
  const PhaseGrid* grid = nullptr;
};

/// rho_class(x_k) = Tr(rho T(x_k)) = <D eta, rho D eta>.
ClassicalDensity classical_density(const CMatrix& rho, const CoherentFamily& family);

struct ExpectationPair {
  double quantum = 0.0;    // Tr(rho A(f))
  double classical = 0.0;  // sum_k mu_k f_k rho_class_k
};

ExpectationPair expectation_pair(const CMatrix& rho, std::span<const double> f, const CoherentFamily& family);

/// Real coordinates of a Hermitian matrix: diagonal first, then for each i < j
/// (row-major) sqrt(2) Re, sqrt(2) Im. Tr(AB) = <vec A, vec B>.
RVector hermitian_vec(const CMatrix& a);
CMatrix hermitian_unvec(const RVector& x, int n);

struct CompletenessReport {
  int operator_count = 0;
  int gram_rank = 0;
  int required = 0;  // N^2
  bool complete = false;
  double smallest_kept_singular_value = 0.0;
  double largest_singular_value = 0.0;
  /// sigma_rank / max(sigma_{rank+1}, sigma_max * machine epsilon).
  double rank_gap_ratio = 0.0;
};

inline constexpr double kDefaultSvdCutoff = 1e-10;

/// Rank of the real vectorizations of an arbitrary Hermitian family.
CompletenessReport completeness_rank(std::span<const CMatrix> ops, double svd_cutoff = kDefaultSvdCutoff);

/// Rank of {T(x_k)} for the coherent family. Requires grid size >= N^2.
CompletenessReport completeness_rank(const CoherentFamily& family, double svd_cutoff = kDefaultSvdCutoff);

/// Spectral projectors of the (truncated) position operator.
std::vector<CMatrix> position_projectors(const FockContext& ctx);

struct Reconstruction {
  CMatrix rho;
  double residual = 0.0;  // |M vec(rho) - probabilities|_2
  bool residual_flagged = false;
  int rank = 0;
  double frobenius_norm = 0.0;  // |rho|_F
  double clipped_weight = 0.0;  // sum of negative eigenvalues removed
};

/// Least squares for Tr(rho T_k) = prob_k over Hermitian unit-trace rho, then
/// projection onto the PSD cone. Throws InputError when the family is not
/// informationally complete.
Reconstruction reconstruct_state(std::span<const double> probabilities, const CoherentFamily& family,
                                 double svd_cutoff = kDefaultSvdCutoff);

/// Random density matrix of the given rank (Haar-random eigenvectors,
/// Dirichlet-like weights).
CMatrix random_density(int n, int rank, std::mt19937_64& rng);

/// Haar-random unitary from the QR decomposition of a complex Gaussian matrix.
CMatrix random_unitary(int n, std::mt19937_64& rng);

}  // namespace qps
