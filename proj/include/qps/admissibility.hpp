#pragma once

#include "qps/family.hpp"

#include <cstdint>

namespace qps {

struct AdmissibilityReport {
  double integral = 0.0;    // sum_k mu_k |<D(alpha_k) eta, eta>|^2
  double d_constant = 0.0;  // 1/d = |eta|^-4 * integral
  bool beta_ok = false;
  double beta_max_deviation = 0.0;
  double boundary_max = 0.0;  // largest integrand value on the grid edge
};

struct AdmissibilityOptions {
  double boundary_threshold = 1e-7;
  int beta_pairs = 50;
  double beta_tolerance = 1e-6;
  std::uint64_t seed = 20240601;
};

/// Throws InputError naming the radius that would satisfy the boundary-decay
/// precondition when the integrand on the grid edge exceeds the threshold.
AdmissibilityReport admissibility(const ResolutionGenerator& eta, const PhaseGrid& grid, const FockContext& ctx,
                                  const AdmissibilityOptions& opts = {});

/// Same, reusing an already built coherent family.
AdmissibilityReport admissibility(const CoherentFamily& family, const FockContext& ctx,
                                  const AdmissibilityOptions& opts = {});

/// Deviation of D(x)^-1 D(y)^-1 D(x) D(y) from beta * I on the Fock block
/// n <= low_block, computed at an enlarged working dimension so truncation
/// does not enter. Returns (beta, operator-norm deviation).
std::pair<Complex, double> commutator_phase(Complex x, Complex y, int low_block);

/// Indices of lattice points with at least one missing nearest neighbour.
std::vector<std::size_t> boundary_points(const PhaseGrid& grid);

}  // namespace qps
