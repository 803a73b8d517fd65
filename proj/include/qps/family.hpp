#pragma once

#include "qps/fock.hpp"
#include "qps/grid.hpp"

#include <span>

namespace qps {

/// The coherent family {D(alpha_k) eta} over a grid, stored as the columns of
/// an N x K matrix. Most phase-space operations are linear algebra on it.
struct CoherentFamily {
  PhaseGrid grid;
  ResolutionGenerator eta;
  CMatrix vectors;

  static CoherentFamily build(const ResolutionGenerator& eta, const PhaseGrid& grid, const FockContext& ctx);

  int n_dim() const { return static_cast<int>(vectors.rows()); }
  std::size_t size() const { return grid.size(); }
  std::span<const double> weights() const { return grid.weight; }
  auto column(std::size_t k) const { return vectors.col(static_cast<Eigen::Index>(k)); }
};

}  // namespace qps
