#pragma once

// Finite sample of the phase plane with Liouville weights dq dp / (2 pi).

#include "qps/fock.hpp"

#include <array>
#include <optional>
#include <vector>

namespace qps {

struct PhaseGrid {
  std::vector<double> q;
  std::vector<double> p;
  std::vector<double> weight;
  double radius = 0.0;   // 0 for non-disk grids
  double spacing = 0.0;  // 0 for irregular point sets
  // Integer lattice coordinates (q = i*spacing, p = j*spacing); empty for irregular sets.
  std::vector<std::array<int, 2>> cell;

  std::size_t size() const { return q.size(); }
  bool is_lattice() const { return !cell.empty(); }
  Complex alpha(std::size_t k) const { return alpha_of(q[k], p[k]); }
  double total_measure() const;

  /// Index of the lattice point (i, j), if present.
  std::optional<std::size_t> find_cell(int i, int j) const;

 private:
  friend PhaseGrid build_grid(double, double);
  friend PhaseGrid build_rect_grid(double, double, double, double, double);
  std::vector<std::size_t> index_;  // dense lookup over the bounding box
  int imin_ = 0, jmin_ = 0, width_ = 0, height_ = 0;
  void index_cells();
};

/// Midpoint lattice {(i h, j h)} restricted to q^2 + p^2 <= radius^2, each
/// point carrying mu = h^2 / (2 pi). Requires radius > 0 and 0 < spacing < radius.
PhaseGrid build_grid(double radius, double spacing);

/// Lattice points inside [q0, q1] x [p0, p1].
PhaseGrid build_rect_grid(double q0, double q1, double p0, double p1, double spacing);

/// Arbitrary sample points with explicit weights (no lattice structure).
PhaseGrid point_grid(std::vector<double> q, std::vector<double> p, std::vector<double> weight);

}  // namespace qps
