#include "qps/grid.hpp"

#include "qps/errors.hpp"
#include "qps/kernels.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

namespace qps {

double PhaseGrid::total_measure() const {
  const std::vector<double> ones(weight.size(), 1.0);
  return kernels::weighted_sum(weight, ones);
}

void PhaseGrid::index_cells() {
  if (cell.empty()) return;
  int imax = cell[0][0], jmax = cell[0][1];
  imin_ = imax;
  jmin_ = jmax;
  for (const auto& c : cell) {
    imin_ = std::min(imin_, c[0]);
    imax = std::max(imax, c[0]);
    jmin_ = std::min(jmin_, c[1]);
    jmax = std::max(jmax, c[1]);
  }
  width_ = imax - imin_ + 1;
  height_ = jmax - jmin_ + 1;
  index_.assign(static_cast<std::size_t>(width_) * height_, SIZE_MAX);
  for (std::size_t k = 0; k < cell.size(); ++k) {
    index_[static_cast<std::size_t>(cell[k][0] - imin_) * height_ + (cell[k][1] - jmin_)] = k;
  }
}

std::optional<std::size_t> PhaseGrid::find_cell(int i, int j) const {
  if (i < imin_ || j < jmin_ || i >= imin_ + width_ || j >= jmin_ + height_) return std::nullopt;
  const std::size_t k = index_[static_cast<std::size_t>(i - imin_) * height_ + (j - jmin_)];
  if (k == SIZE_MAX) return std::nullopt;
  return k;
}

PhaseGrid build_grid(double radius, double spacing) {
  if (!(radius > 0.0)) throw InputError("grid radius must be positive");
  if (!(spacing > 0.0 && spacing < radius)) throw InputError("grid spacing must lie in (0, radius)");
  PhaseGrid g;
  g.radius = radius;
  g.spacing = spacing;
  const double w = spacing * spacing / (2.0 * std::numbers::pi);
  const int m = static_cast<int>(std::floor(radius / spacing)) + 1;
  const double r2 = radius * radius * (1.0 + 1e-12);
  for (int i = -m; i <= m; ++i) {
    for (int j = -m; j <= m; ++j) {
      const double q = i * spacing, p = j * spacing;
      if (q * q + p * p > r2) continue;
      g.q.push_back(q);
      g.p.push_back(p);
      g.weight.push_back(w);
      g.cell.push_back({i, j});
    }
  }
  g.index_cells();
  return g;
}

PhaseGrid build_rect_grid(double q0, double q1, double p0, double p1, double spacing) {
  if (!(q1 > q0 && p1 > p0)) throw InputError("rectangle grid needs q0 < q1 and p0 < p1");
  if (!(spacing > 0.0)) throw InputError("grid spacing must be positive");
  PhaseGrid g;
  g.spacing = spacing;
  const double w = spacing * spacing / (2.0 * std::numbers::pi);
  const double eps = 1e-12 * spacing;
  const int i0 = static_cast<int>(std::ceil(q0 / spacing - eps)), i1 = static_cast<int>(std::floor(q1 / spacing + eps));
  const int j0 = static_cast<int>(std::ceil(p0 / spacing - eps)), j1 = static_cast<int>(std::floor(p1 / spacing + eps));
  for (int i = i0; i <= i1; ++i) {
    for (int j = j0; j <= j1; ++j) {
      g.q.push_back(i * spacing);
      g.p.push_back(j * spacing);
      g.weight.push_back(w);
      g.cell.push_back({i, j});
    }
  }
  if (g.q.empty()) throw InputError("rectangle grid contains no lattice points");
  g.index_cells();
  return g;
}

PhaseGrid point_grid(std::vector<double> q, std::vector<double> p, std::vector<double> weight) {
  if (q.size() != p.size() || q.size() != weight.size()) throw InputError("point grid arrays differ in length");
  PhaseGrid g;
  g.q = std::move(q);
  g.p = std::move(p);
  g.weight = std::move(weight);
  return g;
}

}  // namespace qps
