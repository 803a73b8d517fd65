#pragma once

// Phase-space regions and their sampled indicator symbols.
//
// On lattice grids a region is sampled by exact cell coverage: point k gets
// the fraction of its cell [q-h/2, q+h/2] x [p-h/2, p+h/2] lying inside the
// region. Cells wholly inside or outside get exactly 1 or 0. On irregular
// point sets membership is decided at the point itself.

#include "qps/grid.hpp"

#include <string>
#include <variant>
#include <vector>

namespace qps {

struct Disk {
  double radius = 0.0;
};
struct Annulus {
  double inner = 0.0;
  double outer = 0.0;
};
// Bounds may be +-infinity (half-planes, strips).
struct Rect {
  double q0 = 0.0, q1 = 0.0, p0 = 0.0, p1 = 0.0;
};
struct Mask {
  std::vector<double> values;
};

using RegionShape = std::variant<Disk, Annulus, Rect, Mask>;

struct RegionSpec {
  RegionShape shape;
  std::string label;

  /// Indicator symbol sampled on the grid, values in [0, 1].
  std::vector<double> symbol(const PhaseGrid& grid) const;
  /// mu(Delta) = sum_k mu_k symbol_k.
  double measure(const PhaseGrid& grid) const;
};

RegionSpec disk_region(double radius);
RegionSpec annulus_region(double inner, double outer);
RegionSpec rect_region(double q0, double q1, double p0, double p1);
RegionSpec mask_region(std::vector<double> values, std::string label = "mask");
RegionSpec empty_region();

/// Parses "disk:R", "annulus:R1,R2", "rect:q0,q1,p0,p1", "halfplane" (q > 0), "empty", "full".
RegionSpec parse_region(const std::string& spec);

/// Area of [x0,x1] x [y0,y1] inside the disk of radius r centred at the origin.
double disk_rect_overlap(double r, double x0, double x1, double y0, double y1);

/// Disks R in {1,2,3}, half-plane q > 0, annulus [1.5, 3], rectangle [-1,2] x [-1.5,1].
std::vector<RegionSpec> standard_battery();

}  // namespace qps
