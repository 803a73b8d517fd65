#include "qps/region.hpp"

#include "qps/errors.hpp"
#include "qps/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qps {

namespace {

// Antiderivative of sqrt(r^2 - x^2).
double half_chord_integral(double r, double x) {
  x = std::clamp(x, -r, r);
  return 0.5 * (x * std::sqrt(std::max(0.0, r * r - x * x)) + r * r * std::asin(x / r));
}

double disk_coverage(double r, double q, double p, double h) {
  const double half = 0.5 * h;
  const double aq = std::abs(q), ap = std::abs(p);
  const double far2 = (aq + half) * (aq + half) + (ap + half) * (ap + half);
  if (far2 <= r * r) return 1.0;
  const double nq = std::max(0.0, aq - half), np = std::max(0.0, ap - half);
  if (nq * nq + np * np >= r * r) return 0.0;
  return std::clamp(disk_rect_overlap(r, q - half, q + half, p - half, p + half) / (h * h), 0.0, 1.0);
}

// Fraction of the cell [c - h/2, c + h/2] inside [b0, b1]; exactly 0 or 1 away from the ends.
double interval_fraction(double c, double h, double b0, double b1) {
  const double a0 = c - 0.5 * h, a1 = c + 0.5 * h;
  if (a0 >= b0 && a1 <= b1) return 1.0;
  if (a1 <= b0 || a0 >= b1) return 0.0;
  return std::clamp((std::min(a1, b1) - std::max(a0, b0)) / h, 0.0, 1.0);
}

}  // namespace

double disk_rect_overlap(double r, double x0, double x1, double y0, double y1) {
  if (r <= 0.0 || x1 <= x0 || y1 <= y0) return 0.0;
  std::vector<double> cuts{x0, x1, -r, r};
  for (double y : {y0, y1}) {
    if (std::abs(y) < r) {
      const double s = std::sqrt(r * r - y * y);
      cuts.push_back(s);
      cuts.push_back(-s);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = std::max(cuts[i], x0), b = std::min(cuts[i + 1], x1);
    if (b <= a) continue;
    const double mid = 0.5 * (a + b);
    if (std::abs(mid) >= r) continue;
    const double s = std::sqrt(r * r - mid * mid);
    // On (a, b) the vertical extent min(y1, s) - max(y0, -s) keeps one analytic form.
    const bool top_flat = y1 < s;
    const bool bottom_flat = y0 > -s;
    if (std::min(y1, s) <= std::max(y0, -s)) continue;
    const double chord = half_chord_integral(r, b) - half_chord_integral(r, a);
    const double top = top_flat ? y1 * (b - a) : chord;
    const double bottom = bottom_flat ? y0 * (b - a) : -chord;
    area += top - bottom;
  }
  return area;
}

std::vector<double> RegionSpec::symbol(const PhaseGrid& grid) const {
  const std::size_t n = grid.size();
  std::vector<double> out(n, 0.0);
  const bool cells = grid.is_lattice();
  const double h = grid.spacing;

  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Mask>) {
          if (s.values.size() != n) throw InputError("region mask length does not match the grid");
          for (std::size_t k = 0; k < n; ++k) {
            if (!(s.values[k] >= 0.0 && s.values[k] <= 1.0)) throw InputError("region mask values must lie in [0, 1]");
            out[k] = s.values[k];
          }
        } else if constexpr (std::is_same_v<T, Disk>) {
          for (std::size_t k = 0; k < n; ++k) {
            out[k] = cells ? disk_coverage(s.radius, grid.q[k], grid.p[k], h)
                           : (grid.q[k] * grid.q[k] + grid.p[k] * grid.p[k] <= s.radius * s.radius ? 1.0 : 0.0);
          }
        } else if constexpr (std::is_same_v<T, Annulus>) {
          for (std::size_t k = 0; k < n; ++k) {
            if (cells) {
              out[k] = std::max(0.0, disk_coverage(s.outer, grid.q[k], grid.p[k], h) -
                                         disk_coverage(s.inner, grid.q[k], grid.p[k], h));
            } else {
              const double r2 = grid.q[k] * grid.q[k] + grid.p[k] * grid.p[k];
              out[k] = (r2 > s.inner * s.inner && r2 <= s.outer * s.outer) ? 1.0 : 0.0;
            }
          }
        } else if constexpr (std::is_same_v<T, Rect>) {
          for (std::size_t k = 0; k < n; ++k) {
            const double q = grid.q[k], p = grid.p[k];
            if (cells) {
              out[k] = interval_fraction(q, h, s.q0, s.q1) * interval_fraction(p, h, s.p0, s.p1);
            } else {
              out[k] = (q >= s.q0 && q < s.q1 && p >= s.p0 && p < s.p1) ? 1.0 : 0.0;
            }
          }
        }
      },
      shape);
  return out;
}

double RegionSpec::measure(const PhaseGrid& grid) const { return kernels::weighted_sum(grid.weight, symbol(grid)); }

RegionSpec disk_region(double radius) {
  if (!(radius >= 0.0)) throw InputError("disk radius must be non-negative");
  std::ostringstream os;
  os << "disk:" << radius;
  return {Disk{radius}, os.str()};
}

RegionSpec annulus_region(double inner, double outer) {
  if (!(inner >= 0.0 && outer >= inner)) throw InputError("annulus needs 0 <= inner <= outer");
  std::ostringstream os;
  os << "annulus:" << inner << "," << outer;
  return {Annulus{inner, outer}, os.str()};
}

RegionSpec rect_region(double q0, double q1, double p0, double p1) {
  if (!(q1 >= q0 && p1 >= p0)) throw InputError("rectangle needs q0 <= q1 and p0 <= p1");
  std::ostringstream os;
  os << "rect:" << q0 << "," << q1 << "," << p0 << "," << p1;
  return {Rect{q0, q1, p0, p1}, os.str()};
}

RegionSpec mask_region(std::vector<double> values, std::string label) { return {Mask{std::move(values)}, std::move(label)}; }

RegionSpec empty_region() { return {Disk{0.0}, "empty"}; }

namespace {

std::vector<double> parse_numbers(const std::string& text, std::size_t expected, const std::string& whole) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("bad number '" + item + "' in region '" + whole + "'");
    }
  }
  if (out.size() != expected) throw InputError("region '" + whole + "' has the wrong number of parameters");
  return out;
}

}  // namespace

RegionSpec parse_region(const std::string& spec) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (spec == "empty") return empty_region();
  if (spec == "full") return {Rect{-inf, inf, -inf, inf}, "full"};
  if (spec == "halfplane") return {Rect{0.0, inf, -inf, inf}, "halfplane:q>0"};
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw InputError("region must be disk:R, annulus:R1,R2, rect:q0,q1,p0,p1, halfplane, empty or full");
  const std::string head = spec.substr(0, colon), args = spec.substr(colon + 1);
  if (head == "disk") return disk_region(parse_numbers(args, 1, spec)[0]);
  if (head == "annulus") {
    const auto v = parse_numbers(args, 2, spec);
    return annulus_region(v[0], v[1]);
  }
  if (head == "rect") {
    const auto v = parse_numbers(args, 4, spec);
    return rect_region(v[0], v[1], v[2], v[3]);
  }
  throw InputError("unknown region kind '" + head + "'");
}

std::vector<RegionSpec> standard_battery() {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return {disk_region(1.0),
          disk_region(2.0),
          disk_region(3.0),
          RegionSpec{Rect{0.0, inf, -inf, inf}, "halfplane:q>0"},
          annulus_region(1.5, 3.0),
          rect_region(-1.0, 2.0, -1.5, 1.0)};
}

}  // namespace qps
