#pragma once

// Quantization of phase-space symbols by the coherent family, localization
// spectra, eigenvalue clustering and channel counts.

#include "qps/family.hpp"
#include "qps/region.hpp"

#include <span>

namespace qps {

/// T(x) = |D(alpha) eta><D(alpha) eta| at an arbitrary phase-space point.
CMatrix rank_one_density(double q, double p, const ResolutionGenerator& eta);

/// A(f) = sum_k mu_k f_k T(x_k). f must be finite.
CMatrix quantize(const CoherentFamily& family, std::span<const double> f);
CMatrix quantize(const ResolutionGenerator& eta, const PhaseGrid& grid, std::span<const double> f,
                 const FockContext& ctx);

/// S^-1 W^* M_f W, built from the explicit analysis matrix W (K x N) and the
/// weighted multiplication operator, then Hermitized. Throws NumericalError
/// when cond(S) > 1e6.
CMatrix quantize_via_transform(const CoherentFamily& family, std::span<const double> f);

/// Symbol sampled from a function of (q, p).
template <class F>
std::vector<double> sample_symbol(const PhaseGrid& grid, F&& f) {
  std::vector<double> out(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) out[k] = f(grid.q[k], grid.p[k]);
  return out;
}

struct SpectrumReport {
  RVector eigenvalues;  // descending, raw (not clamped)
  double trace = 0.0;
  double mu_delta = 0.0;
  int near_one = 0;
  int near_zero = 0;
  int mid = 0;
  double epsilon = 0.1;
};

inline constexpr double kDefaultEpsilon = 0.1;

/// Requires 0 < epsilon < 1/2.
SpectrumReport localization_spectrum(const RegionSpec& delta, const CoherentFamily& family,
                                     double epsilon = kDefaultEpsilon);

struct ClusteringSummary {
  double trace = 0.0;
  double mu_delta = 0.0;
  double max_eigenvalue = 0.0;
  bool trace_bound_ok = false;  // trace <= mu (1 + 1e-6)
  bool norm_bound_ok = false;   // max lambda <= min(1, mu) (1 + 1e-6)
  int near_one = 0;
  int near_zero = 0;
  int mid = 0;
  double epsilon = 0.0;
  double mid_to_near_one = 0.0;  // +inf when near_one == 0 and mid > 0

  bool bounds_ok() const { return trace_bound_ok && norm_bound_ok; }
};

ClusteringSummary clustering_report(const SpectrumReport& spec);

struct CapacityReport {
  int count = 0;  // #{lambda > threshold}
  double mu_delta = 0.0;
  double threshold = 0.5;
};

/// Requires threshold in (0, 1).
CapacityReport channel_capacity(const RegionSpec& delta, const CoherentFamily& family, double threshold = 0.5);
CapacityReport channel_capacity(const SpectrumReport& spec, double threshold = 0.5);

}  // namespace qps
