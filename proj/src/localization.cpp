#include "qps/localization.hpp"

#include "qps/errors.hpp"
#include "qps/kernels.hpp"
#include "qps/transform.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qps {

CMatrix rank_one_density(double q, double p, const ResolutionGenerator& eta) {
  const CVector v = displace(alpha_of(q, p), eta.vector);
  return v * v.adjoint();
}

namespace {

void check_symbol(const CoherentFamily& family, std::span<const double> f) {
  if (f.size() != family.size()) throw InputError("symbol length does not match the grid size");
  for (double x : f) {
    if (!std::isfinite(x)) throw InputError("symbol values must be finite");
  }
}

}  // namespace

CMatrix quantize(const CoherentFamily& family, std::span<const double> f) {
  check_symbol(family, f);
  std::vector<double> w(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) w[k] = family.grid.weight[k] * f[k];
  return kernels::weighted_outer_sum(family.vectors, w);
}

CMatrix quantize(const ResolutionGenerator& eta, const PhaseGrid& grid, std::span<const double> f,
                 const FockContext& ctx) {
  return quantize(CoherentFamily::build(eta, grid, ctx), f);
}

CMatrix quantize_via_transform(const CoherentFamily& family, std::span<const double> f) {
  check_symbol(family, f);
  const CMatrix s = frame_operator(family);
  const double cond = frame_condition(s);
  if (cond > kMaxFrameCondition) {
    std::ostringstream os;
    os << "frame operator condition number " << cond << " exceeds " << kMaxFrameCondition;
    throw NumericalError(os.str());
  }
  // W maps a state to its samples: row k of W is (D(alpha_k) eta)^H.
  const CMatrix w = family.vectors.adjoint();
  RVector mf(static_cast<Eigen::Index>(f.size()));
  for (std::size_t k = 0; k < f.size(); ++k) mf[static_cast<Eigen::Index>(k)] = family.grid.weight[k] * f[k];
  const CMatrix wmw = w.adjoint() * (mf.asDiagonal() * w);
  const CMatrix a = s.ldlt().solve(wmw);
  return 0.5 * (a + a.adjoint());
}

SpectrumReport localization_spectrum(const RegionSpec& delta, const CoherentFamily& family, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) throw InputError("epsilon must lie in (0, 1/2)");
  const std::vector<double> chi = delta.symbol(family.grid);
  const CMatrix a = quantize(family, chi);

  SpectrumReport rep;
  rep.epsilon = epsilon;
  rep.eigenvalues = eigenvalues_desc(a);
  rep.trace = a.trace().real();
  rep.mu_delta = kernels::weighted_sum(family.grid.weight, chi);
  for (double l : rep.eigenvalues) {
    if (l > 1.0 - epsilon) {
      ++rep.near_one;
    } else if (l < epsilon) {
      ++rep.near_zero;
    } else {
      ++rep.mid;
    }
  }
  return rep;
}

ClusteringSummary clustering_report(const SpectrumReport& spec) {
  ClusteringSummary out;
  out.trace = spec.trace;
  out.mu_delta = spec.mu_delta;
  out.max_eigenvalue = spec.eigenvalues.size() ? spec.eigenvalues[0] : 0.0;
  out.trace_bound_ok = out.trace <= spec.mu_delta * (1.0 + 1e-6) + 1e-12;
  out.norm_bound_ok = out.max_eigenvalue <= std::min(1.0, spec.mu_delta) * (1.0 + 1e-6) + 1e-12;
  out.near_one = spec.near_one;
  out.near_zero = spec.near_zero;
  out.mid = spec.mid;
  out.epsilon = spec.epsilon;
  if (spec.near_one > 0) {
    out.mid_to_near_one = static_cast<double>(spec.mid) / spec.near_one;
  } else {
    out.mid_to_near_one = spec.mid > 0 ? std::numeric_limits<double>::infinity() : 0.0;
  }
  return out;
}

CapacityReport channel_capacity(const SpectrumReport& spec, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) throw InputError("capacity threshold must lie in (0, 1)");
  CapacityReport rep;
  rep.threshold = threshold;
  rep.mu_delta = spec.mu_delta;
  for (double l : spec.eigenvalues) {
    if (l > threshold) ++rep.count;
  }
  return rep;
}

CapacityReport channel_capacity(const RegionSpec& delta, const CoherentFamily& family, double threshold) {
  return channel_capacity(localization_spectrum(delta, family), threshold);
}

}  // namespace qps
