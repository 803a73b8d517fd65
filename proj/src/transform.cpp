#include "qps/transform.hpp"

#include "qps/admissibility.hpp"
#include "qps/errors.hpp"
#include "qps/kernels.hpp"

#include <cmath>
#include <sstream>

namespace qps {

double GammaFunctionSamples::weighted_norm2() const {
  if (!grid) throw InputError("samples are not attached to a grid");
  std::vector<double> mag(static_cast<std::size_t>(values.size()));
  for (Eigen::Index k = 0; k < values.size(); ++k) mag[static_cast<std::size_t>(k)] = std::norm(values[k]);
  return kernels::weighted_sum(grid->weight, mag);
}

GammaFunctionSamples w_transform(const CoherentFamily& family, const CVector& phi) {
  if (phi.size() != family.n_dim()) throw InputError("state dimension does not match the Fock context");
  return GammaFunctionSamples{kernels::analysis(family.vectors, phi), &family.grid};
}

GammaFunctionSamples w_transform(const ResolutionGenerator& eta, const PhaseGrid& grid, const CVector& phi,
                                 const FockContext& ctx) {
  if (phi.size() != ctx.n_dim) throw InputError("state dimension does not match the Fock context");
  GammaFunctionSamples out{kernels::analysis(kernels::coherent_vectors(grid, eta.vector), phi), &grid};
  return out;
}

CMatrix frame_operator(const CoherentFamily& family) {
  return kernels::weighted_outer_sum(family.vectors, family.weights());
}

double frame_condition(const CMatrix& s) {
  const RVector ev = eigenvalues_desc(s);
  const double lo = ev[ev.size() - 1];
  if (!(lo > 0.0)) return std::numeric_limits<double>::infinity();
  return ev[0] / lo;
}

namespace {

Eigen::LDLT<CMatrix> checked_frame_inverse(const CoherentFamily& family) {
  const CMatrix s = frame_operator(family);
  const double cond = frame_condition(s);
  if (cond > kMaxFrameCondition) {
    std::ostringstream os;
    os << "frame operator condition number " << cond << " exceeds " << kMaxFrameCondition
       << "; enlarge the grid radius or reduce the Fock dimension";
    throw NumericalError(os.str());
  }
  return s.ldlt();
}

void check_samples(const CoherentFamily& family, const GammaFunctionSamples& f) {
  if (static_cast<std::size_t>(f.values.size()) != family.size()) {
    throw InputError("sample count does not match the grid size");
  }
}

}  // namespace

CVector reconstruct(const CoherentFamily& family, const GammaFunctionSamples& f) {
  check_samples(family, f);
  const auto inv = checked_frame_inverse(family);
  const CVector synth = kernels::weighted_synthesis(family.vectors, family.weights(), f.values);
  return inv.solve(synth);
}

GammaFunctionSamples v_action(double dq, double dp, const GammaFunctionSamples& f) {
  if (!f.grid || !f.grid->is_lattice()) throw InputError("v_action needs samples on a lattice grid");
  const PhaseGrid& g = *f.grid;
  const double si = dq / g.spacing, sj = dp / g.spacing;
  const double ri = std::round(si), rj = std::round(sj);
  if (std::abs(si - ri) > 1e-6 || std::abs(sj - rj) > 1e-6) {
    std::ostringstream os;
    os << "translation (" << dq << ", " << dp << ") is not a multiple of the grid spacing " << g.spacing;
    throw InputError(os.str());
  }
  const int di = static_cast<int>(ri), dj = static_cast<int>(rj);
  GammaFunctionSamples out{CVector::Zero(f.values.size()), f.grid};
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (auto src = g.find_cell(g.cell[k][0] - di, g.cell[k][1] - dj)) {
      out.values[static_cast<Eigen::Index>(k)] = f.values[static_cast<Eigen::Index>(*src)];
    }
  }
  return out;
}

GammaFunctionSamples projection_P(const CoherentFamily& family, const GammaFunctionSamples& f) {
  return w_transform(family, reconstruct(family, f));
}

OrthogonalityReport orthogonality_check(const CoherentFamily& family1, const CoherentFamily& family2,
                                        const CVector& phi1, const CVector& phi2, double d) {
  if (family1.size() != family2.size()) throw InputError("orthogonality check needs both families on one grid");
  const CVector w1 = kernels::analysis(family1.vectors, phi1);  // <D eta1, phi1>
  const CVector w2 = kernels::analysis(family2.vectors, phi2);  // <D eta2, phi2>
  std::vector<Complex> integrand(family1.size());
  for (std::size_t k = 0; k < integrand.size(); ++k) {
    integrand[k] = std::conj(w1[static_cast<Eigen::Index>(k)]) * w2[static_cast<Eigen::Index>(k)];
  }
  OrthogonalityReport rep;
  rep.d_used = d;
  rep.lhs = kernels::weighted_sum(family1.weights(), integrand);
  rep.rhs = family2.eta.vector.dot(family1.eta.vector) * phi1.dot(phi2) / d;
  const double denom = std::max({std::abs(rep.lhs), std::abs(rep.rhs), kOrthogonalityFloor});
  rep.relative_error = std::abs(rep.lhs - rep.rhs) / denom;
  return rep;
}

OrthogonalityReport orthogonality_check(const ResolutionGenerator& eta1, const ResolutionGenerator& eta2,
                                        const CVector& phi1, const CVector& phi2, const PhaseGrid& grid,
                                        const FockContext& ctx) {
  const auto f1 = CoherentFamily::build(eta1, grid, ctx);
  const auto f2 = CoherentFamily::build(eta2, grid, ctx);
  const double d = admissibility(f1, ctx).d_constant;
  return orthogonality_check(f1, f2, phi1, phi2, d);
}

}  // namespace qps
