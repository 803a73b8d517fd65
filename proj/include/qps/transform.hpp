#pragma once

// Coherent-state transform W: phi -> (<D(alpha_k) eta, phi>)_k, its frame
// inversion, the induced action on grid functions, and the reproducing
// projection.

#include "qps/family.hpp"

namespace qps {

struct GammaFunctionSamples {
  CVector values;
  const PhaseGrid* grid = nullptr;  // identity of the grid the samples live on

  double weighted_norm2() const;
};

struct OrthogonalityReport {
  Complex lhs;
  Complex rhs;
  double relative_error = 0.0;
  double d_used = 0.0;
};

inline constexpr double kOrthogonalityFloor = 0.05;
inline constexpr double kMaxFrameCondition = 1e6;

GammaFunctionSamples w_transform(const CoherentFamily& family, const CVector& phi);
GammaFunctionSamples w_transform(const ResolutionGenerator& eta, const PhaseGrid& grid, const CVector& phi,
                                 const FockContext& ctx);

/// S = sum_k mu_k |D(alpha_k) eta><D(alpha_k) eta|, i.e. the quantization of f = 1.
CMatrix frame_operator(const CoherentFamily& family);

/// 2-norm condition number of S.
double frame_condition(const CMatrix& s);

/// phi = S^-1 sum_k mu_k F_k D(alpha_k) eta. Throws NumericalError if cond(S) > 1e6.
CVector reconstruct(const CoherentFamily& family, const GammaFunctionSamples& f);

/// [V(g) F](x) = F(x - g) for a lattice translation g = (dq, dp); values
/// translated from outside the grid are zero. Throws InputError when g is not
/// a multiple of the spacing or the grid has no lattice.
GammaFunctionSamples v_action(double dq, double dp, const GammaFunctionSamples& f);

/// P F = W(reconstruct(F)).
GammaFunctionSamples projection_P(const CoherentFamily& family, const GammaFunctionSamples& f);

/// lhs = sum_k mu_k <phi1, D eta1><D eta2, phi2>,
/// rhs = (1/d) <eta2, eta1><phi1, phi2> with d from the admissibility integral of eta1.
OrthogonalityReport orthogonality_check(const CoherentFamily& family1, const CoherentFamily& family2,
                                        const CVector& phi1, const CVector& phi2, double d);
OrthogonalityReport orthogonality_check(const ResolutionGenerator& eta1, const ResolutionGenerator& eta2,
                                        const CVector& phi1, const CVector& phi2, const PhaseGrid& grid,
                                        const FockContext& ctx);

}  // namespace qps
