#pragma once

// Data-parallel kernels over grid points. Each kernel has a serial
// counterpart in kernels::reference that follows the textbook loop order;
// the parallel versions are checked against them in tests and compared in
// the benchmark target.

#include "qps/grid.hpp"
#include "qps/linalg.hpp"

#include <span>

namespace qps::kernels {

/// Columns D(alpha_k) eta for every grid point (N x K).
CMatrix coherent_vectors(const PhaseGrid& grid, const CVector& eta);

/// sum_k w_k v_k v_k^H over the columns of v.
CMatrix weighted_outer_sum(const CMatrix& v, std::span<const double> w);

/// sum_k w_k c_k v_k.
CVector weighted_synthesis(const CMatrix& v, std::span<const double> w, const CVector& c);

/// c_k = <v_k, phi> = v_k^H phi.
CVector analysis(const CMatrix& v, const CVector& phi);

/// sum_k w_k x_k.
double weighted_sum(std::span<const double> w, std::span<const double> x);
Complex weighted_sum(std::span<const double> w, std::span<const Complex> x);

namespace reference {

CMatrix coherent_vectors(const PhaseGrid& grid, const CVector& eta);
CMatrix weighted_outer_sum(const CMatrix& v, std::span<const double> w);
CVector weighted_synthesis(const CMatrix& v, std::span<const double> w, const CVector& c);
CVector analysis(const CMatrix& v, const CVector& phi);
double weighted_sum(std::span<const double> w, std::span<const double> x);

}  // namespace reference

}  // namespace qps::kernels
