#pragma once

#ifndef EIGEN_DONT_PARALLELIZE
#define EIGEN_DONT_PARALLELIZE  // all parallelism goes through qps::parallel
#endif
#include <Eigen/Dense>

#include <complex>

namespace qps {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Largest |A - A^H| entry relative to max(1, |A|_max).
double hermiticity_defect(const CMatrix& a);

/// Spectral norm of a Hermitian (or general, via SVD) matrix.
double spectral_norm(const CMatrix& a);

/// Spectral norm of the leading (block+1)x(block+1) principal submatrix.
double block_norm(const CMatrix& a, int block);

/// Eigenvalues of a Hermitian matrix in descending order.
RVector eigenvalues_desc(const CMatrix& a);

}  // namespace qps
