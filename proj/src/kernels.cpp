#include "qps/kernels.hpp"

#include "qps/errors.hpp"
#include "qps/parallel.hpp"

namespace qps::kernels {

namespace {

void check_weights(const CMatrix& v, std::span<const double> w) {
  if (static_cast<std::size_t>(v.cols()) != w.size()) throw InputError("weight count does not match grid size");
}

}  // namespace

CMatrix coherent_vectors(const PhaseGrid& grid, const CVector& eta) {
  CMatrix v(eta.size(), static_cast<Eigen::Index>(grid.size()));
  parallel::for_each_index(grid.size(), [&](std::size_t k) { v.col(static_cast<Eigen::Index>(k)) = displace(grid.alpha(k), eta); });
  return v;
}

CMatrix weighted_outer_sum(const CMatrix& v, std::span<const double> w) {
  check_weights(v, w);
  const Eigen::Index n = v.rows();
  CMatrix acc = parallel::chunked_reduce(
      w.size(), [n] { return CMatrix(CMatrix::Zero(n, n)); },
      [&](std::size_t k, CMatrix& a) {
        if (w[k] != 0.0) a.selfadjointView<Eigen::Lower>().rankUpdate(v.col(static_cast<Eigen::Index>(k)), w[k]);
      },
      [](CMatrix& a, const CMatrix& b) { a += b; });
  // rankUpdate only writes the lower triangle.
  for (Eigen::Index j = 0; j < n; ++j) {
    acc(j, j) = Complex(acc(j, j).real(), 0.0);
    for (Eigen::Index i = j + 1; i < n; ++i) acc(j, i) = std::conj(acc(i, j));
  }
  return acc;
}

CVector weighted_synthesis(const CMatrix& v, std::span<const double> w, const CVector& c) {
  check_weights(v, w);
  const Eigen::Index n = v.rows();
  return parallel::chunked_reduce(
      w.size(), [n] { return CVector(CVector::Zero(n)); },
      [&](std::size_t k, CVector& a) { a += (w[k] * c[static_cast<Eigen::Index>(k)]) * v.col(static_cast<Eigen::Index>(k)); },
      [](CVector& a, const CVector& b) { a += b; });
}

CVector analysis(const CMatrix& v, const CVector& phi) {
  CVector out(v.cols());
  parallel::for_each_index(static_cast<std::size_t>(v.cols()), [&](std::size_t k) {
    out[static_cast<Eigen::Index>(k)] = v.col(static_cast<Eigen::Index>(k)).dot(phi);
  });
  return out;
}

double weighted_sum(std::span<const double> w, std::span<const double> x) {
  if (w.size() != x.size()) throw InputError("weighted sum length mismatch");
  return parallel::chunked_reduce(
      w.size(), [] { return 0.0; }, [&](std::size_t k, double& a) { a += w[k] * x[k]; },
      [](double& a, double b) { a += b; });
}

Complex weighted_sum(std::span<const double> w, std::span<const Complex> x) {
  if (w.size() != x.size()) throw InputError("weighted sum length mismatch");
  return parallel::chunked_reduce(
      w.size(), [] { return Complex(0.0); }, [&](std::size_t k, Complex& a) { a += w[k] * x[k]; },
      [](Complex& a, Complex b) { a += b; });
}

namespace reference {

CMatrix coherent_vectors(const PhaseGrid& grid, const CVector& eta) {
  CMatrix v(eta.size(), static_cast<Eigen::Index>(grid.size()));
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const CMatrix d = displacement_columns(grid.alpha(k), static_cast<int>(eta.size()), static_cast<int>(eta.size()));
    v.col(static_cast<Eigen::Index>(k)) = d * eta;
  }
  return v;
}

CMatrix weighted_outer_sum(const CMatrix& v, std::span<const double> w) {
  check_weights(v, w);
  const Eigen::Index n = v.rows();
  CMatrix acc = CMatrix::Zero(n, n);
  for (std::size_t k = 0; k < w.size(); ++k) {
    const auto col = v.col(static_cast<Eigen::Index>(k));
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) acc(i, j) += w[k] * col[i] * std::conj(col[j]);
  }
  return acc;
}

CVector weighted_synthesis(const CMatrix& v, std::span<const double> w, const CVector& c) {
  check_weights(v, w);
  CVector acc = CVector::Zero(v.rows());
  for (std::size_t k = 0; k < w.size(); ++k) {
    for (Eigen::Index i = 0; i < v.rows(); ++i) acc[i] += w[k] * c[static_cast<Eigen::Index>(k)] * v(i, static_cast<Eigen::Index>(k));
  }
  return acc;
}

CVector analysis(const CMatrix& v, const CVector& phi) {
  CVector out = CVector::Zero(v.cols());
  for (Eigen::Index k = 0; k < v.cols(); ++k)
    for (Eigen::Index i = 0; i < v.rows(); ++i) out[k] += std::conj(v(i, k)) * phi[i];
  return out;
}

double weighted_sum(std::span<const double> w, std::span<const double> x) {
  double s = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) s += w[k] * x[k];
  return s;
}

}  // namespace reference

}  // namespace qps::kernels
