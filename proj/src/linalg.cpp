#include "qps/linalg.hpp"

#include <algorithm>

namespace qps {

double hermiticity_defect(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  return (a - a.adjoint()).cwiseAbs().maxCoeff() / scale;
}

double spectral_norm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues()(0);
}

double block_norm(const CMatrix& a, int block) {
  const Eigen::Index b = std::min<Eigen::Index>(block + 1, std::min(a.rows(), a.cols()));
  return spectral_norm(a.topLeftCorner(b, b));
}

RVector eigenvalues_desc(const CMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().reverse();
}

}  // namespace qps
