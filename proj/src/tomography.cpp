#include "qps/tomography.hpp"

#include "qps/errors.hpp"
#include "qps/kernels.hpp"
#include "qps/localization.hpp"
#include "qps/parallel.hpp"

#include <cmath>
#include <sstream>

namespace qps {

void validate_density(const CMatrix& rho) {
  if (rho.rows() != rho.cols()) throw InputError("density operator must be square");
  if (hermiticity_defect(rho) > 1e-9) throw InputError("density operator is not Hermitian");
  const RVector ev = eigenvalues_desc(rho);
  if (ev[ev.size() - 1] < -1e-9) throw InputError("density operator is not positive semidefinite");
  if (std::abs(rho.trace().real() - 1.0) > 1e-9) throw InputError("density operator does not have unit trace");
}

ClassicalDensity classical_density(const CMatrix& rho, const CoherentFamily& family) {
  validate_density(rho);
  if (rho.rows() != family.n_dim()) throw InputError("density dimension does not match the family");
  ClassicalDensity out{std::vector<double>(family.size()), &family.grid};
  parallel::for_each_index(family.size(), [&](std::size_t k) {
    const auto v = family.column(k);
    out.values[k] = v.dot(rho * v).real();
  });
  return out;
}

ExpectationPair expectation_pair(const CMatrix& rho, std::span<const double> f, const CoherentFamily& family) {
  const ClassicalDensity cd = classical_density(rho, family);
  ExpectationPair out;
  out.quantum = (rho * quantize(family, f)).trace().real();
  std::vector<double> prod(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) prod[k] = f[k] * cd.values[k];
  out.classical = kernels::weighted_sum(family.weights(), prod);
  return out;
}

RVector hermitian_vec(const CMatrix& a) {
  const Eigen::Index n = a.rows();
  RVector x(n * n);
  Eigen::Index t = 0;
  for (Eigen::Index i = 0; i < n; ++i) x[t++] = a(i, i).real();
  const double s = std::sqrt(2.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      x[t++] = s * a(i, j).real();
      x[t++] = s * a(i, j).imag();
    }
  }
  return x;
}

CMatrix hermitian_unvec(const RVector& x, int n) {
  if (x.size() != static_cast<Eigen::Index>(n) * n) throw InputError("vectorization has the wrong length");
  CMatrix a = CMatrix::Zero(n, n);
  Eigen::Index t = 0;
  for (int i = 0; i < n; ++i) a(i, i) = x[t++];
  const double s = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      a(i, j) = Complex(s * x[t], s * x[t + 1]);
      a(j, i) = std::conj(a(i, j));
      t += 2;
    }
  }
  return a;
}

namespace {

CompletenessReport rank_report(const RMatrix& m, int n, double cutoff) {
  CompletenessReport rep;
  rep.operator_count = static_cast<int>(m.rows());
  rep.required = n * n;
  Eigen::BDCSVD<RMatrix> svd(m);
  const RVector& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] == 0.0) return rep;
  rep.largest_singular_value = sv[0];
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > cutoff * sv[0]) rep.gram_rank = static_cast<int>(i) + 1;
  }
  rep.smallest_kept_singular_value = sv[rep.gram_rank - 1];
  const double floor = sv[0] * std::numeric_limits<double>::epsilon();
  const double next = rep.gram_rank < sv.size() ? sv[rep.gram_rank] : 0.0;
  rep.rank_gap_ratio = rep.smallest_kept_singular_value / std::max(next, floor);
  rep.complete = rep.gram_rank == rep.required;
  return rep;
}

RMatrix family_design(const CoherentFamily& family) {
  const int n = family.n_dim();
  RMatrix m(static_cast<Eigen::Index>(family.size()), n * n);
  parallel::for_each_index(family.size(), [&](std::size_t k) {
    const CVector v = family.column(k);
    m.row(static_cast<Eigen::Index>(k)) = hermitian_vec(v * v.adjoint()).transpose();
  });
  return m;
}

}  // namespace

CompletenessReport completeness_rank(std::span<const CMatrix> ops, double svd_cutoff) {
  if (ops.empty()) throw InputError("completeness check needs at least one operator");
  const int n = static_cast<int>(ops.front().rows());
  RMatrix m(static_cast<Eigen::Index>(ops.size()), n * n);
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (ops[k].rows() != n || ops[k].cols() != n) throw InputError("operators differ in dimension");
    m.row(static_cast<Eigen::Index>(k)) = hermitian_vec(ops[k]).transpose();
  }
  return rank_report(m, n, svd_cutoff);
}

CompletenessReport completeness_rank(const CoherentFamily& family, double svd_cutoff) {
  const int n = family.n_dim();
  if (family.size() < static_cast<std::size_t>(n) * n) {
    throw InputError("completeness check needs at least N^2 = " + std::to_string(n * n) + " grid points");
  }
  return rank_report(family_design(family), n, svd_cutoff);
}

std::vector<CMatrix> position_projectors(const FockContext& ctx) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(ctx.q_op);
  std::vector<CMatrix> out;
  for (int i = 0; i < ctx.n_dim; ++i) {
    const CVector v = es.eigenvectors().col(i);
    out.push_back(v * v.adjoint());
  }
  return out;
}

Reconstruction reconstruct_state(std::span<const double> probabilities, const CoherentFamily& family,
                                 double svd_cutoff) {
  if (probabilities.size() != family.size()) throw InputError("probability count does not match the grid size");
  const CompletenessReport rank = completeness_rank(family, svd_cutoff);
  if (!rank.complete) {
    std::ostringstream os;
    os << "POVM is not informationally complete: rank " << rank.gram_rank << " < " << rank.required;
    throw InputError(os.str());
  }
  const int n = family.n_dim();
  const RMatrix m = family_design(family);
  Eigen::Map<const RVector> prob(probabilities.data(), static_cast<Eigen::Index>(probabilities.size()));

  // Unit trace: x_0 = 1 - sum_{i=1}^{n-1} x_i (the remaining diagonal coordinates).
  const Eigen::Index dim = m.cols();
  RMatrix reduced(m.rows(), dim - 1);
  for (Eigen::Index c = 1; c < dim; ++c) {
    reduced.col(c - 1) = m.col(c);
    if (c < n) reduced.col(c - 1) -= m.col(0);
  }
  const RVector rhs = prob - m.col(0);
  const RVector y = reduced.colPivHouseholderQr().solve(rhs);
  RVector x(dim);
  x[0] = 1.0 - y.head(n - 1).sum();
  x.tail(dim - 1) = y;

  // PSD repair: clip negative eigenvalues, renormalize the trace.
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_unvec(x, n));
  RVector ev = es.eigenvalues();
  Reconstruction out;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] < 0.0) {
      out.clipped_weight += -ev[i];
      ev[i] = 0.0;
    }
  }
  const double tr = ev.sum();
  if (!(tr > 0.0)) throw NumericalError("reconstruction has no positive part");
  ev /= tr;
  out.rho = es.eigenvectors() * ev.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
  out.rho = 0.5 * (out.rho + out.rho.adjoint());
  out.residual = (m * hermitian_vec(out.rho) - prob).norm();
  out.residual_flagged = out.residual > 1e-6 * (1.0 + prob.norm());
  out.rank = rank.gram_rank;
  out.frobenius_norm = out.rho.norm();
  return out;
}

CMatrix random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    if (std::abs(d) > 0.0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

CMatrix random_density(int n, int rank, std::mt19937_64& rng) {
  if (rank < 1 || rank > n) throw InputError("density rank must lie in [1, n]");
  const CMatrix u = random_unitary(n, rng);
  std::exponential_distribution<double> e(1.0);
  RVector w = RVector::Zero(n);
  for (int i = 0; i < rank; ++i) w[i] = e(rng);
  w /= w.sum();
  CMatrix rho = u * w.cast<Complex>().asDiagonal() * u.adjoint();
  return 0.5 * (rho + rho.adjoint());
}

}  // namespace qps
