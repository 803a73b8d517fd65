#include "qps/admissibility.hpp"

#include "qps/errors.hpp"
#include "qps/kernels.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace qps {

CoherentFamily CoherentFamily::build(const ResolutionGenerator& eta, const PhaseGrid& grid, const FockContext& ctx) {
  if (eta.vector.size() != ctx.n_dim) throw InputError("generator dimension does not match the Fock context");
  return CoherentFamily{grid, eta, kernels::coherent_vectors(grid, eta.vector)};
}

std::vector<std::size_t> boundary_points(const PhaseGrid& grid) {
  std::vector<std::size_t> out;
  if (!grid.is_lattice()) return out;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto [i, j] = grid.cell[k];
    if (!grid.find_cell(i + 1, j) || !grid.find_cell(i - 1, j) || !grid.find_cell(i, j + 1) ||
        !grid.find_cell(i, j - 1)) {
      out.push_back(k);
    }
  }
  return out;
}

std::pair<Complex, double> commutator_phase(Complex x, Complex y, int low_block) {
  const double reach = std::abs(x) + std::abs(y);
  const int m = low_block + 1 + static_cast<int>(std::ceil(4.0 * reach * reach + 12.0 * reach)) + 40;
  const auto d = [m](Complex a) { return displacement_columns(a, m, m); };
  const CMatrix c = d(-x) * d(-y) * d(x) * d(y);
  const Eigen::Index b = low_block + 1;
  const Complex beta = c(0, 0);
  const CMatrix dev = c.topLeftCorner(b, b) - beta * CMatrix::Identity(b, b);
  return {beta, spectral_norm(dev)};
}

AdmissibilityReport admissibility(const ResolutionGenerator& eta, const PhaseGrid& grid, const FockContext& ctx,
                                  const AdmissibilityOptions& opts) {
  return admissibility(CoherentFamily::build(eta, grid, ctx), ctx, opts);
}

AdmissibilityReport admissibility(const CoherentFamily& family, const FockContext& ctx,
                                  const AdmissibilityOptions& opts) {
  const CVector& eta = family.eta.vector;
  const CVector overlaps = kernels::analysis(family.vectors, eta);  // <D eta, eta>
  std::vector<double> integrand(family.size());
  for (std::size_t k = 0; k < integrand.size(); ++k) integrand[k] = std::norm(overlaps[static_cast<Eigen::Index>(k)]);

  AdmissibilityReport rep;
  for (auto k : boundary_points(family.grid)) rep.boundary_max = std::max(rep.boundary_max, integrand[k]);
  if (rep.boundary_max >= opts.boundary_threshold) {
    // Smallest radius (in steps of 0.5) at which the integrand has decayed on a circle.
    double need = std::max(family.grid.radius, 0.5);
    for (; need < 100.0; need += 0.5) {
      double worst = 0.0;
      for (int a = 0; a < 32; ++a) {
        const double th = 2.0 * std::numbers::pi * a / 32.0;
        worst = std::max(worst, std::norm(displace(alpha_of(need * std::cos(th), need * std::sin(th)), eta).dot(eta)));
      }
      if (worst < opts.boundary_threshold) break;
    }
    std::ostringstream os;
    os << "admissibility integrand is " << rep.boundary_max << " on the grid edge (threshold "
       << opts.boundary_threshold << "); use a grid radius of at least " << need;
    throw InputError(os.str());
  }

  rep.integral = kernels::weighted_sum(family.weights(), integrand);
  if (!(rep.integral > 0.0)) throw NumericalError("admissibility integral vanished on this grid");
  const double n2 = eta.squaredNorm();
  rep.d_constant = n2 * n2 / rep.integral;

  // Beta check on pairs drawn from grid points with |alpha| <= 2.
  std::vector<std::size_t> pool;
  for (std::size_t k = 0; k < family.size(); ++k) {
    if (std::abs(family.grid.alpha(k)) <= 2.0) pool.push_back(k);
  }
  rep.beta_ok = true;
  if (!pool.empty()) {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int t = 0; t < opts.beta_pairs; ++t) {
      const Complex x = family.grid.alpha(pool[pick(rng)]);
      const Complex y = family.grid.alpha(pool[pick(rng)]);
      rep.beta_max_deviation = std::max(rep.beta_max_deviation, commutator_phase(x, y, ctx.low_block()).second);
    }
    rep.beta_ok = rep.beta_max_deviation <= opts.beta_tolerance;
  }
  return rep;
}

}  // namespace qps
