#include "oracles.hpp"
#include "qps/errors.hpp"
#include "qps/localization.hpp"
#include "qps/transform.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace qps;

namespace {

struct Reference {
  FockContext ctx = fock_space(24);
  PhaseGrid grid = build_grid(7.0, 0.15);
  CoherentFamily ground = CoherentFamily::build(ground_state(ctx), grid, ctx);
};

const Reference& ref() {
  static const Reference r;
  return r;
}

struct Wide {
  FockContext ctx = fock_space(32);
  PhaseGrid grid = build_grid(7.0, 0.15);
  CoherentFamily ground = CoherentFamily::build(ground_state(ctx), grid, ctx);
};

const Wide& wide() {
  static const Wide r;
  return r;
}

}  // namespace

TEST_CASE("rank-one densities") {
  const auto ctx = fock_space(32);
  const auto eta = ground_state(ctx);
  const CMatrix t0 = rank_one_density(0, 0, eta);
  CMatrix e00 = CMatrix::Zero(32, 32);
  e00(0, 0) = 1.0;
  CHECK((t0 - e00).cwiseAbs().maxCoeff() == 0.0);

  const CMatrix t = rank_one_density(std::sqrt(2.0), 0, eta);  // |alpha| = 1
  CHECK(t.trace().real() == doctest::Approx(1.0).epsilon(1e-8));
  const RVector ev = eigenvalues_desc(t);
  CHECK(ev(0) == doctest::Approx(displace(Complex(1, 0), eta.vector).squaredNorm()).epsilon(1e-12));
  for (int i = 1; i < 32; ++i) CHECK(std::abs(ev(i)) < 1e-14);
}

TEST_CASE("anti-Wick symbols on the reference grid") {
  const auto& r = ref();
  const auto one = sample_symbol(r.grid, [](double, double) { return 1.0; });
  const auto q = sample_symbol(r.grid, [](double x, double) { return x; });
  const auto p = sample_symbol(r.grid, [](double, double y) { return y; });
  const auto q2 = sample_symbol(r.grid, [](double x, double) { return x * x; });
  const CMatrix id = CMatrix::Identity(24, 24);

  CHECK((quantize(r.ground, one) - frame_operator(r.ground)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(block_norm(quantize(r.ground, q) - r.ctx.q_op, 8) <= 1e-3);
  CHECK(block_norm(quantize(r.ground, p) - r.ctx.p_op, 8) <= 1e-3);
  CHECK(block_norm(quantize(r.ground, q2) - (r.ctx.q_op * r.ctx.q_op + 0.5 * id), 8) <= 5e-3);
}

TEST_CASE("transform route") {
  const auto& r = ref();
  const auto one = sample_symbol(r.grid, [](double, double) { return 1.0; });
  CHECK(spectral_norm(quantize_via_transform(r.ground, one) - CMatrix::Identity(24, 24)) <= 1e-10);

  const std::vector<std::vector<double>> symbols = {
      sample_symbol(r.grid, [](double x, double) { return x; }),
      sample_symbol(r.grid, [](double, double y) { return y; }),
      sample_symbol(r.grid, [](double x, double) { return x * x; }),
      disk_region(2.0).symbol(r.grid),
      disk_region(3.0).symbol(r.grid),
  };
  for (const auto& f : symbols) {
    const CMatrix a = quantize_via_transform(r.ground, f);
    CHECK(hermiticity_defect(a) == 0.0);
    CHECK(block_norm(a - quantize(r.ground, f), 8) <= 5e-3);
  }
  const auto tiny = CoherentFamily::build(ground_state(r.ctx), build_grid(0.5, 0.1), r.ctx);
  CHECK_THROWS_AS(quantize_via_transform(tiny, std::vector<double>(tiny.size(), 1.0)), NumericalError);
}

TEST_CASE("quantization is linear, positive and monotone") {
  const auto& r = ref();
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> f(r.grid.size()), g(r.grid.size()), h(r.grid.size());
  for (auto& x : f) x = u(rng);
  for (auto& x : g) x = u(rng);
  const double a = 0.3, b = -1.7;
  for (std::size_t k = 0; k < h.size(); ++k) h[k] = a * f[k] + b * g[k];
  const CMatrix af = quantize(r.ground, f), ag = quantize(r.ground, g);
  CHECK((quantize(r.ground, h) - (a * af + b * ag)).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(eigenvalues_desc(af).minCoeff() >= -1e-9);

  // Trace identity against the quadrature of f weighted by |D eta|^2.
  double quad = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k)
    quad += r.grid.weight[k] * f[k] * r.ground.column(k).squaredNorm();
  CHECK(af.trace().real() == doctest::Approx(quad).epsilon(1e-12));

  const CMatrix small = quantize(r.ground, disk_region(1.5).symbol(r.grid));
  const CMatrix large = quantize(r.ground, disk_region(2.5).symbol(r.grid));
  CHECK(eigenvalues_desc(large - small).minCoeff() >= -1e-9);

  std::vector<double> bad(r.grid.size(), 0.0);
  bad[3] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(quantize(r.ground, bad), InputError);
  CHECK_THROWS_AS(quantize(r.ground, std::vector<double>(5, 0.0)), InputError);
}

TEST_CASE("disk spectrum follows the incomplete gamma law") {
  const auto& w = wide();
  const auto spec = localization_spectrum(disk_region(3.0), w.ground);
  CHECK(spec.eigenvalues(0) == doctest::Approx(0.98889).epsilon(1e-4));
  for (int n = 0; n <= 8; ++n) {
    const double exact = oracle::incomplete_gamma_p(n + 1, 4.5);
    CHECK(exact == doctest::Approx(oracle::radial_fock_mass(n, 3.0)).epsilon(1e-10));
    // Spacing 0.15 carries O(h^2) quadrature error of a few 1e-4.
    CHECK(std::abs(spec.eigenvalues(n) - exact) <= 1e-3);
  }
  CHECK(spec.near_one + spec.near_zero + spec.mid == 32);
  CHECK(spec.trace == doctest::Approx(spec.eigenvalues.sum()).epsilon(1e-12));
  for (double l : spec.eigenvalues) CHECK((l >= -1e-9 && l <= 1 + 1e-9));
  CHECK_THROWS_AS(localization_spectrum(disk_region(3.0), w.ground, 0.5), InputError);
  CHECK_THROWS_AS(localization_spectrum(disk_region(3.0), w.ground, 0.0), InputError);
}

TEST_CASE("trivial regions") {
  const auto& r = ref();
  const auto empty = localization_spectrum(empty_region(), r.ground);
  CHECK(empty.eigenvalues.cwiseAbs().maxCoeff() == 0.0);
  CHECK(empty.near_zero == 24);
  const auto full = localization_spectrum(parse_region("full"), r.ground);
  const RVector s = eigenvalues_desc(frame_operator(r.ground));
  CHECK((full.eigenvalues - s).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("clustering bounds") {
  const auto& w = wide();
  for (const auto& region : standard_battery()) {
    const auto c = clustering_report(localization_spectrum(region, w.ground));
    CHECK_MESSAGE(c.bounds_ok(), region.label);
  }
  // mu = 0.5: at most one eigenvalue near one.
  const auto small = localization_spectrum(disk_region(1.0), w.ground);
  CHECK(small.mu_delta == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(small.near_one <= 1);

  const auto d3 = clustering_report(localization_spectrum(disk_region(3.0), w.ground));
  CHECK(d3.trace == doctest::Approx(4.5).epsilon(0.05 / 4.5));

  double previous = std::numeric_limits<double>::infinity();
  for (double radius : {3.0, 4.0, 5.0}) {
    const auto c = clustering_report(localization_spectrum(disk_region(radius), w.ground));
    CHECK(c.mid_to_near_one < previous);
    previous = c.mid_to_near_one;
  }
}

TEST_CASE("channel capacity") {
  const auto& w = wide();
  const auto c8 = channel_capacity(disk_region(4.0), w.ground);
  CHECK(c8.mu_delta == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(std::abs(c8.count - 8) <= 1);
  const auto c0 = channel_capacity(disk_region(std::sqrt(0.5)), w.ground);
  CHECK(c0.count == 0);
  const auto& r = ref();
  CHECK(channel_capacity(parse_region("full"), r.ground).count >= r.ctx.low_block() + 1);
  CHECK_THROWS_AS(channel_capacity(disk_region(1.0), w.ground, 1.0), InputError);
}
