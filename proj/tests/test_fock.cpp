#include "oracles.hpp"
#include "qps/errors.hpp"
#include "qps/fock.hpp"

#include <doctest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <random>

using namespace qps;

TEST_CASE("ladder operators") {
  const auto c2 = fock_space(2);
  CHECK(c2.lowering(0, 1) == Complex(1.0));
  CHECK(c2.lowering(0, 0) == Complex(0.0));
  CHECK(c2.lowering(1, 0) == Complex(0.0));
  CHECK(c2.lowering(1, 1) == Complex(0.0));
  CHECK_THROWS_AS(fock_space(1), InputError);

  const auto c8 = fock_space(8);
  CHECK(hermiticity_defect(c8.q_op) < 1e-15);
  CHECK(hermiticity_defect(c8.p_op) < 1e-15);
  const CMatrix comm = c8.q_op * c8.p_op - c8.p_op * c8.q_op;
  const CMatrix target = Complex(0, 1) * CMatrix::Identity(7, 7);
  CHECK((comm.topLeftCorner(7, 7) - target).cwiseAbs().maxCoeff() < 1e-12);

  const RVector ev = eigenvalues_desc(c8.q_op);
  for (int i = 0; i < 8; ++i) CHECK(ev(i) == doctest::Approx(-ev(7 - i)).epsilon(1e-12));
}

TEST_CASE("displacement matrix elements") {
  const auto ctx = fock_space(16);
  const auto d0 = displacement(Complex(0, 0), ctx);
  CHECK((d0.matrix - CMatrix::Identity(16, 16)).cwiseAbs().maxCoeff() == 0.0);
  CHECK_FALSE(d0.truncation_warning);

  const auto d1 = displacement(Complex(1, 0), ctx);
  CHECK(std::abs(d1.matrix(0, 0) - std::exp(-0.5)) < 1e-15);
  CHECK(std::abs(d1.matrix(0, 0)) == doctest::Approx(0.60653).epsilon(1e-5));

  // Column 0 is the coherent state.
  const Complex a(0.7, -1.1);
  const auto da = displacement(a, ctx);
  for (int m = 0; m < 16; ++m) CHECK(std::abs(da.matrix(m, 0) - oracle::coherent_amplitude(m, a)) < 1e-14);
}

TEST_CASE("closed form agrees with the matrix exponential at N=64") {
  const auto ctx = fock_space(64);
  for (Complex a : {Complex(1, 0), Complex(0.3, 0.4), Complex(-1.2, 1.5), Complex(0, -2)}) {
    const CMatrix ref = oracle::expm_displacement(a, 220, 64);
    const CMatrix got = displacement(a, ctx).matrix;
    CHECK((got - ref).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("unitarity away from the truncation edge") {
  // At |alpha| = 2 the column D(alpha)|n> spreads over roughly
  // (sqrt(n) - 2)^2 .. (sqrt(n) + 2)^2, so at N = 32 only n <= 7 keeps its norm
  // to 1e-6 and D(-alpha) D(alpha) = I to 1e-8 holds on n <= 5.
  const auto ctx = fock_space(32);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.4, 1.4);
  for (int t = 0; t < 20; ++t) {
    Complex a(u(rng), u(rng));
    if (std::abs(a) > 2.0) a *= 2.0 / std::abs(a);
    const auto d = displacement(a, ctx);
    const auto dm = displacement(-a, ctx);
    const CMatrix prod = dm.matrix * d.matrix;
    CHECK((prod.topLeftCorner(6, 6) - CMatrix::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-8);
    for (int n = 0; n <= 7; ++n) CHECK(std::abs(d.matrix.col(n).norm() - 1.0) < 1e-6);
  }
  const auto big = fock_space(64);
  const CMatrix prod = displacement(Complex(-2, 0), big).matrix * displacement(Complex(2, 0), big).matrix;
  CHECK((prod.topLeftCorner(27, 27) - CMatrix::Identity(27, 27)).cwiseAbs().maxCoeff() < 1e-8);

  CHECK_FALSE(displacement(Complex(0.5, 0), ctx).truncation_warning);
  CHECK(displacement(Complex(2, 0), ctx).truncation_warning);
  CHECK(displacement(Complex(8, 0), fock_space(16)).truncation_warning);
}

TEST_CASE("coherent overlaps") {
  const auto ctx = fock_space(32);
  const std::vector<Complex> pts = {Complex(0, 0), Complex(1, 1), Complex(-1.5, 0.5), Complex(0.2, -1.9)};
  for (Complex a : pts)
    for (Complex b : pts) {
      const CVector va = displacement(a, ctx).matrix.col(0);
      const CVector vb = displacement(b, ctx).matrix.col(0);
      const Complex expect = std::exp(-std::norm(a) / 2.0 - std::norm(b) / 2.0 + std::conj(a) * b);
      CHECK(std::abs(va.dot(vb) - expect) < 1e-8);
    }
}

TEST_CASE("displace uses only the support of eta") {
  const auto ctx = fock_space(20);
  CVector eta = CVector::Zero(20);
  eta(1) = Complex(0.6, 0);
  eta(3) = Complex(0, 0.8);
  const Complex a(0.5, -0.9);
  const CVector full = displacement(a, ctx).matrix * eta;
  CHECK((displace(a, eta) - full).cwiseAbs().maxCoeff() < 1e-14);
  const CMatrix cols = displacement_columns(a, 20, 4);
  CHECK((cols - displacement(a, ctx).matrix.leftCols(4)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("resolution generators") {
  const auto ctx = fock_space(8);
  const auto g = ground_state(ctx);
  CHECK(g.vector.size() == 8);
  CHECK(g.vector(0) == Complex(1.0));
  CHECK(g.vector.tail(7).norm() == 0.0);
  const auto f1 = fock_state(1, ctx);
  CHECK(f1.vector(1) == Complex(1.0));
  CHECK(f1.vector.norm() == 1.0);
  CHECK((squeezed_state(0.0, ctx).vector - g.vector).norm() == 0.0);
  CHECK_THROWS_AS(fock_state(8, ctx), InputError);
  CHECK_THROWS_AS(fock_state(-1, ctx), InputError);
  CHECK_THROWS_AS(squeezed_state(1.6, ctx), InputError);
  CHECK_THROWS_AS(parse_generator("coherent", ctx), InputError);
  CHECK_THROWS_AS(parse_generator("fock:x", ctx), InputError);
  CHECK(parse_generator("fock:2", ctx).fock_index == 2);
  CHECK(parse_generator("squeezed:0.5", ctx).kind == ResolutionGenerator::Kind::squeezed);
  CHECK(parse_generator("ground", ctx).label() == "ground");

  CVector v = CVector::Zero(8);
  v(2) = Complex(3, 4);
  CHECK(custom_generator(v).vector.norm() == doctest::Approx(1.0));
  CHECK_THROWS_AS(custom_generator(CVector::Zero(8)), InputError);
}

TEST_CASE("squeezed vacuum matches exp of the squeeze generator") {
  // S(r)|0> with S(r) = exp(r (a^2 - a^dag^2) / 2), built at a large dimension.
  const int big = 160;
  const auto large = fock_space(big);
  const auto ctx = fock_space(32);
  for (double r : {0.3, -0.5, 1.0}) {
    const CMatrix gen = 0.5 * r * (large.lowering * large.lowering - large.raising * large.raising);
    const CVector ref = gen.exp().col(0).head(32);
    const CVector got = squeezed_state(r, ctx).vector;
    CHECK((got - ref / ref.norm()).norm() < 1e-8);
    CHECK(got.norm() == doctest::Approx(1.0).epsilon(1e-14));
  }
}
