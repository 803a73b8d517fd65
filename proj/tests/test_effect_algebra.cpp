#include "qps/effect_algebra.hpp"
#include "qps/errors.hpp"
#include "qps/localization.hpp"
#include "qps/tomography.hpp"

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

// Dyadic values k / 1024 keep every MV operation exact in binary floating point.
FuzzySymbol dyadic_symbol(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> k(0, 1024);
  std::vector<double> v(n);
  for (auto& x : v) x = k(rng) / 1024.0;
  // Pin the end points so the boundary cases are always exercised.
  v[0] = 0.0;
  v[1] = 1.0;
  return FuzzySymbol::make(std::move(v));
}

std::vector<double> op(const FuzzySymbol& f, const FuzzySymbol& g, SymbolOp o) {
  return symbol_mv_ops(f, g, o).values;
}

FuzzySymbol fs(std::vector<double> v) { return FuzzySymbol::make(std::move(v)); }

}  // namespace

TEST_CASE("effect margins") {
  const auto half = is_effect(0.5 * CMatrix::Identity(3, 3));
  CHECK(half.is_effect);
  CHECK(half.lower == doctest::Approx(0.5));
  CHECK(half.upper == doctest::Approx(0.5));
  CHECK_FALSE(is_effect(2.0 * CMatrix::Identity(3, 3)).is_effect);
  CHECK_FALSE(is_effect(-0.1 * CMatrix::Identity(3, 3)).is_effect);
  CMatrix nh = CMatrix::Zero(2, 2);
  nh(0, 1) = 0.3;
  CHECK_THROWS_AS(is_effect(nh), InputError);
  CHECK_THROWS_AS(Effect(2.0 * CMatrix::Identity(2, 2)), InputError);

  const auto& r = ref();
  CHECK(is_effect(quantize(r.ground, disk_region(2.0).symbol(r.grid))).is_effect);
}

TEST_CASE("partial sum and complement") {
  const Effect half(0.5 * CMatrix::Identity(4, 4));
  const Effect two_thirds(2.0 / 3.0 * CMatrix::Identity(4, 4));
  CHECK_FALSE(oplus(half, two_thirds).has_value());
  CHECK((complement(half).matrix() - half.matrix()).norm() == 0.0);
  CHECK((complement(Effect::zero(4)).matrix() - CMatrix::Identity(4, 4)).norm() == 0.0);

  std::mt19937_64 rng(3);
  const auto sample = random_effect_sampler(5);
  for (int t = 0; t < 20; ++t) {
    const Effect a(sample(rng));
    const auto sum = oplus(a, complement(a));
    REQUIRE(sum.has_value());
    CHECK((sum->matrix() - CMatrix::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-15);
    // Off-diagonal entries return exactly; diagonal ones within one ulp of 1.
    CHECK((complement(complement(a)).matrix() - a.matrix()).cwiseAbs().maxCoeff() <= 2.3e-16);
  }
}

TEST_CASE("quantized regions add like sets") {
  const auto& r = ref();
  const auto inner = disk_region(1.5).symbol(r.grid), ring = annulus_region(1.5, 3.0).symbol(r.grid),
             whole = disk_region(3.0).symbol(r.grid);
  const Effect a(quantize(r.ground, inner)), b(quantize(r.ground, ring));
  const auto sum = oplus(a, b);
  REQUIRE(sum.has_value());
  CHECK((sum->matrix() - quantize(r.ground, whole)).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(oplus_symbols(inner, ring).has_value());
  CHECK_FALSE(oplus_symbols(whole, whole).has_value());

  // complement(A(f)) = A(1 - f) up to the frame defect S - I.
  std::vector<double> neg(whole.size());
  for (std::size_t k = 0; k < neg.size(); ++k) neg[k] = 1.0 - whole[k];
  const CMatrix c = complement(Effect(quantize(r.ground, whole))).matrix();
  CHECK(block_norm(c - quantize(r.ground, neg), 8) <= 1e-3);
}

TEST_CASE("axioms on random effects") {
  const auto rep = verify_axioms(random_effect_sampler(6), 1000, 1);
  CHECK(rep.trials == 1000);
  CHECK(rep.failures() == 0);
  CHECK(rep.rejected == 0);
  CHECK(rep.associativity_tested > 0);
  CHECK(rep.zero_one_tested > 0);
  CHECK(rep.witnesses.empty());
  CHECK_THROWS_AS(verify_axioms(random_effect_sampler(2), 0, 1), InputError);
}

TEST_CASE("axioms with only zero and identity") {
  const EffectSampler trivial = [](std::mt19937_64& rng) -> CMatrix {
    return (rng() % 2) ? CMatrix(CMatrix::Identity(3, 3)) : CMatrix(CMatrix::Zero(3, 3));
  };
  const auto rep = verify_axioms(trivial, 200, 4);
  CHECK(rep.failures() == 0);
  CHECK(rep.zero_one_tested > 0);
}

TEST_CASE("non-effects are gated out") {
  const EffectSampler bad = [](std::mt19937_64& rng) -> CMatrix {
    return (rng() % 3 == 0) ? CMatrix(1.5 * CMatrix::Identity(3, 3)) : CMatrix(0.25 * CMatrix::Identity(3, 3));
  };
  const auto rep = verify_axioms(bad, 300, 2);
  CHECK(rep.rejected > 0);
  CHECK(rep.failures() == 0);
}

TEST_CASE("POVM additivity") {
  const auto& r = ref();
  constexpr double inf = std::numeric_limits<double>::infinity();
  const std::vector<RegionSpec> quads = {rect_region(0, inf, 0, inf), rect_region(-inf, 0, 0, inf),
                                         rect_region(-inf, 0, -inf, 0), rect_region(0, inf, -inf, 0)};
  const auto q = povm_check(quads, r.ground, 8);
  CHECK(q.sum_minus_frame <= 1e-12);
  CHECK(q.frame_minus_identity <= 1e-3);
  CHECK(q.all_positive);
  CHECK(q.parts == 4);

  const std::vector<RegionSpec> rings = {disk_region(2.0), annulus_region(2.0, 4.0), annulus_region(4.0, 100.0)};
  const auto a = povm_check(rings, r.ground, 8);
  CHECK(a.sum_minus_frame <= 1e-12);
  const std::vector<RegionSpec> finer = {disk_region(2.0), annulus_region(2.0, 3.0), annulus_region(3.0, 4.0),
                                         annulus_region(4.0, 100.0)};
  const auto b = povm_check(finer, r.ground, 8);
  CHECK(b.sum_minus_frame <= 1e-12);
  CHECK(b.frame_minus_identity == doctest::Approx(a.frame_minus_identity).epsilon(1e-9));

  const std::vector<RegionSpec> overlap = {disk_region(3.0), parse_region("full")};
  CHECK_THROWS_AS(povm_check(overlap, r.ground, 8), InputError);
  const std::vector<RegionSpec> gap = {disk_region(3.0)};
  CHECK_THROWS_AS(povm_check(gap, r.ground, 8), InputError);
}

TEST_CASE("no nontrivial projections") {
  const auto& r = ref();
  const auto rep = projection_scan(r.ground, standard_battery());
  CHECK(rep.all_pass());
  CHECK(rep.entries.size() == 6);
  for (const auto& e : rep.entries) CHECK_MESSAGE(e.gap >= 0.02, e.label);
  const std::vector<RegionSpec> disks = {disk_region(2.0), disk_region(3.0)};
  const auto d = projection_scan(r.ground, disks);
  const double l0 = 1 - std::exp(-2.0);
  CHECK(d.entries[0].gap >= l0 * (1 - l0) - 1e-3);
  CHECK(d.entries[1].gap >= 0.05);

  const std::vector<RegionSpec> full = {parse_region("full")};
  CHECK_THROWS_AS(projection_scan(r.ground, full), InputError);
  const std::vector<RegionSpec> empty = {empty_region()};
  CHECK_THROWS_AS(projection_scan(r.ground, empty), InputError);
}

TEST_CASE("symbol operations") {
  const auto half = fs({0.5, 0.5});
  const auto neg = op(half, half, SymbolOp::neg);
  CHECK(op(half, fs(neg), SymbolOp::meet) == std::vector<double>{0.5, 0.5});
  const auto f = fs({0.0, 0.25, 1.0});
  const auto g = fs({0.5, 0.125, 1.0});
  CHECK(op(f, fs(op(f, f, SymbolOp::neg)), SymbolOp::oplus) == std::vector<double>{1, 1, 1});
  CHECK(op(f, f, SymbolOp::imp_godel) == std::vector<double>{1, 1, 1});
  CHECK(op(f, g, SymbolOp::imp_godel) == std::vector<double>{1, 0.125, 1});
  CHECK(op(f, g, SymbolOp::imp_luk) == std::vector<double>{1, 0.875, 1});
  CHECK(op(f, g, SymbolOp::join) == std::vector<double>{0.5, 0.25, 1});
  CHECK(fs({0.0, 1.0}).is_indicator());
  CHECK_FALSE(half.is_indicator());
  CHECK_THROWS_AS(FuzzySymbol::make({1.5}), InputError);
  CHECK_THROWS_AS(symbol_mv_ops(f, half, SymbolOp::meet), InputError);
  CHECK(parse_symbol_op("imp_luk") == SymbolOp::imp_luk);
  CHECK_THROWS_AS(parse_symbol_op("xor"), InputError);

  // Indicators of regions are fuzzy symbols.
  const auto grid = build_grid(3.0, 0.3);
  CHECK_NOTHROW(FuzzySymbol::make(rect_region(-1, 1, -1, 1).symbol(grid)));
}

TEST_CASE("MV, lattice and Heyting laws on random dyadic symbols") {
  std::mt19937_64 rng(500);
  const std::size_t n = 64;
  for (int t = 0; t < 500; ++t) {
    const auto f = dyadic_symbol(n, rng), g = dyadic_symbol(n, rng), h = dyadic_symbol(n, rng);
    const auto nf = fs(op(f, f, SymbolOp::neg)), ng = fs(op(g, g, SymbolOp::neg));

    CHECK(op(f, g, SymbolOp::oplus) == op(g, f, SymbolOp::oplus));
    CHECK(op(fs(op(f, g, SymbolOp::oplus)), h, SymbolOp::oplus) == op(f, fs(op(g, h, SymbolOp::oplus)), SymbolOp::oplus));
    CHECK(op(nf, nf, SymbolOp::neg) == f.values);
    // Lukasiewicz axiom.
    const auto lhs = op(fs(op(fs(op(nf, g, SymbolOp::oplus)), g, SymbolOp::neg)), g, SymbolOp::oplus);
    const auto rhs = op(fs(op(fs(op(ng, f, SymbolOp::oplus)), f, SymbolOp::neg)), f, SymbolOp::oplus);
    CHECK(lhs == rhs);

    // Distributivity.
    CHECK(op(f, fs(op(g, h, SymbolOp::join)), SymbolOp::meet) ==
          op(fs(op(f, g, SymbolOp::meet)), fs(op(f, h, SymbolOp::meet)), SymbolOp::join));
    CHECK(op(f, fs(op(g, h, SymbolOp::meet)), SymbolOp::join) ==
          op(fs(op(f, g, SymbolOp::join)), fs(op(f, h, SymbolOp::join)), SymbolOp::meet));

    // Goedel adjunction: h meet f <= g iff h <= (f -> g).
    const auto hf = op(h, f, SymbolOp::meet);
    const auto imp = op(f, g, SymbolOp::imp_godel);
    for (std::size_t k = 0; k < n; ++k) CHECK((hf[k] <= g.values[k]) == (h.values[k] <= imp[k]));
  }
}
