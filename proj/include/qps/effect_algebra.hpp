#pragma once

// Effects (0 <= A <= I), the partial sum, Definition-style axiom checks,
// POVM additivity, the projection scan on quantized regions, and pointwise
// MV / lattice / Heyting operations on fuzzy symbols.

#include "qps/family.hpp"
#include "qps/region.hpp"

#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>

namespace qps {

inline constexpr double kEffectTolerance = 1e-9;

struct EffectMargins {
  bool is_effect = false;
  double lower = 0.0;  // min eigenvalue
  double upper = 0.0;  // 1 - max eigenvalue
};

/// Throws InputError when A is not Hermitian.
EffectMargins is_effect(const CMatrix& a);

/// An operator known to satisfy 0 <= A <= I within kEffectTolerance.
class Effect {
 public:
  /// Throws InputError for non-effects.
  explicit Effect(CMatrix m);

  static Effect zero(int n) { return Effect(CMatrix::Zero(n, n)); }
  static Effect identity(int n) { return Effect(CMatrix::Identity(n, n)); }

  const CMatrix& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

 private:
  CMatrix m_;
};

/// A + B when A + B <= I (max eigenvalue <= 1 + 1e-9); nullopt otherwise.
std::optional<Effect> oplus(const Effect& a, const Effect& b);

/// I - A.
Effect complement(const Effect& a);

/// Symbol-level partial sum: f + g when f + g <= 1 pointwise.
std::optional<std::vector<double>> oplus_symbols(std::span<const double> f, std::span<const double> g);

struct AxiomWitness {
  std::string axiom;
  int trial = 0;
  double defect = 0.0;
};

struct AxiomReport {
  int trials = 0;
  int rejected = 0;  // sampler outputs refused by the effect gate
  int commutativity = 0;
  int associativity = 0;
  int unique_complement = 0;
  int zero_one = 0;
  int associativity_tested = 0;  // triples where all sums were defined
  int zero_one_tested = 0;       // cases where a (+) I was defined
  std::vector<AxiomWitness> witnesses;  // at most 5

  int failures() const { return commutativity + associativity + unique_complement + zero_one; }
};

using EffectSampler = std::function<CMatrix(std::mt19937_64&)>;

/// Random effects U diag(s u_i) U^H with s drawn from {1, 1/2, 1/3}, mixed
/// with occasional 0 and I.
EffectSampler random_effect_sampler(int n);

/// Each trial draws three operators; any that fail is_effect are counted as
/// rejected and the trial is skipped. Requires trials >= 1.
AxiomReport verify_axioms(const EffectSampler& sampler, int trials, std::uint64_t seed);

struct PovmReport {
  double sum_minus_frame = 0.0;   // |sum_j A(chi_j) - S|
  double frame_minus_identity = 0.0;  // |S - I| on the low block
  bool all_positive = false;
  int parts = 0;
};

/// Throws InputError when the regions overlap or do not cover the grid.
PovmReport povm_check(std::span<const RegionSpec> regions, const CoherentFamily& family, int low_block);

struct ProjectionScanEntry {
  std::string label;
  double mu_delta = 0.0;
  double gap = 0.0;  // max_i lambda_i (1 - lambda_i)
  bool passes = false;
};

struct ProjectionScanReport {
  double projection_gap = 0.02;
  std::vector<ProjectionScanEntry> entries;
  bool all_pass() const;
};

/// Requires 0 < mu(Delta) < mu(grid) for every region.
ProjectionScanReport projection_scan(const CoherentFamily& family, std::span<const RegionSpec> deltas,
                                     double projection_gap = 0.02);

enum class SymbolOp { oplus, neg, meet, join, imp_godel, imp_luk };

/// Validated [0,1]-valued grid function.
struct FuzzySymbol {
  std::vector<double> values;

  /// Throws InputError when any value leaves [0, 1].
  static FuzzySymbol make(std::vector<double> values);
  /// Indicator symbols are fuzzy symbols with values in {0, 1}.
  bool is_indicator() const;
};

/// Pointwise: min(f+g,1), 1-f, min, max, Goedel implication, Lukasiewicz
/// implication. `g` is ignored for neg.
FuzzySymbol symbol_mv_ops(const FuzzySymbol& f, const FuzzySymbol& g, SymbolOp op);

SymbolOp parse_symbol_op(const std::string& name);

}  // namespace qps
