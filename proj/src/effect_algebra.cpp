#include "qps/effect_algebra.hpp"

#include "qps/errors.hpp"
#include "qps/kernels.hpp"
#include "qps/localization.hpp"
#include "qps/tomography.hpp"
#include "qps/transform.hpp"

#include <algorithm>
#include <cmath>

namespace qps {

EffectMargins is_effect(const CMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("effect candidate must be square");
  if (hermiticity_defect(a) > 1e-10) throw InputError("effect candidate is not Hermitian");
  const RVector ev = eigenvalues_desc(a);
  EffectMargins m;
  m.lower = ev[ev.size() - 1];
  m.upper = 1.0 - ev[0];
  m.is_effect = m.lower >= -kEffectTolerance && m.upper >= -kEffectTolerance;
  return m;
}

Effect::Effect(CMatrix m) : m_(std::move(m)) {
  if (!is_effect(m_).is_effect) throw InputError("operator is not an effect (0 <= A <= I fails)");
}

std::optional<Effect> oplus(const Effect& a, const Effect& b) {
  if (a.dim() != b.dim()) throw InputError("effects differ in dimension");
  CMatrix s = a.matrix() + b.matrix();
  if (eigenvalues_desc(s)[0] > 1.0 + kEffectTolerance) return std::nullopt;
  return Effect(std::move(s));
}

Effect complement(const Effect& a) {
  return Effect(CMatrix::Identity(a.dim(), a.dim()) - a.matrix());
}

std::optional<std::vector<double>> oplus_symbols(std::span<const double> f, std::span<const double> g) {
  if (f.size() != g.size()) throw InputError("symbols differ in length");
  std::vector<double> out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    out[k] = f[k] + g[k];
    if (out[k] > 1.0) return std::nullopt;
  }
  return out;
}

EffectSampler random_effect_sampler(int n) {
  return [n](std::mt19937_64& rng) -> CMatrix {
    std::uniform_int_distribution<int> kind(0, 19);
    const int k = kind(rng);
    if (k == 0) return CMatrix::Zero(n, n);
    if (k == 1) return CMatrix::Identity(n, n);
    static constexpr double scales[] = {1.0, 0.5, 1.0 / 3.0};
    const double s = scales[k % 3];
    std::uniform_real_distribution<double> u(0.0, 1.0);
    RVector d(n);
    for (int i = 0; i < n; ++i) d[i] = s * u(rng);
    const CMatrix v = random_unitary(n, rng);
    CMatrix a = v * d.cast<Complex>().asDiagonal() * v.adjoint();
    return 0.5 * (a + a.adjoint());
  };
}

namespace {

// Numerical equality of operators; the ops are exact only up to rounding.
constexpr double kOpTol = 1e-10;

double diff(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

void record(AxiomReport& rep, const std::string& axiom, int trial, double defect) {
  if (rep.witnesses.size() < 5) rep.witnesses.push_back({axiom, trial, defect});
}

}  // namespace

AxiomReport verify_axioms(const EffectSampler& sampler, int trials, std::uint64_t seed) {
  if (trials < 1) throw InputError("verify_axioms needs trials >= 1");
  std::mt19937_64 rng(seed);
  AxiomReport rep;
  rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    std::vector<Effect> e;
    bool gated = false;
    for (int i = 0; i < 3; ++i) {
      CMatrix m = sampler(rng);
      try {
        if (!is_effect(m).is_effect) {
          gated = true;
          continue;
        }
      } catch (const InputError&) {
        gated = true;
        continue;
      }
      e.emplace_back(std::move(m));
    }
    if (gated) {
      ++rep.rejected;
      continue;
    }
    const Effect &a = e[0], &b = e[1], &c = e[2];
    const int n = a.dim();
    const CMatrix id = CMatrix::Identity(n, n);

    // i) commutativity: definedness agrees and sums coincide.
    const auto ab = oplus(a, b), ba = oplus(b, a);
    if (ab.has_value() != ba.has_value()) {
      ++rep.commutativity;
      record(rep, "commutativity", t, 1.0);
    } else if (ab && diff(ab->matrix(), ba->matrix()) > kOpTol) {
      ++rep.commutativity;
      record(rep, "commutativity", t, diff(ab->matrix(), ba->matrix()));
    }

    // ii) associativity, on triples where b (+) c and a (+) b are both defined.
    const auto bc = oplus(b, c);
    if (ab && bc) {
      const auto left = oplus(*ab, c), right = oplus(a, *bc);
      ++rep.associativity_tested;
      if (left.has_value() != right.has_value()) {
        // Both sums equal a+b+c up to rounding; only a boundary tie may disagree.
        const double top = eigenvalues_desc(a.matrix() + b.matrix() + c.matrix())[0];
        if (std::abs(top - 1.0 - kEffectTolerance) > 1e-12) {
          ++rep.associativity;
          record(rep, "associativity", t, top - 1.0);
        }
      } else if (left && diff(left->matrix(), right->matrix()) > kOpTol) {
        ++rep.associativity;
        record(rep, "associativity", t, diff(left->matrix(), right->matrix()));
      }
    }

    // iii) unique complement: solving a (+) x = I gives x = I - a, which is an
    // effect, and any other effect y with a (+) y = I coincides with it.
    {
      const CMatrix x = id - a.matrix();
      const auto xm = is_effect(x);
      const auto sum = xm.is_effect ? oplus(a, Effect(x)) : std::nullopt;
      const Effect comp = complement(a);
      double defect = xm.is_effect ? 0.0 : 1.0;
      if (sum) defect = std::max(defect, diff(sum->matrix(), id));
      else defect = std::max(defect, 1.0);
      defect = std::max(defect, diff(comp.matrix(), x));
      // b is a different effect; a (+) b = I must force b = I - a.
      if (ab && diff(ab->matrix(), id) <= kOpTol) defect = std::max(defect, diff(b.matrix(), x));
      if (defect > kOpTol) {
        ++rep.unique_complement;
        record(rep, "unique_complement", t, defect);
      }
    }

    // iv) a (+) I defined implies a = 0.
    if (oplus(a, Effect::identity(n))) {
      ++rep.zero_one_tested;
      const double nrm = spectral_norm(a.matrix());
      if (nrm > kEffectTolerance) {
        ++rep.zero_one;
        record(rep, "zero_one", t, nrm);
      }
    }
  }
  return rep;
}

PovmReport povm_check(std::span<const RegionSpec> regions, const CoherentFamily& family, int low_block) {
  if (regions.empty()) throw InputError("POVM check needs at least one region");
  const std::size_t n = family.size();
  std::vector<std::vector<double>> symbols;
  std::vector<double> cover(n, 0.0);
  for (const auto& r : regions) {
    symbols.push_back(r.symbol(family.grid));
    for (std::size_t k = 0; k < n; ++k) cover[k] += symbols.back()[k];
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (cover[k] > 1.0 + 1e-12) throw InputError("POVM regions overlap");
    if (cover[k] < 1.0 - 1e-12) throw InputError("POVM regions do not cover the grid");
  }
  PovmReport rep;
  rep.parts = static_cast<int>(regions.size());
  rep.all_positive = true;
  const CMatrix s = frame_operator(family);
  CMatrix total = CMatrix::Zero(s.rows(), s.cols());
  for (const auto& sym : symbols) {
    const CMatrix a = quantize(family, sym);
    if (eigenvalues_desc(a).minCoeff() < -kEffectTolerance) rep.all_positive = false;
    total += a;
  }
  rep.sum_minus_frame = spectral_norm(total - s);
  rep.frame_minus_identity = block_norm(s - CMatrix::Identity(s.rows(), s.cols()), low_block);
  return rep;
}

bool ProjectionScanReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.passes; });
}

ProjectionScanReport projection_scan(const CoherentFamily& family, std::span<const RegionSpec> deltas,
                                     double projection_gap) {
  ProjectionScanReport rep;
  rep.projection_gap = projection_gap;
  const double total = family.grid.total_measure();
  for (const auto& d : deltas) {
    const auto sym = d.symbol(family.grid);
    ProjectionScanEntry e;
    e.label = d.label;
    e.mu_delta = kernels::weighted_sum(family.grid.weight, sym);
    if (!(e.mu_delta > 0.0 && e.mu_delta < total)) {
      throw InputError("projection scan region '" + d.label + "' must have 0 < mu < mu(grid)");
    }
    const RVector ev = eigenvalues_desc(quantize(family, sym));
    for (double l : ev) e.gap = std::max(e.gap, l * (1.0 - l));
    e.passes = e.gap >= projection_gap;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

FuzzySymbol FuzzySymbol::make(std::vector<double> values) {
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0)) throw InputError("fuzzy symbol values must lie in [0, 1]");
  }
  return FuzzySymbol{std::move(values)};
}

bool FuzzySymbol::is_indicator() const {
  return std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0 || v == 1.0; });
}

FuzzySymbol symbol_mv_ops(const FuzzySymbol& f, const FuzzySymbol& g, SymbolOp op) {
  if (op != SymbolOp::neg && f.values.size() != g.values.size()) throw InputError("symbols differ in length");
  std::vector<double> out(f.values.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double a = f.values[k];
    const double b = op == SymbolOp::neg ? 0.0 : g.values[k];
    switch (op) {
      case SymbolOp::oplus: out[k] = std::min(a + b, 1.0); break;
      case SymbolOp::neg: out[k] = 1.0 - a; break;
      case SymbolOp::meet: out[k] = std::min(a, b); break;
      case SymbolOp::join: out[k] = std::max(a, b); break;
      case SymbolOp::imp_godel: out[k] = a <= b ? 1.0 : b; break;
      case SymbolOp::imp_luk: out[k] = std::min(1.0, 1.0 - a + b); break;
    }
  }
  return FuzzySymbol{std::move(out)};
}

SymbolOp parse_symbol_op(const std::string& name) {
  if (name == "oplus") return SymbolOp::oplus;
  if (name == "neg") return SymbolOp::neg;
  if (name == "meet") return SymbolOp::meet;
  if (name == "join") return SymbolOp::join;
  if (name == "imp_godel") return SymbolOp::imp_godel;
  if (name == "imp_luk") return SymbolOp::imp_luk;
  throw InputError("unknown symbol operation '" + name + "'");
}

}  // namespace qps
