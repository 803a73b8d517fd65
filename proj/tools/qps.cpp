// qps: command-line front end for the phase-space toolkit.
//
// Exit codes: 0 success, 1 I/O or parse error, 2 validation error.

#include "qps/algebra_io.hpp"
#include "qps/errors.hpp"
#include "qps/parallel.hpp"
#include "qps/report_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

using nlohmann::json;
using namespace qps;

namespace {

struct GridOptions {
  int dim = 0;
  double radius = 7.0;
  double spacing = 0.15;
  std::string generator = "ground";
};

struct Common {
  std::string out;
  std::string format = "json";
  int threads = 0;
};

void add_grid_options(CLI::App* cmd, GridOptions& g) {
  cmd->add_option("--dim", g.dim, "Fock truncation dimension N")->capture_default_str();
  cmd->add_option("--radius", g.radius, "phase-space disk radius")->capture_default_str();
  cmd->add_option("--spacing", g.spacing, "lattice spacing")->capture_default_str();
  cmd->add_option("--generator", g.generator, "ground | fock:n | squeezed:r")->capture_default_str();
}

void add_common(CLI::App* cmd, Common& c, bool csv_allowed) {
  cmd->add_option("--out", c.out, "output file (default stdout)");
  auto* f = cmd->add_option("--format", c.format, "output format")->capture_default_str();
  if (csv_allowed) {
    f->check(CLI::IsMember({"json", "csv"}));
  } else {
    f->check(CLI::IsMember({"json"}));
  }
  cmd->add_option("--threads", c.threads, "worker threads (overrides QPS_THREADS)");
}

json grid_config(const GridOptions& g) {
  return {{"dim", g.dim}, {"radius", g.radius}, {"spacing", g.spacing}, {"generator", g.generator}};
}

struct Setup {
  FockContext ctx;
  PhaseGrid grid;
  ResolutionGenerator eta;
  CoherentFamily family;
};

Setup make_setup(const GridOptions& g) {
  Setup s{fock_space(g.dim), build_grid(g.radius, g.spacing), {}, {}};
  s.eta = parse_generator(g.generator, s.ctx);
  s.family = CoherentFamily::build(s.eta, s.grid, s.ctx);
  return s;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw IoError("cannot open output file '" + c.out + "'");
  f << text;
  if (!f) throw IoError("failed writing '" + c.out + "'");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---- cohomology -------------------------------------------------------------

struct CohomologyArgs {
  std::string algebra;
  std::string omega;
};

int run_cohomology(const CohomologyArgs& a, const Common& c) {
  const auto alg = lie::catalog_algebra(a.algebra);
  json out;
  out["config"] = {{"command", "cohomology"}, {"algebra", a.algebra}, {"omega", a.omega}};
  out["algebra"] = lie::to_json(alg);
  const auto v = lie::validate_algebra(alg);
  out["validation"] = lie::to_json(v);
  if (!v.ok) {
    emit(c, dump(out));
    std::cerr << "qps: structure constants violate the Jacobi identity (" << v.violations.size()
              << " violations listed)\n";
    return 2;
  }
  out["cohomology"] = lie::to_json(lie::second_cohomology(alg));
  if (!a.omega.empty()) {
    const auto w = lie::parse_cochain(alg.dim(), a.omega);
    try {
      out["kernel"] = lie::to_json(lie::kernel_subalgebra(alg, w));
    } catch (const lie::NotClosedError& e) {
      out["kernel"] = {{"error", e.what()}, {"residual", lie::to_json(e.residual())}};
      emit(c, dump(out));
      std::cerr << "qps: " << e.what() << "\n";
      return 2;
    }
  }
  emit(c, dump(out));
  return 0;
}

// ---- spectrum ---------------------------------------------------------------

struct SpectrumArgs {
  GridOptions grid{32, 7.0, 0.05, "ground"};
  std::string region = "disk:3";
  double epsilon = kDefaultEpsilon;
  double threshold = 0.5;
};

int run_spectrum(const SpectrumArgs& a, const Common& c) {
  const auto region = parse_region(a.region);
  if (!(a.threshold > 0.0 && a.threshold < 1.0)) throw InputError("--threshold must lie in (0, 1)");
  const auto s = make_setup(a.grid);
  const auto spec = localization_spectrum(region, s.family, a.epsilon);
  if (c.format == "csv") {
    std::ostringstream os;
    io::write_spectrum_csv(os, spec.eigenvalues);
    emit(c, os.str());
    return 0;
  }
  json out;
  json cfg = grid_config(a.grid);
  cfg["command"] = "spectrum";
  cfg["region"] = a.region;
  cfg["epsilon"] = a.epsilon;
  cfg["threshold"] = a.threshold;
  out["config"] = cfg;
  out["clustering"] = io::to_json(clustering_report(spec));
  out["capacity"] = io::to_json(channel_capacity(spec, a.threshold));
  out["eigenvalues"] = std::vector<double>(spec.eigenvalues.begin(), spec.eigenvalues.end());
  emit(c, dump(out));
  return 0;
}

// ---- tomography -------------------------------------------------------------

struct TomographyArgs {
  GridOptions grid{4, 5.0, 0.4, "ground"};
  std::string probabilities;
  bool self_test = false;
  bool positions_only = false;
  std::uint64_t seed = 1;
  int rank = 2;
  std::string emit_probabilities;
};

int run_tomography(const TomographyArgs& a, const Common& c) {
  json cfg = grid_config(a.grid);
  cfg["command"] = "tomography";
  cfg["seed"] = a.seed;
  cfg["self_test"] = a.self_test;
  cfg["positions_only"] = a.positions_only;
  cfg["probabilities"] = a.probabilities;
  cfg["self_test_rank"] = a.rank;
  json out;
  out["config"] = cfg;

  if (a.positions_only) {
    const auto ctx = fock_space(a.grid.dim);
    out["completeness"] = io::to_json(completeness_rank(position_projectors(ctx)));
    emit(c, dump(out));
    return 0;
  }
  if (a.self_test == !a.probabilities.empty()) {
    throw InputError("tomography needs exactly one of --probabilities FILE or --self-test");
  }
  const auto s = make_setup(a.grid);
  out["completeness"] = io::to_json(completeness_rank(s.family));

  std::vector<double> probs;
  std::optional<CMatrix> truth;
  if (a.self_test) {
    std::mt19937_64 rng(a.seed);
    truth = random_density(a.grid.dim, a.rank, rng);
    probs = classical_density(*truth, s.family).values;
    if (!a.emit_probabilities.empty()) {
      std::ofstream f(a.emit_probabilities, std::ios::binary);
      if (!f) throw IoError("cannot open '" + a.emit_probabilities + "'");
      io::write_density_csv(f, s.grid, probs);
    }
  } else {
    std::ifstream f(a.probabilities, std::ios::binary);
    if (!f) throw IoError("cannot read probabilities file '" + a.probabilities + "'");
    probs = io::read_density_csv(f, s.grid);
  }
  const auto rec = reconstruct_state(probs, s.family);
  out["reconstruction"] = io::to_json(rec);
  if (truth) out["frobenius_error"] = (rec.rho - *truth).norm();
  emit(c, dump(out));
  return 0;
}

// ---- effects ----------------------------------------------------------------

struct EffectsArgs {
  int dim = 6;
  int trials = 1000;
  std::uint64_t seed = 1;
  GridOptions scan{24, 7.0, 0.15, "ground"};
};

int run_effects(const EffectsArgs& a, const Common& c) {
  if (a.trials < 1) throw InputError("--trials must be >= 1");
  if (a.dim < 1) throw InputError("--dim must be >= 1");
  json cfg = {{"command", "effects"}, {"dim", a.dim}, {"trials", a.trials}, {"seed", a.seed}};
  cfg["scan"] = grid_config(a.scan);
  json out;
  out["config"] = cfg;
  out["axioms"] = io::to_json(verify_axioms(random_effect_sampler(a.dim), a.trials, a.seed));
  const auto s = make_setup(a.scan);
  out["projection_scan"] = io::to_json(projection_scan(s.family, standard_battery()));
  emit(c, dump(out));
  return 0;
}

// ---- transform --------------------------------------------------------------

struct TransformArgs {
  GridOptions grid{24, 7.0, 0.15, "ground"};
  std::string state = "random:8";
  std::uint64_t seed = 1;
};

CVector parse_state(const std::string& spec, int n, std::uint64_t seed) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  int arg = 0;
  if (colon != std::string::npos) {
    try {
      std::size_t used = 0;
      arg = std::stoi(spec.substr(colon + 1), &used);
      if (used != spec.size() - colon - 1) throw std::invalid_argument(spec);
    } catch (const std::logic_error&) {
      throw InputError("bad state '" + spec + "'");
    }
  }
  if (head == "fock" && colon != std::string::npos) {
    if (arg < 0 || arg >= n) throw InputError("fock state index out of range");
    CVector v = CVector::Zero(n);
    v(arg) = 1.0;
    return v;
  }
  if (head == "random" && colon != std::string::npos) {
    if (arg < 0 || arg >= n) throw InputError("random state support must lie in [0, N)");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    CVector v = CVector::Zero(n);
    for (int i = 0; i <= arg; ++i) {
      const double re = g(rng);
      v(i) = Complex(re, g(rng));
    }
    return v / v.norm();
  }
  throw InputError("state must be fock:n or random:m (support n <= m), got '" + spec + "'");
}

int run_transform(const TransformArgs& a, const Common& c) {
  const auto s = make_setup(a.grid);
  const CVector phi = parse_state(a.state, a.grid.dim, a.seed);
  const auto f = w_transform(s.family, phi);
  if (c.format == "csv") {
    std::ostringstream os;
    io::write_samples_csv(os, f);
    emit(c, os.str());
    return 0;
  }
  const CVector back = reconstruct(s.family, f);
  const CMatrix frame = frame_operator(s.family);
  json cfg = grid_config(a.grid);
  cfg["command"] = "transform";
  cfg["state"] = a.state;
  cfg["seed"] = a.seed;
  json out;
  out["config"] = cfg;
  out["weighted_norm2"] = f.weighted_norm2();
  out["frame_condition"] = frame_condition(frame);
  out["frame_defect_low_block"] = block_norm(frame - CMatrix::Identity(a.grid.dim, a.grid.dim), s.ctx.low_block());
  out["relative_error"] = (back - phi).norm() / phi.norm();
  emit(c, dump(out));
  return 0;
}

// ---- admissibility ----------------------------------------------------------

int run_admissibility(const GridOptions& g, const Common& c) {
  const auto s = make_setup(g);
  json cfg = grid_config(g);
  cfg["command"] = "admissibility";
  json out;
  out["config"] = cfg;
  out["admissibility"] = io::to_json(admissibility(s.family, s.ctx));
  emit(c, dump(out));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherent-state phase-space toolkit"};
  app.require_subcommand(1);

  Common common;
  CohomologyArgs coh;
  SpectrumArgs spec;
  TomographyArgs tomo;
  EffectsArgs eff;
  TransformArgs tr;
  GridOptions adm{24, 7.0, 0.15, "ground"};

  auto* c_coh = app.add_subcommand("cohomology", "second Lie algebra cohomology and kernel subalgebras");
  c_coh->add_option("algebra", coh.algebra, "catalog name (h3, so3, galilei, poincare, abelianN) or JSON file")
      ->required();
  c_coh->add_option("--omega", coh.omega, "closed 2-form as comma-separated rationals in sorted-pair order");
  add_common(c_coh, common, false);

  auto* c_spec = app.add_subcommand("spectrum", "localization spectrum of a phase-space region");
  add_grid_options(c_spec, spec.grid);
  c_spec->add_option("--region", spec.region, "disk:R | annulus:a,b | rect:q0,q1,p0,p1 | halfplane | empty | full")
      ->capture_default_str();
  c_spec->add_option("--epsilon", spec.epsilon, "clustering band width")->capture_default_str();
  c_spec->add_option("--threshold", spec.threshold, "channel-count threshold")->capture_default_str();
  add_common(c_spec, common, true);

  auto* c_tomo = app.add_subcommand("tomography", "informational completeness and state reconstruction");
  add_grid_options(c_tomo, tomo.grid);
  c_tomo->add_option("--probabilities", tomo.probabilities, "CSV with columns q,p,value,weight");
  c_tomo->add_flag("--self-test", tomo.self_test, "round-trip a random seeded density operator");
  c_tomo->add_flag("--positions-only", tomo.positions_only, "rank of the position projectors instead");
  c_tomo->add_option("--seed", tomo.seed)->capture_default_str();
  c_tomo->add_option("--rank", tomo.rank, "rank of the self-test density operator")->capture_default_str();
  c_tomo->add_option("--emit-probabilities", tomo.emit_probabilities, "write the self-test probabilities CSV");
  add_common(c_tomo, common, false);

  auto* c_eff = app.add_subcommand("effects", "effect-algebra axioms and projection scan");
  c_eff->add_option("--dim", eff.dim, "dimension of the random effects")->capture_default_str();
  c_eff->add_option("--trials", eff.trials)->capture_default_str();
  c_eff->add_option("--seed", eff.seed)->capture_default_str();
  c_eff->add_option("--scan-dim", eff.scan.dim, "Fock dimension for the projection scan")->capture_default_str();
  c_eff->add_option("--radius", eff.scan.radius)->capture_default_str();
  c_eff->add_option("--spacing", eff.scan.spacing)->capture_default_str();
  c_eff->add_option("--generator", eff.scan.generator)->capture_default_str();
  add_common(c_eff, common, false);

  auto* c_tr = app.add_subcommand("transform", "coherent-state transform and frame reconstruction");
  add_grid_options(c_tr, tr.grid);
  c_tr->add_option("--state", tr.state, "fock:n | random:m")->capture_default_str();
  c_tr->add_option("--seed", tr.seed)->capture_default_str();
  add_common(c_tr, common, true);

  auto* c_adm = app.add_subcommand("admissibility", "admissibility integral and commutator check");
  add_grid_options(c_adm, adm);
  add_common(c_adm, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (common.threads < 0) throw InputError("--threads must be >= 1");
    if (common.threads > 0) parallel::set_threads(common.threads);
    if (*c_coh) return run_cohomology(coh, common);
    if (*c_spec) return run_spectrum(spec, common);
    if (*c_tomo) return run_tomography(tomo, common);
    if (*c_eff) return run_effects(eff, common);
    if (*c_tr) return run_transform(tr, common);
    if (*c_adm) return run_admissibility(adm, common);
  } catch (const IoError& e) {
    std::cerr << "qps: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "qps: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "qps: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "qps: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
