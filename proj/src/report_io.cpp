#include "qps/report_io.hpp"

#include "qps/errors.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace qps::io {

using nlohmann::json;

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_samples_csv(std::ostream& os, const GammaFunctionSamples& f) {
  if (!f.grid) throw InputError("samples are not attached to a grid");
  const PhaseGrid& g = *f.grid;
  os << "q,p,re,im,weight\n";
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Complex v = f.values[static_cast<Eigen::Index>(k)];
    os << format_double(g.q[k]) << ',' << format_double(g.p[k]) << ',' << format_double(v.real()) << ','
       << format_double(v.imag()) << ',' << format_double(g.weight[k]) << '\n';
  }
}

void write_density_csv(std::ostream& os, const PhaseGrid& grid, std::span<const double> values) {
  if (values.size() != grid.size()) throw InputError("density length does not match the grid");
  os << "q,p,value,weight\n";
  for (std::size_t k = 0; k < grid.size(); ++k) {
    os << format_double(grid.q[k]) << ',' << format_double(grid.p[k]) << ',' << format_double(values[k]) << ','
       << format_double(grid.weight[k]) << '\n';
  }
}

namespace {

double parse_field(const std::string& s, std::size_t line) {
  double v = 0.0;
  const char* b = s.data();
  const char* e = s.data() + s.size();
  while (b < e && *b == ' ') ++b;
  const auto res = std::from_chars(b, e, v);
  if (res.ec != std::errc() || res.ptr != e) {
    throw IoError("line " + std::to_string(line) + ": cannot parse number '" + s + "'");
  }
  return v;
}

}  // namespace

std::vector<double> read_density_csv(std::istream& is, const PhaseGrid& grid) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(is, line)) throw IoError("empty probability CSV");
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "q,p,value,weight") throw IoError("probability CSV must start with header q,p,value,weight");
  std::vector<double> out;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) cols.push_back(item);
    if (cols.size() != 4) throw IoError("line " + std::to_string(lineno) + ": expected 4 columns");
    const std::size_t k = out.size();
    if (k >= grid.size()) throw IoError("probability CSV has more rows than grid points");
    const double q = parse_field(cols[0], lineno), p = parse_field(cols[1], lineno);
    if (std::abs(q - grid.q[k]) > 1e-9 || std::abs(p - grid.p[k]) > 1e-9) {
      throw IoError("line " + std::to_string(lineno) + ": point does not match grid point " + std::to_string(k));
    }
    out.push_back(parse_field(cols[2], lineno));
  }
  if (out.size() != grid.size()) {
    throw IoError("probability CSV has " + std::to_string(out.size()) + " rows, grid has " +
                  std::to_string(grid.size()));
  }
  return out;
}

void write_spectrum_csv(std::ostream& os, const RVector& eigenvalues) {
  os << "index,eigenvalue\n";
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) os << i << ',' << format_double(eigenvalues[i]) << '\n';
}

namespace {

json finite_or_null(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

json complex_json(Complex z) { return {z.real(), z.imag()}; }

}  // namespace

json to_json(const AdmissibilityReport& r) {
  return {{"integral", r.integral},
          {"d_constant", r.d_constant},
          {"beta_ok", r.beta_ok},
          {"beta_max_deviation", r.beta_max_deviation},
          {"boundary_max", r.boundary_max}};
}

json to_json(const OrthogonalityReport& r) {
  return {{"lhs", complex_json(r.lhs)},
          {"rhs", complex_json(r.rhs)},
          {"relative_error", r.relative_error},
          {"d_used", r.d_used}};
}

json to_json(const ClusteringSummary& r) {
  return {{"trace", r.trace},
          {"mu_delta", r.mu_delta},
          {"max_eigenvalue", r.max_eigenvalue},
          {"near_one", r.near_one},
          {"near_zero", r.near_zero},
          {"mid", r.mid},
          {"epsilon", r.epsilon},
          {"mid_to_near_one", finite_or_null(r.mid_to_near_one)},
          {"trace_bound_ok", r.trace_bound_ok},
          {"norm_bound_ok", r.norm_bound_ok}};
}

json to_json(const CapacityReport& r) {
  return {{"count", r.count}, {"mu_delta", r.mu_delta}, {"threshold", r.threshold}};
}

json to_json(const CompletenessReport& r) {
  return {{"operator_count", r.operator_count},
          {"rank", r.gram_rank},
          {"required", r.required},
          {"complete", r.complete},
          {"smallest_kept_singular_value", r.smallest_kept_singular_value},
          {"largest_singular_value", r.largest_singular_value},
          {"rank_gap_ratio", finite_or_null(r.rank_gap_ratio)}};
}

json to_json(const Reconstruction& r) {
  return {{"residual", r.residual},
          {"residual_flagged", r.residual_flagged},
          {"rank", r.rank},
          {"frobenius_norm", r.frobenius_norm},
          {"clipped_weight", r.clipped_weight}};
}

json to_json(const AxiomReport& r) {
  json w = json::array();
  for (const auto& x : r.witnesses) w.push_back({{"axiom", x.axiom}, {"trial", x.trial}, {"defect", x.defect}});
  return {{"trials", r.trials},
          {"rejected", r.rejected},
          {"failures",
           {{"commutativity", r.commutativity},
            {"associativity", r.associativity},
            {"unique_complement", r.unique_complement},
            {"zero_one", r.zero_one}}},
          {"associativity_tested", r.associativity_tested},
          {"zero_one_tested", r.zero_one_tested},
          {"witnesses", w}};
}

json to_json(const ProjectionScanReport& r) {
  json e = json::array();
  for (const auto& x : r.entries) {
    e.push_back({{"region", x.label}, {"mu_delta", x.mu_delta}, {"gap", x.gap}, {"passes", x.passes}});
  }
  return {{"projection_gap", r.projection_gap}, {"all_pass", r.all_pass()}, {"regions", e}};
}

json to_json(const PovmReport& r) {
  return {{"parts", r.parts},
          {"sum_minus_frame", r.sum_minus_frame},
          {"frame_minus_identity_low_block", r.frame_minus_identity},
          {"all_positive", r.all_positive}};
}

void write_operator_csv(std::ostream& os, const CMatrix& m) {
  os << "row,col,re,im\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      os << i << ',' << j << ',' << format_double(m(i, j).real()) << ',' << format_double(m(i, j).imag()) << '\n';
}

}  // namespace qps::io
