#include "qps/fock.hpp"

#include "qps/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qps {

FockContext fock_space(int n_dim) {
  if (n_dim < 2) throw InputError("Fock truncation dimension must be >= 2, got " + std::to_string(n_dim));
  FockContext ctx;
  ctx.n_dim = n_dim;
  ctx.lowering = CMatrix::Zero(n_dim, n_dim);
  for (int n = 1; n < n_dim; ++n) ctx.lowering(n - 1, n) = std::sqrt(static_cast<double>(n));
  ctx.raising = ctx.lowering.adjoint();
  const double s = 1.0 / std::sqrt(2.0);
  ctx.q_op = s * (ctx.lowering + ctx.raising);
  ctx.p_op = (ctx.lowering - ctx.raising) * Complex(0.0, -s);
  return ctx;
}

CMatrix displacement_columns(Complex alpha, int n_dim, int cols) {
  cols = std::min(cols, n_dim);
  CMatrix d = CMatrix::Zero(n_dim, cols);
  const double r = std::abs(alpha);
  const double x = r * r;
  if (r == 0.0) {
    for (int n = 0; n < cols; ++n) d(n, n) = 1.0;
    return d;
  }
  const double theta = std::arg(alpha);
  const double log_r = std::log(r);

  std::vector<double> lag;
  for (int k = 0; k < n_dim; ++k) {
    // j runs over the lower Laguerre index: n for m = n + k, m for n = m + k.
    const int jmax = std::max(std::min(cols - 1, n_dim - 1 - k), k >= 1 ? cols - 1 - k : -1);
    if (jmax < 0) continue;
    lag.assign(static_cast<std::size_t>(jmax) + 1, 0.0);
    lag[0] = 1.0;
    if (jmax >= 1) lag[1] = 1.0 + k - x;
    for (int j = 1; j < jmax; ++j) {
      lag[j + 1] = ((2.0 * j + 1.0 + k - x) * lag[j] - (j + k) * lag[j - 1]) / (j + 1.0);
    }
    const Complex lower_phase = std::polar(1.0, k * theta);
    const Complex upper_phase = std::polar((k % 2 == 0) ? 1.0 : -1.0, -k * theta);
    for (int j = 0; j <= jmax; ++j) {
      const double mag =
          std::exp(0.5 * (std::lgamma(j + 1.0) - std::lgamma(j + k + 1.0)) + k * log_r - 0.5 * x) * lag[j];
      // <j+k| D |j>
      if (j < cols && j + k < n_dim) d(j + k, j) = mag * lower_phase;
      // <j| D |j+k>
      if (k >= 1 && j + k < cols) d(j, j + k) = mag * upper_phase;
    }
  }
  return d;
}

Displacement displacement(Complex alpha, const FockContext& ctx) {
  Displacement out;
  out.matrix = displacement_columns(alpha, ctx.n_dim, ctx.n_dim);
  for (int n = 0; n <= ctx.low_block(); ++n) {
    if (out.matrix.col(n).norm() < 1.0 - 1e-6) {
      out.truncation_warning = true;
      break;
    }
  }
  return out;
}

CVector displace(Complex alpha, const CVector& eta) {
  int support = 0;
  for (int n = 0; n < eta.size(); ++n) {
    if (eta[n] != Complex(0.0)) support = n + 1;
  }
  if (support == 0) return CVector::Zero(eta.size());
  const CMatrix cols = displacement_columns(alpha, static_cast<int>(eta.size()), support);
  return cols * eta.head(support);
}

std::string ResolutionGenerator::label() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::ground: return "ground";
    case Kind::fock: os << "fock:" << fock_index; return os.str();
    case Kind::squeezed: os << "squeezed:" << squeeze; return os.str();
    case Kind::custom: return "custom";
  }
  return "custom";
}

ResolutionGenerator ground_state(const FockContext& ctx) {
  ResolutionGenerator g;
  g.vector = CVector::Zero(ctx.n_dim);
  g.vector[0] = 1.0;
  return g;
}

ResolutionGenerator fock_state(int n, const FockContext& ctx) {
  if (n < 0 || n >= ctx.n_dim) {
    throw InputError("fock generator index " + std::to_string(n) + " outside [0, " + std::to_string(ctx.n_dim) + ")");
  }
  ResolutionGenerator g;
  g.kind = ResolutionGenerator::Kind::fock;
  g.fock_index = n;
  g.vector = CVector::Zero(ctx.n_dim);
  g.vector[n] = 1.0;
  return g;
}

ResolutionGenerator squeezed_state(double r, const FockContext& ctx) {
  if (!(std::abs(r) <= 1.5)) throw InputError("squeezing parameter must satisfy |r| <= 1.5");
  ResolutionGenerator g;
  g.kind = ResolutionGenerator::Kind::squeezed;
  g.squeeze = r;
  g.vector = CVector::Zero(ctx.n_dim);
  // <2n|S(r)|0> = (-tanh r)^n sqrt((2n)!) / (2^n n! sqrt(cosh r))
  const double t = std::tanh(r);
  for (int n = 0; 2 * n < ctx.n_dim; ++n) {
    const double log_mag = 0.5 * std::lgamma(2.0 * n + 1.0) - n * std::log(2.0) - std::lgamma(n + 1.0);
    const double tn = std::pow(-t, n);
    g.vector[2 * n] = tn * std::exp(log_mag) / std::sqrt(std::cosh(r));
  }
  g.vector.normalize();
  return g;
}

ResolutionGenerator custom_generator(const CVector& v) {
  const double nrm = v.norm();
  if (!(nrm > 0.0)) throw InputError("resolution generator must be nonzero");
  ResolutionGenerator g;
  g.kind = ResolutionGenerator::Kind::custom;
  g.vector = v / nrm;
  return g;
}

ResolutionGenerator parse_generator(const std::string& spec, const FockContext& ctx) {
  if (spec == "ground") return ground_state(ctx);
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  try {
    std::size_t used = 0;
    if (head == "fock" && !arg.empty()) {
      const int n = std::stoi(arg, &used);
      if (used == arg.size()) return fock_state(n, ctx);
    } else if (head == "squeezed" && !arg.empty()) {
      const double r = std::stod(arg, &used);
      if (used == arg.size()) return squeezed_state(r, ctx);
    }
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const InputError*>(&e)) throw;
  }
  throw InputError("generator must be ground, fock:n or squeezed:r, got '" + spec + "'");
}

}  // namespace qps
