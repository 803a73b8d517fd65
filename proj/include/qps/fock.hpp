#pragma once

// Truncated Fock-space realization of the Weyl-Heisenberg representation.
// Units: hbar = 1, alpha = (q + i p) / sqrt(2).

#include "qps/linalg.hpp"

#include <string>

namespace qps {

struct FockContext {
  int n_dim = 0;
  CMatrix lowering;  // <m|a|n> = sqrt(n) delta_{m,n-1}
  CMatrix raising;
  CMatrix q_op;  // (a + a^dag) / sqrt(2)
  CMatrix p_op;  // (a - a^dag) / (i sqrt(2))

  /// Highest Fock index on which results are advertised as valid (N/2).
  int low_block() const { return n_dim / 2; }
};

/// Throws InputError for n_dim < 2.
FockContext fock_space(int n_dim);

inline Complex alpha_of(double q, double p) { return Complex(q, p) / std::sqrt(2.0); }

struct Displacement {
  CMatrix matrix;
  bool truncation_warning = false;  // a low-block column lost more than 1e-6 of its norm
};

/// N x N compression of the untruncated D(alpha), from closed-form Laguerre
/// matrix elements.
Displacement displacement(Complex alpha, const FockContext& ctx);

/// Leading `cols` columns of the N x N compression of D(alpha); cheaper when
/// only D(alpha) acting on a low-index vector is needed.
CMatrix displacement_columns(Complex alpha, int n_dim, int cols);

/// D(alpha) eta truncated to N, using only the support of eta.
CVector displace(Complex alpha, const CVector& eta);

struct ResolutionGenerator {
  enum class Kind { ground, fock, squeezed, custom };
  Kind kind = Kind::ground;
  int fock_index = 0;
  double squeeze = 0.0;
  CVector vector;

  std::string label() const;
};

ResolutionGenerator ground_state(const FockContext& ctx);
/// Requires 0 <= n < N.
ResolutionGenerator fock_state(int n, const FockContext& ctx);
/// Squeezed vacuum S(r)|0>, truncated and renormalized. Requires |r| <= 1.5.
ResolutionGenerator squeezed_state(double r, const FockContext& ctx);

/// Parses "ground", "fock:n" or "squeezed:r".
ResolutionGenerator parse_generator(const std::string& spec, const FockContext& ctx);

/// Wraps an arbitrary nonzero vector as a generator (normalized).
ResolutionGenerator custom_generator(const CVector& v);

}  // namespace qps
