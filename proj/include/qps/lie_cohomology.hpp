#pragma once

// Chevalley-Eilenberg complex of a finite-dimensional real Lie algebra in
// exact rational arithmetic, up to degree 3.

#include "qps/errors.hpp"
#include "qps/rational.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace qps::lie {

/// Structure constants C_ij^k of [A_i, A_j] = sum_k C_ij^k A_k.
///
/// Only i < j is stored; coeff() returns the antisymmetric extension.
class StructureConstants {
 public:
  StructureConstants(std::string name, std::vector<std::string> basis);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }

  /// Sets C_ij^k. Requires i < j < dim and k < dim; i == j with a nonzero value
  /// or any out-of-range index throws InputError.
  void set(std::size_t i, std::size_t j, std::size_t k, const Rational& value);

  Rational coeff(std::size_t i, std::size_t j, std::size_t k) const;

  /// Bracket of two coordinate vectors.
  RationalVector bracket(const RationalVector& x, const RationalVector& y) const;

 private:
  std::size_t flat(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim() + j) * dim() + k; }

  std::string name_;
  std::vector<std::string> basis_;
  std::vector<Rational> c_;  // dense dim^3, only i<j entries written
};

StructureConstants abelian(std::size_t dim);

/// Re-expresses the algebra in the basis B_a = sum_i T(a, i) A_i.
StructureConstants change_basis(const StructureConstants& c, const RationalMatrix& T);

// Sorted index tuples of degree 0..3, enumerated lexicographically.
std::size_t binomial(std::size_t n, std::size_t k);
std::vector<std::vector<std::size_t>> index_tuples(std::size_t dim, std::size_t degree);
std::size_t pair_index(std::size_t dim, std::size_t i, std::size_t j);
std::size_t triple_index(std::size_t dim, std::size_t i, std::size_t j, std::size_t k);

/// Element of (wedge^degree g)^* in the sorted-tuple basis omega^{i1} ^ ... ^ omega^{id}.
struct Cochain {
  std::size_t degree = 0;
  std::size_t dim = 0;
  RationalVector coords;

  static Cochain zero(std::size_t dim, std::size_t degree);
  bool is_zero() const;
};

using JacobiIndex = std::array<std::size_t, 4>;  // (i, j, k, l)

struct ValidationResult {
  bool ok = true;
  std::vector<JacobiIndex> violations;  // first <= 10
};

ValidationResult validate_algebra(const StructureConstants& c);

/// delta_1 : g^* -> (g ^ g)^*, rows indexed by sorted pairs, column k = image of omega^k.
RationalMatrix coboundary1(const StructureConstants& c);

/// delta_2 : (g ^ g)^* -> (g ^ g ^ g)^*, built from delta_1 by the skew-derivation rule.
RationalMatrix coboundary2(const StructureConstants& c);

struct CohomologyReport {
  std::size_t dimH1 = 0;  // = dim ker delta_1, since delta_0 = 0
  std::size_t dimZ2 = 0;
  std::size_t dimB2 = 0;
  std::size_t dimH2 = 0;
  std::vector<Cochain> z2_basis;
  std::vector<Cochain> b2_basis;
};

/// Throws InputError if the algebra fails Jacobi.
CohomologyReport second_cohomology(const StructureConstants& c);

struct KernelReport {
  std::vector<RationalVector> h_basis;
  bool is_subalgebra = false;
  std::size_t gamma_dim = 0;
};

class NotClosedError : public InputError {
 public:
  NotClosedError(const std::string& what, Cochain residual) : InputError(what), residual_(std::move(residual)) {}
  const Cochain& residual() const { return residual_; }

 private:
  Cochain residual_;
};

/// Kernel h_omega = { xi : omega(xi, .) = 0 } of a closed 2-form.
/// Throws NotClosedError (carrying delta_2 omega) when omega is not in Z^2.
KernelReport kernel_subalgebra(const StructureConstants& c, const Cochain& omega);

/// omega(A_i, A_j) as a full antisymmetric matrix.
RationalMatrix form_matrix(const Cochain& omega);

}  // namespace qps::lie
