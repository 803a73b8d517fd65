#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the code paths it is used to check.

#include "qps/linalg.hpp"
#include "qps/rational.hpp"

#include <vector>

namespace qps::oracle {

/// Rank by plain Gauss-Jordan elimination over the rationals.
std::size_t gauss_jordan_rank(std::vector<std::vector<Rational>> rows);

/// D(alpha) = exp(alpha a^dag - conj(alpha) a) at dimension `big`, by Pade
/// scaling and squaring; returns the leading n x n block.
CMatrix expm_displacement(Complex alpha, int big, int n);

/// Regularized lower incomplete gamma P(n+1, x) = 1 - e^-x sum_{j<=n} x^j / j!.
double incomplete_gamma_p(int n_plus_one, double x);

/// int_0^R e^{-r^2/2} (r^2/2)^n / n! r dr by composite Simpson with `panels` panels.
double radial_fock_mass(int n, double radius, int panels = 20000);

/// Coherent-state amplitude <m|alpha> = e^{-|alpha|^2/2} alpha^m / sqrt(m!).
Complex coherent_amplitude(int m, Complex alpha);

}  // namespace qps::oracle
