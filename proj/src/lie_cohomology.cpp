#include "qps/lie_cohomology.hpp"

#include <algorithm>

namespace qps::lie {

StructureConstants::StructureConstants(std::string name, std::vector<std::string> basis)
    : name_(std::move(name)), basis_(std::move(basis)) {
  if (basis_.empty()) throw InputError("Lie algebra must have dim >= 1");
  c_.assign(dim() * dim() * dim(), Rational(0));
}

void StructureConstants::set(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
  const std::size_t n = dim();
  if (i >= n || j >= n || k >= n) {
    throw InputError("structure constant index out of range: (" + std::to_string(i) + "," + std::to_string(j) +
                     "," + std::to_string(k) + ") for dim " + std::to_string(n));
  }
  if (i == j) {
    if (value != 0) throw InputError("self-bracket [A_" + std::to_string(i) + ", A_" + std::to_string(i) + "] must vanish");
    return;
  }
  if (i > j) throw InputError("brackets must be given with i < j");
  c_[flat(i, j, k)] = value;
}

Rational StructureConstants::coeff(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return 0;
  if (i < j) return c_[flat(i, j, k)];
  return -c_[flat(j, i, k)];
}

RationalVector StructureConstants::bracket(const RationalVector& x, const RationalVector& y) const {
  const std::size_t n = dim();
  RationalVector out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0 || i == j) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Rational c = coeff(i, j, k);
        if (c != 0) out[k] += xy * c;
      }
    }
  }
  return out;
}

StructureConstants abelian(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("A" + std::to_string(i + 1));
  return StructureConstants("abelian(" + std::to_string(dim) + ")", std::move(names));
}

StructureConstants change_basis(const StructureConstants& c, const RationalMatrix& T) {
  const std::size_t n = c.dim();
  if (T.rows() != n || T.cols() != n) throw InputError("basis change matrix has wrong shape");
  const RationalMatrix Tinv = inverse(T);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) names.push_back("B" + std::to_string(a + 1));
  StructureConstants out(c.name() + "'", names);

  // [B_a, B_b] = sum_k (sum_ij T_ai T_bj C_ij^k) A_k, and A_k = sum_c Tinv(k, c) B_c.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const RationalVector br = c.bracket(RationalVector(&T(a, 0), &T(a, 0) + n), RationalVector(&T(b, 0), &T(b, 0) + n));
      for (std::size_t cc = 0; cc < n; ++cc) {
        Rational s = 0;
        for (std::size_t k = 0; k < n; ++k) {
          if (br[k] != 0 && Tinv(k, cc) != 0) s += br[k] * Tinv(k, cc);
        }
        out.set(a, b, cc, s);
      }
    }
  }
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<std::size_t>> index_tuples(std::size_t dim, std::size_t degree) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == degree) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < dim; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::size_t pair_index(std::size_t dim, std::size_t i, std::size_t j) {
  // Pairs (0,1),(0,2),...,(0,n-1),(1,2),...
  return i * dim - i * (i + 1) / 2 + (j - i - 1);
}

std::size_t triple_index(std::size_t dim, std::size_t i, std::size_t j, std::size_t k) {
  std::size_t idx = 0;
  for (std::size_t a = 0; a < i; ++a) idx += binomial(dim - a - 1, 2);
  return idx + pair_index(dim - i - 1, j - i - 1, k - i - 1);
}

Cochain Cochain::zero(std::size_t dim, std::size_t degree) {
  if (degree > 3) throw InputError("cochain degree must be in 0..3");
  return Cochain{degree, dim, RationalVector(binomial(dim, degree), Rational(0))};
}

bool Cochain::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& r) { return r == 0; });
}

ValidationResult validate_algebra(const StructureConstants& c) {
  const std::size_t n = c.dim();
  ValidationResult res;
  // The Jacobiator is totally antisymmetric in (i, j, k); distinct sorted triples suffice.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          Rational s = 0;
          for (std::size_t m = 0; m < n; ++m) {
            s += c.coeff(i, j, m) * c.coeff(m, k, l) + c.coeff(j, k, m) * c.coeff(m, i, l) +
                 c.coeff(k, i, m) * c.coeff(m, j, l);
          }
          if (s != 0) {
            res.ok = false;
            if (res.violations.size() < 10) res.violations.push_back({i, j, k, l});
          }
        }
      }
    }
  }
  return res;
}

RationalMatrix coboundary1(const StructureConstants& c) {
  const std::size_t n = c.dim();
  RationalMatrix d(binomial(n, 2), n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) d(pair_index(n, i, j), k) = -c.coeff(i, j, k);
  return d;
}

namespace {

// Coefficient of omega^a ^ omega^b ^ omega^x in sorted-triple coordinates: returns
// (sign, triple index) or sign 0 when an index repeats.
std::pair<int, std::size_t> sorted_triple(std::size_t dim, std::size_t a, std::size_t b, std::size_t x) {
  if (a == b || a == x || b == x) return {0, 0};
  std::array<std::size_t, 3> t{a, b, x};
  int sign = 1;
  for (int pass = 0; pass < 2; ++pass) {
    for (int q = 0; q < 2; ++q) {
      if (t[q] > t[q + 1]) {
        std::swap(t[q], t[q + 1]);
        sign = -sign;
      }
    }
  }
  return {sign, triple_index(dim, t[0], t[1], t[2])};
}

}  // namespace

RationalMatrix coboundary2(const StructureConstants& c) {
  const std::size_t n = c.dim();
  const RationalMatrix d1 = coboundary1(c);
  RationalMatrix d2(binomial(n, 3), binomial(n, 2));
  const auto pairs = index_tuples(n, 2);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t col = pair_index(n, i, j);
      for (const auto& ab : pairs) {
        const std::size_t row = pair_index(n, ab[0], ab[1]);
        // (delta_1 omega^i) ^ omega^j
        if (const Rational& di = d1(row, i); di != 0) {
          auto [s, t] = sorted_triple(n, ab[0], ab[1], j);
          if (s != 0) d2(t, col) += s * di;
        }
        // - omega^i ^ (delta_1 omega^j) = - omega^a ^ omega^b ^ omega^i (cyclic, even)
        if (const Rational& dj = d1(row, j); dj != 0) {
          auto [s, t] = sorted_triple(n, ab[0], ab[1], i);
          if (s != 0) d2(t, col) -= s * dj;
        }
      }
    }
  }
  return d2;
}

namespace {

std::vector<RationalVector> column_space_basis(const RationalMatrix& m) {
  // Greedy selection of independent columns, in order.
  std::vector<RationalVector> basis;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto trial = basis;
    trial.push_back(m.column(c));
    const std::size_t tr = rank(from_columns(trial, m.rows()));
    if (tr > r) {
      basis = std::move(trial);
      r = tr;
    }
  }
  return basis;
}

Cochain as_cochain(std::size_t dim, std::size_t degree, RationalVector v) {
  return Cochain{degree, dim, std::move(v)};
}

}  // namespace

CohomologyReport second_cohomology(const StructureConstants& c) {
  const auto v = validate_algebra(c);
  if (!v.ok) throw InputError("structure constants violate the Jacobi identity");
  const std::size_t n = c.dim();
  const RationalMatrix d1 = coboundary1(c);
  const RationalMatrix d2 = coboundary2(c);

  CohomologyReport rep;
  rep.dimH1 = n - rank(d1);
  for (auto& z : nullspace(d2)) rep.z2_basis.push_back(as_cochain(n, 2, std::move(z)));
  for (auto& b : column_space_basis(d1)) rep.b2_basis.push_back(as_cochain(n, 2, std::move(b)));
  rep.dimZ2 = rep.z2_basis.size();
  rep.dimB2 = rep.b2_basis.size();
  rep.dimH2 = rep.dimZ2 - rep.dimB2;
  return rep;
}

RationalMatrix form_matrix(const Cochain& omega) {
  if (omega.degree != 2) throw InputError("kernel requires a degree-2 cochain");
  const std::size_t n = omega.dim;
  if (omega.coords.size() != binomial(n, 2)) throw InputError("2-cochain has wrong coordinate count");
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational& w = omega.coords[pair_index(n, i, j)];
      m(i, j) = w;
      m(j, i) = -w;
    }
  }
  return m;
}

KernelReport kernel_subalgebra(const StructureConstants& c, const Cochain& omega) {
  const std::size_t n = c.dim();
  if (omega.dim != n) throw InputError("2-cochain dimension does not match the algebra");
  const RationalMatrix om = form_matrix(omega);

  Cochain residual = as_cochain(n, 3, coboundary2(c).apply(omega.coords));
  if (!residual.is_zero()) {
    std::string msg = "omega is not closed; delta_2 omega = [";
    for (std::size_t t = 0; t < residual.coords.size(); ++t) {
      msg += (t ? ", " : "") + format_rational(residual.coords[t]);
    }
    throw NotClosedError(msg + "]", std::move(residual));
  }

  KernelReport rep;
  rep.h_basis = nullspace(om);
  rep.gamma_dim = n - rep.h_basis.size();

  const std::size_t hdim = rep.h_basis.size();
  rep.is_subalgebra = true;
  if (hdim > 0) {
    for (std::size_t a = 0; a < hdim && rep.is_subalgebra; ++a) {
      for (std::size_t b = a + 1; b < hdim; ++b) {
        auto cols = rep.h_basis;
        cols.push_back(c.bracket(rep.h_basis[a], rep.h_basis[b]));
        if (rank(from_columns(cols, n)) != hdim) {
          rep.is_subalgebra = false;
          break;
        }
      }
    }
  }
  return rep;
}

}  // namespace qps::lie
