#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace qps {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RationalVector = std::vector<Rational>;

// Dense row-major rational matrix. Only what the cohomology engine needs.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector column(std::size_t c) const;
  RationalVector apply(const RationalVector& x) const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Parses "p/q", "p" or "-p/q". Throws InputError on malformed text or q == 0.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

/// Rank by fraction-free (Bareiss) elimination over the integers.
std::size_t rank(const RationalMatrix& m);

/// Basis of {x : m x = 0}. Basis vectors are scaled to primitive integer form.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// Columns of m stacked as the rows of a new matrix (transpose).
RationalMatrix transpose(const RationalMatrix& m);

/// Builds a matrix whose columns are the given vectors.
RationalMatrix from_columns(const std::vector<RationalVector>& cols, std::size_t rows);

/// Exact inverse; throws InputError when singular.
RationalMatrix inverse(const RationalMatrix& m);

}  // namespace qps
