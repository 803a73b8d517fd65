#include "qps/rational.hpp"

#include "qps/errors.hpp"

#include <algorithm>
#include <numeric>

namespace qps {

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw InputError("empty integer in rational '" + std::string(whole) + "'");
  std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (start == s.size()) throw InputError("malformed rational '" + std::string(whole) + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw InputError("malformed rational '" + std::string(whole) + "'");
  }
  BigInt v(std::string(s.substr(start)));
  return s.front() == '-' ? BigInt(-v) : v;
}

// Integer echelon form of m, row-scaled to clear denominators. Returns pivot columns.
struct Echelon {
  std::vector<std::vector<BigInt>> rows;
  std::vector<std::size_t> pivots;
};

Echelon bareiss(const RationalMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  Echelon e;
  e.rows.assign(R, std::vector<BigInt>(C));
  for (std::size_t r = 0; r < R; ++r) {
    BigInt l = 1;
    for (std::size_t c = 0; c < C; ++c) {
      const BigInt d = boost::multiprecision::denominator(m(r, c));
      l = boost::multiprecision::lcm(l, d);
    }
    for (std::size_t c = 0; c < C; ++c) {
      e.rows[r][c] = boost::multiprecision::numerator(m(r, c)) * (l / boost::multiprecision::denominator(m(r, c)));
    }
  }

  auto& a = e.rows;
  BigInt prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t p = row;
    while (p < R && a[p][col] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[row]);
    for (std::size_t r = row + 1; r < R; ++r) {
      for (std::size_t c = col + 1; c < C; ++c) {
        a[r][c] = (a[row][col] * a[r][c] - a[r][col] * a[row][c]) / prev;
      }
      a[r][col] = 0;
    }
    prev = a[row][col];
    e.pivots.push_back(col);
    ++row;
  }
  a.resize(row);
  return e;
}

}  // namespace

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalVector RationalMatrix::apply(const RationalVector& x) const {
  RationalVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != 0 && x[c] != 0) s += (*this)(r, c) * x[c];
    }
    y[r] = s;
  }
  return y;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (rhs(k, j) != 0) out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r == 0; });
}

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
  BigInt num = parse_integer(trim(t.substr(0, slash)), text);
  BigInt den = parse_integer(trim(t.substr(slash + 1)), text);
  if (den == 0) throw InputError("zero denominator in rational '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::size_t rank(const RationalMatrix& m) { return bareiss(m).pivots.size(); }

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  const Echelon e = bareiss(m);
  const std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < C; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(C, Rational(0));
    x[free] = 1;
    for (std::size_t r = e.pivots.size(); r-- > 0;) {
      const std::size_t pc = e.pivots[r];
      Rational s = 0;
      for (std::size_t c = pc + 1; c < C; ++c) {
        if (e.rows[r][c] != 0 && x[c] != 0) s += Rational(e.rows[r][c]) * x[c];
      }
      x[pc] = -s / Rational(e.rows[r][pc]);
    }
    // Primitive integer scaling keeps reports readable.
    BigInt l = 1, g = 0;
    for (const auto& v : x) l = boost::multiprecision::lcm(l, BigInt(boost::multiprecision::denominator(v)));
    for (auto& v : x) {
      v *= l;
      g = boost::multiprecision::gcd(g, BigInt(boost::multiprecision::numerator(v)));
    }
    if (g > 1) {
      for (auto& v : x) v /= g;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

RationalMatrix transpose(const RationalMatrix& m) {
  RationalMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

RationalMatrix from_columns(const std::vector<RationalVector>& cols, std::size_t rows) {
  RationalMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  return m;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InputError("inverse of a non-square matrix");
  RationalMatrix a = m, inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col) == 0) ++p;
    if (p == n) throw InputError("singular rational matrix");
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(p, c), a(col, c));
        std::swap(inv(p, c), inv(col, c));
      }
    }
    const Rational piv = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= piv;
      inv(col, c) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

}  // namespace qps
