#include "qres/linalg.hpp"

#include "qres/errors.hpp"

namespace qres {

namespace {

using IntMatrix = std::vector<std::vector<BigInt>>;

void check_square(const Matrix& a) {
  for (const auto& row : a)
    if (row.size() != a.size()) throw MalformedGraph("matrix is not square");
}

BigInt common_denominator(const Matrix& a) {
  BigInt l = 1;
  for (const auto& row : a)
    for (const auto& x : row) l = boost::multiprecision::lcm(l, BigInt(denominator(x)));
  return l;
}

IntMatrix clear(const Matrix& a, const BigInt& l) {
  IntMatrix n(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const auto& x : a[i]) n[i].push_back(BigInt(numerator(x)) * (l / BigInt(denominator(x))));
  return n;
}

// Bareiss elimination with row pivoting on m (n rows, >= n columns).
// Returns the determinant of the leading n x n block; m is left upper triangular.
BigInt bareiss(IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  const std::size_t cols = m[0].size();
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

Matrix identity(std::size_t n) {
  Matrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  std::size_t cols = b.empty() ? 0 : b[0].size();
  Matrix c(a.size(), std::vector<Rational>(cols, Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

std::vector<Rational> operator*(const Matrix& a, const std::vector<Rational>& v) {
  std::vector<Rational> r(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

Rational determinant(const Matrix& a) {
  check_square(a);
  const std::size_t n = a.size();
  BigInt l = common_denominator(a);
  IntMatrix m = clear(a, l);
  Rational det(bareiss(m));
  for (std::size_t i = 0; i < n; ++i) det /= Rational(l);
  return det;
}

Matrix inverse(const Matrix& a) {
  check_square(a);
  const std::size_t n = a.size();
  BigInt l = common_denominator(a);
  IntMatrix m = clear(a, l);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i].push_back(i == j ? 1 : 0);
  if (bareiss(m) == 0) throw SingularMatrix("matrix is singular");
  // Fraction-free back substitution: y = pivot * inverse stays integral.
  const BigInt pivot = m[n - 1][n - 1];
  IntMatrix y(n, std::vector<BigInt>(n));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = n; i-- > 0;) {
      BigInt s = pivot * m[i][n + c];
      for (std::size_t j = i + 1; j < n; ++j) s -= m[i][j] * y[j][c];
      y[i][c] = s / m[i][i];
    }
  }
  Matrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = Rational(y[i][j]) * Rational(l) / Rational(pivot);
  return inv;
}

std::vector<Rational> leading_minors(const Matrix& a) {
  check_square(a);
  std::vector<Rational> out;
  for (std::size_t k = 1; k <= a.size(); ++k) {
    Matrix sub(k);
    for (std::size_t i = 0; i < k; ++i) sub[i].assign(a[i].begin(), a[i].begin() + static_cast<long>(k));
    out.push_back(determinant(sub));
  }
  return out;
}

bool is_symmetric(const Matrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a[i][j] != a[j][i]) return false;
  return true;
}

}  // namespace qres
