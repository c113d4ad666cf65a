#pragma once

#include "qres/arith.hpp"

#include <vector>

namespace qres {

using Matrix = std::vector<std::vector<Rational>>;

Matrix identity(std::size_t n);
Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<Rational> operator*(const Matrix& a, const std::vector<Rational>& v);

// Fraction-free elimination over the integers after clearing denominators.
Rational determinant(const Matrix& a);
Matrix inverse(const Matrix& a);  // throws SingularMatrix
std::vector<Rational> leading_minors(const Matrix& a);

bool is_symmetric(const Matrix& a);

}  // namespace qres
