#pragma once

#include "qres/arith.hpp"

#include <array>
#include <vector>

namespace qres {

// P^2 with weights (p, q, r) divided by mu_d acting with weights (a, b, c).
struct WPPlane {
  std::array<Int, 3> w{1, 1, 1};
  Int d = 1;
  std::array<Int, 3> action{0, 0, 0};

  WPPlane() = default;
  WPPlane(std::array<Int, 3> weights, Int order, std::array<Int, 3> act);

  // 2x2 minors of (p q r; a b c) on columns (1,2), (1,3), (2,3).
  std::array<Int, 3> minors() const;
  Int e() const;
};

struct NormalizedWeights {
  std::vector<Int> weights;
  std::vector<Int> exponents;
};

NormalizedWeights normalize_weights(const std::vector<Int>& q);

// Degree of C^2 -> X(d; a, b / e; r, s).
Int projection_degree(Int d, Int a, Int b, Int e, Int r, Int s);

// Degree of the covering P^2 -> plane, assembled from the first chart.
Int deg_tau(const WPPlane& plane);

Rational bezout(const WPPlane& plane, Int deg1, Int deg2);

struct AxesTable {
  Rational xx, yy, zz, xy, xz, yz;
};
AxesTable axes_table(const WPPlane& plane);

// Weighted degree of a quasi-homogeneous polynomial given by its exponent triples.
Int w_degree(const std::vector<std::array<Int, 3>>& monomials, const WPPlane& plane);

}  // namespace qres
