#pragma once

#include "qres/arith.hpp"

#include <array>
#include <utility>

namespace qres {

// The quotient of C^2 by the mu_d action (x, y) -> (z^a x, z^b y).
// Weights are stored reduced to [0, d).
struct CyclicType {
  Int d = 1, a = 0, b = 0;

  CyclicType() = default;
  CyclicType(Int d, Int a, Int b);

  CyclicType swapped() const { return CyclicType(d, b, a); }
  bool smooth() const { return d == 1; }
  bool operator==(const CyclicType&) const = default;
};

// Quotient by mu_{d[0]} x mu_{d[1]}, row i acting with weights A[i].
struct TwoRowType {
  std::array<Int, 2> d{1, 1};
  std::array<std::array<Int, 2>, 2> A{};
};

struct Normalized {
  CyclicType type;
  std::pair<Int, Int> exponents;  // (x, y) -> (x^first, y^second)
};

Normalized normalize(const CyclicType& t);
bool is_normalized(const CyclicType& t);
bool equivalent(const CyclicType& t1, const CyclicType& t2);
CyclicType reduce_two_row(const TwoRowType& t);
Int index(const CyclicType& t);

// Representative (d; 1, k) with the same coordinates; requires gcd(d, a) = 1.
Int slope(const CyclicType& t);

std::string to_string(const CyclicType& t);

}  // namespace qres
