#pragma once

#include "qres/arith.hpp"
#include "qres/quotient.hpp"

#include <string>
#include <vector>

namespace qres {

// mag * exp(2 pi i turn) with mag > 0 and turn in [0, 1).
// Rational coefficients have turn 0 or 1/2.
struct Coef {
  Rational mag{1};
  Rational turn{0};

  Coef() = default;
  Coef(const Rational& value);  // NOLINT: implicit from a nonzero rational
  Coef(const Rational& mag, const Rational& turn);

  Coef operator*(const Coef& o) const;
  Coef rotated(const Rational& t) const { return Coef(mag, turn + t); }
  Coef pow(Int k) const;
  bool root(Int k, Coef& out) const;  // principal k-th root, when mag is a perfect power
  bool is_rational() const { return turn == 0 || turn == Rational(1, 2); }
  Rational value() const;  // requires is_rational()
  bool operator==(const Coef&) const = default;
};

struct Term {
  Coef coeff;
  Rational exp;
  bool operator==(const Term&) const = default;
};

enum class Axis { None, X, Y };

// y = sum coeff * x^exp with strictly increasing positive exponents,
// or one of the coordinate axes (X means the curve x = 0).
struct PuiseuxBranch {
  std::vector<Term> terms;
  Axis axis = Axis::None;

  PuiseuxBranch() = default;
  explicit PuiseuxBranch(Axis ax) : axis(ax) {}
  explicit PuiseuxBranch(std::vector<Term> ts);

  bool is_axis() const { return axis != Axis::None; }
  Int conjugacy_degree() const;
  const Rational& leading_exponent() const { return terms.front().exp; }
  bool operator==(const PuiseuxBranch&) const = default;
};

struct CurveGerm {
  CyclicType ambient;
  std::vector<PuiseuxBranch> branches;
};

// Image of the branch under the element u of mu_{dN} lifting the action of
// `amb` (u ranges over Z_{dN}, N the conjugacy degree). For d = 1 these are
// the conjugates.
PuiseuxBranch act(const PuiseuxBranch& br, const CyclicType& amb, Int u);

// Distinct images of the branch under the ambient group and conjugation.
std::vector<PuiseuxBranch> orbit(const PuiseuxBranch& br, const CyclicType& amb);

bool same_orbit(const PuiseuxBranch& b1, const PuiseuxBranch& b2, const CyclicType& amb);

std::string to_string(const PuiseuxBranch& br);

}  // namespace qres
