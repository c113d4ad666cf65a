#pragma once

#include "qres/arith.hpp"
#include "qres/quotient.hpp"

#include <utility>
#include <vector>

namespace qres {

struct Weight {
  Int p = 1, q = 1;
};

// Weighted blow-up of a normalized X(d;a,b) at the origin.
// Chart 1 has coordinates (X, Y) with x = X^{p/e}, y = X^{q/e} Y and E = {X = 0};
// chart 2 has x = X Y^{p/e}, y = Y^{q/e} and E = {Y = 0}.
struct BlowupResult {
  Int e = 1;
  CyclicType chart1_origin;
  CyclicType chart2_origin;
  Rational exc_self_intersection;
  Int beta = 0, mu = 0;
};

BlowupResult blowup(const CyclicType& t, const Weight& w);

// min over the support of p*i + q*j.
Int wt_order(const std::vector<std::pair<Int, Int>>& exponents, const Weight& w);

// nu / e; throws DivisibilityViolation when the quotient is not an integer.
Rational total_transform(const CyclicType& t, const Weight& w, const Rational& nu);
Rational exc_dot_strict(const CyclicType& t, const Weight& w, const Rational& nu);
Rational strict_self_intersection_update(const Rational& old, const CyclicType& t, const Weight& w,
                                         const Rational& mult);

}  // namespace qres
