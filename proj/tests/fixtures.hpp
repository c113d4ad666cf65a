#pragma once

#include "qres/polynomial.hpp"
#include "qres/resolution.hpp"

#include <string>
#include <vector>

namespace fixture {

// Branch order C1..C5: the perturbed cusp, the two cusps, then x and y.
inline const std::string five_curve = "((x^3-y^2)^2-x^4y^3)(x^3-y^2)(x^3+y^2)xy";

inline std::string two_branch_family(int p, int q) {
  const auto P = std::to_string(p), Q = std::to_string(q);
  return "(x^" + P + "+y^" + Q + ")(x^" + Q + "+y^" + P + ")";
}

inline qres::CurveGerm germ(const std::string& text, const qres::CyclicType& ambient = {}) {
  return qres::parse_binomial_curve(text, ambient);
}

inline qres::DualGraph resolved(const std::string& text, const qres::CyclicType& ambient = {}) {
  return ambient.smooth() ? qres::resolve(germ(text)) : qres::resolve_quotient(germ(text, ambient));
}

inline qres::DualGraph five_curve_graph() { return resolved(five_curve); }
inline qres::DualGraph five_curve_quotient_graph() { return resolved(five_curve, qres::CyclicType(5, 2, 3)); }

}  // namespace fixture
