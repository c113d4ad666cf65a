#pragma once

#include "qres/graph.hpp"
#include "qres/quotient.hpp"

#include <vector>

namespace qres {

struct SurfaceGerm {
  Int n = 1;  // z^n = f
  DualGraph base;
};

struct Sing0Transform {
  Int g = 1;
  CyclicType type;  // normalized, covering divisor on {y = 0}
};

// Preimage of a point of type t on a divisor of multiplicity s.
Sing0Transform transform_sing0(Int n, Int s, const CyclicType& t);

struct DoublePointTransform {
  Int g = 1;
  Int k = 0, l = 0;
  TwoRowType raw;
  CyclicType type;  // normalized cyclic form of raw
};

// Preimage of a double point of type t; r is the multiplicity on {x = 0}, s on {y = 0}.
DoublePointTransform transform_double_point(Int n, Int r, Int s, const CyclicType& t);

struct ComponentTransform {
  Int nu = 1;      // number of components
  Int degree = 1;  // covering degree of each component
  Int genus = 0;
  Rational self_int;
};

ComponentTransform transform_component(Int n, Int s, const Rational& eta, const std::vector<Int>& g_values);

// Abstract Q-resolution of z^n = f from an embedded Q-resolution of f.
DualGraph jung_resolution(const SurfaceGerm& germ);

// d/k = q1 - 1/(q2 - ...), by the excess division algorithm.
std::vector<Int> continued_fraction(Int d, Int k);

// Self-intersections of the Hirzebruch-Jung chain; the first curve meets {y = 0}.
std::vector<Int> resolve_cyclic_point(const CyclicType& t);

// Replace every singular point by its chain; self-intersections become integers.
DualGraph smooth_refinement(const DualGraph& g);

}  // namespace qres
