#pragma once

#include "qres/arith.hpp"
#include "qres/quotient.hpp"

#include <vector>

namespace qres {

enum class VertexKind { Exceptional, Arrow };

struct Vertex {
  int id = 0;
  VertexKind kind = VertexKind::Exceptional;
  Rational m{1};
  Rational self_int{0};
  Int genus = 0;
  std::vector<CyclicType> sing0;  // points of E off the edges, written with E = {y = 0}
  std::vector<int> branches;      // arrow vertices: ids of the strict transforms they carry
  bool operator==(const Vertex&) const = default;
};

// Between exceptional vertices v1 < v2 the type puts E_{v1} on {x = 0}.
// An arrow edge puts the strict transform on {x = 0} and the divisor on {y = 0}.
struct Edge {
  int v1 = 0, v2 = 0;
  CyclicType type;
  int point = -1;  // optional label of the point of the surface where the edge sits
  bool operator==(const Edge&) const = default;
};

struct DualGraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  const Vertex& vertex(int id) const;
  Vertex& vertex(int id);
  bool has_vertex(int id) const;
  bool is_arrow(int id) const { return vertex(id).kind == VertexKind::Arrow; }
  bool is_arrow_edge(const Edge& ed) const { return is_arrow(ed.v1) || is_arrow(ed.v2); }
  std::vector<int> exceptional_ids() const;
  std::vector<int> arrow_ids() const;
  bool operator==(const DualGraph&) const = default;
};

// A point of E with its type written so that E = {y = 0}; other is the vertex
// meeting E there, or -1 for a Sing0 point.
struct PointOnDivisor {
  CyclicType type;
  int other = -1;
};

// Every recorded point on E: Sing0 entries, edges to exceptional vertices and arrows.
std::vector<PointOnDivisor> points_on(const DualGraph& g, int id);

// Edge type written as (x-side vertex, y-side vertex).
std::pair<int, int> oriented_ends(const DualGraph& g, const Edge& ed);

// Divisibility invariants of an integral multiplicity assignment; rational
// multiplicities (curves that are not functions on the quotient) are skipped.
bool check_divisibility(const DualGraph& g);

}  // namespace qres
