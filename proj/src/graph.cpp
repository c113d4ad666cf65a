#include "qres/graph.hpp"

#include "qres/errors.hpp"

#include <algorithm>

namespace qres {

namespace {

template <class G>
auto& find_vertex(G& g, int id) {
  for (auto& v : g.vertices)
    if (v.id == id) return v;
  throw MalformedGraph("no vertex with id " + std::to_string(id));
}

}  // namespace

const Vertex& DualGraph::vertex(int id) const { return find_vertex(*this, id); }
Vertex& DualGraph::vertex(int id) { return find_vertex(*this, id); }

bool DualGraph::has_vertex(int id) const {
  return std::any_of(vertices.begin(), vertices.end(), [id](const Vertex& v) { return v.id == id; });
}

std::vector<int> DualGraph::exceptional_ids() const {
  std::vector<int> ids;
  for (const auto& v : vertices)
    if (v.kind == VertexKind::Exceptional) ids.push_back(v.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<int> DualGraph::arrow_ids() const {
  std::vector<int> ids;
  for (const auto& v : vertices)
    if (v.kind == VertexKind::Arrow) ids.push_back(v.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::pair<int, int> oriented_ends(const DualGraph& g, const Edge& ed) {
  if (g.is_arrow(ed.v1)) return {ed.v1, ed.v2};
  if (g.is_arrow(ed.v2)) return {ed.v2, ed.v1};
  return {std::min(ed.v1, ed.v2), std::max(ed.v1, ed.v2)};
}

std::vector<PointOnDivisor> points_on(const DualGraph& g, int id) {
  std::vector<PointOnDivisor> out;
  for (const auto& t : g.vertex(id).sing0) out.push_back({t, -1});
  for (const auto& ed : g.edges) {
    if (ed.v1 != id && ed.v2 != id) continue;
    auto [xs, ys] = oriented_ends(g, ed);
    if (ys == id)
      out.push_back({ed.type, xs});
    else
      out.push_back({ed.type.swapped(), ys});
  }
  return out;
}

bool check_divisibility(const DualGraph& g) {
  for (const auto& v : g.vertices)
    if (!is_integer(v.m)) return true;
  for (const auto& v : g.vertices) {
    if (v.kind != VertexKind::Exceptional) continue;
    for (const auto& t : v.sing0)
      if (!is_integer(v.m / index(t))) return false;
  }
  for (const auto& ed : g.edges) {
    auto [xs, ys] = oriented_ends(g, ed);
    const Rational s = ed.type.a * g.vertex(xs).m + ed.type.b * g.vertex(ys).m;
    if (!is_integer(s / ed.type.d)) return false;
  }
  return true;
}

}  // namespace qres
