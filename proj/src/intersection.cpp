#include "qres/intersection.hpp"

#include "qres/errors.hpp"

#include <algorithm>

namespace qres {

namespace {

std::size_t position(const std::vector<int>& ids, int id) {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) throw MalformedGraph("vertex " + std::to_string(id) + " is not exceptional");
  return static_cast<std::size_t>(it - ids.begin());
}

int arrow_of(const DualGraph& g, int branch) {
  for (const auto& v : g.vertices)
    if (v.kind == VertexKind::Arrow && std::count(v.branches.begin(), v.branches.end(), branch)) return v.id;
  throw DetachedBranch("branch " + std::to_string(branch) + " has no strict transform in the graph");
}

}  // namespace

Matrix intersection_matrix(const DualGraph& g) {
  const auto ids = g.exceptional_ids();
  Matrix A(ids.size(), std::vector<Rational>(ids.size()));
  for (std::size_t i = 0; i < ids.size(); ++i) A[i][i] = g.vertex(ids[i]).self_int;
  for (const auto& ed : g.edges) {
    if (!g.has_vertex(ed.v1) || !g.has_vertex(ed.v2)) throw MalformedGraph("edge references a missing vertex");
    if (g.is_arrow_edge(ed)) continue;
    if (ed.v1 == ed.v2) throw MalformedGraph("self-loop at vertex " + std::to_string(ed.v1));
    const std::size_t i = position(ids, ed.v1), j = position(ids, ed.v2);
    const Rational w = Rational(1) / index(ed.type);
    A[i][j] += w;
    A[j][i] += w;
  }
  return A;
}

Matrix curvette_matrix(const Matrix& A) {
  Matrix B = inverse(A);
  for (auto& row : B)
    for (auto& x : row) x = -x;
  return B;
}

bool check_negative_definite(const Matrix& A) {
  if (!is_symmetric(A)) return false;
  const auto minors = leading_minors(A);
  for (std::size_t k = 0; k < minors.size(); ++k)
    if ((k % 2 == 0) ? minors[k] >= 0 : minors[k] <= 0) return false;
  return true;
}

BranchAttachment attachment(const DualGraph& g, int branch) {
  const int arrow = arrow_of(g, branch);
  for (const auto& ed : g.edges) {
    if (ed.v1 != arrow && ed.v2 != arrow) continue;
    const int other = ed.v1 == arrow ? ed.v2 : ed.v1;
    if (g.is_arrow(other)) continue;
    return {branch, other, index(ed.type)};
  }
  throw DetachedBranch("branch " + std::to_string(branch) + " meets no exceptional divisor");
}

Rational local_intersection(const DualGraph& g, int i, int j) {
  if (i == j || arrow_of(g, i) == arrow_of(g, j))
    throw SameBranch("branches " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
  const auto ai = attachment(g, i), aj = attachment(g, j);
  const auto ids = g.exceptional_ids();
  const Matrix B = curvette_matrix(intersection_matrix(g));
  return B[position(ids, ai.k)][position(ids, aj.k)] / (ai.d * aj.d);
}

std::vector<Rational> pullback_coefficients(const DualGraph& g, int i) {
  const auto ai = attachment(g, i);
  const auto ids = g.exceptional_ids();
  const Matrix B = curvette_matrix(intersection_matrix(g));
  std::vector<Rational> c = B[position(ids, ai.k)];
  for (auto& x : c) x /= ai.d;
  return c;
}

}  // namespace qres
