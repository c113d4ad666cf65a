#include "qres/jung.hpp"

#include "qres/blowup.hpp"
#include "qres/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace qres {

namespace {

Int exact_div(Int num, Int den, const char* what) {
  if (den == 0 || num % den != 0)
    throw DivisibilityViolation(std::string(what) + ": " + std::to_string(den) + " does not divide " +
                                std::to_string(num));
  return num / den;
}

Int integral_multiplicity(const Vertex& v) {
  if (!is_integer(v.m)) throw InconsistentData("vertex " + std::to_string(v.id) + " has a non-integral multiplicity");
  return to_int(v.m);
}

}  // namespace

Sing0Transform transform_sing0(Int n, Int s, const CyclicType& t) {
  if (!is_normalized(t)) throw NotNormalized(to_string(t) + " is not normalized");
  const Int s0 = exact_div(s, t.d, "point index and divisor multiplicity");
  const Int g = gcd(n, s0);
  const Int n1 = n / g;
  const Int e = gcd(n1, t.d);
  const Int n2 = n1 / e, d1 = t.d / e;
  return {g, normalize(CyclicType(d1, t.a * n2, t.b)).type};
}

DoublePointTransform transform_double_point(Int n, Int r, Int s, const CyclicType& t) {
  if (!is_normalized(t)) throw NotNormalized(to_string(t) + " is not normalized");
  const Int d = t.d, a = t.a, b = t.b;
  const Int m0 = exact_div(a * r + b * s, d, "double point");
  DoublePointTransform out;
  out.g = gcd({n, r, s, m0});
  const Int n1 = n / out.g, r1 = r / out.g, s1 = s / out.g, m1 = m0 / out.g;
  const Int e = gcd({n1, r1, s1});
  const Int n2 = n1 / e, r2 = r1 / e, s2 = s1 / e;
  const Int d1 = exact_div(d, e, "double point");
  bool found = false;
  for (Int size = 0; size <= 2 * n2 && !found; ++size)
    for (Int k = -size; k <= size && !found; ++k) {
      const Int rest = size - std::abs(k);
      for (Int l : {-rest, rest})
        if (!found && mod(m1 + k * r2 + l * s2, n2) == 0) {
          out.k = k;
          out.l = l;
          found = true;
        }
    }
  if (!found) throw InconsistentData("no solution of the double point congruence");
  out.raw.d = {d1 * n2, n2};
  out.raw.A = {{{a + out.k * d1, b + out.l * d1}, {s2, -r2}}};
  out.type = reduce_two_row(out.raw);
  return out;
}

ComponentTransform transform_component(Int n, Int s, const Rational& eta, const std::vector<Int>& g_values) {
  if (eta >= 0) throw InconsistentData("self-intersection must be negative");
  const Int m = gcd(s, n);
  ComponentTransform out;
  out.nu = g_values.empty() ? m : s;
  for (Int g : g_values) out.nu = gcd(out.nu, g);
  out.degree = m / out.nu;
  Rational euler = 2 * out.degree;
  for (Int g : g_values) {
    if (g % out.nu != 0) throw InconsistentData("point count not divisible by the number of components");
    euler -= out.degree - g / out.nu;
  }
  const Rational genus = (2 - euler) / 2;
  if (!is_integer(genus) || genus < 0) throw InconsistentData("Riemann-Hurwitz gives genus " + to_string(genus));
  out.genus = to_int(genus);
  out.self_int = Rational(m * m) * eta / (n * out.nu);
  return out;
}

DualGraph jung_resolution(const SurfaceGerm& germ) {
  const Int n = germ.n;
  if (n < 1) throw InconsistentData("covering degree must be positive");
  const DualGraph& base = germ.base;
  const auto ids = base.exceptional_ids();

  struct EdgeData {
    const Edge* edge;
    DoublePointTransform tr;
  };
  std::vector<EdgeData> edges;
  std::map<int, std::vector<Int>> g_values;
  std::map<int, std::vector<CyclicType>> points;  // non-smooth Sing0 types, one per preimage
  for (const auto& ed : base.edges) {
    auto [xs, ys] = oriented_ends(base, ed);
    const auto tr = transform_double_point(n, integral_multiplicity(base.vertex(xs)),
                                           integral_multiplicity(base.vertex(ys)), ed.type);
    if (base.is_arrow(xs)) {
      g_values[ys].push_back(tr.g);
      if (!tr.type.smooth()) points[ys].insert(points[ys].end(), static_cast<std::size_t>(tr.g), tr.type);
    } else {
      g_values[xs].push_back(tr.g);
      g_values[ys].push_back(tr.g);
      edges.push_back({&ed, tr});
    }
  }

  DualGraph out;
  std::map<int, std::vector<int>> components;
  int next = 1;
  for (int id : ids) {
    const Vertex& v = base.vertex(id);
    const Int s = integral_multiplicity(v);
    std::vector<CyclicType> own;
    for (const auto& t : v.sing0) {
      const auto tr = transform_sing0(n, s, t);
      g_values[id].push_back(tr.g);
      if (!tr.type.smooth()) own.insert(own.end(), static_cast<std::size_t>(tr.g), tr.type);
    }
    own.insert(own.end(), points[id].begin(), points[id].end());
    const auto comp = transform_component(n, s, v.self_int, g_values[id]);
    for (Int c = 0; c < comp.nu; ++c) {
      Vertex w;
      w.id = next++;
      w.m = s / gcd(s, n);
      w.self_int = comp.self_int;
      w.genus = comp.genus;
      components[id].push_back(w.id);
      out.vertices.push_back(w);
    }
    for (std::size_t t = 0; t < own.size(); ++t)
      out.vertex(components[id][t % components[id].size()]).sing0.push_back(own[t]);
  }
  for (const auto& [ed, tr] : edges) {
    auto [xs, ys] = oriented_ends(base, *ed);
    const auto& cx = components[xs];
    const auto& cy = components[ys];
    for (Int t = 0; t < tr.g; ++t) {
      const int u = cx[static_cast<std::size_t>(t) % cx.size()], w = cy[static_cast<std::size_t>(t) % cy.size()];
      if (u < w)
        out.edges.push_back({u, w, tr.type});
      else
        out.edges.push_back({w, u, tr.type.swapped()});
    }
  }
  return out;
}

std::vector<Int> continued_fraction(Int d, Int k) {
  if (k <= 0) throw BadFraction("denominator must be positive");
  if (d <= 0) throw BadFraction("numerator must be positive");
  std::vector<Int> out;
  Int g = gcd(d, k);
  d /= g;
  k /= g;
  while (k > 1) {
    const Int q = (d + k - 1) / k;
    const Int r = q * k - d;
    out.push_back(q);
    d = k;
    k = r;
  }
  out.push_back(d);
  return out;
}

std::vector<Int> resolve_cyclic_point(const CyclicType& t) {
  if (!is_normalized(t)) throw NotNormalized(to_string(t) + " is not normalized");
  if (t.smooth()) return {};
  auto cf = continued_fraction(t.d, slope(t));
  for (auto& q : cf) q = -q;
  return cf;
}

DualGraph smooth_refinement(const DualGraph& g) {
  DualGraph out;
  int next = 1;
  for (const auto& v : g.vertices) next = std::max(next, v.id + 1);

  for (const auto& v : g.vertices) {
    Vertex w = v;
    w.sing0.clear();
    if (v.kind == VertexKind::Exceptional) {
      for (const auto& pt : points_on(g, v.id))
        if (!pt.type.smooth()) w.self_int -= rat(slope(pt.type), pt.type.d);
      if (!is_integer(w.self_int))
        throw IntegralityViolation("refined self-intersection of vertex " + std::to_string(v.id) + " is " +
                                   to_string(w.self_int));
    }
    out.vertices.push_back(w);
  }

  auto link = [&](int u, int w) {
    if (out.is_arrow(u) || (!out.is_arrow(w) && u > w)) std::swap(u, w);
    out.edges.push_back({u, w, CyclicType()});
  };
  // Chain of the point of type t with `ydiv` on {y = 0}; xdiv < 0 for a Sing0 point.
  auto insert_chain = [&](const CyclicType& t, int ydiv, int xdiv) {
    Int d = t.d, k = slope(t);
    Rational m_y = g.vertex(ydiv).m;
    const Rational m_x = xdiv > 0 ? g.vertex(xdiv).m : Rational(0);
    int prev = ydiv;
    for (Int q : continued_fraction(d, k)) {
      Vertex c;
      c.id = next++;
      c.self_int = -q;
      c.m = (m_x + k * m_y) / d;
      out.vertices.push_back(c);
      link(prev, c.id);
      prev = c.id;
      m_y = c.m;
      const Int r = q * k - d;
      d = k;
      k = r;
    }
    if (xdiv > 0) link(prev, xdiv);
  };

  for (const auto& v : g.vertices)
    for (const auto& t : v.sing0)
      if (!t.smooth()) insert_chain(t, v.id, -1);
  for (const auto& ed : g.edges) {
    auto [xs, ys] = oriented_ends(g, ed);
    if (ed.type.smooth())
      link(xs, ys);
    else
      insert_chain(ed.type, ys, xs);
  }
  return out;
}

}  // namespace qres
