#include "qres/resolution.hpp"

#include "qres/blowup.hpp"
#include "qres/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qres {

namespace {

const CyclicType kSmooth{1, 0, 0};

struct Pending {
  PuiseuxBranch br;
  std::vector<int> ids;
};

struct Center {
  CyclicType amb;
  int exc_x = -1, exc_y = -1;
  std::vector<Pending> branches;
};

struct ArrowRecord {
  std::vector<int> ids;
  int exc = -1;
  CyclicType type;
};

// Order of vanishing of the difference of two series (empty = zero series).
Rational contact_order(const std::vector<Term>& s1, const std::vector<Term>& s2) {
  std::size_t i = 0;
  while (i < s1.size() && i < s2.size() && s1[i] == s2[i]) ++i;
  if (i == s1.size() && i == s2.size()) return Rational(-1);
  if (i == s1.size()) return s2[i].exp;
  if (i == s2.size()) return s1[i].exp;
  return std::min(s1[i].exp, s2[i].exp);
}

void merge_orbits(Center& c) {
  std::vector<Pending> out;
  for (auto& p : c.branches) {
    bool merged = false;
    for (auto& q : out) {
      if (same_orbit(q.br, p.br, c.amb)) {
        q.ids.insert(q.ids.end(), p.ids.begin(), p.ids.end());
        std::sort(q.ids.begin(), q.ids.end());
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(std::move(p));
  }
  c.branches = std::move(out);
}

class Engine {
 public:
  explicit Engine(const ResolveOptions& opts) : opts_(opts) {}

  void run(Center c) {
    merge_orbits(c);
    if (resolved(c)) {
      record(c);
      return;
    }
    translate(c);
    if (resolved(c)) {
      record(c);
      return;
    }
    blow_up(std::move(c));
  }

  DualGraph finish() {
    std::sort(arrows_.begin(), arrows_.end(),
              [](const ArrowRecord& a, const ArrowRecord& b) { return a.ids.front() < b.ids.front(); });
    int id = next_exc_;
    for (const auto& ar : arrows_) {
      Vertex v;
      v.id = id;
      v.kind = VertexKind::Arrow;
      v.m = 1;
      v.branches = ar.ids;
      graph_.vertices.push_back(v);
      if (ar.exc > 0) graph_.edges.push_back({ar.exc, id, ar.type});
      ++id;
    }
    std::sort(graph_.edges.begin(), graph_.edges.end(), [](const Edge& a, const Edge& b) {
      return std::pair(a.v1, a.v2) < std::pair(b.v1, b.v2);
    });
    return graph_;
  }

 private:
  bool resolved(const Center& c) const {
    if (opts_.separate_branches && c.branches.size() > 1) return false;
    struct Comp {
      bool xtype;
      std::vector<Term> series;
    };
    std::vector<Comp> comps;
    if (c.exc_x > 0) comps.push_back({true, {}});
    if (c.exc_y > 0) comps.push_back({false, {}});
    for (const auto& p : c.branches) {
      if (p.br.axis == Axis::X) {
        comps.push_back({true, {}});
      } else if (p.br.axis == Axis::Y) {
        comps.push_back({false, {}});
      } else {
        for (const auto& img : orbit(p.br, c.amb)) {
          if (img.conjugacy_degree() != 1) return false;
          comps.push_back({false, img.terms});
        }
      }
      if (comps.size() > 2) return false;
    }
    if (comps.size() < 2) return true;
    if (comps[0].xtype != comps[1].xtype) return true;
    if (comps[0].xtype) return false;
    return contact_order(comps[0].series, comps[1].series) == 1;
  }

  void translate(Center& c) const {
    if (c.exc_y > 0) return;
    const std::vector<Term>* ref = nullptr;
    for (const auto& p : c.branches) {
      if (p.br.axis == Axis::Y) return;
      if (p.br.axis == Axis::None && ref == nullptr) ref = &p.br.terms;
    }
    if (ref == nullptr) return;
    std::size_t len = 0;
    while (len < ref->size()) {
      const Term& t = (*ref)[len];
      if (!is_integer(t.exp)) break;
      if (mod(c.amb.a * to_int(t.exp) - c.amb.b, c.amb.d) != 0) break;
      bool shared = true;
      for (const auto& p : c.branches)
        if (p.br.axis == Axis::None && (p.br.terms.size() <= len || !(p.br.terms[len] == t))) shared = false;
      if (!shared) break;
      ++len;
    }
    if (len == 0) return;
    for (auto& p : c.branches) {
      if (p.br.axis != Axis::None) continue;
      p.br.terms.erase(p.br.terms.begin(), p.br.terms.begin() + static_cast<std::ptrdiff_t>(len));
      if (p.br.terms.empty()) p.br.axis = Axis::Y;
    }
  }

  void record(const Center& c) {
    if (c.exc_x > 0 && c.exc_y > 0) {
      if (c.exc_x < c.exc_y)
        graph_.edges.push_back({c.exc_x, c.exc_y, c.amb});
      else
        graph_.edges.push_back({c.exc_y, c.exc_x, c.amb.swapped()});
    }
    const int exc = c.exc_x > 0 ? c.exc_x : c.exc_y;
    if (c.branches.empty() && (c.exc_x > 0) != (c.exc_y > 0) && !c.amb.smooth())
      graph_.vertex(exc).sing0.push_back(c.exc_x > 0 ? c.amb.swapped() : c.amb);
    for (const auto& p : c.branches) {
      ArrowRecord ar{p.ids, exc, c.amb};
      if (exc > 0 && exc == c.exc_x) ar.type = c.amb.swapped();
      if (exc < 0) ar.type = c.amb;
      arrows_.push_back(ar);
    }
  }

  void blow_up(Center c) {
    if (++blowups_ > opts_.max_blowups) throw InconsistentData("blow-up budget exhausted");
    Rational lambda = -1;
    for (const auto& p : c.branches)
      if (p.br.axis == Axis::None && (lambda < 0 || p.br.leading_exponent() < lambda))
        lambda = p.br.leading_exponent();
    Weight w{1, 1};
    if (lambda > 0) w = {to_int(BigInt(denominator(lambda))), to_int(BigInt(numerator(lambda)))};
    else lambda = 1;
    const BlowupResult bu = blowup(c.amb, w);
    const Int dpq = c.amb.d * w.p * w.q;

    const int E = next_exc_++;
    Vertex v;
    v.id = E;
    v.self_int = bu.exc_self_intersection;
    Rational nu = 0;
    for (const auto& p : c.branches) {
      if (p.br.axis == Axis::X) nu += w.p;
      else if (p.br.axis == Axis::Y) nu += w.q;
      else nu += Rational(static_cast<Int>(orbit(p.br, c.amb).size())) *
                 std::min(Rational(w.q), Rational(w.p * p.br.leading_exponent()));
    }
    if (c.exc_x > 0) {
      nu += w.p * graph_.vertex(c.exc_x).m;
      graph_.vertex(c.exc_x).self_int -= rat(w.p * w.p, dpq);
    }
    if (c.exc_y > 0) {
      nu += w.q * graph_.vertex(c.exc_y).m;
      graph_.vertex(c.exc_y).self_int -= rat(w.q * w.q, dpq);
    }
    v.m = nu / bu.e;
    graph_.vertices.push_back(v);

    Center chart1{bu.chart1_origin, E, c.exc_y, {}};
    Center chart2{bu.chart2_origin, c.exc_x, E, {}};
    std::vector<Center> generic;
    std::vector<Coef> generic_at;
    const Int D = bu.chart1_origin.d;
    for (auto& p : c.branches) {
      if (p.br.axis == Axis::X) {
        chart2.branches.push_back(std::move(p));
        continue;
      }
      if (p.br.axis == Axis::Y) {
        chart1.branches.push_back(std::move(p));
        continue;
      }
      PuiseuxBranch moved;
      for (const auto& t : p.br.terms) moved.terms.push_back({t.coeff, (w.p * t.exp - w.q) / bu.e});
      if (p.br.leading_exponent() > lambda) {
        chart1.branches.push_back({moved, p.ids});
        continue;
      }
      std::size_t slot = generic.size();
      Int shift = 0;
      for (std::size_t i = 0; i < generic_at.size(); ++i) {
        const Rational diff = (generic_at[i].turn - moved.terms.front().coeff.turn) * D;
        if (generic_at[i].mag == moved.terms.front().coeff.mag && is_integer(diff)) {
          slot = i;
          shift = mod(to_int(diff) * inverse_mod(bu.chart1_origin.b, D), D);
          break;
        }
      }
      if (slot == generic.size()) {
        generic.push_back(Center{kSmooth, E, -1, {}});
        generic_at.push_back(moved.terms.front().coeff);
      }
      PuiseuxBranch aligned = act(moved, bu.chart1_origin, shift);
      aligned.terms.erase(aligned.terms.begin());
      if (aligned.terms.empty()) aligned.axis = Axis::Y;
      generic[slot].branches.push_back({aligned, p.ids});
    }
    run(std::move(chart1));
    run(std::move(chart2));
    for (auto& g : generic) run(std::move(g));
  }

  ResolveOptions opts_;
  DualGraph graph_;
  std::vector<ArrowRecord> arrows_;
  int next_exc_ = 1;
  int blowups_ = 0;
};

DualGraph resolve_impl(const CurveGerm& curve, const ResolveOptions& opts) {
  if (!is_normalized(curve.ambient)) throw NotNormalized(to_string(curve.ambient) + " is not normalized");
  const auto& brs = curve.branches;
  for (std::size_t i = 0; i < brs.size(); ++i)
    for (std::size_t j = i + 1; j < brs.size(); ++j)
      if (same_orbit(brs[i], brs[j], kSmooth))
        throw DegenerateInput("branches " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                              " define the same curve");
  if (!curve.ambient.smooth()) {
    for (std::size_t i = 0; i < brs.size(); ++i)
      for (const auto& img : orbit(brs[i], curve.ambient)) {
        bool found = std::any_of(brs.begin(), brs.end(),
                                 [&](const PuiseuxBranch& b) { return same_orbit(img, b, kSmooth); });
        if (!found)
          throw NonInvariantCurve("the image of branch " + std::to_string(i + 1) + " under " +
                                  to_string(curve.ambient) + " is missing");
      }
  }
  Center root{curve.ambient, -1, -1, {}};
  for (std::size_t i = 0; i < brs.size(); ++i) root.branches.push_back({brs[i], {static_cast<int>(i + 1)}});
  Engine engine(opts);
  engine.run(std::move(root));
  return engine.finish();
}

}  // namespace

DualGraph resolve(const CurveGerm& curve, const ResolveOptions& opts) { return resolve_impl(curve, opts); }

DualGraph resolve_quotient(const CurveGerm& curve, const ResolveOptions& opts) {
  return resolve_impl(curve, opts);
}

bool check_q_normal_crossing(const DualGraph& g) {
  std::set<int> ids;
  for (const auto& v : g.vertices) {
    if (!ids.insert(v.id).second) return false;
    if (v.kind == VertexKind::Exceptional && v.self_int >= 0) return false;
    if (v.m <= 0) return false;
  }
  std::map<int, std::set<int>> through;
  for (const auto& ed : g.edges) {
    if (!ids.count(ed.v1) || !ids.count(ed.v2) || ed.v1 == ed.v2) return false;
    if (ed.point < 0 || g.is_arrow_edge(ed)) continue;
    through[ed.point].insert(ed.v1);
    through[ed.point].insert(ed.v2);
  }
  for (const auto& [pt, vs] : through)
    if (vs.size() > 2) return false;
  return check_divisibility(g);
}

}  // namespace qres
