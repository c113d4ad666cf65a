#include "doctest.h"
#include "fixtures.hpp"
#include "qres/blowup.hpp"
#include "qres/errors.hpp"
#include "qres/intersection.hpp"
#include "qres/jung.hpp"
#include "support.hpp"

#include <algorithm>
#include <map>

using namespace qres;

namespace {

DualGraph two_branch_base() { return fixture::resolved(fixture::two_branch_family(2, 3)); }

bool same_types(std::vector<CyclicType> got, const std::vector<CyclicType>& expected) {
  if (got.size() != expected.size()) return false;
  for (const auto& t : expected) {
    auto it = std::find_if(got.begin(), got.end(), [&](const CyclicType& s) { return equivalent(s, t); });
    if (it == got.end()) return false;
    got.erase(it);
  }
  return true;
}

// Edge divisibility only; Sing0 points can lie on {z = 0}.
bool double_points_divide(const DualGraph& g) {
  for (const auto& ed : g.edges) {
    const Rational s = ed.type.a * g.vertex(ed.v1).m + ed.type.b * g.vertex(ed.v2).m;
    if (!is_integer(s / ed.type.d)) return false;
  }
  return true;
}

std::vector<CyclicType> repeat(const CyclicType& t, int k) { return std::vector<CyclicType>(static_cast<std::size_t>(k), t); }

// Contract every chain of new vertices back onto the vertices of `original`.
std::map<int, Rational> blow_down_chains(const DualGraph& refined, const DualGraph& original) {
  std::map<int, std::vector<int>> adj;
  for (const auto& ed : refined.edges) {
    adj[ed.v1].push_back(ed.v2);
    adj[ed.v2].push_back(ed.v1);
  }
  auto is_new = [&](int id) { return !original.has_vertex(id); };
  std::map<int, Rational> out;
  for (int id : original.exceptional_ids()) {
    Rational s = refined.vertex(id).self_int;
    for (int next : adj[id]) {
      if (!is_new(next)) continue;
      std::vector<Int> chain;
      int prev = id, cur = next;
      while (true) {
        chain.push_back(-oracle::to_int_checked(refined.vertex(cur).self_int));
        int step = -1;
        for (int w : adj[cur])
          if (w != prev && is_new(w)) step = w;
        if (step < 0) break;
        prev = cur;
        cur = step;
      }
      s += 1 / oracle::nested_fraction(chain);
    }
    out[id] = s;
  }
  return out;
}

}  // namespace

TEST_SUITE("jung") {
  TEST_CASE("transform_sing0 examples") {
    auto t = transform_sing0(3, 10, CyclicType(2, 1, 1));
    CHECK(t.g == 1);
    CHECK(equivalent(t.type, CyclicType(2, 1, 1)));
    t = transform_sing0(4, 10, CyclicType(2, 1, 1));
    CHECK(t.g == 1);
    CHECK(t.type.smooth());
    t = transform_sing0(15, 10, CyclicType(2, 1, 1));
    CHECK(t.g == 5);
    CHECK(equivalent(t.type, CyclicType(2, 1, 1)));
    CHECK_THROWS_AS(transform_sing0(3, 7, CyclicType(2, 1, 1)), DivisibilityViolation);
    CHECK_THROWS_AS(transform_sing0(3, 10, CyclicType(4, 2, 1)), NotNormalized);
  }

  TEST_CASE("transform_double_point examples") {
    auto t = transform_double_point(3, 10, 10, CyclicType(5, 1, 1));
    CHECK(t.g == 1);
    CHECK(equivalent(t.type, CyclicType(15, 1, 11)));
    t = transform_double_point(15, 10, 10, CyclicType(5, 1, 1));
    CHECK(t.g == 1);
    CHECK(equivalent(t.type, CyclicType(3, 1, -1)));
    t = transform_double_point(4, 10, 10, CyclicType(5, 1, 1));
    CHECK(t.g == 2);
    CHECK(equivalent(t.type, CyclicType(10, 1, 11)));
    t = transform_double_point(20, 10, 10, CyclicType(5, 1, 1));
    CHECK(t.g == 2);
    CHECK(equivalent(t.type, CyclicType(2, 1, -1)));
    t = transform_double_point(1, 2, 1, CyclicType(7, 2, 3));
    CHECK(t.g == 1);
    CHECK(equivalent(t.type, CyclicType(7, 2, 3)));
    t = transform_double_point(7, 1, 10, CyclicType());
    CHECK(t.g == 1);
    CHECK(equivalent(t.type, CyclicType(7, -10, 1)));
    CHECK_THROWS_AS(transform_double_point(3, 1, 1, CyclicType(5, 1, 1)), DivisibilityViolation);
    CHECK_THROWS_AS(transform_double_point(1, 6, 4, CyclicType(7, 2, 3)), DivisibilityViolation);
  }

  TEST_CASE("double point case 1 family: (5n; 1, 10k+1) with 5k+1 = 0 mod n") {
    for (Int n = 1; n <= 40; ++n) {
      if (gcd(n, 10) != 1) continue;
      Int k = 0;
      while (mod(5 * k + 1, n) != 0) ++k;
      const auto t = transform_double_point(n, 10, 10, CyclicType(5, 1, 1));
      CAPTURE(n);
      CHECK(t.g == 1);
      CHECK(equivalent(t.type, CyclicType(5 * n, 1, 10 * k + 1)));
    }
  }

  TEST_CASE("double point types match their raw two-row groups") {
    for (Int n = 1; n <= 24; ++n)
      for (Int d = 1; d <= 6; ++d)
        for (Int a = 0; a < d; ++a)
          for (Int b = 0; b < d; ++b) {
            const CyclicType base(d, a, b);
            if (!is_normalized(base)) continue;
            for (Int r = 1; r <= 8; ++r)
              for (Int s = 1; s <= 8; ++s) {
                if ((a * r + b * s) % d != 0) continue;
                const auto t = transform_double_point(n, r, s, base);
                const Int m0 = (a * r + b * s) / d;
                CHECK(t.g == gcd({n, r, s, m0}));
                const Int n1 = n / t.g, e = gcd({n1, r / t.g, s / t.g});
                const Int n2 = n1 / e, r2 = r / t.g / e, s2 = s / t.g / e;
                CHECK(gcd(m0 / t.g, e) == 1);
                CHECK(mod(t.raw.A[0][0] * r2 + t.raw.A[0][1] * s2, n2) == 0);
                const std::vector<oracle::Row> rows{{t.raw.d[0], t.raw.A[0][0], t.raw.A[0][1]},
                                                    {t.raw.d[1], t.raw.A[1][0], t.raw.A[1][1]}};
                const auto expected = oracle::scaled_invariants(t.type);
                CHECK(oracle::scaled_invariants(rows) == expected);
                // Any other admissible (k, l) gives an equivalent point.
                const Int d1 = d / e;
                for (Int k = 0; k < n2; ++k)
                  for (Int l = 0; l < n2; ++l) {
                    if (mod(m0 / t.g + k * r2 + l * s2, n2) != 0) continue;
                    const std::vector<oracle::Row> alt{{d1 * n2, a + k * d1, b + l * d1}, {n2, s2, -r2}};
                    CHECK(oracle::scaled_invariants(alt) == expected);
                  }
              }
          }
  }

  TEST_CASE("transform_component examples") {
    // Exceptional divisor of (x^2+y^3)(x^3+y^2): s = 10, E^2 = -3/10, one Sing0 point,
    // one strict transform point, one double point.
    auto c = transform_component(3, 10, Rational(-3, 10), {1, 1, 1});
    CHECK(c.nu == 1);
    CHECK(c.degree == 1);
    CHECK(c.genus == 0);
    CHECK(c.self_int == Rational(-1, 10));
    c = transform_component(20, 10, Rational(-3, 10), {5, 1, 2});
    CHECK(c.nu == 1);
    CHECK(c.degree == 10);
    CHECK(c.genus == 2);
    CHECK(c.self_int == Rational(-3, 2));
    c = transform_component(15, 10, Rational(-3, 10), {5, 1, 1});
    CHECK(c.nu == 1);
    CHECK(c.degree == 5);
    CHECK(c.genus == 0);
    CHECK(c.self_int == Rational(-1, 2));
    c = transform_component(4, 10, Rational(-3, 10), {1, 1, 2});
    CHECK(c.degree == 2);
    CHECK(c.self_int == Rational(-3, 10));
    c = transform_component(6, 4, Rational(-1, 2), {2, 2});
    CHECK(c.nu == 2);
    CHECK(c.nu * c.self_int == Rational(2 * 2) * Rational(-1, 2) / 6);
    CHECK_THROWS_AS(transform_component(3, 10, 0, {1}), InconsistentData);
  }

  TEST_CASE("case n = 3") {
    const auto g = jung_resolution({3, two_branch_base()});
    REQUIRE(g.exceptional_ids().size() == 2);
    for (const auto& v : g.vertices) {
      CHECK(v.genus == 0);
      CHECK(v.self_int == Rational(-1, 10));
      CHECK(same_types(v.sing0, {CyclicType(2, 1, 1), CyclicType(3, -10, 1)}));
    }
    REQUIRE(g.edges.size() == 1);
    CHECK(equivalent(g.edges[0].type, CyclicType(15, 1, 11)));
    CHECK(double_points_divide(g));
  }

  TEST_CASE("case n = 4: two double points") {
    const auto g = jung_resolution({4, two_branch_base()});
    REQUIRE(g.exceptional_ids().size() == 2);
    for (const auto& v : g.vertices) {
      CHECK(v.genus == 0);
      CHECK(v.self_int == Rational(-3, 10));
      CHECK(same_types(v.sing0, {CyclicType(2, 1, 1)}));
    }
    REQUIRE(g.edges.size() == 2);
    for (const auto& ed : g.edges) CHECK(equivalent(ed.type, CyclicType(10, 1, 11)));
    CHECK(double_points_divide(g));
  }

  TEST_CASE("case n = 15") {
    const auto g = jung_resolution({15, two_branch_base()});
    REQUIRE(g.exceptional_ids().size() == 2);
    for (const auto& v : g.vertices) {
      CHECK(v.genus == 0);
      CHECK(v.self_int == Rational(-1, 2));
      auto expected = repeat(CyclicType(2, 1, 1), 5);
      expected.push_back(CyclicType(3, -2, 1));
      CHECK(same_types(v.sing0, expected));
    }
    REQUIRE(g.edges.size() == 1);
    CHECK(equivalent(g.edges[0].type, CyclicType(3, 1, -1)));
  }

  TEST_CASE("case n = 20: genus two") {
    const auto g = jung_resolution({20, two_branch_base()});
    REQUIRE(g.exceptional_ids().size() == 2);
    for (const auto& v : g.vertices) {
      CHECK(v.genus == 2);
      CHECK(v.self_int == Rational(-3, 2));
      CHECK(same_types(v.sing0, {CyclicType(2, -1, 1)}));
    }
    // The double point has g preimages.
    const auto dp = transform_double_point(20, 10, 10, CyclicType(5, 1, 1));
    CHECK(static_cast<Int>(g.edges.size()) == dp.g);
    for (const auto& ed : g.edges) CHECK(equivalent(ed.type, CyclicType(2, 1, -1)));
  }

  TEST_CASE("every n up to 40 gives a consistent surface graph") {
    const auto base = two_branch_base();
    for (Int n = 1; n <= 40; ++n) {
      CAPTURE(n);
      const auto g = jung_resolution({n, base});
      CHECK(double_points_divide(g));
      Rational total = 0;
      for (const auto& v : g.vertices) {
        CHECK(v.genus >= 0);
        total += v.self_int;
      }
      // Both base divisors have s = 10 and E^2 = -3/10.
      const Int m = gcd(Int{10}, n);
      CHECK(total == 2 * Rational(m * m) * Rational(-3, 10) / n);
      if (!g.exceptional_ids().empty()) CHECK(check_negative_definite(intersection_matrix(g)));
      const auto refined = smooth_refinement(g);
      for (const auto& v : refined.vertices) CHECK(is_integer(v.self_int));
    }
  }

  TEST_CASE("continued fractions") {
    CHECK(continued_fraction(7, 3) == std::vector<Int>{3, 2, 2});
    CHECK(continued_fraction(5, 2) == std::vector<Int>{3, 2});
    CHECK(continued_fraction(6, 1) == std::vector<Int>{6});
    CHECK_THROWS_AS(continued_fraction(5, 0), BadFraction);
    CHECK_THROWS_AS(continued_fraction(5, -2), BadFraction);
    for (Int d = 1; d <= 60; ++d)
      for (Int k = 1; k <= d; ++k) {
        if (gcd(d, k) != 1) continue;
        const auto cf = continued_fraction(d, k);
        CHECK(oracle::nested_fraction(cf) == Rational(d, k));
        for (std::size_t i = 0; i + 1 < cf.size(); ++i) CHECK(cf[i] >= 2);
        CHECK(oracle::tridiagonal_det(cf) == d);
      }
  }

  TEST_CASE("Hirzebruch-Jung chains") {
    CHECK(resolve_cyclic_point(CyclicType()).empty());
    CHECK(resolve_cyclic_point(CyclicType(7, 1, 3)) == std::vector<Int>{-3, -2, -2});
    CHECK(resolve_cyclic_point(CyclicType(7, 2, 6)) == std::vector<Int>{-3, -2, -2});
    CHECK_THROWS_AS(resolve_cyclic_point(CyclicType(4, 2, 1)), NotNormalized);
  }

  TEST_CASE("first step of the recursive resolution of (d;a,b)") {
    for (Int d = 2; d <= 12; ++d)
      for (Int a = 1; a < d; ++a)
        for (Int b = 1; b < d; ++b) {
          const CyclicType t(d, a, b);
          if (!is_normalized(t) || gcd(a, b) != 1) continue;
          const auto r = blowup(t, {a, b});
          CHECK(r.exc_self_intersection == Rational(-d, a * b));
          CHECK(equivalent(r.chart1_origin, CyclicType(a, -d, b)));
          CHECK(equivalent(r.chart2_origin, CyclicType(b, a, -d)));
        }
  }

  TEST_CASE("smooth refinement of the five-curve graph") {
    const auto g = fixture::five_curve_graph();
    const auto refined = smooth_refinement(g);
    CHECK(refined.vertex(1).self_int == -2);
    CHECK(refined.vertex(2).self_int == -1);
    for (const auto& v : refined.vertices) {
      CHECK(is_integer(v.self_int));
      CHECK(v.sing0.empty());
    }
    for (const auto& ed : refined.edges) CHECK(ed.type.smooth());
    CHECK(check_negative_definite(intersection_matrix(refined)));
    const auto recovered = blow_down_chains(refined, g);
    for (int id : g.exceptional_ids()) CHECK(recovered.at(id) == g.vertex(id).self_int);
  }

  TEST_CASE("refinement of graphs without singular points is the identity") {
    DualGraph g;
    g.vertices = {{1, VertexKind::Exceptional, 2, -1, 0, {}, {}}, {2, VertexKind::Arrow, 1, 0, 0, {}, {1}},
                  {3, VertexKind::Arrow, 1, 0, 0, {}, {2}}};
    g.edges = {{1, 2, CyclicType()}, {1, 3, CyclicType()}};
    CHECK(smooth_refinement(g) == g);
    g.vertex(1).self_int = Rational(-1, 3);
    CHECK_THROWS_AS(smooth_refinement(g), IntegralityViolation);
  }

  TEST_CASE("refinement and blow-down on random resolutions") {
    oracle::Gen gen(31);
    for (int trial = 0; trial < 100; ++trial) {
      const auto g = resolve({CyclicType(), gen.branch_set(3, 5)});
      if (g.exceptional_ids().empty()) continue;
      const auto refined = smooth_refinement(g);
      for (const auto& v : refined.vertices) CHECK(is_integer(v.self_int));
      CHECK(check_negative_definite(intersection_matrix(refined)));
      const auto recovered = blow_down_chains(refined, g);
      for (int id : g.exceptional_ids()) CHECK(recovered.at(id) == g.vertex(id).self_int);
    }
  }
}
