#pragma once

// Independent oracles and seeded generators shared by the unit tests and the
// acceptance binary. Nothing here calls the library routine it is checking.

#include "qres/arith.hpp"
#include "qres/graph.hpp"
#include "qres/polynomial.hpp"
#include "qres/puiseux.hpp"
#include "qres/quotient.hpp"

#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qres {

inline std::ostream& operator<<(std::ostream& os, const CyclicType& t) { return os << to_string(t); }

}  // namespace qres

namespace oracle {

using qres::BigInt;
using qres::Int;
using qres::Rational;

struct Row {
  Int d, a, b;
};

// Reduced fraction num/den, cheaper to compare than Rational.
using Fraction = std::pair<Int, Int>;
using InvariantSet = std::set<std::pair<Fraction, Fraction>>;

inline Fraction fraction(Int num, Int den) {
  const Int g = std::gcd(num, den);
  return {num / g, den / g};
}

// Invariant monomials x^i y^j of the group generated by the rows, rescaled so
// the first invariant powers of x and y become x and y. Two actions give the
// same quotient with the same coordinate axes iff these sets agree.
inline InvariantSet scaled_invariants(const std::vector<Row>& rows) {
  auto invariant = [&](Int i, Int j) {
    for (const auto& r : rows)
      if (((r.a * i + r.b * j) % r.d + r.d) % r.d != 0) return false;
    return true;
  };
  Int u = 1, v = 1;
  while (!invariant(u, 0)) ++u;
  while (!invariant(0, v)) ++v;
  InvariantSet out;
  for (Int i = 0; i < u; ++i)
    for (Int j = 0; j < v; ++j)
      if (invariant(i, j)) out.insert({fraction(i, u), fraction(j, v)});
  return out;
}

// Smallest positive k with x^k (resp. y^k) invariant.
inline std::pair<Int, Int> axis_powers(const std::vector<Row>& rows) {
  auto invariant = [&](Int i, Int j) {
    for (const auto& r : rows)
      if (((r.a * i + r.b * j) % r.d + r.d) % r.d != 0) return false;
    return true;
  };
  Int u = 1, v = 1;
  while (!invariant(u, 0)) ++u;
  while (!invariant(0, v)) ++v;
  return {u, v};
}

inline InvariantSet scaled_invariants(const qres::CyclicType& t) {
  return scaled_invariants(std::vector<Row>{{t.d, t.a, t.b}});
}

inline InvariantSet swapped(const InvariantSet& s) {
  InvariantSet out;
  for (const auto& [x, y] : s) out.insert({y, x});
  return out;
}

// Same quotient, allowing the coordinates to be exchanged.
inline bool same_quotient_up_to_swap(const qres::CyclicType& t1, const qres::CyclicType& t2) {
  const auto s1 = scaled_invariants(t1), s2 = scaled_invariants(t2);
  return s1 == s2 || s1 == swapped(s2);
}

inline bool same_oriented_quotient(const qres::CyclicType& t1, const qres::CyclicType& t2) {
  return scaled_invariants(t1) == scaled_invariants(t2);
}

inline Int to_int_checked(const Rational& r) {
  if (denominator(r) != 1) throw std::logic_error("expected an integer");
  return qres::to_int(r);
}

// q1 - 1/(q2 - 1/(...)).
inline Rational nested_fraction(const std::vector<Int>& q) {
  Rational v = q.back();
  for (auto it = q.rbegin() + 1; it != q.rend(); ++it) v = *it - 1 / v;
  return v;
}

// Determinant of the tridiagonal matrix with diagonal c and off-diagonal 1, by the continuant recurrence.
inline Int tridiagonal_det(const std::vector<Int>& c) {
  Int prev = 1, cur = c.empty() ? 1 : c[0];
  for (std::size_t k = 1; k < c.size(); ++k) {
    const Int next = c[k] * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Order of {(i, j) in Z_d x Z_e : a i/d + r j/e and b i/d + s j/e are integers}.
inline Int stabilizer_order(Int d, Int a, Int b, Int e, Int r, Int s) {
  Int count = 0;
  for (Int i = 0; i < d; ++i)
    for (Int j = 0; j < e; ++j) {
      const Rational u = Rational(a * i, d) + Rational(r * j, e);
      const Rational w = Rational(b * i, d) + Rational(s * j, e);
      if (denominator(u) == 1 && denominator(w) == 1) ++count;
    }
  return count;
}

// Univariate polynomials over Q in x, lowest degree first.
using UPoly = std::vector<Rational>;

inline UPoly trim(UPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(r);
}

inline UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return trim(r);
}

// Exact quotient; the remainder must vanish.
inline UPoly divide(UPoly a, const UPoly& b) {
  a = trim(a);
  if (a.empty()) return {};
  UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a = trim(a);
  }
  if (!a.empty()) throw std::logic_error("inexact polynomial division");
  return trim(q);
}

// Coefficients of f as a polynomial in y with coefficients in Q[x], lowest y-degree first.
inline std::vector<UPoly> in_y(const qres::Polynomial& f) {
  std::vector<UPoly> out;
  for (const auto& [e, c] : f.terms()) {
    const auto j = static_cast<std::size_t>(e.second), i = static_cast<std::size_t>(e.first);
    if (out.size() <= j) out.resize(j + 1);
    if (out[j].size() <= i) out[j].resize(i + 1);
    out[j][i] += c;
  }
  for (auto& c : out) c = trim(c);
  return out;
}

// Res_y(f, g) by fraction-free elimination on the Sylvester matrix over Q[x].
inline UPoly resultant_y(const qres::Polynomial& f, const qres::Polynomial& g) {
  const auto F = in_y(f), G = in_y(g);
  const std::size_t m = F.size() - 1, n = G.size() - 1, N = m + n;
  if (N == 0) return {Rational(1)};
  std::vector<std::vector<UPoly>> M(N, std::vector<UPoly>(N));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) M[i][i + k] = F[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) M[n + i][i + k] = G[n - k];
  UPoly prev{Rational(1)};
  bool negate = false;
  for (std::size_t k = 0; k + 1 < N; ++k) {
    if (M[k][k].empty()) {
      std::size_t p = k + 1;
      while (p < N && M[p][k].empty()) ++p;
      if (p == N) return {};
      std::swap(M[k], M[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < N; ++i) {
      for (std::size_t j = k + 1; j < N; ++j)
        M[i][j] = divide(sub(mul(M[i][j], M[k][k]), mul(M[i][k], M[k][j])), prev);
      M[i][k].clear();
    }
    prev = M[k][k];
  }
  UPoly det = M[N - 1][N - 1];
  if (negate)
    for (auto& c : det) c = -c;
  return det;
}

inline Int order(const UPoly& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) return static_cast<Int>(i);
  return -1;
}

inline Int intersection_by_resultant(const qres::Polynomial& f, const qres::Polynomial& g) {
  return order(resultant_y(f, g));
}

// Seeded generators.
class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  // Action with gcd(d, a, b) = 1.
  qres::CyclicType effective_type(Int max_d) {
    while (true) {
      const Int d = uniform(1, max_d), a = uniform(-d, 2 * d), b = uniform(-d, 2 * d);
      if (qres::gcd({d, a, b}) == 1) return qres::CyclicType(d, a, b);
    }
  }

  qres::CyclicType normalized_type(Int max_d) {
    while (true) {
      const Int d = uniform(1, max_d), a = uniform(0, d - 1), b = uniform(0, d - 1);
      const qres::CyclicType t(d, a, b);
      if (d == 1 || (qres::gcd(d, a) == 1 && qres::gcd(d, b) == 1)) return t;
    }
  }

  Rational coefficient() {
    static const Rational choices[] = {Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2), Rational(3)};
    return choices[uniform(0, 5)];
  }

  // Exponent with denominator at most max_den, above `after`.
  Rational exponent_after(const Rational& after, Int max_den) {
    const Int den = uniform(1, max_den);
    Int num = qres::to_int(qres::floor(after * den)) + 1;
    num += uniform(0, 2 * den);
    return Rational(num, den);
  }

  qres::PuiseuxBranch series(Int max_den, const std::vector<qres::Term>& prefix = {}) {
    std::vector<qres::Term> terms = prefix;
    const Int extra = uniform(prefix.empty() ? 1 : 0, 2);
    Rational last = terms.empty() ? Rational(0) : terms.back().exp;
    for (Int i = 0; i < extra || terms.empty(); ++i) {
      last = exponent_after(last, max_den);
      terms.push_back({qres::Coef(coefficient()), last});
    }
    return qres::PuiseuxBranch(terms);
  }

  // Up to max_branches pairwise distinct branches, some sharing leading terms.
  std::vector<qres::PuiseuxBranch> branch_set(Int max_branches, Int max_den) {
    std::vector<qres::PuiseuxBranch> out;
    const Int count = uniform(1, max_branches);
    bool x_axis = false, y_axis = false;
    while (static_cast<Int>(out.size()) < count) {
      const Int kind = uniform(0, 9);
      qres::PuiseuxBranch br;
      if (kind == 0 && !x_axis) {
        br = qres::PuiseuxBranch(qres::Axis::X);
        x_axis = true;
      } else if (kind == 1 && !y_axis) {
        br = qres::PuiseuxBranch(qres::Axis::Y);
        y_axis = true;
      } else if (kind <= 5 && !out.empty() && !out.back().is_axis()) {
        const auto& base = out[static_cast<std::size_t>(uniform(0, static_cast<Int>(out.size()) - 1))];
        if (base.is_axis()) continue;
        const auto keep = static_cast<std::size_t>(uniform(1, static_cast<Int>(base.terms.size())));
        br = series(max_den, std::vector<qres::Term>(base.terms.begin(), base.terms.begin() + keep));
      } else {
        br = series(max_den);
      }
      bool fresh = true;
      for (const auto& other : out)
        if (qres::same_orbit(other, br, qres::CyclicType())) fresh = false;
      if (fresh) out.push_back(br);
    }
    return out;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace oracle
