#include "qres/projective.hpp"

#include "qres/errors.hpp"

#include <numeric>

namespace qres {

WPPlane::WPPlane(std::array<Int, 3> weights, Int order, std::array<Int, 3> act)
    : w(weights), d(order), action(act) {
  for (Int x : w)
    if (x < 1) throw NonCoprimeWeights("weights must be positive");
  if (gcd({w[0], w[1], w[2]}) != 1) throw NonCoprimeWeights("weights must be coprime");
  if (d < 1) throw InvalidType("group order must be positive");
  for (auto& x : action) x = mod(x, d);
}

std::array<Int, 3> WPPlane::minors() const {
  const auto [p, q, r] = w;
  const auto [a, b, c] = action;
  return {p * b - q * a, p * c - r * a, q * c - r * b};
}

Int WPPlane::e() const {
  const auto m = minors();
  return gcd({d, m[0], m[1], m[2]});
}

NormalizedWeights normalize_weights(const std::vector<Int>& q) {
  if (q.size() < 2) throw NonCoprimeWeights("need at least two weights");
  Int all = 0;
  for (Int x : q) {
    if (x < 1) throw NonCoprimeWeights("weights must be positive");
    all = gcd(all, x);
  }
  if (all != 1) throw NonCoprimeWeights("weights have a common factor " + std::to_string(all));
  NormalizedWeights out;
  out.exponents.resize(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    Int g = 0;
    for (std::size_t j = 0; j < q.size(); ++j)
      if (j != i) g = gcd(g, q[j]);
    out.exponents[i] = g;
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    Int prod = 1;
    for (std::size_t j = 0; j < q.size(); ++j)
      if (j != i) prod *= out.exponents[j];
    out.weights.push_back(q[i] / prod);
  }
  return out;
}

Int projection_degree(Int d, Int a, Int b, Int e, Int r, Int s) {
  const Int l = gcd({d * gcd({e, r, s}), e * gcd({d, a, b}), a * s - b * r});
  return d * e / l;
}

Int deg_tau(const WPPlane& plane) {
  const auto [p, q, r] = plane.w;
  const auto m = plane.minors();
  return q * r * projection_degree(p, q, r, p * plane.d, m[0], m[1]);
}

Rational bezout(const WPPlane& plane, Int deg1, Int deg2) {
  const auto [p, q, r] = plane.w;
  return Rational(plane.e() * deg1 * deg2) / (plane.d * p * q * r);
}

AxesTable axes_table(const WPPlane& plane) {
  const auto [p, q, r] = plane.w;
  const Int e = plane.e(), d = plane.d;
  return {rat(e * p, d * q * r), rat(e * q, d * p * r), rat(e * r, d * p * q),
          rat(e, d * r),         rat(e, d * q),         rat(e, d * p)};
}

Int w_degree(const std::vector<std::array<Int, 3>>& monomials, const WPPlane& plane) {
  if (monomials.empty()) throw EmptySupport("polynomial has no monomials");
  Int deg = -1;
  for (const auto& mono : monomials) {
    const Int k = mono[0] * plane.w[0] + mono[1] * plane.w[1] + mono[2] * plane.w[2];
    if (deg >= 0 && k != deg) throw InconsistentData("polynomial is not quasi-homogeneous");
    deg = k;
  }
  return deg;
}

}  // namespace qres
