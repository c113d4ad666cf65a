#include "qres/blowup.hpp"

#include "qres/errors.hpp"

namespace qres {

namespace {

void check_weight(const Weight& w) {
  if (w.p < 1 || w.q < 1 || gcd(w.p, w.q) != 1)
    throw BadWeight("weights must be coprime positive integers, got (" + std::to_string(w.p) + "," +
                    std::to_string(w.q) + ")");
}

Int exact_div(Int num, Int den) {
  if (num % den != 0) throw std::logic_error("inexact chart division");
  return num / den;
}

}  // namespace

BlowupResult blowup(const CyclicType& t, const Weight& w) {
  if (!is_normalized(t)) throw NotNormalized(to_string(t) + " is not normalized");
  check_weight(w);
  const Int d = t.d, a = t.a, b = t.b, p = w.p, q = w.q;
  BlowupResult r;
  r.e = gcd(d, p * b - q * a);
  r.beta = inverse_mod(a, d);
  r.mu = inverse_mod(b, d);
  r.chart1_origin = CyclicType(p * d / r.e, 1, exact_div(-q + r.beta * p * b, r.e));
  r.chart2_origin = CyclicType(q * d / r.e, exact_div(-p + r.mu * q * a, r.e), 1);
  r.exc_self_intersection = -rat(r.e * r.e, d * p * q);
  return r;
}

Int wt_order(const std::vector<std::pair<Int, Int>>& exponents, const Weight& w) {
  if (exponents.empty()) throw EmptySupport("weighted order of an empty support");
  Int best = w.p * exponents.front().first + w.q * exponents.front().second;
  for (const auto& [i, j] : exponents) best = std::min(best, w.p * i + w.q * j);
  return best;
}

Rational total_transform(const CyclicType& t, const Weight& w, const Rational& nu) {
  Rational m = nu / blowup(t, w).e;
  if (!is_integer(m))
    throw DivisibilityViolation("exceptional multiplicity " + to_string(m) + " is not an integer");
  return m;
}

Rational exc_dot_strict(const CyclicType& t, const Weight& w, const Rational& nu) {
  Int e = blowup(t, w).e;
  return nu * e / (t.d * w.p * w.q);
}

Rational strict_self_intersection_update(const Rational& old, const CyclicType& t, const Weight& w,
                                         const Rational& mult) {
  check_weight(w);
  if (!is_normalized(t)) throw NotNormalized(to_string(t) + " is not normalized");
  return old - mult * mult / (t.d * w.p * w.q);
}

}  // namespace qres
