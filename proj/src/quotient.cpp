#include "qres/quotient.hpp"

#include "qres/errors.hpp"

namespace qres {

CyclicType::CyclicType(Int d_, Int a_, Int b_) : d(d_) {
  if (d < 1) throw InvalidType("group order must be positive, got " + std::to_string(d));
  a = mod(a_, d);
  b = mod(b_, d);
}

Normalized normalize(const CyclicType& t) {
  if (gcd({t.d, t.a, t.b}) != 1) throw NonEffectiveAction("gcd(d,a,b) > 1 for " + to_string(t));
  Int da = gcd(t.d, t.a), db = gcd(t.d, t.b);
  Int d = t.d / (da * db);
  return {CyclicType(d, t.a / da, t.b / db), {db, da}};
}

bool is_normalized(const CyclicType& t) { return gcd(t.d, t.a) == 1 && gcd(t.d, t.b) == 1; }

bool equivalent(const CyclicType& t1, const CyclicType& t2) {
  CyclicType n1 = normalize(t1).type, n2 = normalize(t2).type;
  if (n1.d != n2.d) return false;
  Int d = n1.d;
  for (Int u = 1; u <= d; ++u) {
    if (gcd(u, d) != 1) continue;
    CyclicType s(d, u * n1.a, u * n1.b);
    if (s == n2 || s.swapped() == n2) return true;
  }
  return false;
}

CyclicType reduce_two_row(const TwoRowType& t) {
  if (t.d[0] < 1 || t.d[1] < 1) throw InvalidType("group orders must be positive");
  Int r = lcm(t.d[0], t.d[1]);
  Int s0 = r / t.d[0], s1 = r / t.d[1];
  Int a = mod(t.A[0][0] * s0, r), b = mod(t.A[0][1] * s0, r);
  Int c = mod(t.A[1][0] * s1, r), e = mod(t.A[1][1] * s1, r);
  if (a == 0 && c == 0) return CyclicType();
  Bezout bz = ext_gcd(a, c);
  Int m = bz.g;
  Int f = mod(bz.x * b + bz.y * e, r);
  Int D = (a / m) * e - b * (c / m);
  Int h = gcd(r, D);
  CyclicType raw(r, m, f * (r / h));
  Int g = gcd({raw.d, raw.a, raw.b});
  return normalize(CyclicType(raw.d / g, raw.a / g, raw.b / g)).type;
}

Int index(const CyclicType& t) { return normalize(t).type.d; }

Int slope(const CyclicType& t) {
  if (t.d == 1) return 0;
  return mod(inverse_mod(t.a, t.d) * t.b, t.d);
}

std::string to_string(const CyclicType& t) {
  return "(" + std::to_string(t.d) + ";" + std::to_string(t.a) + "," + std::to_string(t.b) + ")";
}

}  // namespace qres
