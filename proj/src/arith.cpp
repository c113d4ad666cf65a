#include "qres/arith.hpp"

#include "qres/errors.hpp"

#include <numeric>

namespace qres {

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int gcd(std::initializer_list<Int> xs) {
  Int g = 0;
  for (Int x : xs) g = std::gcd(g, x);
  return g;
}

Int lcm(Int a, Int b) { return std::lcm(a, b); }

Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Bezout ext_gcd(Int a, Int b) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

Int inverse_mod(Int a, Int m) {
  if (m == 1) return 0;
  Bezout b = ext_gcd(mod(a, m), m);
  if (b.g != 1) throw InconsistentData("no inverse of " + std::to_string(a) + " modulo " + std::to_string(m));
  return mod(b.x, m);
}

Rational rat(Int num, Int den) { return Rational(num) / Rational(den); }

bool is_integer(const Rational& r) { return denominator(r) == 1; }

Int to_int(const BigInt& n) {
  if (n > BigInt(INT64_MAX) || n < BigInt(INT64_MIN)) throw InconsistentData("integer overflow: " + n.str());
  return static_cast<Int>(n);
}

Int to_int(const Rational& r) {
  if (!is_integer(r)) throw InconsistentData("expected an integer, got " + to_string(r));
  return to_int(BigInt(numerator(r)));
}

Rational floor(const Rational& r) {
  BigInt n = numerator(r), d = denominator(r);
  BigInt q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return Rational(q);
}

Rational frac(const Rational& r) { return r - floor(r); }

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool int_root(const BigInt& n, Int k, BigInt& out) {
  if (n < 0) return false;
  if (n < 2) {
    out = n;
    return true;
  }
  BigInt lo = 1, hi = 1;
  while (boost::multiprecision::pow(hi, static_cast<unsigned>(k)) <= n) hi *= 2;
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, static_cast<unsigned>(k)) <= n)
      lo = mid;
    else
      hi = mid;
  }
  out = lo;
  return boost::multiprecision::pow(lo, static_cast<unsigned>(k)) == n;
}

}  // namespace

bool exact_root(const Rational& r, Int k, Rational& out) {
  if (k < 1 || r < 0) return false;
  BigInt n, d;
  if (!int_root(BigInt(numerator(r)), k, n) || !int_root(BigInt(denominator(r)), k, d)) return false;
  out = Rational(n) / Rational(d);
  return true;
}

}  // namespace qres
