#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace qres {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Non-negative gcd; gcd(x, 0) = |x|.
Int gcd(Int a, Int b);
Int gcd(std::initializer_list<Int> xs);
Int lcm(Int a, Int b);

// Representative of a in [0, m).
Int mod(Int a, Int m);

struct Bezout {
  Int g, x, y;  // g = x*a + y*b
};
Bezout ext_gcd(Int a, Int b);

// Inverse of a modulo m; m = 1 gives 0. Throws if a is not a unit.
Int inverse_mod(Int a, Int m);

Rational rat(Int num, Int den = 1);
bool is_integer(const Rational& r);
Int to_int(const Rational& r);
Int to_int(const BigInt& n);
Rational floor(const Rational& r);
Rational frac(const Rational& r);  // r - floor(r), in [0, 1)
std::string to_string(const Rational& r);

// Exact k-th root of a non-negative rational, if it exists.
bool exact_root(const Rational& r, Int k, Rational& out);

}  // namespace qres
