#pragma once

#include "qres/arith.hpp"
#include "qres/puiseux.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qres {

// Polynomial in x, y with rational coefficients; zero coefficients are never stored.
class Polynomial {
 public:
  using Exponent = std::pair<Int, Int>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT
  static Polynomial monomial(const Rational& c, Int i, Int j);
  static Polynomial x() { return monomial(1, 1, 0); }
  static Polynomial y() { return monomial(1, 0, 1); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial pow(Int k) const;

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  Rational coeff(Int i, Int j) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::vector<Exponent> support() const;
  std::string to_string() const;
  bool operator==(const Polynomial&) const = default;

 private:
  void add(const Exponent& e, const Rational& c);
  std::map<Exponent, Rational> terms_;
};

// Top-level factors of a product such as "(x^2+y^3)(x^3+y^2)x"; a bare sum is one
// factor. A factor raised to a power is returned once per copy.
std::vector<Polynomial> parse_factors(const std::string& text);
Polynomial parse_polynomial(const std::string& text);

// Branches of one factor of the supported shapes: x, y, a x^i + b y^j, and
// (a x^i + b y^j)^m + c x^k y^l with a single branch of degree j m in y.
std::vector<PuiseuxBranch> factor_branches(const Polynomial& f);

CurveGerm parse_binomial_curve(const std::vector<Polynomial>& factors, const CyclicType& ambient = {});
CurveGerm parse_binomial_curve(const std::string& text, const CyclicType& ambient = {});

}  // namespace qres
