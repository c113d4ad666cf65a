#include "qres/puiseux.hpp"

#include "qres/errors.hpp"

#include <algorithm>

namespace qres {

Coef::Coef(const Rational& value) {
  if (value == 0) throw DegenerateInput("zero coefficient");
  mag = value < 0 ? Rational(-value) : value;
  turn = value < 0 ? Rational(1, 2) : Rational(0);
}

Coef::Coef(const Rational& m, const Rational& t) : mag(m), turn(frac(t)) {
  if (mag <= 0) throw DegenerateInput("coefficient magnitude must be positive");
}

Coef Coef::operator*(const Coef& o) const { return Coef(mag * o.mag, turn + o.turn); }

Coef Coef::pow(Int k) const {
  Rational m = 1;
  for (Int i = 0; i < (k < 0 ? -k : k); ++i) m *= mag;
  if (k < 0) m = 1 / m;
  return Coef(m, turn * k);
}

bool Coef::root(Int k, Coef& out) const {
  Rational r;
  if (!exact_root(mag, k, r)) return false;
  out = Coef(r, turn / k);
  return true;
}

Rational Coef::value() const {
  if (!is_rational()) throw InconsistentData("coefficient is not rational");
  return turn == 0 ? mag : Rational(-mag);
}

PuiseuxBranch::PuiseuxBranch(std::vector<Term> ts) : terms(std::move(ts)) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].exp <= 0) throw DegenerateInput("Puiseux exponents must be positive");
    if (i > 0 && terms[i].exp <= terms[i - 1].exp) throw DegenerateInput("Puiseux exponents must increase");
  }
  if (terms.empty()) axis = Axis::Y;
}

Int PuiseuxBranch::conjugacy_degree() const {
  Int n = 1;
  for (const auto& t : terms) n = lcm(n, to_int(BigInt(denominator(t.exp))));
  return n;
}

PuiseuxBranch act(const PuiseuxBranch& br, const CyclicType& amb, Int u) {
  if (br.is_axis()) return br;
  const Int d = amb.d;
  const Int j = d == 1 ? 0 : mod(mod(u, d) * inverse_mod(amb.a, d), d);
  PuiseuxBranch out = br;
  for (auto& t : out.terms) t.coeff = t.coeff.rotated((Rational(mod(j * amb.b, d)) - u * t.exp) / d);
  return out;
}

std::vector<PuiseuxBranch> orbit(const PuiseuxBranch& br, const CyclicType& amb) {
  if (br.is_axis()) return {br};
  std::vector<PuiseuxBranch> out;
  const Int total = amb.d * br.conjugacy_degree();
  for (Int u = 0; u < total; ++u) {
    PuiseuxBranch img = act(br, amb, u);
    if (std::find(out.begin(), out.end(), img) == out.end()) out.push_back(std::move(img));
  }
  return out;
}

bool same_orbit(const PuiseuxBranch& b1, const PuiseuxBranch& b2, const CyclicType& amb) {
  if (b1.is_axis() || b2.is_axis()) return b1.axis == b2.axis;
  if (b1.terms.size() != b2.terms.size()) return false;
  for (const auto& img : orbit(b1, amb))
    if (img == b2) return true;
  return false;
}

std::string to_string(const PuiseuxBranch& br) {
  if (br.axis == Axis::X) return "x=0";
  if (br.axis == Axis::Y) return "y=0";
  std::string s = "y =";
  for (const auto& t : br.terms) {
    s += " + " + to_string(t.coeff.mag);
    if (t.coeff.turn != 0) s += "*e(" + to_string(t.coeff.turn) + ")";
    s += "*x^" + to_string(t.exp);
  }
  return s;
}

}  // namespace qres
