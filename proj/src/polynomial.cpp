#include "qres/polynomial.hpp"

#include "qres/errors.hpp"

#include <cctype>

namespace qres {

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_[{0, 0}] = c;
}

Polynomial Polynomial::monomial(const Rational& c, Int i, Int j) {
  Polynomial p;
  p.add({i, j}, c);
  return p;
}

void Polynomial::add(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
  return r;
}

Polynomial Polynomial::pow(Int k) const {
  if (k < 0) throw ParseError("negative exponent");
  Polynomial r(1), base = *this;
  for (; k > 0; k >>= 1) {
    if (k & 1) r = r * base;
    base = base * base;
  }
  return r;
}

Rational Polynomial::coeff(Int i, Int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

std::vector<Polynomial::Exponent> Polynomial::support() const {
  std::vector<Exponent> out;
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    std::vector<std::string> parts;
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (mag != 1 || e == Exponent{0, 0}) parts.push_back(qres::to_string(mag));
    if (e.first > 0) parts.push_back(e.first == 1 ? "x" : "x^" + std::to_string(e.first));
    if (e.second > 0) parts.push_back(e.second == 1 ? "y" : "y^" + std::to_string(e.second));
    std::string mono;
    for (const auto& part : parts) mono += (mono.empty() ? "" : "*") + part;
    s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    s += mono;
  }
  return s;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  std::vector<Polynomial> factors() {
    std::vector<Polynomial> out;
    accept('-');
    for (auto& [p, k] : product_items())
      for (Int i = 0; i < k; ++i) out.push_back(p);
    if (at_end()) return out;
    pos_ = 0;
    out = {sum()};
    expect_end();
    return out;
  }

  Polynomial whole() {
    Polynomial p = sum();
    expect_end();
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ == s_.size();
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }
  void expect_end() {
    if (!at_end()) fail("unexpected character");
  }

  Int integer() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an integer");
    Int v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > (INT64_MAX - 9) / 10) fail("integer too large");
      v = v * 10 + (s_[pos_++] - '0');
    }
    return v;
  }

  bool starts_atom() {
    const char c = peek();
    return c == '(' || c == 'x' || c == 'y' || std::isdigit(static_cast<unsigned char>(c));
  }

  Polynomial atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = sum();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      return c == 'x' ? Polynomial::x() : Polynomial::y();
    }
    Rational v = integer();
    if (accept('/')) {
      const Int den = integer();
      if (den == 0) fail("division by zero");
      v /= den;
    }
    return v;
  }

  std::pair<Polynomial, Int> power() {
    Polynomial base = atom();
    Int k = 1;
    if (accept('^')) k = integer();
    return {base, k};
  }

  // Non-constant items of a product; constants are units and dropped.
  std::vector<std::pair<Polynomial, Int>> product_items() {
    std::vector<std::pair<Polynomial, Int>> out;
    do {
      auto item = power();
      if (item.first.is_zero()) throw DegenerateInput("zero factor");
      if (!item.first.is_constant()) out.push_back(std::move(item));
    } while (accept('*') || starts_atom());
    return out;
  }

  Polynomial product() {
    Polynomial p = power_value();
    while (accept('*') || starts_atom()) p = p * power_value();
    return p;
  }

  Polynomial power_value() {
    auto [base, k] = power();
    return base.pow(k);
  }

  Polynomial sum() {
    const bool negative = accept('-');
    if (!negative) accept('+');
    Polynomial p = product();
    if (negative) p = -p;
    while (true) {
      if (accept('+'))
        p = p + product();
      else if (accept('-'))
        p = p - product();
      else
        break;
    }
    return p;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

[[noreturn]] void unsupported(const Polynomial& f, const std::string& why) {
  throw UnsupportedFactorShape("unsupported factor " + f.to_string() + ": " + why);
}

bool real_root(const Rational& v, Int k, std::vector<Rational>& roots) {
  Rational r;
  if (v >= 0) {
    if (!exact_root(v, k, r)) return false;
    roots = {r};
    if (k % 2 == 0 && r != 0) roots.push_back(-r);
    return true;
  }
  if (k % 2 == 0 || !exact_root(-v, k, r)) return false;
  roots = {-r};
  return true;
}

}  // namespace

std::vector<Polynomial> parse_factors(const std::string& text) { return Parser(text).factors(); }

Polynomial parse_polynomial(const std::string& text) { return Parser(text).whole(); }

std::vector<PuiseuxBranch> factor_branches(const Polynomial& f) {
  const auto& ts = f.terms();
  if (f.coeff(0, 0) != 0) unsupported(f, "the curve does not pass through the origin");
  if (ts.size() == 1) {
    const auto e = ts.begin()->first;
    if (e == Polynomial::Exponent{1, 0}) return {PuiseuxBranch(Axis::X)};
    if (e == Polynomial::Exponent{0, 1}) return {PuiseuxBranch(Axis::Y)};
    unsupported(f, "non-reduced monomial");
  }
  Int A = 0, B = 0;
  for (const auto& [e, c] : ts) {
    if (e.second == 0) A = e.first;
    if (e.first == 0) B = e.second;
  }
  if (A == 0 || B == 0) unsupported(f, "needs pure powers of x and y");
  const Rational cA = f.coeff(A, 0), cB = f.coeff(0, B);

  if (ts.size() == 2) {
    const Int g = gcd(A, B);
    const Coef base(-cA / cB);
    Rational mag;
    if (!exact_root(base.mag, B, mag)) unsupported(f, "irrational root of a coefficient");
    std::vector<PuiseuxBranch> out;
    for (Int k = 0; k < g; ++k)
      out.push_back(PuiseuxBranch({Term{Coef(mag, (base.turn + k) / B), rat(A, B)}}));
    return out;
  }

  const Int m = gcd(A, B);
  if (m < 2) unsupported(f, "not a perturbed power of a binomial");
  const Int a = A / m, b = B / m;
  std::vector<Rational> alphas, betas;
  if (!real_root(cA, m, alphas) || !real_root(cB, m, betas)) unsupported(f, "irrational root of a coefficient");
  for (const auto& alpha : alphas)
    for (const auto& beta : betas) {
      const Polynomial rest =
          f - (Polynomial::monomial(alpha, a, 0) + Polynomial::monomial(beta, 0, b)).pow(m);
      if (rest.terms().size() != 1) continue;
      const auto [e, sigma] = *rest.terms().begin();
      const Int c = e.first, d = e.second;
      if (b * c + a * d <= a * b * m) continue;
      if (d >= b * m) unsupported(f, "perturbation of too high degree in y");
      Coef rho;
      if (!Coef(-alpha / beta).root(b, rho)) unsupported(f, "irrational root of a coefficient");
      const Coef H = Coef(-sigma) * rho.pow(d) * Coef(-alpha * b).pow(-m);
      Coef h;
      if (!H.root(m, h)) unsupported(f, "irrational root of a coefficient");
      const Rational kappa = c + Rational(a * d, b) - a * m;
      PuiseuxBranch br({Term{rho, rat(a, b)}, Term{rho * h, rat(a, b) + kappa / m}});
      if (br.conjugacy_degree() != b * m) unsupported(f, "splits into several branches");
      return {br};
    }
  unsupported(f, "not a perturbed power of a binomial");
}

CurveGerm parse_binomial_curve(const std::vector<Polynomial>& factors, const CyclicType& ambient) {
  CurveGerm germ{ambient, {}};
  for (const auto& f : factors)
    for (auto& br : factor_branches(f)) germ.branches.push_back(std::move(br));
  if (germ.branches.empty()) throw DegenerateInput("the curve has no branches");
  return germ;
}

CurveGerm parse_binomial_curve(const std::string& text, const CyclicType& ambient) {
  return parse_binomial_curve(parse_factors(text), ambient);
}

}  // namespace qres
