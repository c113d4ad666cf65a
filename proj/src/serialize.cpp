#include "qres/serialize.hpp"

#include "qres/errors.hpp"

#include <regex>
#include <sstream>

namespace qres::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Int int_from(const json& j) {
  if (!j.is_number_integer()) throw ParseError("expected an integer, got " + j.dump());
  return j.get<Int>();
}

BigInt big_from(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<Int>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (!std::regex_match(s, std::regex("-?[0-9]+"))) throw ParseError("bad integer string " + s);
    return BigInt(s);
  }
  throw ParseError("expected an integer, got " + j.dump());
}

json big_to_json(const BigInt& n) {
  if (n >= BigInt(INT64_MIN) && n <= BigInt(INT64_MAX)) return static_cast<Int>(n);
  return n.str();
}

}  // namespace

json to_json(const Rational& r) { return {{"num", big_to_json(numerator(r))}, {"den", big_to_json(denominator(r))}}; }

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<Int>());
  const BigInt num = big_from(field(j, "num"));
  const BigInt den = j.contains("den") ? big_from(j.at("den")) : BigInt(1);
  if (den == 0) throw ParseError("zero denominator");
  return den < 0 ? Rational(-num, -den) : Rational(num, den);
}

json to_json(const CyclicType& t) { return {{"d", t.d}, {"a", t.a}, {"b", t.b}}; }

CyclicType type_from(const json& j) {
  if (j.is_string()) return parse_type(j.get<std::string>());
  return CyclicType(int_from(field(j, "d")), int_from(field(j, "a")), int_from(field(j, "b")));
}

CyclicType parse_type(const std::string& text) {
  static const std::regex re(R"(\s*\(?\s*(\d+)\s*;\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw ParseError("bad type \"" + text + "\", expected d;a,b");
  try {
    return CyclicType(std::stoll(m[1]), std::stoll(m[2]), std::stoll(m[3]));
  } catch (const std::out_of_range&) {
    throw ParseError("type entries out of range in \"" + text + "\"");
  }
}

json to_json(const TwoRowType& t) {
  return {{"d", {t.d[0], t.d[1]}}, {"A", {{t.A[0][0], t.A[0][1]}, {t.A[1][0], t.A[1][1]}}}};
}

TwoRowType two_row_from(const json& j) {
  const json& d = field(j, "d");
  const json& A = field(j, "A");
  if (!d.is_array() || d.size() != 2 || !A.is_array() || A.size() != 2) throw ParseError("two-row type needs 2 rows");
  TwoRowType t;
  for (std::size_t i = 0; i < 2; ++i) {
    t.d[i] = int_from(d[i]);
    if (!A[i].is_array() || A[i].size() != 2) throw ParseError("two-row type needs 2 columns");
    for (std::size_t k = 0; k < 2; ++k) t.A[i][k] = int_from(A[i][k]);
  }
  return t;
}

json to_json(const BlowupResult& r) {
  return {{"e", r.e},
          {"chart1_origin", to_json(r.chart1_origin)},
          {"chart2_origin", to_json(r.chart2_origin)},
          {"exc_self_intersection", to_json(r.exc_self_intersection)},
          {"beta", r.beta},
          {"mu", r.mu}};
}

json to_json(const Coef& c) {
  if (c.is_rational()) return to_json(c.value());
  json j = to_json(c.mag);
  j["turn"] = to_json(c.turn);
  return j;
}

Coef coef_from(const json& j) {
  const Rational v = rational_from(j);
  if (j.is_object() && j.contains("turn")) return Coef(v, rational_from(j.at("turn")));
  return Coef(v);
}

json to_json(const PuiseuxBranch& b) {
  json terms = json::array();
  for (const auto& t : b.terms) terms.push_back({{"coeff", to_json(t.coeff)}, {"exp", to_json(t.exp)}});
  json axis = nullptr;
  if (b.axis == Axis::X) axis = "x";
  if (b.axis == Axis::Y) axis = "y";
  return {{"terms", terms}, {"axis", axis}};
}

PuiseuxBranch branch_from(const json& j) {
  if (!j.is_object()) throw ParseError("branch must be an object");
  if (j.contains("axis") && !j.at("axis").is_null()) {
    const json& a = j.at("axis");
    if (a == "x") return PuiseuxBranch(Axis::X);
    if (a == "y") return PuiseuxBranch(Axis::Y);
    throw ParseError("axis must be \"x\", \"y\" or null");
  }
  std::vector<Term> terms;
  const json& ts = field(j, "terms");
  if (!ts.is_array()) throw ParseError("terms must be an array");
  for (const auto& t : ts) terms.push_back({coef_from(field(t, "coeff")), rational_from(field(t, "exp"))});
  return PuiseuxBranch(std::move(terms));
}

json to_json(const CurveGerm& g) {
  json brs = json::array();
  for (const auto& b : g.branches) brs.push_back(to_json(b));
  return {{"ambient", to_json(g.ambient)}, {"branches", brs}};
}

CurveGerm germ_from(const json& j) {
  CurveGerm g;
  if (j.contains("ambient")) g.ambient = type_from(j.at("ambient"));
  const json& brs = field(j, "branches");
  if (!brs.is_array()) throw ParseError("branches must be an array");
  for (const auto& b : brs) g.branches.push_back(branch_from(b));
  return g;
}

json to_json(const DualGraph& g) {
  json vs = json::array();
  for (const auto& v : g.vertices) {
    json jv = {{"id", v.id},
               {"kind", v.kind == VertexKind::Arrow ? "arrow" : "exceptional"},
               {"m", to_json(v.m)}};
    if (v.kind == VertexKind::Exceptional) {
      jv["self_int"] = to_json(v.self_int);
      jv["genus"] = v.genus;
      json s = json::array();
      for (const auto& t : v.sing0) s.push_back(to_json(t));
      jv["sing0"] = s;
    } else {
      jv["branches"] = v.branches;
    }
    vs.push_back(jv);
  }
  json es = json::array();
  for (const auto& e : g.edges) {
    json je = {{"v1", e.v1}, {"v2", e.v2}, {"type", to_json(e.type)}};
    if (e.point >= 0) je["point"] = e.point;
    es.push_back(je);
  }
  return {{"vertices", vs}, {"edges", es}};
}

DualGraph graph_from(const json& j) {
  DualGraph g;
  const json& vs = field(j, "vertices");
  if (!vs.is_array()) throw ParseError("vertices must be an array");
  for (const auto& jv : vs) {
    Vertex v;
    v.id = static_cast<int>(int_from(field(jv, "id")));
    const std::string kind = jv.value("kind", "exceptional");
    if (kind != "exceptional" && kind != "arrow") throw ParseError("unknown vertex kind " + kind);
    v.kind = kind == "arrow" ? VertexKind::Arrow : VertexKind::Exceptional;
    if (jv.contains("m")) v.m = rational_from(jv.at("m"));
    if (jv.contains("self_int")) v.self_int = rational_from(jv.at("self_int"));
    if (jv.contains("genus")) v.genus = int_from(jv.at("genus"));
    if (jv.contains("sing0"))
      for (const auto& t : jv.at("sing0")) v.sing0.push_back(type_from(t));
    if (jv.contains("branches"))
      for (const auto& b : jv.at("branches")) v.branches.push_back(static_cast<int>(int_from(b)));
    g.vertices.push_back(v);
  }
  if (j.contains("edges"))
    for (const auto& je : j.at("edges")) {
      Edge e;
      e.v1 = static_cast<int>(int_from(field(je, "v1")));
      e.v2 = static_cast<int>(int_from(field(je, "v2")));
      e.type = je.contains("type") ? type_from(je.at("type")) : CyclicType();
      if (je.contains("point")) e.point = static_cast<int>(int_from(je.at("point")));
      g.edges.push_back(e);
    }
  for (const auto& e : g.edges)
    if (!g.has_vertex(e.v1) || !g.has_vertex(e.v2)) throw MalformedGraph("edge references a missing vertex");
  return g;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (const auto& row : m) rows.push_back(to_json(row));
  return rows;
}

json to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

std::string to_dot(const DualGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (const auto& v : g.vertices) {
    os << "  v" << v.id;
    if (v.kind == VertexKind::Arrow) {
      std::string ids;
      for (int b : v.branches) ids += (ids.empty() ? "" : ",") + std::to_string(b);
      os << " [shape=none, label=\"C_" << ids << "\"];\n";
      continue;
    }
    std::string sing;
    for (const auto& t : v.sing0) sing += (sing.empty() ? "" : ", ") + to_string(t);
    os << " [label=\"E_" << v.id << ": m=" << to_string(v.m) << ", e=" << to_string(v.self_int)
       << ", g=" << v.genus << ", sing0=[" << sing << "]\"];\n";
  }
  for (const auto& e : g.edges) {
    os << "  v" << e.v1 << " -- v" << e.v2 << " [label=\"" << to_string(e.type) << "\"";
    if (g.is_arrow_edge(e)) os << ", dir=forward, arrowhead=normal";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qres::io
