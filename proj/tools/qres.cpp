#include "qres/blowup.hpp"
#include "qres/errors.hpp"
#include "qres/intersection.hpp"
#include "qres/jung.hpp"
#include "qres/polynomial.hpp"
#include "qres/projective.hpp"
#include "qres/quotient.hpp"
#include "qres/resolution.hpp"
#include "qres/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace qres;
using io::json;

namespace {

struct Input {
  std::string file;
  std::string inline_json;
  std::string type;
  std::string curve;
  std::string ambient;
  std::string graph;
  std::string weight;
  std::vector<int> pair;
  Int n = 0;
  bool dot = false;
  bool keep_together = false;
};

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_json_text(slurp(in));
}

// --json, then --file, then stdin.
json document(const Input& in) {
  if (!in.inline_json.empty()) return parse_json_text(in.inline_json);
  if (!in.file.empty()) return read_file(in.file);
  return parse_json_text(slurp(std::cin));
}

CyclicType ambient_of(const Input& in) { return in.ambient.empty() ? CyclicType() : io::parse_type(in.ambient); }

ResolveOptions options(const Input& in) {
  ResolveOptions opts;
  opts.separate_branches = !in.keep_together;
  return opts;
}

// A dual graph from --graph, --curve, or a document holding either a graph or a germ.
DualGraph graph_input(const Input& in) {
  if (!in.graph.empty()) return io::graph_from(read_file(in.graph));
  if (!in.curve.empty()) return resolve(parse_binomial_curve(in.curve, ambient_of(in)), options(in));
  json j = document(in);
  if (j.contains("vertices")) return io::graph_from(j);
  if (j.contains("curve")) {
    const CyclicType amb = j.contains("ambient") ? io::type_from(j.at("ambient")) : CyclicType();
    return resolve(parse_binomial_curve(j.at("curve").get<std::string>(), amb), options(in));
  }
  return resolve(io::germ_from(j), options(in));
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

void emit_graph(const DualGraph& g, const Input& in, const std::string& name = "resolution") {
  if (in.dot)
    std::cout << io::to_dot(g, name);
  else
    emit(io::to_json(g));
}

CyclicType type_input(const Input& in) {
  if (!in.type.empty()) return io::parse_type(in.type);
  json j = document(in);
  return io::type_from(j.contains("type") ? j.at("type") : j);
}

void cmd_normalize(const Input& in) {
  const auto r = normalize(type_input(in));
  emit({{"type", io::to_json(r.type)}, {"exponents", {r.exponents.first, r.exponents.second}}});
}

void cmd_blowup(const Input& in) {
  CyclicType t;
  Weight w;
  if (!in.type.empty() && !in.weight.empty()) {
    t = io::parse_type(in.type);
    std::istringstream ws(in.weight);
    char comma = 0;
    if (!(ws >> w.p >> comma >> w.q) || comma != ',') throw ParseError("weight must look like p,q");
  } else {
    json j = document(in);
    t = io::type_from(j.at("type"));
    w = {j.at("weight").at(0).get<Int>(), j.at("weight").at(1).get<Int>()};
  }
  emit(io::to_json(blowup(t, w)));
}

void cmd_resolve(const Input& in) {
  CurveGerm germ;
  if (!in.curve.empty()) {
    germ = parse_binomial_curve(in.curve, ambient_of(in));
  } else {
    json j = document(in);
    germ = j.contains("curve")
               ? parse_binomial_curve(j.at("curve").get<std::string>(),
                                      j.contains("ambient") ? io::type_from(j.at("ambient")) : CyclicType())
               : io::germ_from(j);
  }
  emit_graph(resolve(germ, options(in)), in);
}

void cmd_intersect(const Input& in) {
  const DualGraph g = graph_input(in);
  if (!in.pair.empty()) {
    if (in.pair.size() != 2) throw ParseError("--pair takes two branch indices");
    emit({{"value", io::to_json(local_intersection(g, in.pair[0], in.pair[1]))}});
    return;
  }
  const Matrix A = intersection_matrix(g);
  json out = {{"A", io::to_json(A)}, {"B", io::to_json(curvette_matrix(A))}};
  json att = json::array();
  for (int id : g.arrow_ids())
    for (int b : g.vertex(id).branches) {
      try {
        const auto a = attachment(g, b);
        att.push_back({{"branch", b}, {"k", a.k}, {"d", a.d}});
      } catch (const DetachedBranch&) {
        att.push_back({{"branch", b}, {"k", nullptr}, {"d", nullptr}});
      }
    }
  out["attachments"] = att;
  emit(out);
}

Int degree_field(const json& j, const char* deg, const char* poly, const WPPlane& plane) {
  if (j.contains(deg)) return j.at(deg).get<Int>();
  if (j.contains(poly)) {
    std::vector<std::array<Int, 3>> monos;
    for (const auto& m : j.at(poly)) monos.push_back({m.at(0).get<Int>(), m.at(1).get<Int>(), m.at(2).get<Int>()});
    return w_degree(monos, plane);
  }
  throw ParseError(std::string("missing field \"") + deg + "\"");
}

void cmd_bezout(const Input& in) {
  json j = document(in);
  const auto w = j.at("w");
  const auto act = j.contains("action") ? j.at("action") : json::array({1, 0, 0, 0});
  if (w.size() != 3 || act.size() != 4) throw ParseError("w needs 3 entries and action 4");
  const WPPlane plane({w[0].get<Int>(), w[1].get<Int>(), w[2].get<Int>()}, act[0].get<Int>(),
                      {act[1].get<Int>(), act[2].get<Int>(), act[3].get<Int>()});
  const Int d1 = degree_field(j, "deg1", "curve1", plane), d2 = degree_field(j, "deg2", "curve2", plane);
  emit({{"value", io::to_json(bezout(plane, d1, d2))},
        {"e", plane.e()},
        {"dpqr", plane.d * plane.w[0] * plane.w[1] * plane.w[2]},
        {"deg1", d1},
        {"deg2", d2}});
}

void cmd_jung(const Input& in) {
  SurfaceGerm germ;
  if (in.n > 0 && (!in.graph.empty() || !in.curve.empty())) {
    germ = {in.n, graph_input(in)};
  } else {
    json j = document(in);
    germ.n = j.at("n").get<Int>();
    if (j.contains("base"))
      germ.base = io::graph_from(j.at("base"));
    else
      germ.base = resolve(parse_binomial_curve(j.at("curve").get<std::string>(), CyclicType()), options(in));
  }
  emit_graph(jung_resolution(germ), in, "jung");
}

void cmd_hj(const Input& in) {
  const CyclicType t = type_input(in);
  const auto chain = resolve_cyclic_point(t);
  if (!in.dot) {
    emit({{"chain", chain}});
    return;
  }
  DualGraph g;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    Vertex v;
    v.id = static_cast<int>(i + 1);
    v.self_int = chain[i];
    g.vertices.push_back(v);
    if (i > 0) g.edges.push_back({v.id - 1, v.id, CyclicType()});
  }
  std::cout << io::to_dot(g, "chain");
}

void cmd_refine(const Input& in) { emit_graph(smooth_refinement(graph_input(in)), in, "refined"); }

int fail(const std::string& kind, const std::string& message, int code) {
  emit({{"error", {{"kind", kind}, {"message", message}}}});
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Q-resolutions of plane curves and cyclic surface singularities"};
  app.require_subcommand(1, 1);
  Input in;

  auto add_doc = [&](CLI::App* c) {
    c->add_option("--file", in.file, "JSON input file (default: stdin)");
    c->add_option("--json", in.inline_json, "inline JSON input");
  };
  auto add_curve = [&](CLI::App* c) {
    c->add_option("--curve", in.curve, "product of binomial factors, e.g. \"(x^2+y^3)(x^3+y^2)\"");
    c->add_option("--ambient", in.ambient, "ambient type d;a,b for --curve");
    c->add_flag("--keep-together", in.keep_together, "stop once the total transform is a Q-normal crossing");
  };
  auto add_dot = [&](CLI::App* c) { c->add_flag("--dot", in.dot, "emit Graphviz DOT instead of JSON"); };

  auto* normalize_cmd = app.add_subcommand("normalize", "normalized form of a cyclic type");
  normalize_cmd->add_option("--type", in.type, "type d;a,b");
  add_doc(normalize_cmd);

  auto* blowup_cmd = app.add_subcommand("blowup", "weighted blow-up of a normalized point");
  blowup_cmd->add_option("--type", in.type, "type d;a,b");
  blowup_cmd->add_option("--weight", in.weight, "weights p,q");
  add_doc(blowup_cmd);

  auto* resolve_cmd = app.add_subcommand("resolve", "embedded Q-resolution of a curve germ");
  add_doc(resolve_cmd);
  add_curve(resolve_cmd);
  add_dot(resolve_cmd);

  auto* intersect_cmd = app.add_subcommand("intersect", "intersection and curvette matrices");
  intersect_cmd->add_option("--graph", in.graph, "dual graph JSON file");
  intersect_cmd->add_option("--pair", in.pair, "two branch indices")->expected(2);
  add_doc(intersect_cmd);
  add_curve(intersect_cmd);

  auto* bezout_cmd = app.add_subcommand("bezout", "intersection number on a weighted projective plane");
  add_doc(bezout_cmd);

  auto* jung_cmd = app.add_subcommand("jung", "abstract Q-resolution of z^n = f");
  jung_cmd->add_option("--n", in.n, "covering degree");
  jung_cmd->add_option("--graph", in.graph, "dual graph JSON file of f");
  add_doc(jung_cmd);
  add_curve(jung_cmd);
  add_dot(jung_cmd);

  auto* hj_cmd = app.add_subcommand("hj", "Hirzebruch-Jung chain of a cyclic point");
  hj_cmd->add_option("--type", in.type, "type d;a,b");
  add_doc(hj_cmd);
  add_dot(hj_cmd);

  auto* refine_cmd = app.add_subcommand("refine", "smooth resolution graph from a Q-resolution graph");
  refine_cmd->add_option("--graph", in.graph, "dual graph JSON file");
  add_doc(refine_cmd);
  add_curve(refine_cmd);
  add_dot(refine_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("ParseError", e.what(), 2);
  }

  try {
    if (*normalize_cmd) cmd_normalize(in);
    if (*blowup_cmd) cmd_blowup(in);
    if (*resolve_cmd) cmd_resolve(in);
    if (*intersect_cmd) cmd_intersect(in);
    if (*bezout_cmd) cmd_bezout(in);
    if (*jung_cmd) cmd_jung(in);
    if (*hj_cmd) cmd_hj(in);
    if (*refine_cmd) cmd_refine(in);
  } catch (const ParseError& e) {
    return fail(e.kind(), e.what(), 2);
  } catch (const json::exception& e) {
    return fail("ParseError", e.what(), 2);
  } catch (const Error& e) {
    return fail(e.kind(), e.what(), 1);
  } catch (const std::exception& e) {
    return fail("InternalError", e.what(), 1);
  }
  return 0;
}
