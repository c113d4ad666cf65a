#pragma once

#include "qres/blowup.hpp"
#include "qres/graph.hpp"
#include "qres/linalg.hpp"
#include "qres/puiseux.hpp"
#include "qres/quotient.hpp"

#include <json.hpp>

#include <string>

namespace qres::io {

using json = nlohmann::ordered_json;

// Malformed documents raise ParseError; well-formed but invalid data raises the
// domain error of the constructor involved.
json to_json(const Rational& r);
Rational rational_from(const json& j);

json to_json(const CyclicType& t);
CyclicType type_from(const json& j);
CyclicType parse_type(const std::string& text);  // "d;a,b", optionally in parentheses

json to_json(const TwoRowType& t);
TwoRowType two_row_from(const json& j);

json to_json(const BlowupResult& r);

json to_json(const Coef& c);
Coef coef_from(const json& j);
json to_json(const PuiseuxBranch& b);
PuiseuxBranch branch_from(const json& j);
json to_json(const CurveGerm& g);
CurveGerm germ_from(const json& j);

json to_json(const DualGraph& g);
DualGraph graph_from(const json& j);

json to_json(const Matrix& m);
json to_json(const std::vector<Rational>& v);

std::string to_dot(const DualGraph& g, const std::string& name = "resolution");

}  // namespace qres::io
