#pragma once

#include "qres/graph.hpp"
#include "qres/puiseux.hpp"

namespace qres {

struct ResolveOptions {
  bool separate_branches = true;  // keep blowing up until no two strict transforms meet
  int max_blowups = 500;
};

// Embedded Q-resolution by weighted blow-ups. Exceptional vertices are numbered
// from 1 in blow-up order; arrow vertices follow. Arrow vertex i carries the
// 1-based indices of the input branches it represents.
DualGraph resolve(const CurveGerm& curve, const ResolveOptions& opts = {});

// Same engine; the ambient must be normalized and the branch list closed under
// the group. Branches in one orbit share an arrow.
DualGraph resolve_quotient(const CurveGerm& curve, const ResolveOptions& opts = {});

bool check_q_normal_crossing(const DualGraph& g);

}  // namespace qres
