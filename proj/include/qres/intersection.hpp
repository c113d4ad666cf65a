#pragma once

#include "qres/graph.hpp"
#include "qres/linalg.hpp"

#include <vector>

namespace qres {

// Rows and columns follow DualGraph::exceptional_ids().
Matrix intersection_matrix(const DualGraph& g);
Matrix curvette_matrix(const Matrix& A);  // -A^{-1}
bool check_negative_definite(const Matrix& A);

struct BranchAttachment {
  int branch = 0;
  int k = 0;  // exceptional vertex met by the strict transform
  Int d = 1;  // index of the meeting point
};

// Throws DetachedBranch when the branch is absent or meets no exceptional divisor.
BranchAttachment attachment(const DualGraph& g, int branch);

// b_{k_i k_j} / (d_i d_j).
Rational local_intersection(const DualGraph& g, int i, int j);

// Coefficients of the exceptional divisors in the pull-back of the branch.
std::vector<Rational> pullback_coefficients(const DualGraph& g, int i);

}  // namespace qres
