#pragma once

#include <vector>

#include "stw/graph.hpp"
#include "stw/separator.hpp"

namespace stw {

struct MisResult {
  int size = 0;
  std::vector<int> set;
  long long node_count = 0;        // branch nodes visited
  std::vector<int> leaf_widths;    // decomposition widths used at leaves
};

// Exhaustive take/skip enumeration with counting bound, n <= 24.
MisResult mis_exact(const OrderedGraph& g, int limit_n = 24);

// Tree-decomposition dynamic program over independent bag subsets.
MisResult mis_tw_dp(const OrderedGraph& g, const TreeDecomposition& td);

// Degree-threshold branching: while some vertex has degree >= threshold,
// branch on take-or-delete; leaves are solved by mis_tw_dp over a min-degree
// elimination decomposition. threshold <= 0 selects ceil(n^(1/5)).
MisResult mis_branch(const OrderedGraph& g, int threshold = 0);

bool is_independent_set(const OrderedGraph& g, const std::vector<int>& set);

}  // namespace stw
