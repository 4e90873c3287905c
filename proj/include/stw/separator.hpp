#pragma once

#include <vector>

#include "stw/graph.hpp"

namespace stw {

struct Separation {
  int n = 0;
  std::vector<int> A, B;  // sorted; A ∪ B = V, C = A ∩ B
  std::vector<int> C() const;
  std::vector<int> a_only() const;
  std::vector<int> b_only() const;
};

// Valid separation with max(|A\B|, |B\A|) <= (1 - num/den) * n, compared in
// exact integer arithmetic.
bool verify_separation(const OrderedGraph& g, const Separation& sep, int num, int den);

struct LeftRightResult {
  int x = 0;               // split vertex, always a member of U
  std::vector<int> U;      // sorted separator
  int rainbow_len = 0;     // ell(S) of the top-level maximum rainbow
  long long size_bound = 0;  // (6t^2+3t) * (ceil(log2(l+1)) + 1)
  int depth = 0;
};

// Recursive left/right separator: removing U leaves no edge between
// [0, x) and (x, n). Requires the overlap graph to be K_{t,t}-free for the
// size bound; validity never depends on it.
LeftRightResult left_right_separator(const OrderedGraph& g, int t, int v);

bool verify_left_right(const OrderedGraph& g, int x, const std::vector<int>& u);

struct BalancedResult {
  Separation sep;
  std::vector<int> separator;  // = C
  int case_used = 0;           // 0 quick, 1 long-rainbow, 2 mid-length sweep, 3 degenerate
  bool fallback = false;       // true when the constructed separation failed
                               // verification and a trivial one was substituted
};

// 1/12-balanced separator driven by mid-length rainbow analysis. t comes from
// the caller (e.g. a clean-biclique certificate).
BalancedResult balanced_separator(const OrderedGraph& g, int t);

struct TreeDecomposition {
  std::vector<int> parent;             // parent[i] = -1 for the root
  std::vector<std::vector<int>> bags;  // sorted vertex sets
  int width() const;
};

bool validate_decomposition(const OrderedGraph& g, const TreeDecomposition& td);

// Elimination-order decomposition picking a minimum-degree vertex each round.
TreeDecomposition min_degree_decomposition(const OrderedGraph& g);

// Recursive balanced-separator decomposition; components of at most 32
// vertices are finished by the min-degree elimination decomposition.
TreeDecomposition tree_decomposition(const OrderedGraph& g, int t);

}  // namespace stw
