#pragma once

#include <optional>
#include <vector>

#include "stw/graph.hpp"

namespace stw {

// Crossing relation on the edges of an ordered graph: e x f iff
// L(e) < L(f) < R(e) < R(f). Edge ids index into g.edges.
struct OverlapGraph {
  int edge_count = 0;
  std::vector<std::pair<int, int>> crossings;  // edge-id pairs, a < b
  std::vector<Bitset> cross_bits;              // edge id -> crossing partners

  int crossing_degree(int e) const { return cross_bits[e].count(); }
};

OverlapGraph overlap_graph(const OrderedGraph& g);

// Chain of edges with nested interiors, outermost first. Containment is
// non-strict: shared endpoints are allowed when the interiors nest.
struct Rainbow {
  std::vector<int> edge_ids;
  int order() const { return static_cast<int>(edge_ids.size()); }
  // max edge length, 0 when empty
  int length(const OrderedGraph& g) const;
};

bool is_rainbow_over(const OrderedGraph& g, const Rainbow& r, int v);

// Maximum rainbow over v by longest-chain DP on (L asc, R desc)-sorted edges,
// ties broken toward the lexicographically smallest edge-id chain.
Rainbow max_rainbow_over(const OrderedGraph& g, int v);

std::vector<int> edges_over(const OrderedGraph& g, int v);

struct CleanBiclique {
  std::vector<int> X, Y;  // edge ids; X strictly left of Y, all pairs crossing
};

enum class SearchStatus { Found, Absent, Unresolved };

struct BicliqueResult {
  SearchStatus status = SearchStatus::Absent;
  CleanBiclique biclique;
  bool exact = true;
  long long nodes = 0;
};

// Exact clean-K_{s,s} search: enumerate the split position between the sides'
// left endpoints, then branch-and-bound on the bipartite crossing graph.
// Beyond `edge_budget` edges a node cap applies and the outcome may be
// Unresolved, never a silent guess.
BicliqueResult clean_biclique_at_least(const OrderedGraph& g, int s, int edge_budget = 64,
                                       long long node_cap = 4'000'000);

bool verify_clean_biclique(const OrderedGraph& g, const CleanBiclique& b, int s);

struct KttCertificate {
  SearchStatus status = SearchStatus::Absent;  // Absent = certificate granted
  int s = 0;
  int implied_t = 0;                        // no K_{implied_t, implied_t} subgraph
  std::optional<CleanBiclique> obstruction; // present when status == Found
};

// Certifies K_{2*ceil(t/2)}-freeness of the overlap graph from the absence of
// a clean biclique of order ceil(t/2).
KttCertificate ktt_upper_check(const OrderedGraph& g, int t, int edge_budget = 64,
                               long long node_cap = 4'000'000);

}  // namespace stw
