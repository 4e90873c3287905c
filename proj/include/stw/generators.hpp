#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stw/graph.hpp"

namespace stw {

struct WitnessedInstance {
  OrderedGraph graph;
  std::optional<PartitionSequence> witness;
  std::optional<int> claimed_stretch;
  std::string provenance;
};

// k internally disjoint 4-edge paths s,a_i,b_i,c_i,t under the interleaved
// order s < a_1 < b_1 < c_1 < ... < t, with the A/B/C accumulation witness.
WitnessedInstance gen_hk(int k);

// H_k under the blockwise order s < a_1..a_k < b_k..b_1 < c_1..c_k < t, whose
// overlap graph carries a large clean biclique.
OrderedGraph gen_hk_bad_order(int k);

// Vertices [0, b^h); u ~ v iff ancestors at some level l differ by exactly b.
// For b = 3 the level-by-level witness claims stretch at most 9.
WitnessedInstance gen_abh(int b, int h, long long vertex_budget = 1 << 20);

struct GridInstance {
  OrderedGraph graph;
  std::vector<bool> horizontal;  // per edge id
};

// k x k grid in row-major order.
GridInstance gen_grid(int k);

struct SubdivisionResult {
  OrderedGraph graph;
  std::vector<int> vertex_map;  // old vertex -> new position
  std::vector<int> stem;        // per edge id: index of the original edge it
                                // stems from, or -1 for untouched edges
};

// Order-aware (h+1)-subdivision of uv placing one new vertex between every
// pair of consecutive spanned vertices.
SubdivisionResult flatten_edge(const OrderedGraph& g, std::pair<int, int> e,
                               const std::vector<int>& prior_stem = {});

// Flattens the original edges in the given order; created edges are never
// re-flattened. Output has at most n * 2^m vertices.
SubdivisionResult iterated_subdivision(const OrderedGraph& g,
                                       const std::vector<std::pair<int, int>>& edge_order,
                                       long long vertex_budget = 1 << 22);

// Single subdivision placing w immediately right of the left endpoint; the
// overlap graph gains exactly one isolated vertex.
SubdivisionResult subdivide_simple(const OrderedGraph& g, std::pair<int, int> e,
                                   const std::vector<int>& prior_stem = {});

// Iterated subdivision of the row-major grid: horizontal edges first, then
// vertical edges by left endpoint.
SubdivisionResult gen_flattened_grid(int k, long long vertex_budget = 1 << 22);

// Re-subdivides stem edges until every original edge carries at least
// `target` subdivision vertices. Picks edges whose left endpoint has no other
// neighbor inside the span, which keeps the crossing count exact.
SubdivisionResult pad_subdivision(SubdivisionResult sub, int original_edge_count,
                                  long long target, long long vertex_budget = 1 << 22);

OrderedGraph random_bounded_degree(int n, int d, uint64_t seed);

}  // namespace stw
