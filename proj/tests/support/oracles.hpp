#pragma once

#include <cstdint>
#include <vector>

#include "stw/graph.hpp"
#include "stw/overlap.hpp"

namespace stw::test {

// Independent oracle for the fixed-order stretch-width: enumerate every merge
// chain recursively and take the minimum over chains of the maximum partition
// stretch. Exponential; n <= 7.
int brute_force_stw_fixed_order(const OrderedGraph& g);

// Exact clique number of the overlap (crossing) graph, brute force.
int overlap_clique_number(const OrderedGraph& g);

// All graphs on n vertices as edge-subset bitmasks over the C(n,2) pairs.
std::vector<std::pair<int, int>> vertex_pairs(int n);
OrderedGraph graph_from_mask(int n, uint64_t mask);

OrderedGraph erdos_renyi(int n, double p, uint64_t seed);

struct CographInstance {
  OrderedGraph graph;
  PartitionSequence twin_sequence;  // every red graph stays empty
};

// Random cograph built from a random cotree; the sequence folds complete
// sibling subtrees, so every intermediate part is a module.
CographInstance random_cograph(int n, uint64_t seed);

std::vector<int> random_permutation(int n, uint64_t seed);

}  // namespace stw::test
