#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "stw/bitset.hpp"
#include "stw/error.hpp"

namespace stw {

// Simple undirected graph whose vertex indices 0..n-1 double as the total
// order: v_i precedes v_j iff i < j. Immutable after construction.
// Adjacency bitsets back the homogeneity tests and exist only up to
// kBitsetCap vertices; larger graphs (from the subdivision generators) keep
// the sorted lists alone.
struct OrderedGraph {
  static constexpr int kBitsetCap = 4096;

  int n = 0;
  std::vector<std::pair<int, int>> edges;  // lexicographically sorted, u < v
  std::vector<std::vector<int>> adj;       // sorted neighbor lists
  std::vector<Bitset> adj_bits;            // empty when n > kBitsetCap

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    if (!adj_bits.empty()) return adj_bits[u].test(v);
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
  }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int max_degree() const;
  int edge_count() const { return static_cast<int>(edges.size()); }
};

OrderedGraph build_ordered_graph(int n, std::vector<std::pair<int, int>> edge_list);

// Relabel so that position i of `order` becomes vertex i. `order` lists the
// old vertex indices in their new left-to-right order.
OrderedGraph relabel_graph(const OrderedGraph& g, const std::vector<int>& order);

OrderedGraph reverse_graph(const OrderedGraph& g);

struct InducedSubgraph {
  OrderedGraph graph;
  std::vector<int> old_of_new;  // new index -> old index, increasing
  std::vector<int> new_of_old;  // old index -> new index or -1
};

InducedSubgraph induced_ordered_subgraph(const OrderedGraph& g, const std::vector<int>& keep);

// Partition of [0, n) with canonical block representatives (minimum member).
// Blocks are kept sorted internally and listed by ascending representative.
struct VertexPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<int> part_of;  // vertex -> block id

  static VertexPartition finest(int n);
  static VertexPartition from_blocks(int n, std::vector<std::vector<int>> blocks);

  int rep(int block) const { return blocks[block][0]; }
  int block_of_rep(int rep_vertex) const;
  int size() const { return static_cast<int>(blocks.size()); }
};

struct RedGraph {
  std::vector<int> reps;                       // block id -> representative
  std::vector<std::pair<int, int>> red_edges;  // block-id pairs, a < b
  std::vector<std::vector<int>> red_adj;       // block id -> block ids
};

RedGraph red_graph(const OrderedGraph& g, const VertexPartition& p);

bool blocks_homogeneous(const OrderedGraph& g, const std::vector<int>& x,
                        const Bitset& y_mask, int y_size);

// Chain of n-1 merges from the all-singleton partition down to one block.
// Merges name blocks by their canonical representative.
struct PartitionSequence {
  std::vector<std::pair<int, int>> merges;
};

// Mutable replay state for a partition sequence.
class PartitionState {
 public:
  explicit PartitionState(int n);

  // Merges the blocks represented by a and b; the surviving representative is
  // min(a, b). Throws on dead or unknown representatives.
  void merge(int rep_a, int rep_b);

  VertexPartition snapshot() const;
  int live_blocks() const { return live_; }
  bool is_rep(int v) const { return v >= 0 && v < n_ && rep_[v] == v; }
  const std::vector<int>& members(int rep_vertex) const;

 private:
  int find(int v) const;

  int n_;
  int live_;
  mutable std::vector<int> rep_;
  std::vector<std::vector<int>> members_;
};

// Applies a relabeling (order[i] = old vertex at new position i) to a merge
// sequence, re-canonicalizing representatives in the new index space.
PartitionSequence relabel_sequence(int n, const PartitionSequence& seq,
                                   const std::vector<int>& order);

std::vector<std::vector<int>> connected_components(const OrderedGraph& g);

}  // namespace stw
