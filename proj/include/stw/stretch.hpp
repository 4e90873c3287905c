#pragma once

#include <map>
#include <vector>

#include "stw/graph.hpp"

namespace stw {

struct PartStretch {
  int max_stretch = 0;
  std::vector<std::pair<int, int>> per_part;  // (representative, count), rep ascending
};

// Stretch of a partition: for each part X, the number of other parts whose
// span meets the span of the closed red neighborhood of X.
PartStretch partition_stretch(const OrderedGraph& g, const VertexPartition& p);

struct StretchReport {
  std::vector<int> per_step_stretch;  // one entry per partition, finest first
  int max_stretch = 0;
  int worst_step = 0;      // index into per_step_stretch
  int worst_part_rep = 0;  // representative of a part achieving the max
};

StretchReport verify_sequence(const OrderedGraph& g, const PartitionSequence& seq);

struct ExactFixedResult {
  int value = 0;
  bool cap_exceeded = false;
  PartitionSequence witness;
};

// Exact stretch-width for the identity order: bottleneck shortest path on the
// partition lattice. Nodes whose own stretch exceeds `cap` are not expanded;
// the bottleneck objective keeps this exact.
ExactFixedResult exact_stw_fixed_order(const OrderedGraph& g, int cap = 1 << 28,
                                       int lattice_limit = 10);

struct ExactResult {
  int value = 0;
  std::vector<int> best_order;  // position -> original vertex
  PartitionSequence witness;    // valid for relabel_graph(g, best_order)
};

// Minimum of exact_stw_fixed_order over all vertex orders, reversal-pruned.
ExactResult exact_stw(const OrderedGraph& g, int order_limit = 7, int lattice_limit = 10);

// Total order extracted from a partition sequence whose red graphs all have
// connected components of at most t parts. Replaying the same sequence on the
// relabeled graph yields stretch at most t-1.
std::vector<int> order_from_component_sequence(const OrderedGraph& g,
                                               const PartitionSequence& seq, int t);

}  // namespace stw
