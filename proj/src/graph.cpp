#include "stw/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace stw {

int OrderedGraph::max_degree() const {
  int d = 0;
  for (const auto& a : adj) d = std::max<int>(d, a.size());
  return d;
}

OrderedGraph build_ordered_graph(int n, std::vector<std::pair<int, int>> edge_list) {
  if (n < 0) throw Error(Errc::OutOfRange, "negative vertex count");
  OrderedGraph g;
  g.n = n;
  g.adj.assign(n, {});
  if (n <= OrderedGraph::kBitsetCap) g.adj_bits.assign(n, Bitset(n));
  for (auto& [u, v] : edge_list) {
    if (u == v) throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n)
      throw Error(Errc::OutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") outside [0," + std::to_string(n - 1) + "]");
  }
  std::sort(edge_list.begin(), edge_list.end());
  for (size_t i = 1; i < edge_list.size(); ++i)
    if (edge_list[i] == edge_list[i - 1])
      throw Error(Errc::DuplicateEdge, "duplicate edge (" + std::to_string(edge_list[i].first) +
                                           "," + std::to_string(edge_list[i].second) + ")");
  g.edges = std::move(edge_list);
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
    if (!g.adj_bits.empty()) {
      g.adj_bits[u].set(v);
      g.adj_bits[v].set(u);
    }
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

OrderedGraph relabel_graph(const OrderedGraph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.n)
    throw Error(Errc::BadPartition, "order length != n");
  std::vector<int> pos(g.n, -1);
  for (int i = 0; i < g.n; ++i) {
    int v = order[i];
    if (v < 0 || v >= g.n || pos[v] != -1)
      throw Error(Errc::BadPartition, "order is not a permutation");
    pos[v] = i;
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges.size());
  for (auto [u, v] : g.edges) edges.emplace_back(pos[u], pos[v]);
  return build_ordered_graph(g.n, std::move(edges));
}

OrderedGraph reverse_graph(const OrderedGraph& g) {
  std::vector<int> order(g.n);
  for (int i = 0; i < g.n; ++i) order[i] = g.n - 1 - i;
  return relabel_graph(g, order);
}

InducedSubgraph induced_ordered_subgraph(const OrderedGraph& g, const std::vector<int>& keep) {
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= g.n))
    throw Error(Errc::OutOfRange, "kept vertex outside range");
  InducedSubgraph r;
  r.old_of_new = sorted;
  r.new_of_old.assign(g.n, -1);
  for (size_t i = 0; i < sorted.size(); ++i) r.new_of_old[sorted[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges) {
    int nu = r.new_of_old[u], nv = r.new_of_old[v];
    if (nu >= 0 && nv >= 0) edges.emplace_back(nu, nv);
  }
  r.graph = build_ordered_graph(static_cast<int>(sorted.size()), std::move(edges));
  return r;
}

VertexPartition VertexPartition::finest(int n) {
  VertexPartition p;
  p.n = n;
  p.blocks.resize(n);
  p.part_of.resize(n);
  for (int v = 0; v < n; ++v) {
    p.blocks[v] = {v};
    p.part_of[v] = v;
  }
  return p;
}

VertexPartition VertexPartition::from_blocks(int n, std::vector<std::vector<int>> blocks) {
  VertexPartition p;
  p.n = n;
  p.part_of.assign(n, -1);
  for (auto& b : blocks) {
    if (b.empty()) throw Error(Errc::BadPartition, "empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  for (size_t i = 0; i < blocks.size(); ++i) {
    for (int v : blocks[i]) {
      if (v < 0 || v >= n) throw Error(Errc::OutOfRange, "block member outside range");
      if (p.part_of[v] != -1) throw Error(Errc::BadPartition, "blocks not disjoint");
      p.part_of[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < n; ++v)
    if (p.part_of[v] == -1)
      throw Error(Errc::BadPartition, "vertex " + std::to_string(v) + " not covered");
  p.blocks = std::move(blocks);
  return p;
}

int VertexPartition::block_of_rep(int rep_vertex) const {
  if (rep_vertex < 0 || rep_vertex >= n) throw Error(Errc::UnknownRep, "representative out of range");
  int b = part_of[rep_vertex];
  if (blocks[b][0] != rep_vertex) throw Error(Errc::UnknownRep, "not a canonical representative");
  return b;
}

bool blocks_homogeneous(const OrderedGraph& g, const std::vector<int>& x,
                        const Bitset& y_mask, int y_size) {
  long long cnt = 0;
  for (int u : x) cnt += g.adj_bits[u].and_count(y_mask);
  return cnt == 0 || cnt == static_cast<long long>(x.size()) * y_size;
}

RedGraph red_graph(const OrderedGraph& g, const VertexPartition& p) {
  if (p.n != g.n) throw Error(Errc::BadPartition, "partition size mismatch");
  if (g.adj_bits.empty())
    throw Error(Errc::LimitExceeded, "red graphs need adjacency bitsets (n <= 4096)");
  int k = p.size();
  RedGraph r;
  r.reps.resize(k);
  r.red_adj.assign(k, {});
  std::vector<Bitset> masks(k, Bitset(g.n));
  for (int b = 0; b < k; ++b) {
    r.reps[b] = p.blocks[b][0];
    for (int v : p.blocks[b]) masks[b].set(v);
  }
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      // singleton-singleton pairs are always homogeneous
      if (p.blocks[a].size() == 1 && p.blocks[b].size() == 1) continue;
      if (!blocks_homogeneous(g, p.blocks[a], masks[b],
                              static_cast<int>(p.blocks[b].size()))) {
        r.red_edges.emplace_back(a, b);
        r.red_adj[a].push_back(b);
        r.red_adj[b].push_back(a);
      }
    }
  }
  return r;
}

PartitionState::PartitionState(int n) : n_(n), live_(n), rep_(n), members_(n) {
  std::iota(rep_.begin(), rep_.end(), 0);
  for (int v = 0; v < n; ++v) members_[v] = {v};
}

int PartitionState::find(int v) const {
  while (rep_[v] != v) {
    rep_[v] = rep_[rep_[v]];
    v = rep_[v];
  }
  return v;
}

void PartitionState::merge(int rep_a, int rep_b) {
  if (rep_a < 0 || rep_a >= n_ || rep_b < 0 || rep_b >= n_)
    throw Error(Errc::UnknownRep, "merge names vertex outside range");
  if (rep_[rep_a] != rep_a)
    throw Error(Errc::DeadRep, "merge names dead representative " + std::to_string(rep_a));
  if (rep_[rep_b] != rep_b)
    throw Error(Errc::DeadRep, "merge names dead representative " + std::to_string(rep_b));
  if (rep_a == rep_b) throw Error(Errc::BadSequence, "merge of a block with itself");
  int keep = std::min(rep_a, rep_b), gone = std::max(rep_a, rep_b);
  auto& mk = members_[keep];
  auto& mg = members_[gone];
  mk.insert(mk.end(), mg.begin(), mg.end());
  mg.clear();
  mg.shrink_to_fit();
  rep_[gone] = keep;
  --live_;
}

VertexPartition PartitionState::snapshot() const {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(live_);
  for (int v = 0; v < n_; ++v)
    if (rep_[v] == v) blocks.push_back(members_[v]);
  return VertexPartition::from_blocks(n_, std::move(blocks));
}

const std::vector<int>& PartitionState::members(int rep_vertex) const {
  if (rep_vertex < 0 || rep_vertex >= n_ || rep_[rep_vertex] != rep_vertex)
    throw Error(Errc::DeadRep, "not a live representative");
  return members_[rep_vertex];
}

PartitionSequence relabel_sequence(int n, const PartitionSequence& seq,
                                   const std::vector<int>& order) {
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  // Replay in the old space while tracking, per old-space block, the minimum
  // new-space index; emit merges in new-space canonical form.
  PartitionState st(n);
  std::vector<int> new_rep(n);
  for (int v = 0; v < n; ++v) new_rep[v] = pos[v];
  PartitionSequence out;
  out.merges.reserve(seq.merges.size());
  for (auto [a, b] : seq.merges) {
    int ra = new_rep[a], rb = new_rep[b];
    out.merges.emplace_back(std::min(ra, rb), std::max(ra, rb));
    st.merge(a, b);
    int keep = std::min(a, b);
    new_rep[keep] = std::min(ra, rb);
  }
  return out;
}

std::vector<std::vector<int>> connected_components(const OrderedGraph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(g.n, false);
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.adj[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace stw
