#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "stw/stretch.hpp"

namespace stw::test {

namespace {

int chain_search(const OrderedGraph& g, std::vector<std::vector<int>>& blocks, int so_far,
                 int best) {
  if (so_far >= best) return best;  // the bottleneck cannot improve
  if (blocks.size() == 1) return so_far;
  int k = static_cast<int>(blocks.size());
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      std::vector<std::vector<int>> next;
      next.reserve(k - 1);
      for (int i = 0; i < k; ++i) {
        if (i == b) continue;
        next.push_back(blocks[i]);
        if (i == a) {
          next.back().insert(next.back().end(), blocks[b].begin(), blocks[b].end());
          std::sort(next.back().begin(), next.back().end());
        }
      }
      VertexPartition p = VertexPartition::from_blocks(g.n, next);
      int cost = std::max(so_far, partition_stretch(g, p).max_stretch);
      best = std::min(best, chain_search(g, next, cost, best));
    }
  return best;
}

}  // namespace

int brute_force_stw_fixed_order(const OrderedGraph& g) {
  if (g.n <= 1) return 0;
  std::vector<std::vector<int>> blocks;
  for (int v = 0; v < g.n; ++v) blocks.push_back({v});
  VertexPartition finest = VertexPartition::finest(g.n);
  int start = partition_stretch(g, finest).max_stretch;  // always 0
  return chain_search(g, blocks, start, 1 << 28);
}

int overlap_clique_number(const OrderedGraph& g) {
  OverlapGraph ov = overlap_graph(g);
  int m = ov.edge_count;
  if (m == 0) return 0;
  int best = 1;
  // branch and bound over edge ids
  std::vector<int> clique;
  std::vector<int> cand(m);
  std::iota(cand.begin(), cand.end(), 0);
  std::function<void(std::vector<int>&, std::vector<int>&)> grow =
      [&](std::vector<int>& cur, std::vector<int>& cands) {
        best = std::max(best, static_cast<int>(cur.size()));
        if (cur.size() + cands.size() <= static_cast<size_t>(best)) return;
        for (size_t i = 0; i < cands.size(); ++i) {
          int e = cands[i];
          std::vector<int> next;
          for (size_t j = i + 1; j < cands.size(); ++j)
            if (ov.cross_bits[e].test(cands[j])) next.push_back(cands[j]);
          cur.push_back(e);
          grow(cur, next);
          cur.pop_back();
        }
      };
  grow(clique, cand);
  return best;
}

std::vector<std::pair<int, int>> vertex_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

OrderedGraph graph_from_mask(int n, uint64_t mask) {
  auto pairs = vertex_pairs(n);
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < pairs.size(); ++i)
    if (mask >> i & 1) edges.push_back(pairs[i]);
  return build_ordered_graph(n, std::move(edges));
}

OrderedGraph erdos_renyi(int n, double p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : vertex_pairs(n))
    if (coin(rng)) edges.emplace_back(u, v);
  return build_ordered_graph(n, std::move(edges));
}

namespace {

struct Cotree {
  // node: leaf (vertex) or internal with operation union/join
  struct Node {
    bool join = false;
    int vertex = -1;
    std::vector<int> children;
  };
  std::vector<Node> nodes;
  int root = -1;
};

int build_cotree(Cotree& t, std::vector<int> leaves, std::mt19937_64& rng, bool join) {
  if (leaves.size() == 1) {
    t.nodes.push_back({false, leaves[0], {}});
    return static_cast<int>(t.nodes.size()) - 1;
  }
  // split into 2..4 groups
  std::uniform_int_distribution<int> groups_dist(2, std::min<int>(4, leaves.size()));
  int parts = groups_dist(rng);
  std::shuffle(leaves.begin(), leaves.end(), rng);
  std::vector<std::vector<int>> split(parts);
  for (size_t i = 0; i < leaves.size(); ++i) split[i % parts].push_back(leaves[i]);
  Cotree::Node node;
  node.join = join;
  int self = -1;
  std::vector<int> children;
  for (auto& grp : split) children.push_back(build_cotree(t, grp, rng, !join));
  node.children = children;
  t.nodes.push_back(node);
  self = static_cast<int>(t.nodes.size()) - 1;
  return self;
}

void collect_edges(const Cotree& t, int node, std::vector<int>& leaves,
                   std::vector<std::pair<int, int>>& edges) {
  const auto& nd = t.nodes[node];
  if (nd.vertex >= 0) {
    leaves.push_back(nd.vertex);
    return;
  }
  std::vector<std::vector<int>> child_leaves;
  for (int c : nd.children) {
    std::vector<int> sub;
    collect_edges(t, c, sub, edges);
    child_leaves.push_back(sub);
    leaves.insert(leaves.end(), sub.begin(), sub.end());
  }
  if (nd.join)
    for (size_t i = 0; i < child_leaves.size(); ++i)
      for (size_t j = i + 1; j < child_leaves.size(); ++j)
        for (int u : child_leaves[i])
          for (int v : child_leaves[j])
            edges.emplace_back(std::min(u, v), std::max(u, v));
}

// post-order fold: merging completed sibling subtrees keeps every part a
// module, so red graphs stay empty
int fold(const Cotree& t, int node, PartitionSequence& seq) {
  const auto& nd = t.nodes[node];
  if (nd.vertex >= 0) return nd.vertex;
  int rep = -1;
  for (int c : nd.children) {
    int crep = fold(t, c, seq);
    if (rep < 0) {
      rep = crep;
    } else {
      int a = std::min(rep, crep), b = std::max(rep, crep);
      seq.merges.emplace_back(a, b);
      rep = a;
    }
  }
  return rep;
}

}  // namespace

CographInstance random_cograph(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Cotree t;
  std::vector<int> leaves(n);
  std::iota(leaves.begin(), leaves.end(), 0);
  std::bernoulli_distribution coin(0.5);
  t.root = build_cotree(t, leaves, rng, coin(rng));
  std::vector<std::pair<int, int>> edges;
  std::vector<int> all;
  collect_edges(t, t.root, all, edges);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  CographInstance inst;
  inst.graph = build_ordered_graph(n, std::move(edges));
  fold(t, t.root, inst.twin_sequence);
  return inst;
}

std::vector<int> random_permutation(int n, uint64_t seed) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace stw::test
