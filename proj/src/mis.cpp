#include "stw/mis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>

namespace stw {

bool is_independent_set(const OrderedGraph& g, const std::vector<int>& set) {
  for (size_t i = 0; i < set.size(); ++i)
    for (size_t j = i + 1; j < set.size(); ++j)
      if (g.has_edge(set[i], set[j])) return false;
  return true;
}

namespace {

struct ExactSearch {
  const std::vector<uint32_t>& closed;  // N[v] as mask
  int n;
  int best = 0;
  uint32_t best_set = 0;

  void run(uint32_t remaining, uint32_t chosen, int count) {
    if (count + __builtin_popcount(remaining) <= best) return;
    if (!remaining) {
      if (count > best) {
        best = count;
        best_set = chosen;
      }
      return;
    }
    int v = __builtin_ctz(remaining);
    run(remaining & ~closed[v], chosen | (uint32_t{1} << v), count + 1);
    run(remaining & ~(uint32_t{1} << v), chosen, count);
  }
};

}  // namespace

MisResult mis_exact(const OrderedGraph& g, int limit_n) {
  if (g.n > limit_n || g.n > 24)
    throw Error(Errc::LimitExceeded, "n=" + std::to_string(g.n) + " above oracle limit");
  MisResult res;
  if (g.n == 0) return res;
  std::vector<uint32_t> closed(g.n);
  for (int v = 0; v < g.n; ++v) {
    closed[v] = uint32_t{1} << v;
    for (int w : g.adj[v]) closed[v] |= uint32_t{1} << w;
  }
  ExactSearch search{closed, g.n};
  search.run((uint32_t{1} << g.n) - 1, 0, 0);
  res.size = search.best;
  for (int v = 0; v < g.n; ++v)
    if (search.best_set & (uint32_t{1} << v)) res.set.push_back(v);
  return res;
}

namespace {

// Independent subsets of a bag, each as a mask over bag positions.
std::vector<uint32_t> independent_subsets(const OrderedGraph& g, const std::vector<int>& bag) {
  int b = static_cast<int>(bag.size());
  std::vector<uint32_t> conflict(b, 0);
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j)
      if (i != j && g.has_edge(bag[i], bag[j])) conflict[i] |= uint32_t{1} << j;
  std::vector<uint32_t> subsets;
  for (uint32_t s = 0;; ++s) {
    bool ok = true;
    for (int i = 0; i < b && ok; ++i)
      if ((s >> i & 1) && (s & conflict[i])) ok = false;
    if (ok) subsets.push_back(s);
    if (s == (b ? (uint32_t{1} << b) - 1 : 0)) break;
  }
  return subsets;
}

struct DpState {
  // per independent bag subset: best count over the subtree, and the chosen
  // subset per child for reconstruction
  std::vector<uint32_t> subsets;
  std::vector<int> value;
  std::vector<std::vector<uint32_t>> child_choice;
};

}  // namespace

MisResult mis_tw_dp(const OrderedGraph& g, const TreeDecomposition& td) {
  if (!validate_decomposition(g, td)) throw Error(Errc::BadSequence, "invalid tree decomposition");
  int k = static_cast<int>(td.bags.size());
  std::vector<std::vector<int>> children(k);
  int root = -1;
  for (int i = 0; i < k; ++i) {
    if (td.parent[i] == -1) root = i;
    else children[td.parent[i]].push_back(i);
  }
  // bottom-up order
  std::vector<int> order;
  {
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      order.push_back(i);
      for (int c : children[i]) stack.push_back(c);
    }
    std::reverse(order.begin(), order.end());
  }

  std::vector<DpState> dp(k);
  for (int node : order) {
    const auto& bag = td.bags[node];
    DpState st;
    st.subsets = independent_subsets(g, bag);
    st.value.assign(st.subsets.size(), 0);
    st.child_choice.assign(st.subsets.size(), std::vector<uint32_t>(children[node].size(), 0));
    for (size_t si = 0; si < st.subsets.size(); ++si) {
      uint32_t s = st.subsets[si];
      st.value[si] = __builtin_popcount(s);
      bool feasible = true;
      for (size_t ci = 0; ci < children[node].size() && feasible; ++ci) {
        int c = children[node][ci];
        const auto& cbag = td.bags[c];
        // the child subset must agree with s on shared vertices
        int best_gain = -1;
        uint32_t best_cs = 0;
        for (size_t cj = 0; cj < dp[c].subsets.size(); ++cj) {
          uint32_t cs = dp[c].subsets[cj];
          bool agree = true;
          int overlap = 0;
          for (size_t bi = 0; bi < cbag.size() && agree; ++bi) {
            auto it = std::lower_bound(bag.begin(), bag.end(), cbag[bi]);
            bool shared = it != bag.end() && *it == cbag[bi];
            if (shared) {
              bool in_s = (s >> (it - bag.begin())) & 1;
              bool in_cs = (cs >> bi) & 1;
              if (in_s != in_cs) agree = false;
              if (in_cs) ++overlap;
            }
          }
          if (!agree) continue;
          int gain = dp[c].value[cj] - overlap;
          if (gain > best_gain) {
            best_gain = gain;
            best_cs = cs;
          }
        }
        if (best_gain < 0) {
          feasible = false;
        } else {
          st.value[si] += best_gain;
          st.child_choice[si][ci] = best_cs;
        }
      }
      if (!feasible) st.value[si] = -1;
    }
    dp[node] = std::move(st);
  }

  // pick the best root subset, then walk down collecting chosen vertices
  MisResult res;
  int best_i = -1;
  for (size_t i = 0; i < dp[root].subsets.size(); ++i)
    if (dp[root].value[i] > (best_i < 0 ? -1 : dp[root].value[best_i]))
      best_i = static_cast<int>(i);
  if (best_i < 0) return res;
  res.size = dp[root].value[best_i];

  std::vector<char> chosen(g.n, 0);
  std::vector<std::pair<int, uint32_t>> stack{{root, dp[root].subsets[best_i]}};
  while (!stack.empty()) {
    auto [node, s] = stack.back();
    stack.pop_back();
    const auto& bag = td.bags[node];
    for (size_t bi = 0; bi < bag.size(); ++bi)
      if ((s >> bi) & 1) chosen[bag[bi]] = 1;
    size_t si = std::find(dp[node].subsets.begin(), dp[node].subsets.end(), s) -
                dp[node].subsets.begin();
    for (size_t ci = 0; ci < children[node].size(); ++ci)
      stack.push_back({children[node][ci], dp[node].child_choice[si][ci]});
  }
  for (int v = 0; v < g.n; ++v)
    if (chosen[v]) res.set.push_back(v);
  if (static_cast<int>(res.set.size()) != res.size || !is_independent_set(g, res.set))
    throw Error(Errc::BadSequence, "internal: DP reconstruction inconsistent");
  return res;
}

namespace {

struct BranchSearch {
  const OrderedGraph& g;
  int threshold;
  long long nodes = 0;
  std::vector<int> leaf_widths;
  std::vector<int> best_set;
  int max_takes_seen = 0;

  void solve(std::vector<char>& alive, int alive_count, std::vector<int>& picked, int takes) {
    // find a vertex of degree >= threshold in the live graph
    int pivot = -1, pivot_deg = -1;
    for (int v = 0; v < g.n && pivot_deg < threshold; ++v) {
      if (!alive[v]) continue;
      int d = 0;
      for (int w : g.adj[v]) d += alive[w];
      if (d > pivot_deg) {
        pivot_deg = d;
        pivot = v;
      }
    }
    if (pivot < 0 || pivot_deg < threshold) {
      // leaf: exact DP over a min-degree decomposition of the live graph
      std::vector<int> live;
      for (int v = 0; v < g.n; ++v)
        if (alive[v]) live.push_back(v);
      if (static_cast<int>(picked.size()) + static_cast<int>(live.size()) <=
          static_cast<int>(best_set.size()))
        return;  // even taking everything cannot beat the incumbent
      InducedSubgraph sub = induced_ordered_subgraph(g, live);
      TreeDecomposition td = min_degree_decomposition(sub.graph);
      leaf_widths.push_back(td.width());
      MisResult leaf = mis_tw_dp(sub.graph, td);
      if (static_cast<int>(picked.size()) + leaf.size > static_cast<int>(best_set.size())) {
        best_set = picked;
        for (int v : leaf.set) best_set.push_back(sub.old_of_new[v]);
      }
      return;
    }
    if (static_cast<int>(picked.size()) + alive_count <= static_cast<int>(best_set.size()))
      return;
    max_takes_seen = std::max(max_takes_seen, takes + 1);
    // take pivot
    ++nodes;
    std::vector<int> removed;
    for (int w : g.adj[pivot])
      if (alive[w]) {
        alive[w] = 0;
        removed.push_back(w);
      }
    alive[pivot] = 0;
    picked.push_back(pivot);
    solve(alive, alive_count - 1 - static_cast<int>(removed.size()), picked, takes + 1);
    picked.pop_back();
    for (int w : removed) alive[w] = 1;
    // delete pivot
    ++nodes;
    solve(alive, alive_count - 1, picked, takes);
    alive[pivot] = 1;
  }
};

}  // namespace

MisResult mis_branch(const OrderedGraph& g, int threshold) {
  if (threshold <= 0)
    threshold = std::max(1, static_cast<int>(std::ceil(std::pow(std::max(1, g.n), 0.2))));
  BranchSearch search{g, threshold, 0, {}, {}, 0};
  std::vector<char> alive(g.n, 1);
  std::vector<int> picked;
  search.solve(alive, g.n, picked, 0);
  MisResult res;
  res.set = search.best_set;
  std::sort(res.set.begin(), res.set.end());
  res.size = static_cast<int>(res.set.size());
  res.node_count = search.nodes;
  res.leaf_widths = std::move(search.leaf_widths);
  if (!is_independent_set(g, res.set))
    throw Error(Errc::BadSequence, "internal: branch result not independent");
  if (threshold >= 1 && search.max_takes_seen > g.n / threshold + 1)
    throw Error(Errc::BadSequence, "internal: take-branch count exceeds n/threshold");
  return res;
}

}  // namespace stw
