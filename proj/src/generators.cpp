#include "stw/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace stw {

WitnessedInstance gen_hk(int k) {
  if (k < 1) throw Error(Errc::OutOfRange, "k must be >= 1");
  // s = 0, then a_i, b_i, c_i interleaved, t = 3k+1
  int n = 3 * k + 2;
  int t = n - 1;
  auto a = [](int i) { return 3 * (i - 1) + 1; };
  auto b = [](int i) { return 3 * (i - 1) + 2; };
  auto c = [](int i) { return 3 * (i - 1) + 3; };
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= k; ++i) {
    edges.emplace_back(0, a(i));
    edges.emplace_back(a(i), b(i));
    edges.emplace_back(b(i), c(i));
    edges.emplace_back(c(i), t);
  }
  WitnessedInstance inst;
  inst.graph = build_ordered_graph(n, std::move(edges));
  PartitionSequence seq;
  for (int i = 2; i <= k; ++i) {
    seq.merges.emplace_back(a(1), a(i));
    seq.merges.emplace_back(b(1), b(i));
    seq.merges.emplace_back(c(1), c(i));
  }
  // five parts remain: {s}, A, B, C, {t}
  seq.merges.emplace_back(b(1), c(1));
  seq.merges.emplace_back(a(1), b(1));
  seq.merges.emplace_back(0, a(1));
  seq.merges.emplace_back(0, t);
  inst.witness = seq;
  inst.claimed_stretch = 6;
  inst.provenance = "hk k=" + std::to_string(k);
  return inst;
}

OrderedGraph gen_hk_bad_order(int k) {
  if (k < 2) throw Error(Errc::OutOfRange, "k must be >= 2");
  int n = 3 * k + 2;
  int t = n - 1;
  auto a = [](int i) { return i; };
  auto b = [&](int i) { return 2 * k + 1 - i; };
  auto c = [&](int i) { return 2 * k + i; };
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= k; ++i) {
    edges.emplace_back(0, a(i));
    edges.emplace_back(a(i), b(i));
    edges.emplace_back(b(i), c(i));
    edges.emplace_back(c(i), t);
  }
  return build_ordered_graph(n, std::move(edges));
}

WitnessedInstance gen_abh(int b, int h, long long vertex_budget) {
  if (b < 2 || h < 1) throw Error(Errc::OutOfRange, "need b >= 2 and h >= 1");
  long long n = 1;
  for (int i = 0; i < h; ++i) {
    n *= b;
    if (n > vertex_budget) throw Error(Errc::LimitExceeded, "b^h exceeds the vertex budget");
  }
  // u ~ v iff their ancestors at some level l in [0, h-2] are l-linked, i.e.
  // the level-l indices differ by exactly b
  std::vector<std::pair<int, int>> edges;
  long long stride = 1;  // b^l
  for (int l = 0; l <= h - 2; ++l, stride *= b) {
    long long nodes = n / stride;
    for (long long i = 0; i + b < nodes; ++i) {
      long long j = i + b;
      for (long long u = i * stride; u < (i + 1) * stride; ++u)
        for (long long v = j * stride; v < (j + 1) * stride; ++v)
          edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  }
  WitnessedInstance inst;
  inst.graph = build_ordered_graph(static_cast<int>(n), std::move(edges));
  if (b == 3) {
    // level-by-level merges, each level folding triples left to right
    PartitionSequence seq;
    long long width = 1;
    for (int l = 1; l <= h; ++l) {
      width *= 3;
      for (long long g0 = 0; g0 < n; g0 += width) {
        seq.merges.emplace_back(static_cast<int>(g0), static_cast<int>(g0 + width / 3));
        seq.merges.emplace_back(static_cast<int>(g0), static_cast<int>(g0 + 2 * (width / 3)));
      }
    }
    inst.witness = seq;
    inst.claimed_stretch = 9;
  }
  inst.provenance = "abh b=" + std::to_string(b) + " h=" + std::to_string(h);
  return inst;
}

GridInstance gen_grid(int k) {
  if (k < 2) throw Error(Errc::OutOfRange, "k must be >= 2");
  GridInstance out;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<std::pair<int, int>, bool>> tagged;
  auto id = [&](int r, int c) { return r * k + c; };
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) {
      if (c + 1 < k) tagged.push_back({{id(r, c), id(r, c + 1)}, true});
      if (r + 1 < k) tagged.push_back({{id(r, c), id(r + 1, c)}, false});
    }
  for (auto& [e, hor] : tagged) edges.push_back(e);
  out.graph = build_ordered_graph(k * k, std::move(edges));
  out.horizontal.assign(out.graph.edge_count(), false);
  for (auto& [e, hor] : tagged) {
    auto it = std::lower_bound(out.graph.edges.begin(), out.graph.edges.end(), e);
    out.horizontal[it - out.graph.edges.begin()] = hor;
  }
  return out;
}

SubdivisionResult flatten_edge(const OrderedGraph& g, std::pair<int, int> e,
                               const std::vector<int>& prior_stem) {
  auto [u, v] = e;
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= g.n || !g.has_edge(u, v)) throw Error(Errc::EdgeMissing, "edge not present");
  int h = v - u - 1;  // vertices strictly between u and v
  SubdivisionResult out;
  out.vertex_map.resize(g.n);
  // u < w_1 < u_1 < w_2 < ... < w_h < u_h < w_{h+1} < v
  for (int x = 0; x < g.n; ++x) {
    if (x <= u) out.vertex_map[x] = x;
    else if (x < v) out.vertex_map[x] = u + 2 * (x - u);
    else out.vertex_map[x] = x + h + 1;
  }
  auto w = [&](int j) { return u + 2 * j - 1; };  // j in [1, h+1]
  int new_n = g.n + h + 1;
  int flat_id = -1;
  {
    auto it = std::lower_bound(g.edges.begin(), g.edges.end(), std::make_pair(u, v));
    flat_id = static_cast<int>(it - g.edges.begin());
  }
  std::vector<std::pair<std::pair<int, int>, int>> tagged;  // edge, stem
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i == flat_id) continue;
    auto [a, b2] = g.edges[i];
    int stem = prior_stem.empty() ? -1 : prior_stem[i];
    tagged.push_back({{out.vertex_map[a], out.vertex_map[b2]}, stem});
  }
  int self = prior_stem.empty() ? flat_id : prior_stem[flat_id];
  if (self < 0) self = flat_id;
  tagged.push_back({{u, w(1)}, self});
  for (int j = 1; j <= h; ++j) tagged.push_back({{w(j), w(j + 1)}, self});
  tagged.push_back({{w(h + 1), out.vertex_map[v]}, self});

  std::vector<std::pair<int, int>> edges;
  for (auto& [ed, st] : tagged) edges.push_back(ed);
  out.graph = build_ordered_graph(new_n, std::move(edges));
  out.stem.assign(out.graph.edge_count(), -1);
  for (auto& [ed, st] : tagged) {
    auto key = ed;
    if (key.first > key.second) std::swap(key.first, key.second);
    auto it = std::lower_bound(out.graph.edges.begin(), out.graph.edges.end(), key);
    out.stem[it - out.graph.edges.begin()] = st;
  }
  return out;
}

SubdivisionResult iterated_subdivision(const OrderedGraph& g,
                                       const std::vector<std::pair<int, int>>& edge_order,
                                       long long vertex_budget) {
  // the order must be a permutation of E(G)
  std::vector<std::pair<int, int>> sorted;
  for (auto [u, v] : edge_order) sorted.emplace_back(std::min(u, v), std::max(u, v));
  std::vector<std::pair<int, int>> expect = g.edges;
  std::vector<std::pair<int, int>> got = sorted;
  std::sort(got.begin(), got.end());
  if (got != expect) throw Error(Errc::BadSequence, "edge order is not a permutation of E(G)");

  SubdivisionResult cur;
  cur.graph = g;
  cur.vertex_map.resize(g.n);
  std::iota(cur.vertex_map.begin(), cur.vertex_map.end(), 0);
  cur.stem.assign(g.edge_count(), -1);
  for (auto [u, v] : sorted) {
    std::pair<int, int> mapped{cur.vertex_map[u], cur.vertex_map[v]};
    if (mapped.first > mapped.second) std::swap(mapped.first, mapped.second);
    // tag created edges with the index of the original edge
    auto it = std::lower_bound(g.edges.begin(), g.edges.end(),
                               std::make_pair(std::min(u, v), std::max(u, v)));
    int orig_id = static_cast<int>(it - g.edges.begin());
    std::vector<int> stems = cur.stem;
    {
      auto jt = std::lower_bound(cur.graph.edges.begin(), cur.graph.edges.end(), mapped);
      stems[jt - cur.graph.edges.begin()] = orig_id;
    }
    SubdivisionResult next = flatten_edge(cur.graph, mapped, stems);
    if (next.graph.n > vertex_budget) throw Error(Errc::LimitExceeded, "subdivision exceeds budget");
    for (int x = 0; x < g.n; ++x) cur.vertex_map[x] = next.vertex_map[cur.vertex_map[x]];
    cur.graph = std::move(next.graph);
    cur.stem = std::move(next.stem);
  }
  return cur;
}

SubdivisionResult subdivide_simple(const OrderedGraph& g, std::pair<int, int> e,
                                   const std::vector<int>& prior_stem) {
  auto [u, v] = e;
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= g.n || !g.has_edge(u, v)) throw Error(Errc::EdgeMissing, "edge not present");
  SubdivisionResult out;
  out.vertex_map.resize(g.n);
  for (int x = 0; x < g.n; ++x) out.vertex_map[x] = x <= u ? x : x + 1;
  int w = u + 1;
  int flat_id;
  {
    auto it = std::lower_bound(g.edges.begin(), g.edges.end(), std::make_pair(u, v));
    flat_id = static_cast<int>(it - g.edges.begin());
  }
  std::vector<std::pair<std::pair<int, int>, int>> tagged;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i == flat_id) continue;
    auto [a, b2] = g.edges[i];
    tagged.push_back({{out.vertex_map[a], out.vertex_map[b2]},
                      prior_stem.empty() ? -1 : prior_stem[i]});
  }
  int self = prior_stem.empty() ? flat_id : prior_stem[flat_id];
  if (self < 0) self = flat_id;
  tagged.push_back({{u, w}, self});
  tagged.push_back({{w, out.vertex_map[v]}, self});
  std::vector<std::pair<int, int>> edges;
  for (auto& [ed, st] : tagged) edges.push_back(ed);
  out.graph = build_ordered_graph(g.n + 1, std::move(edges));
  out.stem.assign(out.graph.edge_count(), -1);
  for (auto& [ed, st] : tagged) {
    auto key = ed;
    if (key.first > key.second) std::swap(key.first, key.second);
    auto it = std::lower_bound(out.graph.edges.begin(), out.graph.edges.end(), key);
    out.stem[it - out.graph.edges.begin()] = st;
  }
  return out;
}

SubdivisionResult gen_flattened_grid(int k, long long vertex_budget) {
  GridInstance grid = gen_grid(k);
  std::vector<std::pair<int, int>> order;
  for (int i = 0; i < grid.graph.edge_count(); ++i)
    if (grid.horizontal[i]) order.push_back(grid.graph.edges[i]);
  std::vector<std::pair<int, int>> vertical;
  for (int i = 0; i < grid.graph.edge_count(); ++i)
    if (!grid.horizontal[i]) vertical.push_back(grid.graph.edges[i]);
  std::sort(vertical.begin(), vertical.end());  // left to right
  order.insert(order.end(), vertical.begin(), vertical.end());
  return iterated_subdivision(grid.graph, order, vertex_budget);
}

SubdivisionResult pad_subdivision(SubdivisionResult sub, int original_edge_count,
                                  long long target, long long vertex_budget) {
  auto family_sizes = [&]() {
    std::vector<long long> cnt(original_edge_count, 0);
    for (int e = 0; e < sub.graph.edge_count(); ++e)
      if (sub.stem[e] >= 0) ++cnt[sub.stem[e]];
    return cnt;  // subdivision vertices per family = edges - 1
  };
  while (true) {
    std::vector<long long> cnt = family_sizes();
    int family = -1;
    for (int f = 0; f < original_edge_count; ++f)
      if (cnt[f] - 1 < target) {
        family = f;
        break;
      }
    if (family < 0) return sub;
    // an edge of this family whose left endpoint sees nothing inside the span
    int pick = -1;
    for (int e = 0; e < sub.graph.edge_count() && pick < 0; ++e) {
      if (sub.stem[e] != family) continue;
      auto [u, v] = sub.graph.edges[e];
      bool safe = true;
      for (int w : sub.graph.adj[u])
        if (u < w && w < v) safe = false;
      if (safe) pick = e;
    }
    if (pick < 0) throw Error(Errc::Infeasible, "no safely subdividable edge in the family");
    if (sub.graph.n + 1 > vertex_budget) throw Error(Errc::LimitExceeded, "padding exceeds budget");
    SubdivisionResult next = subdivide_simple(sub.graph, sub.graph.edges[pick], sub.stem);
    for (auto& m : sub.vertex_map) m = next.vertex_map[m];
    sub.graph = std::move(next.graph);
    sub.stem = std::move(next.stem);
  }
}

OrderedGraph random_bounded_degree(int n, int d, uint64_t seed) {
  if (n < 0 || d < 1) throw Error(Errc::Infeasible, "need n >= 0 and d >= 1");
  std::mt19937_64 rng(seed);
  std::vector<int> deg(n, 0);
  std::set<std::pair<int, int>> used;
  long long target = static_cast<long long>(n) * d / 2;
  long long attempts = 40ll * std::max<long long>(target, 1);
  std::uniform_int_distribution<int> pick(0, std::max(0, n - 1));
  std::vector<std::pair<int, int>> edges;
  while (static_cast<long long>(edges.size()) < target && attempts-- > 0) {
    int u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (deg[u] >= d || deg[v] >= d) continue;
    if (used.count({u, v})) continue;
    used.insert({u, v});
    edges.emplace_back(u, v);
    ++deg[u];
    ++deg[v];
  }
  return build_ordered_graph(n, std::move(edges));
}

}  // namespace stw
