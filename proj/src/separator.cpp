#include "stw/separator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "stw/overlap.hpp"

namespace stw {

namespace {

std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void sort_unique(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<int> Separation::C() const { return set_intersection(A, B); }
std::vector<int> Separation::a_only() const { return set_difference(A, B); }
std::vector<int> Separation::b_only() const { return set_difference(B, A); }

bool verify_separation(const OrderedGraph& g, const Separation& sep, int num, int den) {
  if (sep.n != g.n) return false;
  std::vector<char> in_a(g.n, 0), in_b(g.n, 0);
  for (int v : sep.A) {
    if (v < 0 || v >= g.n) return false;
    in_a[v] = 1;
  }
  for (int v : sep.B) {
    if (v < 0 || v >= g.n) return false;
    in_b[v] = 1;
  }
  long long a_only = 0, b_only = 0;
  for (int v = 0; v < g.n; ++v) {
    if (!in_a[v] && !in_b[v]) return false;  // A ∪ B must cover V
    a_only += in_a[v] && !in_b[v];
    b_only += in_b[v] && !in_a[v];
  }
  for (auto [u, v] : g.edges) {
    bool ua = in_a[u] && !in_b[u], ub = in_b[u] && !in_a[u];
    bool va = in_a[v] && !in_b[v], vb = in_b[v] && !in_a[v];
    if ((ua && vb) || (ub && va)) return false;
  }
  long long max_side = std::max(a_only, b_only);
  return max_side * den <= static_cast<long long>(den - num) * g.n;
}

bool verify_left_right(const OrderedGraph& g, int x, const std::vector<int>& u) {
  std::vector<char> removed(g.n, 0);
  for (int w : u) removed[w] = 1;
  for (auto [a, b] : g.edges)
    if (!removed[a] && !removed[b] && a < x && x < b) return false;
  return true;
}

namespace {

long long lr_size_bound(int t, int len) {
  long long g = 6ll * t * t + 3ll * t;
  int logterm = len <= 0 ? 0 : static_cast<int>(std::ceil(std::log2(static_cast<double>(len) + 1.0)));
  return g * (logterm + 1);
}

struct LrContext {
  int t;
};

// Left/right separation recursion. Works on the current graph;
// the returned x is always a member of U.
LeftRightResult lr_recurse(const OrderedGraph& g, const LrContext& ctx, int v, int depth) {
  LeftRightResult res;
  res.depth = depth;
  int t = ctx.t;
  Rainbow s = max_rainbow_over(g, v);
  res.rainbow_len = s.length(g);

  if (s.order() <= 3 * t) {
    res.x = v;
    res.U.push_back(v);
    for (int e : edges_over(g, v)) res.U.push_back(g.edges[e].first);
    sort_unique(res.U);
    return res;
  }

  // the 3t outermost edges of the rainbow
  auto edge = [&](int idx1) { return g.edges[s.edge_ids[idx1 - 1]]; };
  auto [l1, r1] = edge(1);
  auto [lt, rt] = edge(t);
  auto [l2t, r2t] = edge(2 * t);
  auto [l3t, r3t] = edge(3 * t);

  std::vector<int> deleted;
  auto in_open = [](int w, int lo, int hi) { return lo < w && w < hi; };
  for (auto [a, b] : g.edges) {
    bool kill = false;
    // X: both endpoints span the innermost window edge
    if (a <= l3t && b >= r3t) kill = true;
    // Y_1, Y_2, Y_3: from the exterior of e_j to the interior of e_{j+t}
    auto family = [&](int lo_out, int hi_out, int lo_in, int hi_in) {
      bool a_out = a < lo_out || a > hi_out;
      bool b_out = b < lo_out || b > hi_out;
      return (a_out && in_open(b, lo_in, hi_in)) || (b_out && in_open(a, lo_in, hi_in));
    };
    if (!kill && family(l1, r1, lt, rt)) kill = true;
    if (!kill && family(lt, rt, l2t, r2t)) kill = true;
    if (!kill && family(l2t, r2t, l3t, r3t)) kill = true;
    if (kill) deleted.push_back(a);
  }
  sort_unique(deleted);
  std::vector<char> is_deleted(g.n, 0);
  for (int d : deleted) is_deleted[d] = 1;

  int xs = -1, ys = -1;  // leftmost survivors of the two pivot ranges
  for (int w = lt + 1; w <= l2t; ++w)
    if (!is_deleted[w]) {
      xs = w;
      break;
    }
  for (int w = r2t; w < rt; ++w)
    if (!is_deleted[w]) {
      ys = w;
      break;
    }

  if (xs < 0 || ys < 0) {
    // all surviving edges over the pivot share an endpoint of e_t
    res.U = deleted;
    if (xs < 0) {
      res.x = l2t;
      res.U.push_back(lt);
      res.U.push_back(l2t);
    } else {
      res.x = r2t;
      res.U.push_back(rt);
      res.U.push_back(r2t);
    }
    sort_unique(res.U);
    return res;
  }

  std::vector<int> keep;
  for (int w = 0; w < g.n; ++w)
    if (!is_deleted[w]) keep.push_back(w);
  InducedSubgraph sub = induced_ordered_subgraph(g, keep);

  Rainbow sx = max_rainbow_over(sub.graph, sub.new_of_old[xs]);
  Rainbow sy = max_rainbow_over(sub.graph, sub.new_of_old[ys]);
  int lx = sx.length(sub.graph), ly = sy.length(sub.graph);
  if (std::min(lx, ly) > res.rainbow_len / 2)
    throw Error(Errc::BadSequence, "internal: recursion rainbow exceeds half the caller's");

  int pivot = lx <= ly ? sub.new_of_old[xs] : sub.new_of_old[ys];
  LeftRightResult inner = lr_recurse(sub.graph, ctx, pivot, depth + 1);
  res.depth = inner.depth;
  res.x = sub.old_of_new[inner.x];
  res.U = deleted;
  for (int w : inner.U) res.U.push_back(sub.old_of_new[w]);
  sort_unique(res.U);
  return res;
}

}  // namespace

LeftRightResult left_right_separator(const OrderedGraph& g, int t, int v) {
  if (t < 1) throw Error(Errc::OutOfRange, "t must be >= 1");
  if (v < 0 || v >= g.n) throw Error(Errc::OutOfRange, "vertex out of range");
  LrContext ctx{t};
  LeftRightResult res = lr_recurse(g, ctx, v, 0);
  res.size_bound = lr_size_bound(t, res.rainbow_len);
  if (!verify_left_right(g, res.x, res.U))
    throw Error(Errc::BadSequence, "internal: left/right separator fails verification");
  return res;
}

namespace {

// Edges over v whose length lies in [lo, hi]; DP for the maximum nested chain
// among them only.
Rainbow max_mid_rainbow(const OrderedGraph& g, int v, int lo, int hi) {
  OrderedGraph filtered;  // same vertex set, only mid edges kept
  std::vector<std::pair<int, int>> mids;
  for (auto [a, b] : g.edges) {
    int len = b - a;
    if (a < v && v < b && len >= lo && len <= hi) mids.emplace_back(a, b);
  }
  filtered = build_ordered_graph(g.n, std::move(mids));
  Rainbow r = max_rainbow_over(filtered, v);
  // translate edge ids back
  Rainbow out;
  for (int e : r.edge_ids) {
    auto it = std::lower_bound(g.edges.begin(), g.edges.end(), filtered.edges[e]);
    out.edge_ids.push_back(static_cast<int>(it - g.edges.begin()));
  }
  return out;
}

Separation assemble(const OrderedGraph& g, int wx, int wy, std::vector<int> cut) {
  sort_unique(cut);
  std::vector<char> in_cut(g.n, 0);
  for (int c : cut) in_cut[c] = 1;
  Separation sep;
  sep.n = g.n;
  for (int v = 0; v < g.n; ++v) {
    bool inside = wx < v && v < wy && !in_cut[v];
    if (inside || in_cut[v]) sep.A.push_back(v);
    if (!inside) sep.B.push_back(v);
  }
  return sep;
}

Separation trivial_separation(const OrderedGraph& g) {
  // A = V, B = C = the rightmost ceil(n/12) vertices
  Separation sep;
  sep.n = g.n;
  sep.A.resize(g.n);
  std::iota(sep.A.begin(), sep.A.end(), 0);
  int c = (g.n + 11) / 12;
  for (int v = g.n - c; v < g.n; ++v) sep.B.push_back(v);
  return sep;
}

}  // namespace

BalancedResult balanced_separator(const OrderedGraph& g, int t) {
  if (t < 1) throw Error(Errc::OutOfRange, "t must be >= 1");
  BalancedResult out;
  int n = g.n;
  if (n < 12) {
    out.case_used = 3;
    out.sep.n = n;
    out.sep.A.resize(n);
    out.sep.B.resize(n);
    std::iota(out.sep.A.begin(), out.sep.A.end(), 0);
    std::iota(out.sep.B.begin(), out.sep.B.end(), 0);
    out.separator = out.sep.C();
    return out;
  }

  int midlo = (n + 11) / 12;       // ceil(n/12)
  int midhi = (11 * n) / 12;       // floor(11n/12)

  // quick case: a position with no edge over it splits the graph by itself
  {
    std::vector<int> over(n + 1, 0);
    for (auto [a, b] : g.edges) {
      if (a + 1 < b) {
        over[a + 1]++;
        over[b]--;
      }
    }
    int run = 0, best_p = -1;
    for (int p = 0; p < n; ++p) {
      run += over[p];
      if (run == 0 && 12ll * p <= 11ll * n && 12ll * (n - 1 - p) <= 11ll * n) {
        if (best_p < 0 || std::abs(2 * p - n) < std::abs(2 * best_p - n)) best_p = p;
      }
    }
    if (best_p >= 0) {
      out.case_used = 0;
      out.sep.n = n;
      for (int v = 0; v <= best_p; ++v) out.sep.A.push_back(v);
      for (int v = best_p; v < n; ++v) out.sep.B.push_back(v);
      out.separator = {best_p};
      if (verify_separation(g, out.sep, 1, 12)) return out;
      out = BalancedResult{};  // fall through to the full machinery
    }
  }

  // case 1: some vertex carries a rainbow of >= 3t mid-length edges
  int case1_v = -1;
  Rainbow mid;
  for (int v = 0; v < n; ++v) {
    Rainbow r = max_mid_rainbow(g, v, midlo, midhi);
    if (r.order() >= 3 * t) {
      case1_v = v;
      mid = r;
      break;
    }
  }

  std::vector<int> cut;
  int wx = -1, wy = -1;
  if (case1_v >= 0) {
    out.case_used = 1;
    auto edge = [&](int idx1) { return g.edges[mid.edge_ids[idx1 - 1]]; };
    auto [l1, r1] = edge(1);
    auto [lt, rt] = edge(t);
    auto [l2t, r2t] = edge(2 * t);
    auto [l3t, r3t] = edge(3 * t);
    auto in_open = [](int w, int lo, int hi) { return lo < w && w < hi; };
    std::vector<int> deleted;
    for (auto [a, b] : g.edges) {
      bool kill = false;
      if (a >= l1 && a <= l3t && b >= r3t && b <= r1) kill = true;  // X
      auto family = [&](int lo_out, int hi_out, int lo_in, int hi_in) {
        bool a_out = a < lo_out || a > hi_out;
        bool b_out = b < lo_out || b > hi_out;
        return (a_out && in_open(b, lo_in, hi_in)) || (b_out && in_open(a, lo_in, hi_in));
      };
      if (!kill && family(l1, r1, lt, rt)) kill = true;
      if (!kill && family(lt, rt, l2t, r2t)) kill = true;
      if (!kill && family(l2t, r2t, l3t, r3t)) kill = true;
      // Z_L / Z_R: edges crossing e_1 from outside the window
      if (!kill && a < l1 && b >= rt && b <= r1) kill = true;
      if (!kill && b > r1 && a >= l1 && a <= lt) kill = true;
      if (kill) deleted.push_back(a);
    }
    sort_unique(deleted);
    std::vector<char> is_deleted(n, 0);
    for (int d : deleted) is_deleted[d] = 1;
    cut = deleted;

    int xs = -1, ys = -1;
    for (int w = lt + 1; w <= l2t; ++w)
      if (!is_deleted[w]) {
        xs = w;
        break;
      }
    for (int w = r2t; w < rt; ++w)
      if (!is_deleted[w]) {
        ys = w;
        break;
      }

    if (xs < 0) {
      wx = l2t;
      cut.push_back(lt);
      cut.push_back(l2t);
    } else {
      std::vector<int> keep;
      for (int w = 0; w <= r1; ++w)
        if (!is_deleted[w]) keep.push_back(w);
      InducedSubgraph gx = induced_ordered_subgraph(g, keep);
      LeftRightResult lr = left_right_separator(gx.graph, t, gx.new_of_old[xs]);
      wx = gx.old_of_new[lr.x];
      for (int u : lr.U) cut.push_back(gx.old_of_new[u]);
    }
    if (ys < 0) {
      wy = r2t;
      cut.push_back(rt);
      cut.push_back(r2t);
    } else {
      std::vector<int> keep;
      for (int w = l1; w < n; ++w)
        if (!is_deleted[w]) keep.push_back(w);
      InducedSubgraph gy = induced_ordered_subgraph(g, keep);
      LeftRightResult lr = left_right_separator(gy.graph, t, gy.new_of_old[ys]);
      wy = gy.old_of_new[lr.x];
      for (int u : lr.U) cut.push_back(gy.old_of_new[u]);
    }
  } else {
    // case 2: every mid-length rainbow is short; cut near n/3 and 2n/3
    out.case_used = 2;
    int x = n / 3, y = (2 * n) / 3;
    std::vector<int> deleted;
    for (int v : {x, y})
      for (auto [a, b] : g.edges) {
        int len = b - a;
        if (a < v && v < b && len >= midlo && len <= midhi)
          deleted.push_back(a != x && a != y ? a : b);  // never delete a pivot
      }
    sort_unique(deleted);
    std::vector<char> is_deleted(n, 0);
    for (int d : deleted) is_deleted[d] = 1;
    cut = deleted;

    std::vector<int> keep_x, keep_y;
    for (int w = 0; w < midhi; ++w)
      if (!is_deleted[w]) keep_x.push_back(w);
    for (int w = n - midhi; w < n; ++w)
      if (!is_deleted[w]) keep_y.push_back(w);

    InducedSubgraph hx = induced_ordered_subgraph(g, keep_x);
    LeftRightResult lrx = left_right_separator(hx.graph, t, hx.new_of_old[x]);
    wx = hx.old_of_new[lrx.x];
    for (int u : lrx.U) cut.push_back(hx.old_of_new[u]);

    InducedSubgraph hy = induced_ordered_subgraph(g, keep_y);
    LeftRightResult lry = left_right_separator(hy.graph, t, hy.new_of_old[y]);
    wy = hy.old_of_new[lry.x];
    for (int u : lry.U) cut.push_back(hy.old_of_new[u]);
  }

  if (wx > wy) std::swap(wx, wy);
  cut.push_back(wx);
  cut.push_back(wy);
  out.sep = assemble(g, wx, wy, cut);
  out.separator = out.sep.C();
  if (!verify_separation(g, out.sep, 1, 12)) {
    out.fallback = true;
    out.sep = trivial_separation(g);
    out.separator = out.sep.C();
  }
  return out;
}

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max<int>(w, static_cast<int>(b.size()) - 1);
  return w;
}

bool validate_decomposition(const OrderedGraph& g, const TreeDecomposition& td) {
  int k = static_cast<int>(td.bags.size());
  if (static_cast<int>(td.parent.size()) != k || k == 0) return false;
  // tree shape: exactly one root, parents acyclic by index-free walk
  int roots = 0;
  for (int i = 0; i < k; ++i) {
    if (td.parent[i] == -1) ++roots;
    else if (td.parent[i] < 0 || td.parent[i] >= k) return false;
  }
  if (roots != 1) return false;

  std::vector<char> covered(g.n, 0);
  for (const auto& b : td.bags)
    for (int v : b) {
      if (v < 0 || v >= g.n) return false;
      covered[v] = 1;
    }
  for (int v = 0; v < g.n; ++v)
    if (!covered[v]) return false;

  for (auto [u, v] : g.edges) {
    bool ok = false;
    for (const auto& b : td.bags)
      if (std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), v)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }

  // connectivity: bags containing v induce a subtree
  std::vector<std::vector<int>> children(k);
  for (int i = 0; i < k; ++i)
    if (td.parent[i] >= 0) children[td.parent[i]].push_back(i);
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> holders;
    for (int i = 0; i < k; ++i)
      if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) holders.push_back(i);
    if (holders.empty()) return false;
    // count holders reachable from the first holder through holder-only nodes
    std::vector<char> is_holder(k, 0);
    for (int h : holders) is_holder[h] = 1;
    std::vector<int> stack{holders[0]};
    std::vector<char> seen(k, 0);
    seen[holders[0]] = 1;
    int reached = 0;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      ++reached;
      auto push = [&](int j) {
        if (j >= 0 && is_holder[j] && !seen[j]) {
          seen[j] = 1;
          stack.push_back(j);
        }
      };
      push(td.parent[i]);
      for (int c : children[i]) push(c);
    }
    if (reached != static_cast<int>(holders.size())) return false;
  }
  return true;
}

TreeDecomposition min_degree_decomposition(const OrderedGraph& g) {
  TreeDecomposition td;
  int n = g.n;
  if (n == 0) {
    td.bags.push_back({});
    td.parent.push_back(-1);
    return td;
  }
  std::vector<std::set<int>> nb(n);
  for (auto [u, v] : g.edges) {
    nb[u].insert(v);
    nb[v].insert(u);
  }
  std::vector<char> gone(n, 0);
  std::vector<int> elim_index(n, -1);
  std::vector<std::vector<int>> bags;
  std::vector<int> elim_vertex;
  for (int round = 0; round < n; ++round) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!gone[v] && (pick < 0 || nb[v].size() < nb[pick].size())) pick = v;
    std::vector<int> bag(nb[pick].begin(), nb[pick].end());
    bag.push_back(pick);
    std::sort(bag.begin(), bag.end());
    bags.push_back(bag);
    elim_vertex.push_back(pick);
    elim_index[pick] = round;
    // fill-in: neighbors become a clique
    std::vector<int> nbrs(nb[pick].begin(), nb[pick].end());
    for (size_t i = 0; i < nbrs.size(); ++i)
      for (size_t j = i + 1; j < nbrs.size(); ++j) {
        nb[nbrs[i]].insert(nbrs[j]);
        nb[nbrs[j]].insert(nbrs[i]);
      }
    for (int w : nbrs) nb[w].erase(pick);
    gone[pick] = 1;
  }
  int k = static_cast<int>(bags.size());
  td.bags = std::move(bags);
  td.parent.assign(k, -1);
  for (int i = 0; i < k; ++i) {
    // parent: node of the earliest-eliminated other bag member
    int best = -1;
    for (int w : td.bags[i]) {
      if (w == elim_vertex[i]) continue;
      if (best < 0 || elim_index[w] < best) best = elim_index[w];
    }
    if (best >= 0) td.parent[i] = best;
  }
  // isolated-vertex nodes and the final node may be parentless: chain them
  int root = -1;
  for (int i = k - 1; i >= 0; --i) {
    if (td.parent[i] == -1) {
      if (root == -1) {
        root = i;
      } else {
        td.parent[i] = root;
      }
    }
  }
  return td;
}

namespace {

void append_subtree(TreeDecomposition& dst, const TreeDecomposition& src,
                    const std::vector<int>& old_of_new, const std::vector<int>& interface,
                    int attach) {
  int base = static_cast<int>(dst.bags.size());
  for (size_t i = 0; i < src.bags.size(); ++i) {
    std::vector<int> bag;
    for (int v : src.bags[i]) bag.push_back(old_of_new[v]);
    bag.insert(bag.end(), interface.begin(), interface.end());
    sort_unique(bag);
    dst.bags.push_back(std::move(bag));
    dst.parent.push_back(src.parent[i] == -1 ? attach : base + src.parent[i]);
  }
}

void decompose_rec(const OrderedGraph& g, const std::vector<int>& vertices,
                   const std::vector<int>& interface, int t, int attach,
                   TreeDecomposition& out) {
  InducedSubgraph sub = induced_ordered_subgraph(g, vertices);

  auto leaf = [&]() {
    TreeDecomposition base = min_degree_decomposition(sub.graph);
    append_subtree(out, base, sub.old_of_new, interface, attach);
  };
  if (static_cast<int>(vertices.size()) <= 32) {
    leaf();
    return;
  }

  BalancedResult bal = balanced_separator(sub.graph, t);
  std::vector<int> c_local = bal.sep.C();
  std::vector<int> a_local = bal.sep.a_only(), b_local = bal.sep.b_only();
  // guard: the recursion must shrink
  if (a_local.empty() && b_local.empty()) {
    leaf();
    return;
  }
  if (static_cast<int>(std::max(a_local.size(), b_local.size())) >=
      static_cast<int>(vertices.size())) {
    leaf();
    return;
  }

  std::vector<int> bag;
  for (int v : c_local) bag.push_back(sub.old_of_new[v]);
  bag.insert(bag.end(), interface.begin(), interface.end());
  sort_unique(bag);
  int node = static_cast<int>(out.bags.size());
  out.bags.push_back(bag);
  out.parent.push_back(attach);

  for (const auto& side_local : {a_local, b_local}) {
    if (side_local.empty()) continue;
    std::vector<int> side;
    for (int v : side_local) side.push_back(sub.old_of_new[v]);
    std::vector<char> in_side(g.n, 0);
    for (int v : side) in_side[v] = 1;
    std::vector<int> next_interface;
    for (int v : bag)
      for (int w : g.adj[v])
        if (in_side[w]) {
          next_interface.push_back(v);
          break;
        }
    decompose_rec(g, side, next_interface, t, node, out);
  }
}

}  // namespace

TreeDecomposition tree_decomposition(const OrderedGraph& g, int t) {
  TreeDecomposition td;
  if (g.n == 0) {
    td.bags.push_back({});
    td.parent.push_back(-1);
    return td;
  }
  td.bags.push_back({});  // empty root keeps components in one tree
  td.parent.push_back(-1);
  for (const auto& comp : connected_components(g))
    decompose_rec(g, comp, {}, t, 0, td);
  return td;
}

}  // namespace stw
