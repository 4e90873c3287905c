#include "stw/stretch.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <unordered_map>

namespace stw {

namespace {

struct SpanInfo {
  int lo, hi;        // span of the block itself
  int nlo, nhi;      // span of the closed red neighborhood
};

}  // namespace

PartStretch partition_stretch(const OrderedGraph& g, const VertexPartition& p) {
  RedGraph r = red_graph(g, p);
  int k = p.size();
  std::vector<SpanInfo> info(k);
  for (int b = 0; b < k; ++b) {
    info[b].lo = p.blocks[b].front();
    info[b].hi = p.blocks[b].back();
    info[b].nlo = info[b].lo;
    info[b].nhi = info[b].hi;
  }
  for (int b = 0; b < k; ++b)
    for (int c : r.red_adj[b]) {
      info[b].nlo = std::min(info[b].nlo, info[c].lo);
      info[b].nhi = std::max(info[b].nhi, info[c].hi);
    }
  PartStretch out;
  out.per_part.reserve(k);
  for (int b = 0; b < k; ++b) {
    int cnt = 0;
    for (int c = 0; c < k; ++c) {
      if (c == b) continue;
      if (info[c].lo <= info[b].nhi && info[b].nlo <= info[c].hi) ++cnt;
    }
    out.per_part.emplace_back(r.reps[b], cnt);
    out.max_stretch = std::max(out.max_stretch, cnt);
  }
  return out;
}

StretchReport verify_sequence(const OrderedGraph& g, const PartitionSequence& seq) {
  if (static_cast<int>(seq.merges.size()) != std::max(0, g.n - 1))
    throw Error(Errc::BadSequence, "sequence has " + std::to_string(seq.merges.size()) +
                                       " merges, expected " + std::to_string(g.n - 1));
  StretchReport rep;
  PartitionState st(g.n);
  auto record = [&](int step) {
    PartStretch s = partition_stretch(g, st.snapshot());
    rep.per_step_stretch.push_back(s.max_stretch);
    if (s.max_stretch > rep.max_stretch) {
      rep.max_stretch = s.max_stretch;
      rep.worst_step = step;
      for (auto [r, c] : s.per_part)
        if (c == s.max_stretch) {
          rep.worst_part_rep = r;
          break;
        }
    }
  };
  record(0);
  for (size_t i = 0; i < seq.merges.size(); ++i) {
    st.merge(seq.merges[i].first, seq.merges[i].second);
    record(static_cast<int>(i) + 1);
  }
  return rep;
}

namespace {

// Lattice search over partitions of [0, n), n <= 16. A partition is encoded
// as its restricted-growth string packed 4 bits per vertex.
using Code = uint64_t;

Code encode(const std::vector<int>& part_of) {
  int next = 0;
  int label[16];
  std::fill(label, label + 16, -1);
  Code c = 0;
  for (size_t v = 0; v < part_of.size(); ++v) {
    int b = part_of[v];
    if (label[b] < 0) label[b] = next++;
    c |= static_cast<Code>(label[b]) << (4 * v);
  }
  return c;
}

std::vector<int> decode(Code c, int n) {
  std::vector<int> part_of(n);
  for (int v = 0; v < n; ++v) part_of[v] = (c >> (4 * v)) & 15;
  return part_of;
}

// Stretch of a small partition given 16-bit adjacency rows.
int small_stretch(const std::vector<uint32_t>& adj, int n, const std::vector<int>& part_of) {
  int k = 0;
  for (int v = 0; v < n; ++v) k = std::max(k, part_of[v] + 1);
  uint32_t mask[16] = {0};
  int lo[16], hi[16], sz[16] = {0};
  std::fill(lo, lo + k, n);
  std::fill(hi, hi + k, -1);
  for (int v = 0; v < n; ++v) {
    int b = part_of[v];
    mask[b] |= uint32_t{1} << v;
    lo[b] = std::min(lo[b], v);
    hi[b] = std::max(hi[b], v);
    ++sz[b];
  }
  int nlo[16], nhi[16];
  for (int b = 0; b < k; ++b) {
    nlo[b] = lo[b];
    nhi[b] = hi[b];
  }
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      if (sz[a] == 1 && sz[b] == 1) continue;
      int cnt = 0;
      uint32_t am = mask[a];
      while (am) {
        int v = __builtin_ctz(am);
        am &= am - 1;
        cnt += __builtin_popcount(adj[v] & mask[b]);
      }
      if (cnt != 0 && cnt != sz[a] * sz[b]) {
        nlo[a] = std::min(nlo[a], lo[b]);
        nhi[a] = std::max(nhi[a], hi[b]);
        nlo[b] = std::min(nlo[b], lo[a]);
        nhi[b] = std::max(nhi[b], hi[a]);
      }
    }
  int worst = 0;
  for (int a = 0; a < k; ++a) {
    int cnt = 0;
    for (int b = 0; b < k; ++b)
      if (b != a && lo[b] <= nhi[a] && nlo[a] <= hi[b]) ++cnt;
    worst = std::max(worst, cnt);
  }
  return worst;
}

}  // namespace

ExactFixedResult exact_stw_fixed_order(const OrderedGraph& g, int cap, int lattice_limit) {
  if (g.n > lattice_limit || g.n > 16)
    throw Error(Errc::LimitExceeded,
                "n=" + std::to_string(g.n) + " above lattice limit " + std::to_string(lattice_limit));
  ExactFixedResult res;
  if (g.n <= 1) return res;

  std::vector<uint32_t> adj(g.n, 0);
  for (auto [u, v] : g.edges) {
    adj[u] |= uint32_t{1} << v;
    adj[v] |= uint32_t{1} << u;
  }

  std::vector<int> finest(g.n);
  std::iota(finest.begin(), finest.end(), 0);
  Code start = encode(finest);
  Code goal = 0;  // all vertices in block 0

  struct Entry {
    int bottleneck;
    Code code;
    bool operator>(const Entry& o) const { return bottleneck > o.bottleneck; }
  };
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
  std::unordered_map<Code, int> best;
  std::unordered_map<Code, std::pair<Code, std::pair<int, int>>> parent;

  pq.push({0, start});
  best[start] = 0;

  while (!pq.empty()) {
    auto [d, code] = pq.top();
    pq.pop();
    if (d != best[code]) continue;
    if (code == goal) {
      res.value = d;
      // walk parents back to the finest partition
      std::vector<std::pair<int, int>> merges;
      Code cur = goal;
      while (cur != start) {
        auto& [pc, m] = parent[cur];
        merges.push_back(m);
        cur = pc;
      }
      std::reverse(merges.begin(), merges.end());
      res.witness.merges = std::move(merges);
      return res;
    }
    std::vector<int> part_of = decode(code, g.n);
    int k = 0;
    for (int v = 0; v < g.n; ++v) k = std::max(k, part_of[v] + 1);
    int rep[16];
    std::fill(rep, rep + k, g.n);
    for (int v = g.n - 1; v >= 0; --v) rep[part_of[v]] = v;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) {
        std::vector<int> merged = part_of;
        for (int v = 0; v < g.n; ++v)
          if (merged[v] == b) merged[v] = a;
        Code nc = encode(merged);
        int ns = small_stretch(adj, g.n, merged);
        if (ns > cap) continue;
        int nd = std::max(d, ns);
        auto it = best.find(nc);
        if (it == best.end() || nd < it->second) {
          best[nc] = nd;
          parent[nc] = {code, {std::min(rep[a], rep[b]), std::max(rep[a], rep[b])}};
          pq.push({nd, nc});
        }
      }
  }
  res.cap_exceeded = true;
  res.value = cap;
  return res;
}

ExactResult exact_stw(const OrderedGraph& g, int order_limit, int lattice_limit) {
  if (g.n > order_limit)
    throw Error(Errc::LimitExceeded,
                "n=" + std::to_string(g.n) + " above order limit " + std::to_string(order_limit));
  ExactResult best;
  if (g.n <= 1) {
    best.best_order.resize(g.n);
    std::iota(best.best_order.begin(), best.best_order.end(), 0);
    return best;
  }
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  int cap = std::numeric_limits<int>::max() / 2;
  bool have = false;
  do {
    // an order and its reverse give equal stretch-width
    std::vector<int> rev(perm.rbegin(), perm.rend());
    if (rev < perm) continue;
    OrderedGraph h = relabel_graph(g, perm);
    ExactFixedResult r = exact_stw_fixed_order(h, cap, lattice_limit);
    if (!r.cap_exceeded && (!have || r.value < best.value)) {
      have = true;
      best.value = r.value;
      best.best_order = perm;
      best.witness = std::move(r.witness);
      cap = best.value - 1;  // only strictly better orders remain interesting
      if (best.value == 0) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

std::vector<std::vector<int>> red_components(const RedGraph& r) {
  int k = static_cast<int>(r.reps.size());
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(k, false);
  for (int s = 0; s < k; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      comp.push_back(b);
      for (int c : r.red_adj[b])
        if (!seen[c]) {
          seen[c] = true;
          stack.push_back(c);
        }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

std::vector<int> order_from_component_sequence(const OrderedGraph& g,
                                               const PartitionSequence& seq, int t) {
  int n = g.n;
  if (n == 0) return {};
  if (static_cast<int>(seq.merges.size()) != n - 1)
    throw Error(Errc::BadSequence, "sequence length mismatch");

  // partitions[i] is the partition with n-i blocks; components as rep sets
  std::vector<VertexPartition> partitions;
  std::vector<std::vector<std::vector<int>>> comps_by_step;  // rep lists
  PartitionState st(n);
  for (int step = 0; step <= n - 1; ++step) {
    if (step > 0) st.merge(seq.merges[step - 1].first, seq.merges[step - 1].second);
    VertexPartition p = st.snapshot();
    RedGraph r = red_graph(g, p);
    auto comps = red_components(r);
    std::vector<std::vector<int>> rep_comps;
    for (auto& c : comps) {
      std::vector<int> reps;
      for (int b : c) reps.push_back(r.reps[b]);
      std::sort(reps.begin(), reps.end());
      if (static_cast<int>(reps.size()) > t)
        throw Error(Errc::ComponentTooLarge,
                    "red component of " + std::to_string(reps.size()) + " parts > t=" +
                        std::to_string(t) + " at step " + std::to_string(step));
      rep_comps.push_back(std::move(reps));
    }
    partitions.push_back(std::move(p));
    comps_by_step.push_back(std::move(rep_comps));
  }

  // Refine from the coarsest partition: groups is an ordered list of red
  // components (sets of block representatives). A split replaces the group of
  // the split part with the new components, ordered by minimum vertex.
  std::vector<std::vector<int>> groups = comps_by_step.back();
  std::sort(groups.begin(), groups.end());
  for (int step = n - 1; step >= 1; --step) {
    // partitions[step] -> partitions[step - 1]: block with rep keep splits
    auto [a, b] = seq.merges[step - 1];
    int keep = std::min(a, b);
    const auto& fine_comps = comps_by_step[step - 1];
    // map: rep -> component index in the finer partition
    std::unordered_map<int, int> comp_of;
    for (size_t ci = 0; ci < fine_comps.size(); ++ci)
      for (int r : fine_comps[ci]) comp_of[r] = static_cast<int>(ci);

    std::vector<std::vector<int>> next_groups;
    for (auto& grp : groups) {
      bool holds_split = std::find(grp.begin(), grp.end(), keep) != grp.end();
      if (!holds_split) {
        next_groups.push_back(grp);
        continue;
      }
      // collect the finer components covering this group's parts
      std::vector<int> ids;
      for (int r : grp) {
        if (r == keep) {
          ids.push_back(comp_of.at(std::min(a, b)));
          ids.push_back(comp_of.at(std::max(a, b)));
        } else {
          ids.push_back(comp_of.at(r));
        }
      }
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      std::vector<std::vector<int>> pieces;
      for (int id : ids) pieces.push_back(fine_comps[id]);
      std::sort(pieces.begin(), pieces.end(),
                [](const auto& x, const auto& y) { return x[0] < y[0]; });
      for (auto& pc : pieces) next_groups.push_back(std::move(pc));
    }
    groups = std::move(next_groups);
  }

  std::vector<int> order;
  order.reserve(n);
  for (auto& grp : groups) {
    if (grp.size() != 1)
      throw Error(Errc::BadSequence, "final groups are not singletons");
    order.push_back(grp[0]);
  }
  return order;
}

}  // namespace stw
