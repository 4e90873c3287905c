#include "stw/overlap.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace stw {

OverlapGraph overlap_graph(const OrderedGraph& g) {
  int m = g.edge_count();
  OverlapGraph ov;
  ov.edge_count = m;
  ov.cross_bits.assign(m, Bitset(m));
  // sweep over edges by left endpoint; g.edges is lexicographically sorted
  for (int e = 0; e < m; ++e) {
    auto [le, re] = g.edges[e];
    // partners f with L(e) < L(f): scan forward until L(f) >= R(e)
    for (int f = e + 1; f < m; ++f) {
      auto [lf, rf] = g.edges[f];
      if (lf >= re) break;
      if (lf > le && rf > re) {
        ov.crossings.emplace_back(e, f);
        ov.cross_bits[e].set(f);
        ov.cross_bits[f].set(e);
      }
    }
  }
  return ov;
}

int Rainbow::length(const OrderedGraph& g) const {
  int len = 0;
  for (int e : edge_ids) len = std::max(len, g.edges[e].second - g.edges[e].first);
  return len;
}

bool is_rainbow_over(const OrderedGraph& g, const Rainbow& r, int v) {
  for (size_t i = 0; i < r.edge_ids.size(); ++i) {
    auto [l, rr] = g.edges[r.edge_ids[i]];
    if (!(l < v && v < rr)) return false;
    if (i > 0) {
      auto [lo, ro] = g.edges[r.edge_ids[i - 1]];
      if (!(lo <= l && rr <= ro)) return false;
    }
  }
  return true;
}

std::vector<int> edges_over(const OrderedGraph& g, int v) {
  std::vector<int> out;
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.edges[e].first < v && v < g.edges[e].second) out.push_back(e);
  return out;
}

Rainbow max_rainbow_over(const OrderedGraph& g, int v) {
  std::vector<int> cand = edges_over(g, v);
  int k = static_cast<int>(cand.size());
  Rainbow best;
  if (k == 0) return best;
  std::sort(cand.begin(), cand.end(), [&](int a, int b) {
    auto [la, ra] = g.edges[a];
    auto [lb, rb] = g.edges[b];
    if (la != lb) return la < lb;
    if (ra != rb) return ra > rb;
    return a < b;
  });
  // longest chain with containment: previous contains next
  std::vector<int> len(k, 1);
  int best_len = 1;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < i; ++j) {
      auto [lj, rj] = g.edges[cand[j]];
      auto [li, ri] = g.edges[cand[i]];
      if (lj <= li && ri <= rj && len[j] + 1 > len[i]) len[i] = len[j] + 1;
    }
    best_len = std::max(best_len, len[i]);
  }
  // greedy reconstruction of the lexicographically smallest edge-id chain:
  // len_from[i] = longest chain starting at i
  std::vector<int> len_from(k, 1);
  for (int i = k - 1; i >= 0; --i)
    for (int j = i + 1; j < k; ++j) {
      auto [li, ri] = g.edges[cand[i]];
      auto [lj, rj] = g.edges[cand[j]];
      if (li <= lj && rj <= ri) len_from[i] = std::max(len_from[i], len_from[j] + 1);
    }
  int need = best_len;
  int prev = -1;  // index into cand of the last chosen edge
  while (need > 0) {
    int pick = -1;
    for (int i = 0; i < k; ++i) {
      if (len_from[i] < need) continue;
      if (prev >= 0) {
        auto [lp, rp] = g.edges[cand[prev]];
        auto [li, ri] = g.edges[cand[i]];
        if (!(lp <= li && ri <= rp) || i == prev) continue;
      }
      if (pick == -1 || cand[i] < cand[pick]) pick = i;
    }
    best.edge_ids.push_back(cand[pick]);
    prev = pick;
    --need;
  }
  return best;
}

namespace {

struct BicliqueSearch {
  const std::vector<Bitset>& cross;
  const std::vector<int>& xpool;  // candidate X edges (indices into cross)
  int s;
  long long cap;
  long long nodes = 0;
  bool capped = false;
  std::vector<int> chosen;
  std::vector<int> found_x;
  Bitset found_y;

  // cand_x: indices into xpool still choosable (position >= from);
  // common: bitset of Y-side edges crossing all chosen.
  bool grow(size_t from, const Bitset& common) {
    if (static_cast<int>(chosen.size()) == s) {
      if (common.count() >= s) {
        found_x = chosen;
        found_y = common;
        return true;
      }
      return false;
    }
    if (++nodes > cap) {
      capped = true;
      return false;
    }
    int missing = s - static_cast<int>(chosen.size());
    for (size_t i = from; i + missing <= xpool.size(); ++i) {
      Bitset next = common;
      next &= cross[xpool[i]];
      if (next.count() < s) continue;
      chosen.push_back(xpool[i]);
      if (grow(i + 1, next)) return true;
      chosen.pop_back();
      if (capped) return false;
    }
    return false;
  }
};

}  // namespace

bool verify_clean_biclique(const OrderedGraph& g, const CleanBiclique& b, int s) {
  if (static_cast<int>(b.X.size()) != s || static_cast<int>(b.Y.size()) != s) return false;
  int max_lx = -1, min_ly = g.n;
  for (int e : b.X) max_lx = std::max(max_lx, g.edges[e].first);
  for (int f : b.Y) min_ly = std::min(min_ly, g.edges[f].first);
  if (max_lx >= min_ly) return false;
  for (int e : b.X)
    for (int f : b.Y) {
      auto [le, re] = g.edges[e];
      auto [lf, rf] = g.edges[f];
      if (!(le < lf && lf < re && re < rf)) return false;
    }
  return true;
}

BicliqueResult clean_biclique_at_least(const OrderedGraph& g, int s, int edge_budget,
                                       long long node_cap) {
  if (s < 1) throw Error(Errc::OutOfRange, "biclique order must be >= 1");
  BicliqueResult res;
  int m = g.edge_count();
  if (m < 2 * s) return res;  // Absent
  OverlapGraph ov = overlap_graph(g);
  if (s == 1) {
    if (!ov.crossings.empty()) {
      auto [a, b] = ov.crossings.front();
      res.status = SearchStatus::Found;
      res.biclique.X = {a};
      res.biclique.Y = {b};
    }
    return res;
  }

  long long cap = m <= edge_budget ? std::numeric_limits<long long>::max() : node_cap;
  bool any_capped = false;

  // candidate split positions: distinct left endpoints
  std::vector<int> splits;
  for (auto [l, r] : g.edges) splits.push_back(l);
  std::sort(splits.begin(), splits.end());
  splits.erase(std::unique(splits.begin(), splits.end()), splits.end());

  for (int c : splits) {
    // X edges have L <= c, Y edges have L > c
    std::vector<int> xpool, ypool;
    for (int e = 0; e < m; ++e) (g.edges[e].first <= c ? xpool : ypool).push_back(e);
    if (static_cast<int>(xpool.size()) < s || static_cast<int>(ypool.size()) < s) continue;
    Bitset ymask(m);
    for (int f : ypool) ymask.set(f);

    // iterated (s,s)-core reduction on crossing degrees across the split
    bool changed = true;
    Bitset xmask(m);
    for (int e : xpool) xmask.set(e);
    while (changed) {
      changed = false;
      for (int e = xmask.next(0); e != -1; e = xmask.next(e + 1))
        if (ov.cross_bits[e].and_count(ymask) < s) {
          xmask.reset(e);
          changed = true;
        }
      for (int f = ymask.next(0); f != -1; f = ymask.next(f + 1))
        if (ov.cross_bits[f].and_count(xmask) < s) {
          ymask.reset(f);
          changed = true;
        }
    }
    if (xmask.count() < s || ymask.count() < s) continue;
    std::vector<int> xcand;
    for (int e = xmask.next(0); e != -1; e = xmask.next(e + 1)) xcand.push_back(e);

    std::vector<Bitset> masked_cross(m);
    for (int e : xcand) {
      masked_cross[e] = ov.cross_bits[e];
      masked_cross[e] &= ymask;
    }
    BicliqueSearch search{masked_cross, xcand, s, cap, 0, false, {}, {}, {}};
    Bitset all_y = ymask;
    if (search.grow(0, all_y)) {
      res.status = SearchStatus::Found;
      res.biclique.X = search.found_x;
      for (int f = search.found_y.next(0);
           f != -1 && static_cast<int>(res.biclique.Y.size()) < s;
           f = search.found_y.next(f + 1))
        res.biclique.Y.push_back(f);
      res.nodes += search.nodes;
      if (!verify_clean_biclique(g, res.biclique, s))
        throw Error(Errc::BadSequence, "internal: biclique fails verification");
      return res;
    }
    res.nodes += search.nodes;
    any_capped = any_capped || search.capped;
  }
  if (any_capped) {
    res.status = SearchStatus::Unresolved;
    res.exact = false;
  }
  return res;
}

KttCertificate ktt_upper_check(const OrderedGraph& g, int t, int edge_budget,
                               long long node_cap) {
  if (t < 1) throw Error(Errc::OutOfRange, "t must be >= 1");
  KttCertificate cert;
  cert.s = (t + 1) / 2;
  cert.implied_t = 2 * cert.s;
  BicliqueResult r = clean_biclique_at_least(g, cert.s, edge_budget, node_cap);
  cert.status = r.status;
  if (r.status == SearchStatus::Found) cert.obstruction = r.biclique;
  return cert;
}

}  // namespace stw
