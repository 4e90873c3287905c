#include <doctest.h>

#include <functional>
#include <numeric>

#include "stw/generators.hpp"
#include "stw/matrix.hpp"
#include "stw/overlap.hpp"
#include "stw/stretch.hpp"
#include "support/oracles.hpp"

using namespace stw;

namespace {

// the ordered graph of the overlap-graph figure: 7 vertices, 6 edges,
// exactly 7 crossing pairs and edge (4,5) isolated
OrderedGraph figure_graph() {
  return build_ordered_graph(7, {{0, 3}, {0, 4}, {1, 4}, {2, 5}, {3, 6}, {4, 5}});
}

OrderedGraph nested_matching() {
  return build_ordered_graph(6, {{0, 5}, {1, 4}, {2, 3}});
}

}  // namespace

TEST_CASE("overlap graph of the figure instance") {
  OrderedGraph g = figure_graph();
  OverlapGraph ov = overlap_graph(g);
  CHECK(ov.crossings.size() == 7);
  int e45 = -1;
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.edges[e] == std::pair<int, int>{4, 5}) e45 = e;
  REQUIRE(e45 >= 0);
  CHECK(ov.crossing_degree(e45) == 0);
}

TEST_CASE("stars and nested matchings have no crossings") {
  OrderedGraph star = build_ordered_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(overlap_graph(star).crossings.empty());
  CHECK(overlap_graph(nested_matching()).crossings.empty());
}

TEST_CASE("crossing relation is symmetric, loop-free, endpoint-disjoint") {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    OrderedGraph g = test::erdos_renyi(6 + static_cast<int>(seed % 7), 0.35, seed * 5 + 2);
    OverlapGraph ov = overlap_graph(g);
    for (auto [a, b] : ov.crossings) {
      CHECK(a < b);
      auto [la, ra] = g.edges[a];
      auto [lb, rb] = g.edges[b];
      CHECK(la != lb);
      CHECK(ra != rb);
      CHECK(la != rb);
      CHECK(ra != lb);
      bool ab = la < lb && lb < ra && ra < rb;
      bool ba = lb < la && la < rb && rb < ra;
      CHECK((ab || ba));
      CHECK(ov.cross_bits[a].test(b));
      CHECK(ov.cross_bits[b].test(a));
    }
    // brute-force count agrees
    int count = 0;
    for (int a = 0; a < g.edge_count(); ++a)
      for (int b = a + 1; b < g.edge_count(); ++b) {
        auto [la, ra] = g.edges[a];
        auto [lb, rb] = g.edges[b];
        if ((la < lb && lb < ra && ra < rb) || (lb < la && la < rb && rb < ra)) ++count;
      }
    CHECK(count == static_cast<int>(ov.crossings.size()));
  }
}

TEST_CASE("maximum rainbow over a vertex") {
  OrderedGraph nm = nested_matching();
  Rainbow r = max_rainbow_over(nm, 2);
  // v=2 is the left endpoint of (2,3), so only two edges are over it
  CHECK(r.order() == 2);
  r = max_rainbow_over(nm, 3);
  CHECK(r.order() == 2);

  // a position under all three nested edges
  OrderedGraph nm7 = build_ordered_graph(7, {{0, 6}, {1, 5}, {2, 4}});
  Rainbow full = max_rainbow_over(nm7, 3);
  CHECK(full.order() == 3);
  CHECK(is_rainbow_over(nm7, full, 3));

  // two crossing edges are incomparable
  OrderedGraph crossing = build_ordered_graph(5, {{0, 3}, {1, 4}});
  CHECK(max_rainbow_over(crossing, 2).order() == 1);

  CHECK(max_rainbow_over(build_ordered_graph(4, {}), 2).order() == 0);
}

TEST_CASE("rainbows are independent sets of the overlap graph") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    OrderedGraph g = test::erdos_renyi(6 + static_cast<int>(seed % 8), 0.4, seed * 11 + 3);
    OverlapGraph ov = overlap_graph(g);
    for (int v = 0; v < g.n; ++v) {
      Rainbow r = max_rainbow_over(g, v);
      CHECK(is_rainbow_over(g, r, v));
      for (size_t i = 0; i < r.edge_ids.size(); ++i)
        for (size_t j = i + 1; j < r.edge_ids.size(); ++j)
          CHECK_FALSE(ov.cross_bits[r.edge_ids[i]].test(r.edge_ids[j]));
    }
  }
}

TEST_CASE("poly-Ramsey property: edges over v bounded by t times the rainbow order") {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    OrderedGraph g = test::erdos_renyi(8 + static_cast<int>(seed % 5), 0.35, seed * 7 + 1);
    int clique = test::overlap_clique_number(g);
    int t = clique + 1;  // the overlap graph has no clique on t vertices
    for (int v = 0; v < g.n; ++v) {
      int over = static_cast<int>(edges_over(g, v).size());
      int rb = max_rainbow_over(g, v).order();
      CHECK(over <= t * std::max(rb, over ? 1 : 0));
    }
  }
}

TEST_CASE("clean biclique search on the bad-order construction") {
  // a_i b_i crosses b_j c_j exactly when j > i
  OrderedGraph bad4 = gen_hk_bad_order(4);
  BicliqueResult r = clean_biclique_at_least(bad4, 2);
  REQUIRE(r.status == SearchStatus::Found);
  CHECK(verify_clean_biclique(bad4, r.biclique, 2));

  OrderedGraph bad2 = gen_hk_bad_order(2);
  CHECK(clean_biclique_at_least(bad2, 1).status == SearchStatus::Found);

  OrderedGraph bad8 = gen_hk_bad_order(8);
  BicliqueResult r4 = clean_biclique_at_least(bad8, 4);
  REQUIRE(r4.status == SearchStatus::Found);
  CHECK(verify_clean_biclique(bad8, r4.biclique, 4));
}

TEST_CASE("clean biclique absent on crossing-free instances") {
  CHECK(clean_biclique_at_least(nested_matching(), 1).status == SearchStatus::Absent);
  OrderedGraph fig = figure_graph();
  // decide s=2 by brute force over the 6 edges: X={(0,4),(1,4)}? edges share
  // endpoint 4 but sharing an endpoint only matters for crossings
  BicliqueResult r = clean_biclique_at_least(fig, 2);
  // verify against an exhaustive check
  bool exists = false;
  int m = fig.edge_count();
  OverlapGraph ov = overlap_graph(fig);
  for (int x1 = 0; x1 < m; ++x1)
    for (int x2 = x1 + 1; x2 < m; ++x2)
      for (int y1 = 0; y1 < m; ++y1)
        for (int y2 = y1 + 1; y2 < m; ++y2) {
          if (x1 == y1 || x1 == y2 || x2 == y1 || x2 == y2) continue;
          int maxlx = std::max(fig.edges[x1].first, fig.edges[x2].first);
          int minly = std::min(fig.edges[y1].first, fig.edges[y2].first);
          if (maxlx >= minly) continue;
          if (ov.cross_bits[x1].test(y1) && ov.cross_bits[x1].test(y2) &&
              ov.cross_bits[x2].test(y1) && ov.cross_bits[x2].test(y2))
            exists = true;
        }
  CHECK((r.status == SearchStatus::Found) == exists);
}

TEST_CASE("clean biclique search matches subset enumeration on random graphs") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    OrderedGraph g = test::erdos_renyi(8, 0.5, seed * 23 + 5);
    int m = g.edge_count();
    if (m > 12) continue;
    OverlapGraph ov = overlap_graph(g);
    for (int s = 1; s <= 3; ++s) {
      // enumeration over all X/Y edge subsets of size s
      bool exists = false;
      std::vector<int> ids(m);
      std::iota(ids.begin(), ids.end(), 0);
      std::vector<int> xs, ys;
      std::function<void(int, int)> pick_y = [&](int from, int left) {
        if (exists) return;
        if (left == 0) {
          int max_lx = -1, min_ly = g.n;
          for (int e : xs) max_lx = std::max(max_lx, g.edges[e].first);
          for (int f : ys) min_ly = std::min(min_ly, g.edges[f].first);
          if (max_lx >= min_ly) return;
          for (int e : xs)
            for (int f : ys)
              if (!ov.cross_bits[e].test(f)) return;
          exists = true;
          return;
        }
        for (int i = from; i < m; ++i) {
          if (std::find(xs.begin(), xs.end(), i) != xs.end()) continue;
          ys.push_back(i);
          pick_y(i + 1, left - 1);
          ys.pop_back();
        }
      };
      std::function<void(int, int)> pick_x = [&](int from, int left) {
        if (exists) return;
        if (left == 0) {
          pick_y(0, s);
          return;
        }
        for (int i = from; i < m; ++i) {
          xs.push_back(i);
          pick_x(i + 1, left - 1);
          xs.pop_back();
        }
      };
      pick_x(0, s);
      BicliqueResult r = clean_biclique_at_least(g, s);
      CHECK((r.status == SearchStatus::Found) == exists);
      if (r.status == SearchStatus::Found) CHECK(verify_clean_biclique(g, r.biclique, s));
    }
  }
}

TEST_CASE("ktt_upper_check certificates") {
  CHECK(ktt_upper_check(nested_matching(), 1).status == SearchStatus::Absent);
  CHECK(ktt_upper_check(nested_matching(), 2).implied_t == 2);

  OrderedGraph bad4 = gen_hk_bad_order(4);
  CHECK(ktt_upper_check(bad4, 4).status == SearchStatus::Found);

  // iterated subdivision of a cubic graph: certificate at s = d+1 = 4
  OrderedGraph k4 = build_ordered_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  SubdivisionResult sub = iterated_subdivision(k4, k4.edges);
  KttCertificate cert = ktt_upper_check(sub.graph, 8);
  CHECK(cert.s == 4);
  CHECK(cert.status == SearchStatus::Absent);
  CHECK(cert.implied_t == 8);
}

TEST_CASE("ktt certificate implies approx success at the implied k") {
  // a K_{N,N}-freeness certificate caps stw at 32(2N+1)^3, so the
  // approximation must not refuse at that k
  std::vector<OrderedGraph> instances = {nested_matching(), gen_flattened_grid(2).graph};
  for (const OrderedGraph& g : instances) {
    KttCertificate cert = ktt_upper_check(g, 6);
    if (cert.status != SearchStatus::Absent) continue;
    int n_free = cert.implied_t;
    long long k = 32ll * (2 * n_free + 1) * (2 * n_free + 1) * (2 * n_free + 1);
    ApproxOutcome out = approx_stw(adjacency_matrix(g), static_cast<int>(k));
    CHECK(out.success);
  }
}

TEST_CASE("bounded degree + verified stretch implies no large clean biclique") {
  // s = 2 t d^2 with t the verified witness stretch
  auto hk = gen_hk(3);
  int t = verify_sequence(hk.graph, *hk.witness).max_stretch;
  int d = hk.graph.max_degree();
  int s = 2 * t * d * d;
  CHECK(clean_biclique_at_least(hk.graph, s).status == SearchStatus::Absent);

  auto a32 = gen_abh(3, 2);
  int t2 = verify_sequence(a32.graph, *a32.witness).max_stretch;
  int d2 = a32.graph.max_degree();
  CHECK(clean_biclique_at_least(a32.graph, 2 * std::max(1, t2) * d2 * d2).status ==
        SearchStatus::Absent);
}
