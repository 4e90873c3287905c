#include <doctest.h>

#include <cmath>

#include "stw/generators.hpp"
#include "stw/overlap.hpp"
#include "stw/stretch.hpp"
#include "support/oracles.hpp"

using namespace stw;

TEST_CASE("gen_hk shapes and witnesses") {
  auto h1 = gen_hk(1);
  CHECK(h1.graph.n == 5);
  CHECK(h1.graph.edge_count() == 4);
  CHECK(verify_sequence(h1.graph, *h1.witness).max_stretch <= 6);

  auto h5 = gen_hk(5);
  CHECK(h5.graph.n == 17);
  CHECK(h5.graph.edge_count() == 20);
  CHECK(verify_sequence(h5.graph, *h5.witness).max_stretch <= 6);

  auto h10 = gen_hk(10);
  CHECK(verify_sequence(h10.graph, *h10.witness).max_stretch <= 6);
}

TEST_CASE("gen_abh: A(3,2) edge set and witness") {
  auto inst = gen_abh(3, 2);
  CHECK(inst.graph.n == 9);
  std::vector<std::pair<int, int>> expect = {{0, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}, {5, 8}};
  CHECK(inst.graph.edges == expect);
  CHECK(verify_sequence(inst.graph, *inst.witness).max_stretch <= 9);
}

TEST_CASE("gen_abh: A(2,5) shape and A(3,h) witnesses") {
  auto a25 = gen_abh(2, 5);
  CHECK(a25.graph.n == 32);
  CHECK_FALSE(a25.witness.has_value());

  for (int h = 1; h <= 3; ++h) {
    auto inst = gen_abh(3, h);
    CHECK(verify_sequence(inst.graph, *inst.witness).max_stretch <= 9);
  }
}

TEST_CASE("gen_abh degree law") {
  for (int h = 2; h <= 5; ++h) {
    auto inst = gen_abh(3, h);
    int lo = (static_cast<int>(std::pow(3, h - 1)) - 1) / 2;
    int hi = static_cast<int>(std::pow(3, h - 1)) - 1;
    for (int v = 0; v < inst.graph.n; ++v) {
      CHECK(inst.graph.degree(v) >= lo);
      CHECK(inst.graph.degree(v) <= hi);
    }
  }
}

TEST_CASE("gen_grid shapes") {
  CHECK(gen_grid(2).graph.edge_count() == 4);  // C4
  auto g4 = gen_grid(4);
  CHECK(g4.graph.n == 16);
  CHECK(g4.graph.edge_count() == 24);
  auto g3 = gen_grid(3);
  CHECK(g3.graph.n == 9);
  CHECK(g3.graph.edge_count() == 12);
}

TEST_CASE("flatten_edge geometry") {
  // u < z < v with edge uv: 5 vertices, w1 before z, w2 after z
  OrderedGraph g = build_ordered_graph(3, {{0, 2}});
  SubdivisionResult r = flatten_edge(g, {0, 2});
  CHECK(r.graph.n == 5);
  CHECK(r.vertex_map[1] == 2);  // old middle vertex lands between w1 and w2
  std::vector<std::pair<int, int>> expect = {{0, 1}, {1, 3}, {3, 4}};
  CHECK(r.graph.edges == expect);

  OrderedGraph k2 = build_ordered_graph(2, {{0, 1}});
  SubdivisionResult p = flatten_edge(k2, {0, 1});
  CHECK(p.graph.n == 3);
  CHECK(p.graph.edge_count() == 2);

  CHECK_THROWS_AS(flatten_edge(g, {0, 1}), Error);
}

TEST_CASE("iterated subdivision: shapes and vertex bound") {
  OrderedGraph single = build_ordered_graph(2, {{0, 1}});
  SubdivisionResult r = iterated_subdivision(single, single.edges);
  CHECK(r.graph.n == 3);

  for (uint64_t seed = 0; seed < 10; ++seed) {
    OrderedGraph g = random_bounded_degree(6, 3, seed);
    if (g.edge_count() == 0) continue;
    SubdivisionResult s = iterated_subdivision(g, g.edges);
    long long bound = g.n * (1ll << g.edge_count());
    CHECK(s.graph.n <= bound);
    CHECK(s.graph.max_degree() <= std::max(g.max_degree(), 2));
  }

  OrderedGraph p3 = build_ordered_graph(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(iterated_subdivision(p3, {{0, 1}}), Error);
}

TEST_CASE("iterated subdivision: the three-edge example grows 5 -> 7 -> 10 -> 19") {
  OrderedGraph g = build_ordered_graph(5, {{0, 2}, {0, 4}, {1, 3}});
  SubdivisionResult s1 = flatten_edge(g, {0, 2});
  CHECK(s1.graph.n == 7);
  std::vector<std::pair<int, int>> panel2 = {{0, 1}, {0, 6}, {1, 3}, {2, 5}, {3, 4}};
  CHECK(s1.graph.edges == panel2);
  SubdivisionResult s2 = flatten_edge(s1.graph, {2, 5});
  CHECK(s2.graph.n == 10);
  SubdivisionResult full =
      iterated_subdivision(g, {{0, 2}, {1, 3}, {0, 4}});
  CHECK(full.graph.n == 19);
}

TEST_CASE("subdivide_simple preserves the crossing count") {
  OrderedGraph k2 = build_ordered_graph(2, {{0, 1}});
  SubdivisionResult r = subdivide_simple(k2, {0, 1});
  CHECK(r.graph.n == 3);
  CHECK(overlap_graph(r.graph).crossings.empty());

  OrderedGraph fig = build_ordered_graph(7, {{0, 3}, {0, 4}, {1, 4}, {2, 5}, {3, 6}, {4, 5}});
  size_t before = overlap_graph(fig).crossings.size();
  SubdivisionResult s = subdivide_simple(fig, {0, 3});
  CHECK(overlap_graph(s.graph).crossings.size() == before);

  // invariance holds whenever the left endpoint sees nothing inside the
  // span, which is how the padding pipeline always applies it
  for (uint64_t seed = 0; seed < 40; ++seed) {
    OrderedGraph g = test::erdos_renyi(8, 0.4, seed * 3 + 11);
    size_t cnt = overlap_graph(g).crossings.size();
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edges[e];
      bool safe = true;
      for (int w : g.adj[u])
        if (u < w && w < v) safe = false;
      if (!safe) continue;
      SubdivisionResult t = subdivide_simple(g, g.edges[e]);
      CHECK(overlap_graph(t.graph).crossings.size() == cnt);
    }
  }
}

TEST_CASE("pad_subdivision reaches the target without changing crossings") {
  OrderedGraph p3 = build_ordered_graph(3, {{0, 1}, {1, 2}});
  SubdivisionResult base = iterated_subdivision(p3, p3.edges);
  size_t crossings = overlap_graph(base.graph).crossings.size();
  long long target = static_cast<long long>(p3.n) << p3.edge_count();  // n * 2^m
  SubdivisionResult padded = pad_subdivision(base, p3.edge_count(), target);
  CHECK(overlap_graph(padded.graph).crossings.size() == crossings);
  std::vector<long long> cnt(p3.edge_count(), 0);
  for (int e = 0; e < padded.graph.edge_count(); ++e)
    if (padded.stem[e] >= 0) ++cnt[padded.stem[e]];
  for (long long c : cnt) CHECK(c - 1 >= target);
}

TEST_CASE("flattened grids stay bounded degree and biclique-free") {
  SubdivisionResult g2 = gen_flattened_grid(2);
  CHECK(ktt_upper_check(g2.graph, 2 * 3).status == SearchStatus::Absent);

  SubdivisionResult g3 = gen_flattened_grid(3);
  CHECK(g3.graph.max_degree() <= 4);

  SubdivisionResult g4 = gen_flattened_grid(4);
  CHECK(g4.graph.max_degree() <= 4);
  CHECK(clean_biclique_at_least(g4.graph, 5).status == SearchStatus::Absent);
}

TEST_CASE("random_bounded_degree is deterministic and degree-capped") {
  OrderedGraph a = random_bounded_degree(10, 3, 42);
  OrderedGraph b = random_bounded_degree(10, 3, 42);
  CHECK(a.edges == b.edges);
  CHECK(a.max_degree() <= 3);

  OrderedGraph m = random_bounded_degree(4, 1, 7);
  CHECK(m.max_degree() <= 1);

  OrderedGraph paths = random_bounded_degree(6, 2, 7);
  CHECK(paths.max_degree() <= 2);
}

TEST_CASE("flattening tags record stems") {
  OrderedGraph g = build_ordered_graph(4, {{0, 2}, {1, 3}});
  SubdivisionResult r = iterated_subdivision(g, g.edges);
  for (int e = 0; e < r.graph.edge_count(); ++e) {
    CHECK(r.stem[e] >= 0);
    CHECK(r.stem[e] < g.edge_count());
  }
}
