#include "doctest.h"

#include "graphzeta/digraph.hpp"

#include "test_support.hpp"

#include <algorithm>
#include <set>

using namespace graphzeta;
using gztest::demo_digraph;
using gztest::TestRng;

TEST_CASE("digraph construction and validation") {
  Digraph d = demo_digraph();
  CHECK(d.vertex_count() == 3);
  CHECK(d.arc_count() == 8);
  CHECK(d.tail(2) == 0);
  CHECK(d.head(2) == 1);
  CHECK(d.is_loop(0));
  CHECK(d.is_loop(1));
  CHECK_FALSE(d.is_loop(2));

  CHECK_THROWS_AS(Digraph(-1, {}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph(2, {{-1, 0}}), std::invalid_argument);

  Digraph empty(0, {});
  CHECK(empty.vertex_count() == 0);
  CHECK(empty.arc_count() == 0);
}

TEST_CASE("arc incidence queries") {
  Digraph d = demo_digraph();
  CHECK(d.arcs_from(0) == std::vector<int>{0, 1, 2});
  CHECK(d.arcs_from(1) == std::vector<int>{3, 4, 5});
  CHECK(d.arcs_from(2) == std::vector<int>{6, 7});
  CHECK(d.arcs_between(0, 0) == std::vector<int>{0, 1});
  CHECK(d.arcs_between(1, 2) == std::vector<int>{4, 5});
  CHECK(d.arcs_between(2, 2).empty());
}

TEST_CASE("adjacency and backtrack matrices") {
  Digraph d = demo_digraph();
  Matrix<std::int64_t> a = d.adjacency_matrix();
  // Row u counts arcs u -> v; the doubled arc v2 -> v3 gives entry 2.
  std::int64_t expected[3][3] = {{2, 1, 0}, {1, 0, 2}, {1, 1, 0}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(a(i, j) == expected[i][j]);

  Matrix<std::int64_t> b = d.backtrack_matrix();
  CHECK(b(0, 0) == 1);
  CHECK(b(1, 1) == 3);
  CHECK(b(2, 2) == 2);
  CHECK(b(0, 1) == 0);
  CHECK(b(1, 0) == 0);
  CHECK(b(2, 0) == 0);
}

TEST_CASE("inverse arc sets") {
  Digraph d = demo_digraph();
  // Loops are their own inverses, and every parallel loop at the same vertex
  // also inverts them.
  CHECK(d.inverse_set(0) == std::vector<int>{0, 1});
  CHECK(d.inverse_set(1) == std::vector<int>{0, 1});
  CHECK(d.inverse_set(2) == std::vector<int>{3});
  CHECK(d.inverse_set(3) == std::vector<int>{2});
  CHECK(d.inverse_set(4) == std::vector<int>{6});
  CHECK(d.inverse_set(5) == std::vector<int>{6});
  CHECK(d.inverse_set(6) == std::vector<int>{4, 5});
  CHECK(d.inverse_set(7).empty());

  CHECK(d.is_inverse_pair(0, 0));
  CHECK(d.is_inverse_pair(0, 1));
  CHECK(d.is_inverse_pair(2, 3));
  CHECK(d.is_inverse_pair(3, 2));
  CHECK(d.is_inverse_pair(4, 6));
  CHECK(d.is_inverse_pair(6, 5));
  CHECK_FALSE(d.is_inverse_pair(7, 2));
  CHECK_FALSE(d.is_inverse_pair(4, 5));
}

TEST_CASE("phi partition of vertex pairs") {
  Digraph d = demo_digraph();
  PhiPartition phi = phi_partition(d);
  CHECK(phi.loop_pairs == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(phi.one_way == std::vector<std::pair<int, int>>{{0, 2}});
  CHECK(phi.two_way == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  auto all = phi.all();
  CHECK(all == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("phi partition properties on random digraphs") {
  TestRng rng(201);
  for (int trial = 0; trial < 40; ++trial) {
    Digraph d = rng.digraph(5, 10);
    PhiPartition phi = phi_partition(d);
    std::set<std::pair<int, int>> seen;
    for (auto p : phi.all()) {
      CHECK(p.first <= p.second);
      CHECK(seen.insert(p).second); // no pair listed twice
    }
    for (auto [u, v] : phi.loop_pairs) {
      CHECK(u == v);
      CHECK_FALSE(d.arcs_between(u, u).empty());
    }
    for (auto [u, v] : phi.one_way) {
      CHECK(u != v);
      bool fwd = !d.arcs_between(u, v).empty();
      bool bwd = !d.arcs_between(v, u).empty();
      CHECK(fwd != bwd);
    }
    for (auto [u, v] : phi.two_way) {
      CHECK(u != v);
      CHECK_FALSE(d.arcs_between(u, v).empty());
      CHECK_FALSE(d.arcs_between(v, u).empty());
    }
    // Every unordered pair carrying an arc appears exactly once.
    int carrying = 0;
    for (int u = 0; u < d.vertex_count(); ++u)
      for (int v = u; v < d.vertex_count(); ++v)
        if (!d.arcs_between(u, v).empty() || !d.arcs_between(v, u).empty()) ++carrying;
    CHECK(static_cast<int>(seen.size()) == carrying);
  }
}

TEST_CASE("structure invariants on random digraphs") {
  TestRng rng(202);
  for (int trial = 0; trial < 40; ++trial) {
    Digraph d = rng.digraph(4, 9);
    Matrix<std::int64_t> a = d.adjacency_matrix();
    for (int u = 0; u < d.vertex_count(); ++u) {
      std::int64_t row = 0;
      for (int v = 0; v < d.vertex_count(); ++v) row += a(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
      CHECK(row == static_cast<std::int64_t>(d.arcs_from(u).size()));
    }

    // inverse_set matches is_inverse_pair, which is symmetric.
    for (int x = 0; x < d.arc_count(); ++x) {
      std::vector<int> direct;
      for (int y = 0; y < d.arc_count(); ++y)
        if (d.is_inverse_pair(x, y)) direct.push_back(y);
      CHECK(d.inverse_set(x) == direct);
      for (int y : direct) CHECK(d.is_inverse_pair(y, x));
    }

    // Backtrack diagonal counts ordered non-loop inverse pairs through u.
    Matrix<std::int64_t> b = d.backtrack_matrix();
    for (int u = 0; u < d.vertex_count(); ++u) {
      std::int64_t count = 0;
      for (int v = 0; v < d.vertex_count(); ++v) {
        if (v == u) continue;
        count += static_cast<std::int64_t>(d.arcs_between(u, v).size()) *
                 static_cast<std::int64_t>(d.arcs_between(v, u).size());
      }
      CHECK(b(static_cast<std::size_t>(u), static_cast<std::size_t>(u)) == count);
    }
  }
}

TEST_CASE("graphs normalize edges") {
  Graph g{3, {{2, 0}, {1, 1}, {0, 1}}};
  CHECK(g.edges[0] == std::pair<int, int>{0, 2});
  CHECK(g.edges[1] == std::pair<int, int>{1, 1});
  CHECK_FALSE(g.is_simple()); // the loop disqualifies it

  Graph simple{3, {{0, 1}, {1, 2}}};
  CHECK(simple.is_simple());

  Graph parallel{2, {{0, 1}, {1, 0}}};
  CHECK_FALSE(parallel.is_simple());
}

TEST_CASE("symmetric digraph of a graph") {
  // Triangle: each edge becomes an inverse pair of arcs.
  Graph triangle{3, {{0, 1}, {1, 2}, {0, 2}}};
  SymmetricDigraph sd = symmetric_digraph(triangle);
  CHECK(sd.digraph.vertex_count() == 3);
  CHECK(sd.digraph.arc_count() == 6);
  REQUIRE(sd.arcs_of_edge.size() == 3);
  for (std::size_t e = 0; e < 3; ++e) {
    REQUIRE(sd.arcs_of_edge[e].size() == 2);
    int fwd = sd.arcs_of_edge[e][0];
    int bwd = sd.arcs_of_edge[e][1];
    CHECK(sd.digraph.tail(fwd) == triangle.edges[e].first);
    CHECK(sd.digraph.head(fwd) == triangle.edges[e].second);
    CHECK(sd.digraph.tail(bwd) == triangle.edges[e].second);
    CHECK(sd.digraph.head(bwd) == triangle.edges[e].first);
    CHECK(sd.digraph.is_inverse_pair(fwd, bwd));
  }

  // A graph loop contributes a single self-inverse arc.
  Graph loop{1, {{0, 0}}};
  SymmetricDigraph sl = symmetric_digraph(loop);
  CHECK(sl.digraph.arc_count() == 1);
  CHECK(sl.digraph.is_loop(0));
  REQUIRE(sl.arcs_of_edge[0].size() == 1);
  CHECK(sl.arcs_of_edge[0][0] == 0);

  // K4 symmetrizes to 12 arcs.
  Graph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  CHECK(symmetric_digraph(k4).digraph.arc_count() == 12);
}

TEST_CASE("symmetric digraph backtrack equals degree for simple graphs") {
  Graph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  Digraph d = symmetric_digraph(k4).digraph;
  Matrix<std::int64_t> b = d.backtrack_matrix();
  for (std::size_t u = 0; u < 4; ++u) CHECK(b(u, u) == 3);

  Graph path{3, {{0, 1}, {1, 2}}};
  Digraph dp = symmetric_digraph(path).digraph;
  Matrix<std::int64_t> bp = dp.backtrack_matrix();
  CHECK(bp(0, 0) == 1);
  CHECK(bp(1, 1) == 2);
  CHECK(bp(2, 2) == 1);
}
