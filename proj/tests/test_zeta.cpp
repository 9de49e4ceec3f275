#include "doctest.h"

#include "graphzeta/zeta.hpp"

#include "test_support.hpp"

#include <algorithm>
#include <utility>
#include <vector>

using namespace graphzeta;
using gztest::demo_digraph;
using gztest::directed_cycle;
using gztest::rpoly;
using gztest::TestRng;

namespace {

Digraph single_edge() { return Digraph(2, {{0, 1}, {1, 0}}); }

UniPoly<Rational> upoly(std::vector<Rational> c) { return UniPoly<Rational>(std::move(c)); }

Matrix<Rational> graph_adjacency(const Graph& g) {
  Matrix<std::int64_t> a = symmetric_digraph(g).digraph.adjacency_matrix();
  Matrix<Rational> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = Rational(a(i, j));
  // A graph loop appears as one self-inverse arc, already a single count.
  return out;
}

} // namespace

TEST_CASE("hashimoto polynomial on small instances") {
  Digraph e = single_edge();
  CHECK(hashimoto_polynomial(e, make_ihara(e)) == rpoly({1}));

  Digraph c3 = directed_cycle(3);
  std::vector<Rational> ones(3, Rational(1));
  CHECK(hashimoto_polynomial(c3, make_bowen_lanford(c3, ones)) == rpoly({1, 0, 0, -1}));
  CHECK(hashimoto_polynomial(c3, make_ihara(c3)) == rpoly({1, 0, 0, -1}));

  // Symbolic single edge: the transfer matrix is [[0, q], [q, 0]].
  QRat q(QPoly::variable());
  UniPoly<QRat> he = hashimoto_polynomial(e, make_bartholdi(e));
  CHECK(he == UniPoly<QRat>(std::vector<QRat>{QRat(1), QRat(0), -(q * q)}));

  Digraph loop(1, {{0, 0}});
  UniPoly<QRat> hl = hashimoto_polynomial(loop, make_bartholdi(loop));
  CHECK(hl == UniPoly<QRat>(std::vector<QRat>{QRat(1), -q}));

  CHECK(hashimoto_polynomial(Digraph(0, {}), make_ihara(Digraph(0, {}))) == rpoly({1}));
  Digraph arcless(3, {});
  CHECK(hashimoto_polynomial(arcless, make_ihara(arcless)) == rpoly({1}));
}

TEST_CASE("local factors on the demo digraph") {
  Digraph d = demo_digraph();
  TestRng rng(501);
  WeightScheme<Rational> w = rng.general_scheme(d);
  auto u = [&](int a) { return w.upsilon[static_cast<std::size_t>(a)]; };

  CHECK(f_pair(d, w, 0, 0) == upoly({Rational(1), u(0) + u(1)}));
  CHECK(f_pair(d, w, 0, 1) == upoly({Rational(1), Rational(0), -(u(2) * u(3))}));
  CHECK(f_pair(d, w, 1, 2) == upoly({Rational(1), Rational(0), -((u(4) + u(5)) * u(6))}));
  CHECK(f_pair(d, w, 0, 2) == rpoly({1})); // one-way pair
  CHECK(f_pair(d, w, 1, 1) == rpoly({1})); // no loops at v2
}

TEST_CASE("ihara data on the demo digraph") {
  Digraph d = demo_digraph();
  TestRng rng(502);
  WeightScheme<Rational> w = rng.general_scheme(d);
  auto tau = [&](int a) { return w.tau[static_cast<std::size_t>(a)]; };
  auto ups = [&](int a) { return w.upsilon[static_cast<std::size_t>(a)]; };
  IharaData<Rational> data = ihara_data(d, w);

  REQUIRE(data.f_pairs.size() == 4);
  UniPoly<Rational> f00 = upoly({Rational(1), ups(0) + ups(1)});
  UniPoly<Rational> f01 = upoly({Rational(1), Rational(0), -(ups(2) * ups(3))});
  UniPoly<Rational> f12 = upoly({Rational(1), Rational(0), -((ups(4) + ups(5)) * ups(6))});
  CHECK(data.f_pairs.at({0, 0}) == f00);
  CHECK(data.f_pairs.at({0, 1}) == f01);
  CHECK(data.f_pairs.at({1, 2}) == f12);
  CHECK(data.f_pairs.at({0, 2}) == rpoly({1}));
  CHECK(data.f_delta == f00 * f01 * f12);

  CHECK(data.tau_counts(0, 0) == tau(0) + tau(1));
  CHECK(data.tau_counts(0, 1) == tau(2));
  CHECK(data.tau_counts(1, 0) == tau(3));
  CHECK(data.tau_counts(1, 2) == tau(4) + tau(5));
  CHECK(data.tau_counts(2, 1) == tau(6));
  CHECK(data.tau_counts(2, 0) == tau(7));
  CHECK(data.tau_counts(1, 1) == Rational(0));
  CHECK(data.tau_counts(0, 2) == Rational(0));

  using F = RatFunc<Rational>;
  CHECK(data.weighted_adjacency(0, 0) == F(upoly({tau(0) + tau(1)}), f00));
  CHECK(data.weighted_adjacency(0, 1) == F(upoly({tau(2)}), f01));
  CHECK(data.weighted_adjacency(1, 2) == F(upoly({tau(4) + tau(5)}), f12));
  CHECK(data.weighted_adjacency(2, 0) == F(tau(7)));
  CHECK(data.weighted_adjacency(0, 2) == F(0));

  CHECK(data.d_pairs.at({0, 1}) == tau(2) * ups(3));
  CHECK(data.d_pairs.at({1, 0}) == tau(3) * ups(2));
  CHECK(data.d_pairs.at({1, 2}) == (tau(4) + tau(5)) * ups(6));
  CHECK(data.d_pairs.at({2, 1}) == tau(6) * (ups(4) + ups(5)));

  CHECK(data.weighted_backtrack(0, 0) == F(upoly({tau(2) * ups(3)}), f01));
  CHECK(data.weighted_backtrack(1, 1) ==
        F(upoly({tau(3) * ups(2)}), f01) + F(upoly({(tau(4) + tau(5)) * ups(6)}), f12));
  CHECK(data.weighted_backtrack(2, 2) == F(upoly({tau(6) * (ups(4) + ups(5))}), f12));
  CHECK(data.weighted_backtrack(0, 1) == F(0));
  CHECK(data.weighted_backtrack(1, 2) == F(0));
}

TEST_CASE("denominators divide the local-factor product") {
  TestRng rng(503);
  for (int trial = 0; trial < 15; ++trial) {
    Digraph d = rng.digraph(4, 7);
    WeightScheme<Rational> w = rng.general_scheme(d);
    IharaData<Rational> data = ihara_data(d, w);
    auto divides = [&](const RatFunc<Rational>& f) {
      auto [q, r] = divmod(data.f_delta, f.den());
      (void)q;
      return r.is_zero();
    };
    for (std::size_t i = 0; i < data.weighted_adjacency.rows(); ++i)
      for (std::size_t j = 0; j < data.weighted_adjacency.cols(); ++j) {
        CHECK(divides(data.weighted_adjacency(i, j)));
        CHECK(divides(data.weighted_backtrack(i, j)));
      }
  }
}

TEST_CASE("main identity on the demo digraph") {
  Digraph d = demo_digraph();
  auto report = verify_main_theorem(d, make_ihara(d));
  CHECK(report.match);
  CHECK(report.scheme == "IHARA");
  CHECK(report.hashimoto == report.ihara);
  CHECK(report.hashimoto.coeff(0) == Rational(1));

  TestRng rng(504);
  for (int trial = 0; trial < 5; ++trial) {
    WeightScheme<Rational> w = rng.general_scheme(d);
    CHECK(verify_main_theorem(d, w).match);
  }
}

TEST_CASE("main identity on random digraphs") {
  TestRng rng(505);
  for (int trial = 0; trial < 25; ++trial) {
    Digraph d = rng.digraph(4, 6);
    WeightScheme<Rational> w = rng.general_scheme(d);
    auto report = verify_main_theorem(d, w);
    CHECK(report.match);
    // Degree bound and normalization.
    CHECK(report.hashimoto.degree() <= d.arc_count());
    if (d.arc_count() > 0) CHECK(report.hashimoto.coeff(0) == Rational(1));
  }
}

TEST_CASE("main identity for the symbolic deformation") {
  Digraph e = single_edge();
  auto report = verify_main_theorem(e, make_bartholdi(e));
  CHECK(report.match);
  QRat q(QPoly::variable());
  CHECK(report.hashimoto == UniPoly<QRat>(std::vector<QRat>{QRat(1), QRat(0), -(q * q)}));

  Digraph d = demo_digraph();
  auto demo_report = verify_main_theorem(d, make_bartholdi(d));
  CHECK(demo_report.match);

  // Evaluating the symbolic result matches the numerically weighted run.
  UniPoly<Rational> at_q = evaluate_q(demo_report.hashimoto, Rational(2, 3));
  CHECK(at_q == hashimoto_polynomial(d, make_bartholdi_evaluated(d, Rational(2, 3))));
}

TEST_CASE("fraction-free route agrees with field elimination") {
  TestRng rng(506);
  for (int trial = 0; trial < 10; ++trial) {
    Digraph d = rng.digraph(4, 6);
    WeightScheme<Rational> w = rng.general_scheme(d);
    CHECK(ihara_polynomial(d, w) == ihara_polynomial_fraction_free(d, w));
  }
  Digraph d = demo_digraph();
  CHECK(ihara_polynomial(d, make_ihara(d)) == ihara_polynomial_fraction_free(d, make_ihara(d)));
}

TEST_CASE("hashimoto agrees with a direct polynomial determinant") {
  TestRng rng(507);
  for (int trial = 0; trial < 8; ++trial) {
    Digraph d = rng.digraph(3, 5);
    WeightScheme<Rational> w = rng.general_scheme(d);
    Matrix<Rational> m = edge_matrix(d, w);
    const std::size_t n = m.rows();
    Matrix<UniPoly<Rational>> pencil(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        pencil(i, j) = upoly({i == j ? Rational(1) : Rational(0), -m(i, j)});
    CHECK(hashimoto_polynomial(d, w) == det_bareiss(pencil));
  }
}

TEST_CASE("arc relabeling leaves both sides unchanged") {
  Digraph d = demo_digraph();
  TestRng rng(508);
  WeightScheme<Rational> w = rng.general_scheme(d);

  std::vector<int> perm = {5, 2, 7, 0, 6, 1, 4, 3};
  std::vector<Arc> arcs;
  WeightScheme<Rational> wp;
  wp.preset = w.preset;
  for (int i = 0; i < d.arc_count(); ++i) {
    int a = perm[static_cast<std::size_t>(i)];
    arcs.push_back({d.tail(a), d.head(a)});
    wp.tau.push_back(w.tau[static_cast<std::size_t>(a)]);
    wp.upsilon.push_back(w.upsilon[static_cast<std::size_t>(a)]);
  }
  Digraph dp(d.vertex_count(), arcs);
  CHECK(hashimoto_polynomial(dp, wp) == hashimoto_polynomial(d, w));
  CHECK(ihara_polynomial(dp, wp) == ihara_polynomial(d, w));
}

TEST_CASE("incidence factorization of the transfer matrix") {
  TestRng rng(509);
  for (int trial = 0; trial < 10; ++trial) {
    Digraph d = rng.digraph(4, 7);
    WeightScheme<Rational> w = rng.general_scheme(d);
    Matrix<Rational> h = incidence_head<Rational>(d) * incidence_tail_weighted(d, w);
    CHECK(h == edge_matrix_head_tail(d, w));
    CHECK(h - edge_matrix_backtrack(d, w) == edge_matrix(d, w));
  }
}

TEST_CASE("arc block order groups by supported pair") {
  Digraph d = demo_digraph();
  CHECK(arc_block_order(d) == std::vector<int>{0, 1, 2, 3, 7, 4, 5, 6});

  TestRng rng(510);
  for (int trial = 0; trial < 10; ++trial) {
    Digraph r = rng.digraph(4, 8);
    std::vector<int> order = arc_block_order(r);
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> all;
    for (int a = 0; a < r.arc_count(); ++a) all.push_back(a);
    CHECK(sorted == all); // a permutation of the arcs
  }
}

TEST_CASE("pair blocks on the demo digraph") {
  Digraph d = demo_digraph();
  TestRng rng(511);
  WeightScheme<Rational> w = rng.general_scheme(d);
  auto tau = [&](int a) { return w.tau[static_cast<std::size_t>(a)]; };
  auto ups = [&](int a) { return w.upsilon[static_cast<std::size_t>(a)]; };

  // Pair (v2, v3): arcs 4, 5 forward and 6 backward.
  Matrix<Rational> j = pair_block_backtrack(d, w, 1, 2);
  REQUIRE(j.rows() == 3);
  CHECK(j(0, 2) == ups(6));
  CHECK(j(1, 2) == ups(6));
  CHECK(j(2, 0) == ups(4));
  CHECK(j(2, 1) == ups(5));
  CHECK(j(0, 0) == Rational(0));
  CHECK(j(0, 1) == Rational(0));
  CHECK(j(2, 2) == Rational(0));

  Matrix<Rational> k = pair_block_head<Rational>(d, 1, 2);
  REQUIRE(k.rows() == 3);
  REQUIRE(k.cols() == 3);
  CHECK(k(0, 2) == Rational(1));
  CHECK(k(1, 2) == Rational(1));
  CHECK(k(2, 1) == Rational(1));
  CHECK(k(0, 0) == Rational(0));

  Matrix<Rational> l = pair_block_tail(d, w, 1, 2);
  REQUIRE(l.rows() == 3);
  REQUIRE(l.cols() == 3);
  CHECK(l(1, 0) == tau(4));
  CHECK(l(1, 1) == tau(5));
  CHECK(l(2, 2) == tau(6)); // tau-weighted, like every other tail entry
  CHECK(l(0, 0) == Rational(0));

  // The loop pair at v1.
  Matrix<Rational> j00 = pair_block_backtrack(d, w, 0, 0);
  REQUIRE(j00.rows() == 2);
  CHECK(j00(0, 0) == ups(0));
  CHECK(j00(0, 1) == ups(1));
  CHECK(j00(1, 0) == ups(0));
  CHECK(j00(1, 1) == ups(1));

  // Per-pair products assemble the vertex-space blocks: the tau counts of the
  // pair and the diagonal backtracking weights.
  Matrix<Rational> a01 = pair_block_tail(d, w, 0, 1) * pair_block_head<Rational>(d, 0, 1);
  CHECK(a01(0, 1) == tau(2));
  CHECK(a01(1, 0) == tau(3));
  CHECK(a01(0, 0) == Rational(0));

  Matrix<Rational> d01 = pair_block_tail(d, w, 0, 1) * pair_block_backtrack(d, w, 0, 1) *
                         pair_block_head<Rational>(d, 0, 1);
  CHECK(d01(0, 0) == tau(2) * ups(3));
  CHECK(d01(1, 1) == tau(3) * ups(2));
  CHECK(d01(2, 2) == Rational(0));
  CHECK(d01(0, 1) == Rational(0));
  CHECK(d01(1, 0) == Rational(0));

  // Summed over all supported pairs the adjacency blocks give the tau counts.
  IharaData<Rational> data = ihara_data(d, w);
  Matrix<Rational> total(3, 3);
  for (const auto& [u, v] : phi_partition(d).all())
    total = total + pair_block_tail(d, w, u, v) * pair_block_head<Rational>(d, u, v);
  CHECK(total == data.tau_counts);
}

TEST_CASE("pair block assembly on random digraphs") {
  TestRng rng(512);
  for (int trial = 0; trial < 10; ++trial) {
    Digraph d = rng.digraph(4, 8);
    WeightScheme<Rational> w = rng.general_scheme(d);
    IharaData<Rational> data = ihara_data(d, w);
    const std::size_t n = static_cast<std::size_t>(d.vertex_count());
    Matrix<Rational> a_total(n, n);
    Matrix<Rational> d_total(n, n);
    for (const auto& [u, v] : phi_partition(d).all()) {
      a_total = a_total + pair_block_tail(d, w, u, v) * pair_block_head<Rational>(d, u, v);
      d_total = d_total + pair_block_tail(d, w, u, v) * pair_block_backtrack(d, w, u, v) *
                              pair_block_head<Rational>(d, u, v);
    }
    CHECK(a_total == data.tau_counts);
    // The two-way d-weights show up on the diagonal of the backtrack assembly.
    for (const auto& [uv, value] : data.d_pairs) {
      (void)value;
      const auto [u, v] = uv;
      Matrix<Rational> block = pair_block_tail(d, w, u, v) * pair_block_backtrack(d, w, u, v) *
                               pair_block_head<Rational>(d, u, v);
      CHECK(block(static_cast<std::size_t>(u), static_cast<std::size_t>(u)) ==
            data.d_pairs.at({u, v}));
    }
  }
}

TEST_CASE("uniform weights on a simple graph collapse the local factors") {
  Graph p3{3, {{0, 1}, {1, 2}}};
  Digraph d = symmetric_digraph(p3).digraph;
  auto w = make_ihara(d);
  IharaData<Rational> data = ihara_data(d, w);

  UniPoly<Rational> one_minus_t2 = rpoly({1, 0, -1});
  CHECK(data.f_delta == one_minus_t2 * one_minus_t2); // one factor per edge
  using F = RatFunc<Rational>;
  F inv(rpoly({1}), one_minus_t2);
  CHECK(data.weighted_adjacency(0, 1) == inv);
  CHECK(data.weighted_adjacency(1, 0) == inv);
  CHECK(data.weighted_adjacency(1, 2) == inv);
  CHECK(data.weighted_adjacency(0, 2) == F(0));
  CHECK(data.weighted_backtrack(0, 0) == inv);
  CHECK(data.weighted_backtrack(1, 1) == F(rpoly({2}), one_minus_t2));
  CHECK(data.weighted_backtrack(2, 2) == inv);
}

TEST_CASE("classical vertex zeta of small graphs") {
  Graph k3{3, {{0, 1}, {1, 2}, {0, 2}}};
  UniPoly<Rational> bass_k3 = bass_ihara_classical(k3);
  UniPoly<Rational> expected = rpoly({1, 0, 0, -1}) * rpoly({1, 0, 0, -1});
  CHECK(bass_k3 == expected);
  Digraph d3 = symmetric_digraph(k3).digraph;
  CHECK(hashimoto_polynomial(d3, make_ihara(d3)) == bass_k3);

  Graph p2{2, {{0, 1}}};
  CHECK(bass_ihara_classical(p2) == rpoly({1}));
  Digraph dp2 = symmetric_digraph(p2).digraph;
  CHECK(hashimoto_polynomial(dp2, make_ihara(dp2)) == rpoly({1}));

  Graph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  Digraph d4 = symmetric_digraph(k4).digraph;
  CHECK(bass_ihara_classical(k4) == hashimoto_polynomial(d4, make_ihara(d4)));
  CHECK(bass_ihara_classical(k4) == ihara_polynomial(d4, make_ihara(d4)));

  CHECK_THROWS_AS(bass_ihara_classical(Graph{1, {{0, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(bass_ihara_classical(Graph{2, {{0, 1}, {0, 1}}}), std::invalid_argument);
}

TEST_CASE("full-shift weighting reduces to the vertex determinant") {
  TestRng rng(513);
  for (int trial = 0; trial < 10; ++trial) {
    Digraph d = rng.digraph(4, 7);
    std::vector<Rational> tau;
    for (int a = 0; a < d.arc_count(); ++a) tau.push_back(rng.rational());
    auto w = make_bowen_lanford(d, tau);
    IharaData<Rational> data = ihara_data(d, w);
    CHECK(data.f_delta == rpoly({1}));
    UniPoly<Rational> viatau = det_identity_minus_t(data.tau_counts);
    CHECK(hashimoto_polynomial(d, w) == viatau);
    CHECK(ihara_polynomial(d, w) == viatau);
  }
}

TEST_CASE("full-shift closed form on graphs") {
  Graph p2{2, {{0, 1}}};
  CHECK(bowen_lanford_classical(p2) == rpoly({1, 0, -1}));

  Graph k3{3, {{0, 1}, {1, 2}, {0, 2}}};
  Graph with_loop{2, {{0, 1}, {1, 1}}};
  Graph with_parallel{2, {{0, 1}, {0, 1}, {1, 1}}};
  for (const Graph& g : {k3, with_loop, with_parallel}) {
    Digraph d = symmetric_digraph(g).digraph;
    std::vector<Rational> ones(static_cast<std::size_t>(d.arc_count()), Rational(1));
    CHECK(bowen_lanford_classical(g) == hashimoto_polynomial(d, make_bowen_lanford(d, ones)));
  }
}

TEST_CASE("weighted closed forms specialize to the classical one") {
  Graph k3{3, {{0, 1}, {1, 2}, {0, 2}}};
  Graph p3{3, {{0, 1}, {1, 2}}};
  Graph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  for (const Graph& g : {k3, p3, k4}) {
    Matrix<Rational> a = graph_adjacency(g);
    CHECK(mizuno_sato_classical(g, a) == bass_ihara_classical(g));
    CHECK(sato_classical(g, a) == bass_ihara_classical(g));
  }

  // Weights must live on the edge support and match the graph's shape.
  Matrix<Rational> stray = graph_adjacency(p3);
  stray(0, 2) = Rational(1);
  CHECK_THROWS_AS(mizuno_sato_classical(p3, stray), std::invalid_argument);
  CHECK_THROWS_AS(sato_classical(p3, stray), std::invalid_argument);
  CHECK_THROWS_AS(mizuno_sato_classical(p3, Matrix<Rational>(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(mizuno_sato_classical(Graph{1, {{0, 0}}}, Matrix<Rational>(1, 1)),
                  std::invalid_argument);
}

TEST_CASE("q-deformed closed form") {
  QRat q(QPoly::variable());

  // Single edge: 1 - q^2 t^2, matching the symbolic transfer determinant.
  Graph p2{2, {{0, 1}}};
  UniPoly<QRat> zb = bartholdi_classical(p2);
  CHECK(zb == UniPoly<QRat>(std::vector<QRat>{QRat(1), QRat(0), -(q * q)}));
  Digraph dp2 = symmetric_digraph(p2).digraph;
  CHECK(zb == hashimoto_polynomial(dp2, make_bartholdi(dp2)));

  // Single loop: 1 - q t.
  Graph loop{1, {{0, 0}}};
  CHECK(bartholdi_classical(loop) == UniPoly<QRat>(std::vector<QRat>{QRat(1), -q}));

  // Deformation parameter at zero recovers the classical form.
  Graph k3{3, {{0, 1}, {1, 2}, {0, 2}}};
  Graph p3{3, {{0, 1}, {1, 2}}};
  for (const Graph& g : {k3, p3, p2}) {
    UniPoly<Rational> at0 = evaluate_q(bartholdi_classical(g), Rational(0));
    CHECK(at0 == bass_ihara_classical(g));
  }

  // And it matches the transfer-matrix side symbolically on K3.
  Digraph d3 = symmetric_digraph(k3).digraph;
  CHECK(bartholdi_classical(k3) == hashimoto_polynomial(d3, make_bartholdi(d3)));

  CHECK_THROWS_AS(bartholdi_classical(Graph{2, {{0, 1}, {0, 1}}}), std::invalid_argument);
}
