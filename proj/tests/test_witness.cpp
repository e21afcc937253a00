#include <doctest.h>

#include "rtl/canonical.hpp"
#include "rtl/containment.hpp"
#include "rtl/graph6.hpp"
#include "rtl/witness.hpp"

using namespace rtl;

TEST_CASE("regular circulants") {
  Graph g = regular_graph(6, 3);
  for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(0, 3));  // antipode carries the odd degree

  CHECK_THROWS_AS(regular_graph(11, 5), std::invalid_argument);  // kp odd
  CHECK_THROWS_AS(regular_graph(4, 4), std::invalid_argument);   // p <= k

  Graph big = regular_graph(37, 18);
  auto d = big.degrees();
  CHECK(d.max == 18);
  CHECK(d.min == 18);
  auto dc = big.complement().degrees();
  CHECK(dc.max == 18);
  CHECK(dc.min == 18);

  for (int p = 1; p <= 16; ++p)
    for (int k = 0; k < p; ++k) {
      if ((k * p) % 2 != 0) continue;
      Graph r = regular_graph(p, k);
      CHECK(r.degrees().max == k);
      CHECK(r.degrees().min == k);
      CHECK(r.complement().degrees().max == p - 1 - k);
      CHECK(r.complement().degrees().min == p - 1 - k);
    }
}

TEST_CASE("clique unions") {
  Graph two_k8 = clique_union(2, 8);
  CHECK(two_k8.order() == 16);
  CHECK(two_k8.edge_count() == 56);
  Graph comp = two_k8.complement();
  CHECK(comp.degrees().max == 8);
  CHECK(canonical_code(comp) == canonical_code(Graph::complete_bipartite(8, 8)));

  CHECK(two_clique_union(0, 8, 6, 7).order() == 42);
  CHECK(clique_union(1, 1).order() == 1);
  CHECK(clique_union(0, 5).order() == 0);
}

TEST_CASE("the order-(2n-9) construction") {
  for (int n = 16; n <= 28; n += 2) {
    Graph g = g0_graph(n);
    CHECK(g.order() == 2 * n - 9);
    auto d = g.degrees();
    CHECK(std::count(d.sorted_desc.begin(), d.sorted_desc.end(), n - 4) == 3);
    CHECK(std::count(d.sorted_desc.begin(), d.sorted_desc.end(), n - 5) == 2 * n - 12);
    CHECK_FALSE(contains_double_star(g, n - 5, 3));
    CHECK(g.complement().degrees().max == n - 5);
  }
  CHECK_THROWS_AS(g0_graph(17), std::invalid_argument);
  CHECK_THROWS_AS(g0_graph(14), std::invalid_argument);
}

TEST_CASE("witness catalog worked examples") {
  // the divisibility case: 8 | 13-5, so two copies of K_8 settle it
  auto w = lower_witness(TreeSpec::parse("tprime:9"), TreeSpec::parse("tdp:13"), 16);
  REQUIRE(w.has_value());
  CHECK(w->construction == "clique-union");
  CHECK(w->order == 16);
  CHECK(canonical_code(w->graph) == canonical_code(clique_union(2, 8)));
  CHECK(w->red_absent);
  CHECK(w->blue_absent);

  // the balanced regular split
  w = lower_witness(TreeSpec::parse("tdp:23"), TreeSpec::parse("tdp:23"), 37);
  REQUIRE(w.has_value());
  CHECK(w->construction == "regular-split");
  auto d = w->graph.degrees();
  CHECK(d.max == 18);
  CHECK(d.min == 18);

  // the audit coloring at order 11
  w = lower_witness(TreeSpec::parse("tdp:10"), TreeSpec::parse("tdp:10"), 11);
  REQUIRE(w.has_value());
  CHECK(w->construction == "bipartite-complement");
  CHECK(canonical_code(w->graph) == canonical_code(two_clique_union(1, 9, 1, 2)));
}

TEST_CASE("witnesses re-verify at any time") {
  auto w = lower_witness(TreeSpec::parse("star:13"), TreeSpec::parse("t3:16"), 23);
  REQUIRE(w.has_value());
  CHECK(w->construction == "g0");
  CHECK_FALSE(contains_tree(w->graph, build(w->red)));
  CHECK_FALSE(contains_tree(w->graph.complement(), build(w->blue)));
}

TEST_CASE("divisible clique unions keep the complement degree below the broom") {
  for (int m = 8; m <= 12; ++m)
    for (int n = m + 4; n <= 40; ++n) {
      if ((n - 5) % (m - 1) != 0) continue;
      int k = (m + n - 6) / (m - 1);
      Graph g = clique_union(k, m - 1);
      CHECK(g.order() == m + n - 6);
      CHECK(g.complement().degrees().max == n - 5);
      CHECK(n - 5 < max_degree(TreeSpec::parse("tdp:" + std::to_string(n))));
    }
}

TEST_CASE("catalog exhaustion is reported as absence") {
  // no toy-order witness avoids a path on both sides of K_4
  CHECK_FALSE(lower_witness(TreeSpec::parse("path:2"), TreeSpec::parse("path:2"), 4).has_value());
}
