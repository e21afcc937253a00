#include <doctest.h>

#include <set>
#include <unordered_set>

#include "rtl/canonical.hpp"
#include "rtl/graph.hpp"
#include "rtl/graph6.hpp"
#include "rtl/oracle.hpp"
#include "rtl/witness.hpp"
#include "test_util.hpp"

using namespace rtl;
using rtltest::Lcg;

TEST_CASE("complement basics") {
  CHECK(Graph::complete(3).complement() == Graph::empty_graph(3));
  Graph one(1);
  CHECK(one.complement() == one);

  // complement of 2K_8 is K_{8,8}: check edge-by-edge against the definition
  Graph c = clique_union(2, 8).complement();
  for (int u = 0; u < 16; ++u)
    for (int v = u + 1; v < 16; ++v)
      CHECK(c.has_edge(u, v) == ((u < 8) != (v < 8)));
}

TEST_CASE("complement is an involution and splits the edge total") {
  Lcg rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    int n = 1 + rng.below(12);
    Graph g = rtltest::random_graph(n, rng);
    CHECK(g.complement().complement() == g);
    CHECK(g.edge_count() + g.complement().edge_count() == static_cast<long long>(n) * (n - 1) / 2);
  }
}

TEST_CASE("disjoint_union") {
  Graph parts1[] = {Graph::complete(3), Graph::complete(3)};
  Graph u1 = Graph::disjoint_union(parts1);
  CHECK(u1.order() == 6);
  CHECK(u1.edge_count() == 6);
  CHECK(u1.component_sizes() == std::vector<int>{3, 3});

  CHECK(Graph::disjoint_union({}).order() == 0);

  Graph parts2[] = {Graph::complete(9), Graph::complete(2)};
  Graph u2 = Graph::disjoint_union(parts2);
  CHECK(u2.order() == 11);
  CHECK(u2.edge_count() == 37);
}

TEST_CASE("degrees") {
  auto d4 = Graph::complete(4).degrees();
  CHECK(d4.sorted_desc == std::vector<int>{3, 3, 3, 3});
  CHECK(d4.max == 3);
  CHECK(d4.min == 3);

  Graph star(5);
  for (int i = 1; i < 5; ++i) star.add_edge(0, i);
  auto ds = star.degrees();
  CHECK(ds.sorted_desc == std::vector<int>{4, 1, 1, 1, 1});
  CHECK(ds.max == 4);
  CHECK(ds.min == 1);

  CHECK_THROWS_AS(Graph(0).degrees(), std::domain_error);

  // the order-39 lower-bound graph at n=24: three vertices of degree 20,
  // thirty-six of degree 19
  auto g0 = g0_graph(24);
  auto dg = g0.degrees();
  CHECK(std::count(dg.sorted_desc.begin(), dg.sorted_desc.end(), 20) == 3);
  CHECK(std::count(dg.sorted_desc.begin(), dg.sorted_desc.end(), 19) == 36);
}

TEST_CASE("neighborhoods at distance 1 and 2") {
  Graph path = Graph::path(3);
  CHECK(path.neighborhood2(0).members() == std::vector<int>{2});

  Graph k4 = Graph::complete(4);
  for (int v = 0; v < 4; ++v) CHECK(k4.neighborhood2(v).empty());

  Graph c5 = Graph::cycle(5);
  for (int v = 0; v < 5; ++v) CHECK(c5.neighborhood2(v).size() == 2);

  CHECK_THROWS_AS(path.neighborhood(7), std::out_of_range);
}

TEST_CASE("cross_edges") {
  Graph k33 = Graph::complete_bipartite(3, 3);
  VertexSet a = VertexSet::of(6, {0, 1, 2}), b = VertexSet::of(6, {3, 4, 5});
  CHECK(k33.cross_edges(a, b) == 9);
  CHECK(k33.cross_edges(a, VertexSet(6)) == 0);

  Graph two_k3 = clique_union(2, 3);
  CHECK(two_k3.cross_edges(VertexSet::of(6, {0, 1, 2}), VertexSet::of(6, {3, 4, 5})) == 0);

  CHECK_THROWS_AS(k33.cross_edges(a, VertexSet::of(6, {2, 3})), std::invalid_argument);
}

TEST_CASE("induced and delete") {
  Graph k5 = Graph::complete(5);
  CHECK(k5.induced(VertexSet::of(5, {0, 2, 4})) == Graph::complete(3));

  Lcg rng(3);
  Graph g = rtltest::random_graph(7, rng);
  CHECK(g.delete_vertices(VertexSet(7)) == g);

  Graph k92 = Graph::complete_bipartite(9, 2);
  CHECK(k92.induced(VertexSet::of(11, {9, 10})) == Graph::empty_graph(2));
}

TEST_CASE("canonical_code is invariant under relabeling and separates classes") {
  Graph p3 = Graph::path(3);
  CHECK(canonical_code(p3) == canonical_code(rtltest::permute(p3, {1, 0, 2})));
  CHECK(canonical_code(Graph::complete(3)) != canonical_code(p3));

  // all 4-vertex graphs fall into 11 classes; the reference count comes from
  // brute-force isomorphism over all labeled graphs
  std::vector<Graph> labeled;
  for (int mask = 0; mask < 64; ++mask) {
    Graph g(4);
    int bit = 0;
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v, ++bit)
        if (mask & (1 << bit)) g.add_edge(u, v);
    labeled.push_back(g);
  }
  std::vector<Graph> reps;
  for (const auto& g : labeled) {
    bool fresh = true;
    for (const auto& r : reps)
      if (rtltest::brute_isomorphic(g, r)) fresh = false;
    if (fresh) reps.push_back(g);
  }
  CHECK(reps.size() == 11);
  std::set<std::string> codes;
  for (const auto& g : labeled) codes.insert(canonical_code(g));
  CHECK(codes.size() == 11);

  // random relabelings collapse to one class
  Lcg rng(11);
  for (int iter = 0; iter < 20; ++iter) {
    Graph g = rtltest::random_graph(8, rng);
    std::vector<int> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 7; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    CHECK(canonical_code(g) == canonical_code(rtltest::permute(g, perm)));
  }
}

TEST_CASE("canonical_code at order 6 gives 156 classes") {
  const auto& all = enum_graphs(6);
  std::set<std::string> codes;
  for (const auto& g : all) codes.insert(canonical_code(g));
  CHECK(all.size() == 156);
  CHECK(codes.size() == 156);
}

TEST_CASE("graph6 encoding") {
  CHECK(encode_graph6(Graph::complete(3)) == "Bw");
  CHECK(encode_graph6(Graph(0)) == "?");
  CHECK(decode_graph6("Bw") == Graph::complete(3));

  for (int p = 1; p <= 8; ++p) {
    long long failures = 0;
    for (const auto& g : enum_graphs(p))
      if (!(decode_graph6(encode_graph6(g)) == g)) ++failures;
    CHECK(failures == 0);
  }

  // a long-form order survives the round trip
  Graph big(70);
  big.add_edge(0, 69);
  CHECK(decode_graph6(encode_graph6(big)) == big);
}

TEST_CASE("graph6 decode errors carry byte offsets") {
  CHECK_THROWS_AS(decode_graph6(""), Graph6Error);
  try {
    decode_graph6("F");  // order 7 with no bit body
    FAIL("expected Graph6Error");
  } catch (const Graph6Error& e) {
    CHECK(e.byte_offset == 1);
  }
  try {
    decode_graph6("Bw ");  // trailing byte
    FAIL("expected Graph6Error");
  } catch (const Graph6Error& e) {
    CHECK(e.byte_offset == 2);
  }
  try {
    decode_graph6("B\x1f");  // byte below the graph6 alphabet
    FAIL("expected Graph6Error");
  } catch (const Graph6Error& e) {
    CHECK(e.byte_offset == 1);
  }
}

TEST_CASE("dot export mentions every edge") {
  Graph g = Graph::path(3);
  auto dot = g.to_dot();
  CHECK(dot.find("0 -- 1") != std::string::npos);
  CHECK(dot.find("1 -- 2") != std::string::npos);
}
