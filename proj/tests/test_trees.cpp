#include <doctest.h>

#include "rtl/tree_families.hpp"
#include "test_util.hpp"

using namespace rtl;

TEST_CASE("build follows the defining edge lists") {
  auto g = build(TreeSpec::parse("tdp:10"));
  CHECK(g.degrees().sorted_desc == std::vector<int>{6, 3, 2, 1, 1, 1, 1, 1, 1, 1});

  CHECK(tree_isomorphic(build(TreeSpec::parse("dstar:3,1")), build(TreeSpec::parse("tprime:6"))));
  CHECK(tree_isomorphic(build(TreeSpec::parse("t3:11")), build(TreeSpec::parse("dstar:6,3"))));
}

TEST_CASE("every family builds a tree and max_degree matches") {
  std::vector<std::pair<const char*, int>> fams = {
      {"path", 1}, {"star", 3}, {"tprime", 4}, {"tstar", 5}, {"t1", 5},
      {"t2", 5},   {"t3", 6},   {"tdp", 6},    {"ttp", 6},
  };
  for (auto [fam, min_n] : fams)
    for (int n = min_n; n <= 40; ++n) {
      TreeSpec spec = TreeSpec::parse(std::string(fam) + ":" + std::to_string(n));
      Graph g = build(spec);
      CHECK(g.order() == n);
      CHECK(g.is_tree());
      CHECK(max_degree(spec) == g.degrees().max);
    }
  for (int n1 = 1; n1 <= 12; ++n1)
    for (int n2 = 1; n2 <= n1; ++n2) {
      TreeSpec spec = TreeSpec::double_star(n1, n2);
      Graph g = build(spec);
      CHECK(g.is_tree());
      CHECK(max_degree(spec) == g.degrees().max);
      CHECK(max_degree(spec) == n1 + 1);
    }
}

TEST_CASE("stated maximum degrees on the catalog domains") {
  CHECK(max_degree(TreeSpec::parse("tstar:9")) == 6);
  CHECK(max_degree(TreeSpec::parse("star:4")) == 3);
  CHECK(max_degree(TreeSpec::parse("dstar:5,2")) == 6);
  for (int n = 8; n <= 30; ++n) {
    CHECK(max_degree(TreeSpec::parse("t3:" + std::to_string(n))) == n - 4);
    CHECK(max_degree(TreeSpec::parse("tdp:" + std::to_string(n))) == n - 4);
    CHECK(max_degree(TreeSpec::parse("ttp:" + std::to_string(n))) == n - 4);
    CHECK(max_degree(TreeSpec::parse("t1:" + std::to_string(n))) == n - 3);
    CHECK(max_degree(TreeSpec::parse("t2:" + std::to_string(n))) == n - 3);
    CHECK(max_degree(TreeSpec::parse("tstar:" + std::to_string(n))) == n - 3);
  }
}

TEST_CASE("double-star identities hold at every order") {
  for (int n = 4; n <= 40; ++n)
    CHECK(tree_isomorphic(build(TreeSpec::parse("tprime:" + std::to_string(n))),
                          build(TreeSpec::double_star(n - 3, 1))));
  for (int n = 6; n <= 40; ++n)
    CHECK(tree_isomorphic(build(TreeSpec::parse("t2:" + std::to_string(n))),
                          build(TreeSpec::double_star(n - 4, 2))));
  for (int n = 8; n <= 40; ++n)
    CHECK(tree_isomorphic(build(TreeSpec::parse("t3:" + std::to_string(n))),
                          build(TreeSpec::double_star(n - 5, 3))));
}

TEST_CASE("alpha2") {
  CHECK(alpha2(build(TreeSpec::parse("path:4"))) == 2);
  CHECK(alpha2(build(TreeSpec::parse("star:5"))) == 4);
  CHECK(alpha2(build(TreeSpec::double_star(3, 2))) == 4);
  for (int n = 8; n <= 20; ++n) {
    CHECK(alpha2(build(TreeSpec::parse("tdp:" + std::to_string(n)))) == n - 4);
    CHECK(alpha2(build(TreeSpec::parse("ttp:" + std::to_string(n)))) == n - 4);
  }
  CHECK_THROWS_AS(alpha2(Graph::complete(4)), std::invalid_argument);
  CHECK_THROWS_AS(alpha2(Graph(3)), std::invalid_argument);
}

TEST_CASE("tree_isomorphic") {
  CHECK(tree_isomorphic(build(TreeSpec::parse("tprime:6")), build(TreeSpec::double_star(3, 1))));
  CHECK(tree_isomorphic(build(TreeSpec::parse("t2:9")), build(TreeSpec::double_star(5, 2))));
  CHECK_FALSE(tree_isomorphic(build(TreeSpec::parse("path:5")), build(TreeSpec::parse("star:5"))));
  CHECK_THROWS_AS(tree_isomorphic(Graph::complete(3), Graph::path(3)), std::invalid_argument);

  // agreement with brute-force isomorphism on random relabelings
  rtltest::Lcg rng(5);
  for (int iter = 0; iter < 20; ++iter) {
    Graph t = build(TreeSpec::parse("tdp:8"));
    std::vector<int> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 7; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    CHECK(tree_isomorphic(t, rtltest::permute(t, perm)));
  }
}

TEST_CASE("double_star_arms") {
  auto arms = double_star_arms(build(TreeSpec::double_star(5, 2)));
  REQUIRE(arms.has_value());
  CHECK(*arms == std::pair<int, int>(5, 2));
  CHECK(double_star_arms(build(TreeSpec::parse("path:4"))) == std::pair<int, int>(1, 1));
  CHECK_FALSE(double_star_arms(build(TreeSpec::parse("path:5"))).has_value());
  CHECK_FALSE(double_star_arms(build(TreeSpec::parse("star:5"))).has_value());
}

TEST_CASE("spec parsing and gating") {
  CHECK(TreeSpec::parse("dstar:5,2").to_string() == "dstar:5,2");
  CHECK(TreeSpec::parse("t3:12").order() == 12);
  CHECK(TreeSpec::parse("free:g6:Bg").order() == 3);  // the path 0-1-2
  CHECK_THROWS_AS(TreeSpec::parse("star:2"), std::invalid_argument);
  CHECK_THROWS_AS(TreeSpec::parse("t3:5"), std::invalid_argument);
  CHECK_THROWS_AS(TreeSpec::parse("dstar:2,3"), std::invalid_argument);
  CHECK_THROWS_AS(TreeSpec::parse("nosuch:5"), std::invalid_argument);
  CHECK_THROWS_AS(TreeSpec::parse("path"), std::invalid_argument);
  // free trees must actually be trees; Bw is the triangle
  CHECK_THROWS_AS(TreeSpec::parse("free:g6:Bw"), std::invalid_argument);
}

TEST_CASE("labels carry the defining vertex names") {
  Graph g = build(TreeSpec::parse("tdp:10"));
  CHECK(g.label(0) == "v0");
  CHECK(g.label(9) == "v9");
  Graph s = build(TreeSpec::double_star(3, 2));
  CHECK(s.label(0) == "v0");
  CHECK(s.label(4) == "w0");
}
