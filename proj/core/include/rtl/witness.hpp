#pragma once

#include <optional>
#include <string>

#include "rtl/config.hpp"
#include "rtl/graph.hpp"
#include "rtl/tree_families.hpp"

namespace rtl {

/// k-regular circulant on p vertices: i ~ i+-1..i+-k/2 (mod p), plus the
/// antipode when k is odd. Exists iff p >= k+1 and 2 | kp; throws otherwise.
Graph regular_graph(int p, int k);

/// k disjoint copies of K_s.
Graph clique_union(int k, int s);

/// x copies of K_s1 plus y copies of K_s2, disjoint.
Graph two_clique_union(int x, int s1, int y, int s2);

/// The order-(2n-9) graph of the even-order lower-bound construction:
/// an (n-10)-regular core on v1..v_{n-6}, three saturated vertices
/// v0, v_{n-5}, v_{n-4}, 2x2 pairing blocks to u1..u_{n-6}, and a complete
/// graph on the u side. Requires even n >= 16. Degree sequence
/// {(n-4) x 3, (n-5) x (2n-12)} is asserted at construction.
Graph g0_graph(int n);

/// A machine-verified lower-bound coloring: red tree absent from the graph,
/// blue tree absent from its complement. Both verdicts are re-checked by the
/// containment module before the witness is returned.
struct VerifiedWitness {
  Graph graph;
  int order = 0;
  std::string construction;  // regular-split | clique-union | two-clique-union | g0 | bipartite-complement
  TreeSpec red, blue;
  bool red_absent = false;
  bool blue_absent = false;
};

/// Tries the construction catalog in a fixed order (clique unions first,
/// then mixed clique unions, complement-of-bipartite splits, regular splits,
/// then the g0 construction), verifying each candidate on both sides and in
/// both orientations. Absence means the catalog is exhausted, never that no
/// witness exists.
std::optional<VerifiedWitness> lower_witness(const TreeSpec& a, const TreeSpec& b, int p,
                                             const RunConfig& cfg = {});

}  // namespace rtl
