#pragma once

#include <optional>
#include <string>
#include <utility>

#include "rtl/graph.hpp"

namespace rtl {

enum class TreeFamily {
  Path,          // P_n
  Star,          // K_{1,n-1}
  TPrime,        // unique tree with max degree n-2; S(n-3,1)
  TStarAst,      // star with one leaf extended by a 2-path
  T1,            // star with pendant edges on two distinct leaves
  T2,            // S(n-4,2)
  T3,            // S(n-5,3)
  TDoublePrime,  // broom: center + (2,1)-leafed branch vertices
  TTriplePrime,  // broom: center + three 1-leafed branch vertices
  DoubleStar,    // S(n1,n2)
  FreeTree,      // explicit edge list
};

/// Symbolic identity of a tree: which family and which parameters. Separates
/// "which theorem applies" from the concrete labeled graph.
struct TreeSpec {
  TreeFamily family = TreeFamily::Path;
  int n = 0;             // order, single-parameter families
  int n1 = 0, n2 = 0;    // DoubleStar arm sizes, n1 >= n2 >= 1
  Graph free;            // FreeTree only

  int order() const;
  /// Throws std::invalid_argument when the parameters are below the family
  /// minimum (Path n>=1, Star n>=3, TPrime n>=4, TStarAst/T1/T2 n>=5,
  /// T3/TDoublePrime/TTriplePrime n>=6, DoubleStar n1>=n2>=1).
  void validate() const;

  /// CLI spec syntax: path:10 star:7 tprime:9 tstar:9 t1:9 t2:9 t3:12 tdp:12
  /// ttp:12 dstar:5,2 free:g6:<graph6>
  static TreeSpec parse(const std::string& text);
  std::string to_string() const;

  static TreeSpec of(TreeFamily f, int n);
  static TreeSpec double_star(int n1, int n2);
  static TreeSpec free_tree(Graph g);
};

/// Labeled realization of the spec, following the defining vertex lists
/// (labels v0, v1, ..., w0, ... carried as annotations).
Graph build(const TreeSpec& spec);

/// Maximum degree of build(spec), computed in closed form.
int max_degree(const TreeSpec& spec);

/// Size of the larger class of the unique 2-coloring of a tree.
int alpha2(const Graph& tree);

/// Isomorphism of trees via rooted canonical encoding at the center(s).
bool tree_isomorphic(const Graph& a, const Graph& b);

/// Canonical encoding used by tree_isomorphic (also handy for dedup keys).
std::string tree_code(const Graph& tree);

/// Arm sizes (a, b), a >= b, when the tree is a double star (exactly two
/// non-leaf vertices, necessarily adjacent); also covers P_4 = S(1,1).
std::optional<std::pair<int, int>> double_star_arms(const Graph& tree);

}  // namespace rtl
