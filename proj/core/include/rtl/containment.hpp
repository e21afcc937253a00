#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rtl/graph.hpp"

namespace rtl {

/// Injective map from tree vertices to host vertices carrying every tree edge
/// to a host edge.
struct Embedding {
  std::vector<int> map;  // map[tree vertex] = host vertex
};

/// Node budget exhausted while searching (only when a budget is configured).
class ContainmentBudgetExceeded : public std::runtime_error {
 public:
  ContainmentBudgetExceeded() : std::runtime_error("containment: node budget exceeded") {}
};

/// Backtracking tree embedder. Roots the tree at its maximum-degree vertex,
/// orders children by decreasing subtree size, and filters host candidates by
/// degree. budget_nodes = 0 means unlimited.
std::optional<Embedding> embed_tree(const Graph& host, const Graph& tree,
                                    std::uint64_t budget_nodes = 0);

/// True iff host contains a copy of tree. Uses the exact double-star
/// criterion when the tree is a double star, the backtracker otherwise.
bool contains_tree(const Graph& host, const Graph& tree, std::uint64_t budget_nodes = 0);

/// Exact criterion for S(n1,n2): some edge uv with |G(u)\{v}| >= n1,
/// |G(v)\{u}| >= n2 and |(G(u) u G(v))\{u,v}| >= n1+n2.
bool contains_double_star(const Graph& host, int n1, int n2);

}  // namespace rtl
