#pragma once

#include <string>
#include <vector>

#include "rtl/graph.hpp"

namespace rtl {

/// Canonical form of g: equal results iff the graphs are isomorphic.
/// Refinement-seeded backtracking over vertex orderings, taking the
/// lexicographically minimal upper-triangle adjacency encoding. Adequate for
/// the oracle scales (order <= ~12); supports order <= 64.
Graph canonical_form(const Graph& g, std::vector<int>* perm_out = nullptr);

/// graph6 string of the canonical form. Equal codes iff isomorphic.
std::string canonical_code(const Graph& g);

/// True iff vertex v sits in the last position of some optimal (canonical)
/// labeling of g, i.e. v lies in the orbit of the canonical last vertex.
/// This is the acceptance test for canonical-augmentation generation.
bool is_canonical_last(const Graph& g, int v);

/// One-pass variant for the enumeration hot path: decides is_canonical_last
/// and, when accepted, also yields canonical_code(g).
struct AugmentCheck {
  bool accepted = false;
  std::string code;
};
AugmentCheck check_canonical_last(const Graph& g, int v);

}  // namespace rtl
