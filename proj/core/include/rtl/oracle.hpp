#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rtl/config.hpp"
#include "rtl/graph.hpp"
#include "rtl/tree_families.hpp"

namespace rtl {

struct SearchStats {
  std::uint64_t visited = 0;           // accepted isomorphism-class nodes entered
  std::uint64_t iso_rejections = 0;    // children rejected as non-canonical or duplicate
  std::uint64_t containment_calls = 0;
  double elapsed_s = 0.0;
  int workers = 1;

  SearchStats& operator+=(const SearchStats& o) {
    visited += o.visited;
    iso_rejections += o.iso_rejections;
    containment_calls += o.containment_calls;
    return *this;
  }
};

/// All non-isomorphic graphs of order p, exactly one representative per
/// class, generated by canonical augmentation. Cached for p <= 9; the stream
/// order is deterministic and independent of the worker count.
const std::vector<Graph>& enum_graphs(int p, const RunConfig& cfg = {}, SearchStats* stats = nullptr);

/// Streaming form: enter(w, g) sees every accepted class representative of
/// order <= target_p (worker index w); returning false prunes g's
/// extensions. Hooks must be safe to call concurrently on distinct workers.
void enum_graphs_visit(int target_p, const RunConfig& cfg,
                       const std::function<bool(int, const Graph&)>& enter,
                       SearchStats* stats = nullptr);

/// All pairwise non-isomorphic trees on n vertices (n <= cap_trees).
const std::vector<Graph>& enum_trees(int n, const RunConfig& cfg = {});

/// Exact ex(p;T) by exhaustive search over order-p graphs.
long long oracle_ex(int p, const TreeSpec& tree, const RunConfig& cfg = {}, SearchStats* stats = nullptr);

/// Least p such that every order-p graph G has T_a in G or T_b in its
/// complement. Throws CapExceeded if not settled by p_cap.
int oracle_ramsey(const TreeSpec& a, const TreeSpec& b, int p_cap, const RunConfig& cfg = {},
                  SearchStats* stats = nullptr);

struct Conjecture1Report {
  int n_max = 0, p_max = 0;
  std::uint64_t hosts_checked = 0;
  std::uint64_t pairs_checked = 0;
  struct Violation {
    std::string host_g6;
    std::string tree_g6;
  };
  std::vector<Violation> violations;  // expected empty
  SearchStats stats;
};

/// Scan: every connected G of order p <= p_max with min degree >= alpha2(T)
/// must contain T, for every tree T of order n <= n_max (n <= p).
Conjecture1Report scan_conjecture1(int n_max, int p_max, const RunConfig& cfg = {});

struct Conjecture2Row {
  int m = 0;
  std::string tree_g6;
  int tree_order = 0;
  int alpha2 = 0;
  long long bound = 0;        // m - 1 + alpha2
  std::optional<int> oracle_r;  // empty when the bound itself failed
  bool holds = false;
};

struct Conjecture2Report {
  int m_max = 0, n_max = 0;
  std::vector<Conjecture2Row> rows;
  std::uint64_t violations = 0;  // expected 0
  SearchStats stats;
};

/// Scan: r(K_{1,m-1}, T) <= m-1+alpha2(T) for every tree with alpha2 >= m-2.
Conjecture2Report scan_conjecture2(int m_max, int n_max, const RunConfig& cfg = {});

}  // namespace rtl
