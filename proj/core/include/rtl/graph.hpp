#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rtl {

/// Subset of the vertices 0..universe-1, stored as a packed bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  int universe() const { return universe_; }
  int size() const;
  bool empty() const { return size() == 0; }
  bool test(int v) const;
  void set(int v);
  void reset(int v);
  bool disjoint_with(const VertexSet& other) const;
  bool subset_of(const VertexSet& other) const;
  VertexSet complement() const;

  std::vector<int> members() const;
  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  static VertexSet of(int universe, std::initializer_list<int> vs);
  static VertexSet all(int universe);

 private:
  void check(int v) const;
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct DegreeSummary {
  std::vector<int> sorted_desc;  // degree sequence, descending
  int max = 0;
  int min = 0;
};

/// Finite simple graph over dense vertices 0..order-1.
///
/// Adjacency is one bitset row per vertex, so complement, neighborhood and
/// cross-edge counting are word-parallel. No self-loops; rows stay symmetric
/// because add_edge/remove_edge touch both endpoints. Graphs are cheap values;
/// treat them as immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  int order() const { return n_; }
  long long edge_count() const;

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const;
  /// Degree sequence with max/min. Rejects the order-0 graph.
  DegreeSummary degrees() const;

  /// Vertices adjacent to v.
  VertexSet neighborhood(int v) const;
  /// Vertices at distance exactly 2 from v.
  VertexSet neighborhood2(int v) const;

  Graph complement() const;
  /// Number of edges with one endpoint in a and the other in b.
  /// a and b must be disjoint.
  long long cross_edges(const VertexSet& a, const VertexSet& b) const;
  /// Subgraph induced by s; vertices are relabeled to 0..|s|-1 in
  /// increasing original order.
  Graph induced(const VertexSet& s) const;
  /// Graph minus the vertices in s (and all incident edges).
  Graph delete_vertices(const VertexSet& s) const;

  static Graph disjoint_union(std::span<const Graph> parts);

  bool connected() const;
  std::vector<int> component_sizes() const;  // descending
  int largest_component() const;
  bool is_tree() const;

  // Raw adjacency row (words_per_row() words per vertex).
  std::span<const std::uint64_t> row(int v) const;
  int words_per_row() const { return words_; }

  // Optional per-vertex annotations (construction provenance only; never
  // affects graph semantics or equality).
  const std::string& label(int v) const;
  void set_label(int v, std::string s);
  bool has_labels() const { return !labels_.empty(); }

  std::string to_dot() const;

  static Graph complete(int n);
  static Graph empty_graph(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete_bipartite(int a, int b);

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  void check(int v) const;
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;  // n_ * words_
  std::vector<std::string> labels_;
};

}  // namespace rtl
