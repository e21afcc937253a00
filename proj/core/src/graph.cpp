#include "rtl/graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>

namespace rtl {

namespace {
constexpr int kWordBits = 64;

int words_for(int n) { return n == 0 ? 0 : (n + kWordBits - 1) / kWordBits; }

std::uint64_t bit_of(int v) { return std::uint64_t{1} << (v % kWordBits); }
}  // namespace

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(int universe) : universe_(universe), words_(words_for(universe), 0) {
  if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
}

void VertexSet::check(int v) const {
  if (v < 0 || v >= universe_) throw std::out_of_range("VertexSet: vertex out of range");
}

int VertexSet::size() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::test(int v) const {
  check(v);
  return words_[v / kWordBits] & bit_of(v);
}

void VertexSet::set(int v) {
  check(v);
  words_[v / kWordBits] |= bit_of(v);
}

void VertexSet::reset(int v) {
  check(v);
  words_[v / kWordBits] &= ~bit_of(v);
}

bool VertexSet::disjoint_with(const VertexSet& other) const {
  size_t m = std::min(words_.size(), other.words_.size());
  for (size_t i = 0; i < m; ++i)
    if (words_[i] & other.words_[i]) return false;
  return true;
}

bool VertexSet::subset_of(const VertexSet& other) const {
  if (universe_ > other.universe_) {
    for (int v : members())
      if (v >= other.universe_) return false;
  }
  for (size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = i < other.words_.size() ? other.words_[i] : 0;
    if (words_[i] & ~w) return false;
  }
  return true;
}

VertexSet VertexSet::complement() const {
  VertexSet r(universe_);
  for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
  int spare = universe_ % kWordBits;
  if (spare && !r.words_.empty()) r.words_.back() &= (std::uint64_t{1} << spare) - 1;
  return r;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(words_.size()); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(i * kWordBits + b);
      w &= w - 1;
    }
  }
  return out;
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> vs) {
  VertexSet s(universe);
  for (int v : vs) s.set(v);
  return s;
}

VertexSet VertexSet::all(int universe) {
  return VertexSet(universe).complement();
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int order) : n_(order), words_(words_for(order)), bits_(static_cast<size_t>(order) * words_for(order), 0) {
  if (order < 0) throw std::invalid_argument("Graph: negative order");
}

void Graph::check(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
}

bool Graph::has_edge(int u, int v) const {
  check(u);
  check(v);
  if (u == v) return false;
  return bits_[static_cast<size_t>(u) * words_ + v / kWordBits] & bit_of(v);
}

void Graph::add_edge(int u, int v) {
  check(u);
  check(v);
  if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
  bits_[static_cast<size_t>(u) * words_ + v / kWordBits] |= bit_of(v);
  bits_[static_cast<size_t>(v) * words_ + u / kWordBits] |= bit_of(u);
  assert(has_edge(u, v) && has_edge(v, u));
}

void Graph::remove_edge(int u, int v) {
  check(u);
  check(v);
  if (u == v) return;
  bits_[static_cast<size_t>(u) * words_ + v / kWordBits] &= ~bit_of(v);
  bits_[static_cast<size_t>(v) * words_ + u / kWordBits] &= ~bit_of(u);
}

long long Graph::edge_count() const {
  long long deg_sum = 0;
  for (int v = 0; v < n_; ++v) deg_sum += degree(v);
  assert(deg_sum % 2 == 0);
  return deg_sum / 2;
}

int Graph::degree(int v) const {
  check(v);
  int c = 0;
  for (int i = 0; i < words_; ++i) c += std::popcount(bits_[static_cast<size_t>(v) * words_ + i]);
  return c;
}

DegreeSummary Graph::degrees() const {
  if (n_ == 0) throw std::domain_error("degrees: empty graph");
  DegreeSummary d;
  d.sorted_desc.reserve(n_);
  for (int v = 0; v < n_; ++v) d.sorted_desc.push_back(degree(v));
  std::sort(d.sorted_desc.begin(), d.sorted_desc.end(), std::greater<>());
  d.max = d.sorted_desc.front();
  d.min = d.sorted_desc.back();
  return d;
}

std::span<const std::uint64_t> Graph::row(int v) const {
  check(v);
  return {bits_.data() + static_cast<size_t>(v) * words_, static_cast<size_t>(words_)};
}

VertexSet Graph::neighborhood(int v) const {
  check(v);
  VertexSet s(n_);
  auto r = row(v);
  std::copy(r.begin(), r.end(), s.words().begin());
  return s;
}

VertexSet Graph::neighborhood2(int v) const {
  check(v);
  VertexSet acc(n_);
  auto rv = row(v);
  for (int u : neighborhood(v).members()) {
    auto ru = row(u);
    for (int i = 0; i < words_; ++i) acc.words()[i] |= ru[i];
  }
  for (int i = 0; i < words_; ++i) acc.words()[i] &= ~rv[i];
  acc.words()[v / kWordBits] &= ~bit_of(v);
  return acc;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int v = 0; v < n_; ++v) {
    auto src = row(v);
    auto dst = g.bits_.begin() + static_cast<size_t>(v) * words_;
    for (int i = 0; i < words_; ++i) dst[i] = ~src[i];
    int spare = n_ % kWordBits;
    if (spare) dst[words_ - 1] &= (std::uint64_t{1} << spare) - 1;
    dst[v / kWordBits] &= ~bit_of(v);
  }
  return g;
}

long long Graph::cross_edges(const VertexSet& a, const VertexSet& b) const {
  if (a.universe() != n_ || b.universe() != n_)
    throw std::invalid_argument("cross_edges: universe mismatch");
  if (!a.disjoint_with(b)) throw std::invalid_argument("cross_edges: sets overlap");
  long long c = 0;
  auto bw = b.words();
  for (int v : a.members()) {
    auto rv = row(v);
    for (int i = 0; i < words_; ++i) c += std::popcount(rv[i] & bw[i]);
  }
  return c;
}

Graph Graph::induced(const VertexSet& s) const {
  if (s.universe() != n_) throw std::out_of_range("induced: set universe mismatch");
  auto keep = s.members();
  Graph g(static_cast<int>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = i + 1; j < keep.size(); ++j)
      if (has_edge(keep[i], keep[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  if (has_labels())
    for (size_t i = 0; i < keep.size(); ++i) g.set_label(static_cast<int>(i), label(keep[i]));
  return g;
}

Graph Graph::delete_vertices(const VertexSet& s) const {
  return induced(s.complement());
}

Graph Graph::disjoint_union(std::span<const Graph> parts) {
  int total = 0;
  for (const auto& p : parts) total += p.order();
  Graph g(total);
  int base = 0;
  for (const auto& p : parts) {
    for (int u = 0; u < p.order(); ++u)
      for (int v = u + 1; v < p.order(); ++v)
        if (p.has_edge(u, v)) g.add_edge(base + u, base + v);
    base += p.order();
  }
  return g;
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  auto comp = component_sizes();
  return comp.size() == 1;
}

std::vector<int> Graph::component_sizes() const {
  std::vector<int> comp;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack;
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    int size = 0;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++size;
      for (int u : neighborhood(v).members())
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    comp.push_back(size);
  }
  std::sort(comp.begin(), comp.end(), std::greater<>());
  return comp;
}

int Graph::largest_component() const {
  if (n_ == 0) return 0;
  return component_sizes().front();
}

bool Graph::is_tree() const {
  return n_ >= 1 && connected() && edge_count() == n_ - 1;
}

const std::string& Graph::label(int v) const {
  static const std::string empty;
  check(v);
  if (labels_.empty()) return empty;
  return labels_[v];
}

void Graph::set_label(int v, std::string s) {
  check(v);
  if (labels_.empty()) labels_.resize(n_);
  labels_[v] = std::move(s);
}

std::string Graph::to_dot() const {
  std::ostringstream os;
  os << "graph g {\n";
  for (int v = 0; v < n_; ++v) {
    os << "  " << v;
    if (has_labels() && !label(v).empty()) os << " [label=\"" << label(v) << "\"]";
    os << ";\n";
  }
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::empty_graph(int n) { return Graph(n); }

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: order >= 3 required");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

}  // namespace rtl
