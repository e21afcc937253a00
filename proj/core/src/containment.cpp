#include "rtl/containment.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "rtl/tree_families.hpp"

namespace rtl {

namespace {

struct RootedTree {
  int root;
  std::vector<int> order;        // pre-order, children after parents
  std::vector<int> parent_slot;  // index into order[] of the parent, -1 for root
  std::vector<int> deg;          // degree in the tree, by tree vertex
  std::vector<int> children;     // child count, by slot
  std::vector<int> leaf_prev;    // previous same-parent leaf sibling slot, or -1
};

RootedTree root_tree(const Graph& t) {
  const int n = t.order();
  RootedTree r;
  r.deg.resize(n);
  for (int v = 0; v < n; ++v) r.deg[v] = t.degree(v);
  r.root = static_cast<int>(std::max_element(r.deg.begin(), r.deg.end()) - r.deg.begin());

  std::vector<int> parent(n, -2), subtree(n, 1);
  std::vector<int> bfs{r.root};
  parent[r.root] = -1;
  for (size_t i = 0; i < bfs.size(); ++i)
    for (int u : t.neighborhood(bfs[i]).members())
      if (parent[u] == -2) {
        parent[u] = bfs[i];
        bfs.push_back(u);
      }
  for (auto it = bfs.rbegin(); it != bfs.rend(); ++it)
    if (parent[*it] >= 0) subtree[parent[*it]] += subtree[*it];

  // Pre-order with children sorted by decreasing subtree size; equal-size
  // leaf siblings end up consecutive, which feeds the symmetry break below.
  std::vector<int> slot_of(n, -1);
  std::vector<int> stack{r.root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    slot_of[v] = static_cast<int>(r.order.size());
    r.order.push_back(v);
    r.parent_slot.push_back(parent[v] >= 0 ? slot_of[parent[v]] : -1);
    std::vector<int> kids;
    for (int u : t.neighborhood(v).members())
      if (parent[u] == v) kids.push_back(u);
    std::sort(kids.begin(), kids.end(), [&](int a, int b) { return subtree[a] < subtree[b]; });
    for (int k : kids) stack.push_back(k);  // largest ends on top, visited first
  }
  const int slots = static_cast<int>(r.order.size());
  r.children.assign(slots, 0);
  for (int s = 0; s < slots; ++s)
    if (r.parent_slot[s] >= 0) ++r.children[r.parent_slot[s]];
  // Leaves of one parent are interchangeable: force ascending host indices
  // across each consecutive run of them.
  r.leaf_prev.assign(slots, -1);
  for (int s = 1; s < slots; ++s) {
    int tv = r.order[s];
    int pv = r.order[s - 1];
    if (r.parent_slot[s] >= 0 && r.parent_slot[s] == r.parent_slot[s - 1] &&
        r.deg[tv] == 1 && r.deg[pv] == 1)
      r.leaf_prev[s] = s - 1;
  }
  return r;
}

struct Embedder {
  const Graph& host;
  const Graph& tree;
  const RootedTree rt;
  std::vector<std::uint64_t> used;
  std::vector<int> assign;   // by pre-order slot
  std::vector<int> pending;  // unplaced children per placed slot
  std::vector<int> host_deg;
  std::uint64_t budget;
  std::uint64_t nodes = 0;

  Embedder(const Graph& h, const Graph& t, std::uint64_t b)
      : host(h), tree(t), rt(root_tree(t)), used(h.words_per_row(), 0),
        assign(t.order(), -1), pending(t.order(), 0), budget(b) {
    host_deg.resize(h.order());
    for (int v = 0; v < h.order(); ++v) host_deg[v] = h.degree(v);
  }

  void mark(int hv, bool on) {
    auto& w = used[hv / 64];
    std::uint64_t bit = std::uint64_t{1} << (hv % 64);
    if (on)
      w |= bit;
    else
      w &= ~bit;
  }

  bool is_used(int hv) const { return used[hv / 64] & (std::uint64_t{1} << (hv % 64)); }

  int free_neighbors(int hv) const {
    auto row = host.row(hv);
    int c = 0;
    for (size_t i = 0; i < row.size(); ++i) c += std::popcount(row[i] & ~used[i]);
    return c;
  }

  // Every placed tree vertex that still waits for children must keep enough
  // unused host neighbors to receive them all.
  bool capacities_ok(int upto_slot) const {
    for (int s = 0; s <= upto_slot; ++s)
      if (pending[s] > 0 && free_neighbors(assign[s]) < pending[s]) return false;
    return true;
  }

  bool place(int slot) {
    if (budget && ++nodes > budget) throw ContainmentBudgetExceeded();
    if (slot == static_cast<int>(rt.order.size())) return true;
    int tv = rt.order[slot];
    int need = rt.deg[tv];
    std::vector<int> cand;
    if (rt.parent_slot[slot] < 0) {
      // Root: any host vertex of sufficient degree in a big-enough component.
      std::vector<char> comp_ok = component_filter();
      for (int hv = 0; hv < host.order(); ++hv)
        if (host_deg[hv] >= need && comp_ok[hv]) cand.push_back(hv);
    } else {
      int ph = assign[rt.parent_slot[slot]];
      int lowest = rt.leaf_prev[slot] >= 0 ? assign[rt.leaf_prev[slot]] : -1;
      for (int hv : host.neighborhood(ph).members())
        if (hv > lowest && !is_used(hv) && host_deg[hv] >= need) cand.push_back(hv);
    }
    std::sort(cand.begin(), cand.end(),
              [&](int a, int b) { return host_deg[a] != host_deg[b] ? host_deg[a] > host_deg[b] : a < b; });
    for (int hv : cand) {
      assign[slot] = hv;
      mark(hv, true);
      pending[slot] = rt.children[slot];
      int ps = rt.parent_slot[slot];
      if (ps >= 0) --pending[ps];
      if (capacities_ok(slot) && place(slot + 1)) return true;
      if (ps >= 0) ++pending[ps];
      mark(hv, false);
      assign[slot] = -1;
    }
    return false;
  }

  std::vector<char> component_filter() const {
    // Root candidates must sit in a component with at least tree.order() vertices.
    std::vector<char> ok(host.order(), 0);
    std::vector<int> comp(host.order(), -1);
    std::vector<int> sizes;
    for (int s = 0; s < host.order(); ++s) {
      if (comp[s] >= 0) continue;
      int id = static_cast<int>(sizes.size());
      std::vector<int> stack{s};
      comp[s] = id;
      int size = 0;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++size;
        for (int u : host.neighborhood(v).members())
          if (comp[u] < 0) {
            comp[u] = id;
            stack.push_back(u);
          }
      }
      sizes.push_back(size);
    }
    for (int v = 0; v < host.order(); ++v) ok[v] = sizes[comp[v]] >= tree.order();
    return ok;
  }
};

}  // namespace

std::optional<Embedding> embed_tree(const Graph& host, const Graph& tree,
                                    std::uint64_t budget_nodes) {
  if (!tree.is_tree()) throw std::invalid_argument("embed_tree: pattern is not a tree");
  if (tree.order() > host.order()) return std::nullopt;
  if (tree.order() == 0) return Embedding{};
  if (tree.order() == 1) {
    if (host.order() == 0) return std::nullopt;
    Embedding e;
    e.map = {0};
    return e;
  }
  // Degree necessity fast path.
  if (host.order() == 0 || host.degrees().max < tree.degrees().max) return std::nullopt;

  Embedder emb(host, tree, budget_nodes);
  if (!emb.place(0)) return std::nullopt;
  Embedding e;
  e.map.resize(tree.order());
  for (size_t slot = 0; slot < emb.rt.order.size(); ++slot) e.map[emb.rt.order[slot]] = emb.assign[slot];

  // Independent validation: injectivity plus edge-by-edge check.
  std::vector<char> seen(host.order(), 0);
  for (int hv : e.map) {
    if (hv < 0 || hv >= host.order() || seen[hv]) throw std::logic_error("embed_tree: invalid embedding");
    seen[hv] = 1;
  }
  for (int u = 0; u < tree.order(); ++u)
    for (int v : tree.neighborhood(u).members())
      if (u < v && !host.has_edge(e.map[u], e.map[v]))
        throw std::logic_error("embed_tree: embedding misses a host edge");
  return e;
}

bool contains_double_star(const Graph& host, int n1, int n2) {
  if (n1 < n2 || n2 < 1) throw std::invalid_argument("contains_double_star: n1 >= n2 >= 1 required");
  const int n = host.order();
  if (n < n1 + n2 + 2) return false;
  for (int u = 0; u < n; ++u) {
    int du = host.degree(u) - 1;
    if (du < n2) continue;
    auto ru = host.row(u);
    for (int v : host.neighborhood(u).members()) {
      if (v < u) continue;
      int dv = host.degree(v) - 1;
      auto rv = host.row(v);
      long long uni = 0;
      for (int i = 0; i < host.words_per_row(); ++i) uni += std::popcount(ru[i] | rv[i]);
      uni -= 2;  // u and v are each in exactly one of the two neighborhoods
      if (uni < n1 + n2) continue;
      if ((du >= n1 && dv >= n2) || (du >= n2 && dv >= n1)) return true;
    }
  }
  return false;
}

bool contains_tree(const Graph& host, const Graph& tree, std::uint64_t budget_nodes) {
  if (!tree.is_tree()) throw std::invalid_argument("contains_tree: pattern is not a tree");
  if (tree.order() > host.order()) return false;
  if (tree.order() <= 1) return host.order() >= tree.order();
  if (tree.order() == 2) return host.edge_count() > 0;
  // Star: a vertex of sufficient degree suffices.
  {
    auto d = tree.degrees();
    if (d.max == tree.order() - 1)
      return host.order() > 0 && host.degrees().max >= d.max;
  }
  if (auto arms = double_star_arms(tree)) return contains_double_star(host, arms->first, arms->second);
  return embed_tree(host, tree, budget_nodes).has_value();
}

}  // namespace rtl
