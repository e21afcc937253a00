#include "rtl/witness.hpp"

#include <algorithm>

#include "rtl/containment.hpp"

namespace rtl {

Graph regular_graph(int p, int k) {
  if (k < 0 || p < k + 1)
    throw std::invalid_argument("regular_graph: requires p >= k+1 >= 1");
  if ((static_cast<long long>(k) * p) % 2 != 0)
    throw std::invalid_argument("regular_graph: no k-regular graph of order p when kp is odd (Lemma 2.2)");
  Graph g(p);
  for (int d = 1; d <= k / 2; ++d)
    for (int i = 0; i < p; ++i) g.add_edge(i, (i + d) % p);
  if (k % 2 == 1)
    for (int i = 0; i < p / 2; ++i) g.add_edge(i, i + p / 2);
  if (p >= 1) {
    auto deg = g.degrees();
    if (deg.max != k || deg.min != k) throw std::logic_error("regular_graph: construction is not k-regular");
  }
  return g;
}

Graph clique_union(int k, int s) {
  if (k < 0 || s < 1) throw std::invalid_argument("clique_union: k >= 0 and s >= 1 required");
  Graph g(k * s);
  for (int c = 0; c < k; ++c)
    for (int u = 0; u < s; ++u)
      for (int v = u + 1; v < s; ++v) g.add_edge(c * s + u, c * s + v);
  return g;
}

Graph two_clique_union(int x, int s1, int y, int s2) {
  if (x < 0 || y < 0 || s1 < 1 || s2 < 1)
    throw std::invalid_argument("two_clique_union: counts >= 0 and sizes >= 1 required");
  Graph parts[] = {clique_union(x, s1), clique_union(y, s2)};
  return Graph::disjoint_union(parts);
}

Graph g0_graph(int n) {
  if (n % 2 != 0) throw std::invalid_argument("g0_graph: n must be even (the regular core needs 2 | (n-10)(n-6))");
  if (n < 16) throw std::invalid_argument("g0_graph: n >= 16 required");
  const int order = 2 * n - 9;
  Graph g(order);
  // Layout: 0 = v0, 1..n-4 = v1..v_{n-4}, n-3..2n-10 = u1..u_{n-6}.
  auto V = [](int i) { return i; };
  auto U = [n](int j) { return (n - 4) + j; };
  g.set_label(V(0), "v0");
  for (int i = 1; i <= n - 4; ++i) g.set_label(V(i), "v" + std::to_string(i));
  for (int j = 1; j <= n - 6; ++j) g.set_label(U(j), "u" + std::to_string(j));

  // (n-10)-regular core H on v1..v_{n-6}.
  Graph core = regular_graph(n - 6, n - 10);
  for (int i = 0; i < core.order(); ++i)
    for (int j = i + 1; j < core.order(); ++j)
      if (core.has_edge(i, j)) g.add_edge(V(i + 1), V(j + 1));

  for (int i = 1; i <= n - 4; ++i) g.add_edge(V(0), V(i));
  for (int i = 1; i <= n - 6; ++i) g.add_edge(V(i), V(n - 5));
  for (int i = 1; i <= n - 5; ++i) g.add_edge(V(i), V(n - 4));

  // Pairing blocks {v_{2t-1}, v_{2t}} x {u_{2t-1}, u_{2t}}.
  for (int t = 1; t <= (n - 6) / 2; ++t)
    for (int dv = 0; dv < 2; ++dv)
      for (int du = 0; du < 2; ++du) g.add_edge(V(2 * t - 1 + dv), U(2 * t - 1 + du));

  // Complete graph on the u side: the unique reading under which every u_j
  // has degree n-5.
  for (int i = 1; i <= n - 6; ++i)
    for (int j = i + 1; j <= n - 6; ++j) g.add_edge(U(i), U(j));

  // Degree-sequence invariant: three vertices of degree n-4, the rest n-5.
  int high = 0, low = 0;
  for (int v = 0; v < order; ++v) {
    int d = g.degree(v);
    if (d == n - 4)
      ++high;
    else if (d == n - 5)
      ++low;
  }
  if (high != 3 || low != order - 3)
    throw std::logic_error("g0_graph: degree sequence invariant violated");
  return g;
}

namespace {

struct Candidate {
  Graph graph;
  std::string construction;
};

std::optional<VerifiedWitness> verify(const Candidate& cand, const TreeSpec& a, const Graph& ta,
                                      const TreeSpec& b, const Graph& tb, const RunConfig& cfg) {
  const Graph comp = cand.graph.complement();
  // Orientation 1: the candidate itself is the red side.
  if (!contains_tree(cand.graph, ta, cfg.contain_budget) &&
      !contains_tree(comp, tb, cfg.contain_budget)) {
    VerifiedWitness w;
    w.graph = cand.graph;
    w.order = cand.graph.order();
    w.construction = cand.construction;
    w.red = a;
    w.blue = b;
    w.red_absent = true;
    w.blue_absent = true;
    return w;
  }
  // Orientation 2: the complement is the red side.
  if (!contains_tree(comp, ta, cfg.contain_budget) &&
      !contains_tree(cand.graph, tb, cfg.contain_budget)) {
    VerifiedWitness w;
    w.graph = comp;
    w.order = comp.order();
    w.construction = cand.construction;
    w.red = a;
    w.blue = b;
    w.red_absent = true;
    w.blue_absent = true;
    return w;
  }
  return std::nullopt;
}

}  // namespace

std::optional<VerifiedWitness> lower_witness(const TreeSpec& a, const TreeSpec& b, int p,
                                             const RunConfig& cfg) {
  if (p < 1) throw std::invalid_argument("lower_witness: p >= 1 required");
  a.validate();
  b.validate();
  const Graph ta = build(a), tb = build(b);
  const int da = ta.degrees().max, db = tb.degrees().max;

  auto try_candidate = [&](Candidate cand) -> std::optional<VerifiedWitness> {
    return verify(cand, a, ta, b, tb, cfg);
  };

  // 1. Clique unions kK_s, largest parts first.
  for (int s = p; s >= 1; --s) {
    if (p % s != 0) continue;
    if (auto w = try_candidate({clique_union(p / s, s), "clique-union"})) return w;
  }

  // 2. Mixed clique unions xK_s u yK_{s-1}, sized after each tree's order.
  int sizes[2] = {a.order() - 1, b.order() - 1};
  for (int idx = 0; idx < 2; ++idx) {
    int s = sizes[idx];
    if (s < 2 || (idx == 1 && s == sizes[0])) continue;
    for (int x = 0; x * s <= p; ++x) {
      int rem = p - x * s;
      if (rem % (s - 1) != 0) continue;
      int y = rem / (s - 1);
      if (x == 0 || y == 0) continue;  // pure unions already tried above
      if (auto w = try_candidate({two_clique_union(x, s, y, s - 1), "two-clique-union"})) return w;
    }
  }

  // 3. Complements of complete bipartite splits, i.e. K_a u K_b.
  for (int big = p - 1; big >= (p + 1) / 2; --big) {
    int small = p - big;
    if (small < 1 || big == small) continue;
    if (auto w = try_candidate({two_clique_union(1, big, 1, small), "bipartite-complement"}))
      return w;
  }

  // 4. Regular splits (degree obstruction on both sides).
  for (int k = 0; k <= p - 1; ++k) {
    if ((static_cast<long long>(k) * p) % 2 != 0) continue;
    bool viable1 = k < da && (p - 1 - k) < db;
    bool viable2 = k < db && (p - 1 - k) < da;
    if (!viable1 && !viable2) continue;
    if (auto w = try_candidate({regular_graph(p, k), "regular-split"})) return w;
  }

  // 5. The g0 construction at its native order 2n-9.
  if ((p + 9) % 2 == 0) {
    int n = (p + 9) / 2;
    if (n >= 16 && n % 2 == 0) {
      if (auto w = try_candidate({g0_graph(n), "g0"})) return w;
    }
  }
  return std::nullopt;
}

}  // namespace rtl
