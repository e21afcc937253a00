#include "rtl/tree_families.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "rtl/graph6.hpp"

namespace rtl {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::string vlabel(int i) { return "v" + std::to_string(i); }
std::string wlabel(int i) { return "w" + std::to_string(i); }

}  // namespace

int TreeSpec::order() const {
  switch (family) {
    case TreeFamily::DoubleStar:
      return n1 + n2 + 2;
    case TreeFamily::FreeTree:
      return free.order();
    default:
      return n;
  }
}

void TreeSpec::validate() const {
  switch (family) {
    case TreeFamily::Path:
      require(n >= 1, "path: n >= 1 required");
      break;
    case TreeFamily::Star:
      require(n >= 3, "star: n >= 3 required");
      break;
    case TreeFamily::TPrime:
      require(n >= 4, "tprime: n >= 4 required");
      break;
    case TreeFamily::TStarAst:
      require(n >= 5, "tstar: n >= 5 required");
      break;
    case TreeFamily::T1:
      require(n >= 5, "t1: n >= 5 required");
      break;
    case TreeFamily::T2:
      require(n >= 5, "t2: n >= 5 required");
      break;
    case TreeFamily::T3:
      require(n >= 6, "t3: n >= 6 required");
      break;
    case TreeFamily::TDoublePrime:
      require(n >= 6, "tdp: n >= 6 required");
      break;
    case TreeFamily::TTriplePrime:
      require(n >= 6, "ttp: n >= 6 required");
      break;
    case TreeFamily::DoubleStar:
      require(n1 >= n2 && n2 >= 1, "dstar: n1 >= n2 >= 1 required");
      break;
    case TreeFamily::FreeTree:
      require(free.is_tree(), "free: input graph is not a tree");
      break;
  }
}

TreeSpec TreeSpec::of(TreeFamily f, int n) {
  TreeSpec s;
  s.family = f;
  s.n = n;
  s.validate();
  return s;
}

TreeSpec TreeSpec::double_star(int n1, int n2) {
  TreeSpec s;
  s.family = TreeFamily::DoubleStar;
  s.n1 = n1;
  s.n2 = n2;
  s.validate();
  return s;
}

TreeSpec TreeSpec::free_tree(Graph g) {
  TreeSpec s;
  s.family = TreeFamily::FreeTree;
  s.free = std::move(g);
  s.validate();
  return s;
}

TreeSpec TreeSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  require(colon != std::string::npos, "tree spec: expected <family>:<params>");
  std::string fam = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  auto as_int = [&](const std::string& s) {
    try {
      size_t used = 0;
      int v = std::stoi(s, &used);
      require(used == s.size(), "tree spec: bad integer '" + s + "'");
      return v;
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("tree spec: bad integer '" + s + "'");
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("tree spec: integer out of range '" + s + "'");
    }
  };
  if (fam == "path") return of(TreeFamily::Path, as_int(rest));
  if (fam == "star") return of(TreeFamily::Star, as_int(rest));
  if (fam == "tprime") return of(TreeFamily::TPrime, as_int(rest));
  if (fam == "tstar") return of(TreeFamily::TStarAst, as_int(rest));
  if (fam == "t1") return of(TreeFamily::T1, as_int(rest));
  if (fam == "t2") return of(TreeFamily::T2, as_int(rest));
  if (fam == "t3") return of(TreeFamily::T3, as_int(rest));
  if (fam == "tdp") return of(TreeFamily::TDoublePrime, as_int(rest));
  if (fam == "ttp") return of(TreeFamily::TTriplePrime, as_int(rest));
  if (fam == "dstar") {
    auto comma = rest.find(',');
    require(comma != std::string::npos, "dstar: expected dstar:<n1>,<n2>");
    return double_star(as_int(rest.substr(0, comma)), as_int(rest.substr(comma + 1)));
  }
  if (fam == "free") {
    require(rest.rfind("g6:", 0) == 0, "free: expected free:g6:<graph6>");
    return free_tree(decode_graph6(rest.substr(3)));
  }
  throw std::invalid_argument("tree spec: unknown family '" + fam + "'");
}

std::string TreeSpec::to_string() const {
  switch (family) {
    case TreeFamily::Path:
      return "path:" + std::to_string(n);
    case TreeFamily::Star:
      return "star:" + std::to_string(n);
    case TreeFamily::TPrime:
      return "tprime:" + std::to_string(n);
    case TreeFamily::TStarAst:
      return "tstar:" + std::to_string(n);
    case TreeFamily::T1:
      return "t1:" + std::to_string(n);
    case TreeFamily::T2:
      return "t2:" + std::to_string(n);
    case TreeFamily::T3:
      return "t3:" + std::to_string(n);
    case TreeFamily::TDoublePrime:
      return "tdp:" + std::to_string(n);
    case TreeFamily::TTriplePrime:
      return "ttp:" + std::to_string(n);
    case TreeFamily::DoubleStar:
      return "dstar:" + std::to_string(n1) + "," + std::to_string(n2);
    case TreeFamily::FreeTree:
      return "free:g6:" + encode_graph6(free);
  }
  return "?";
}

namespace {

Graph build_double_star(int a, int b) {
  // v0 with a leaves, adjacent center w0 with b leaves.
  Graph g(a + b + 2);
  g.set_label(0, "v0");
  for (int i = 1; i <= a; ++i) {
    g.add_edge(0, i);
    g.set_label(i, vlabel(i));
  }
  int w0 = a + 1;
  g.add_edge(0, w0);
  g.set_label(w0, "w0");
  for (int i = 1; i <= b; ++i) {
    g.add_edge(w0, w0 + i);
    g.set_label(w0 + i, wlabel(i));
  }
  return g;
}

}  // namespace

Graph build(const TreeSpec& spec) {
  spec.validate();
  const int n = spec.order();
  switch (spec.family) {
    case TreeFamily::Path: {
      Graph g = Graph::path(n);
      for (int i = 0; i < n; ++i) g.set_label(i, vlabel(i));
      return g;
    }
    case TreeFamily::Star: {
      Graph g(n);
      g.set_label(0, "v0");
      for (int i = 1; i < n; ++i) {
        g.add_edge(0, i);
        g.set_label(i, vlabel(i));
      }
      return g;
    }
    case TreeFamily::TPrime:
      // T_n' = S(n-3, 1)
      return build_double_star(n - 3, 1);
    case TreeFamily::TStarAst: {
      // E = {v0v1..v0v_{n-3}, v_{n-3}v_{n-2}, v_{n-2}v_{n-1}}
      Graph g(n);
      for (int i = 0; i < n; ++i) g.set_label(i, vlabel(i));
      for (int i = 1; i <= n - 3; ++i) g.add_edge(0, i);
      g.add_edge(n - 3, n - 2);
      g.add_edge(n - 2, n - 1);
      return g;
    }
    case TreeFamily::T1: {
      // E1 = {v0v1..v0v_{n-3}, v_{n-4}v_{n-2}, v_{n-3}v_{n-1}}
      Graph g(n);
      for (int i = 0; i < n; ++i) g.set_label(i, vlabel(i));
      for (int i = 1; i <= n - 3; ++i) g.add_edge(0, i);
      g.add_edge(n - 4, n - 2);
      g.add_edge(n - 3, n - 1);
      return g;
    }
    case TreeFamily::T2:
      // T_n^2 = S(n-4, 2)
      return build_double_star(n - 4, 2);
    case TreeFamily::T3:
      // T_n^3 = S(n-5, 3); arms sorted for n < 8
      return build_double_star(std::max(n - 5, 3), std::min(n - 5, 3));
    case TreeFamily::TDoublePrime: {
      // E2 = {v0v1..v0v_{n-4}, v1v_{n-3}, v1v_{n-2}, v2v_{n-1}}
      Graph g(n);
      for (int i = 0; i < n; ++i) g.set_label(i, vlabel(i));
      for (int i = 1; i <= n - 4; ++i) g.add_edge(0, i);
      g.add_edge(1, n - 3);
      g.add_edge(1, n - 2);
      g.add_edge(2, n - 1);
      return g;
    }
    case TreeFamily::TTriplePrime: {
      // E3 = {v0v1..v0v_{n-4}, v1v_{n-3}, v2v_{n-2}, v3v_{n-1}}
      Graph g(n);
      for (int i = 0; i < n; ++i) g.set_label(i, vlabel(i));
      for (int i = 1; i <= n - 4; ++i) g.add_edge(0, i);
      g.add_edge(1, n - 3);
      g.add_edge(2, n - 2);
      g.add_edge(3, n - 1);
      return g;
    }
    case TreeFamily::DoubleStar:
      return build_double_star(spec.n1, spec.n2);
    case TreeFamily::FreeTree:
      return spec.free;
  }
  throw std::logic_error("build: unreachable");
}

int max_degree(const TreeSpec& spec) {
  spec.validate();
  const int n = spec.n;
  switch (spec.family) {
    case TreeFamily::Path:
      return n >= 3 ? 2 : n - 1;
    case TreeFamily::Star:
      return n - 1;
    case TreeFamily::TPrime:
      return n - 2;
    case TreeFamily::TStarAst:
      return n - 3;
    case TreeFamily::T1:
      return n - 3;
    case TreeFamily::T2:
      return std::max(n - 3, 3);  // w0 wins at n = 5
    case TreeFamily::T3:
      return std::max(n - 4, 4);
    case TreeFamily::TDoublePrime:
      return std::max(n - 4, 3);
    case TreeFamily::TTriplePrime:
      return std::max(n - 4, 2);
    case TreeFamily::DoubleStar:
      return spec.n1 + 1;
    case TreeFamily::FreeTree:
      return spec.free.degrees().max;
  }
  throw std::logic_error("max_degree: unreachable");
}

int alpha2(const Graph& tree) {
  if (!tree.is_tree()) throw std::invalid_argument("alpha2: input is not a tree");
  std::vector<int> side(tree.order(), -1);
  std::queue<int> q;
  side[0] = 0;
  q.push(0);
  int count0 = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : tree.neighborhood(v).members())
      if (side[u] < 0) {
        side[u] = 1 - side[v];
        count0 += side[u] == 0;
        q.push(u);
      }
  }
  return std::max(count0, tree.order() - count0);
}

namespace {

std::vector<int> tree_centers(const Graph& t) {
  const int n = t.order();
  if (n <= 2) {
    std::vector<int> c;
    for (int v = 0; v < n; ++v) c.push_back(v);
    return c;
  }
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  std::vector<int> cur = layer;
  while (remaining > 2) {
    std::vector<int> next;
    remaining -= static_cast<int>(cur.size());
    for (int v : cur)
      for (int u : t.neighborhood(v).members())
        if (--deg[u] == 1) next.push_back(u);
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

std::string ahu_encode(const Graph& t, int root) {
  const int n = t.order();
  std::vector<int> parent(n, -2), order;
  order.reserve(n);
  parent[root] = -1;
  order.push_back(root);
  for (size_t i = 0; i < order.size(); ++i)
    for (int u : t.neighborhood(order[i]).members())
      if (parent[u] == -2) {
        parent[u] = order[i];
        order.push_back(u);
      }
  std::vector<std::string> code(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    std::vector<std::string> kids;
    for (int u : t.neighborhood(v).members())
      if (parent[u] == v) kids.push_back(code[u]);
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    s += ")";
    code[v] = std::move(s);
  }
  return code[root];
}

}  // namespace

std::string tree_code(const Graph& tree) {
  if (!tree.is_tree()) throw std::invalid_argument("tree_code: input is not a tree");
  auto centers = tree_centers(tree);
  std::string best;
  for (int c : centers) {
    std::string s = ahu_encode(tree, c);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

bool tree_isomorphic(const Graph& a, const Graph& b) {
  if (!a.is_tree() || !b.is_tree()) throw std::invalid_argument("tree_isomorphic: input is not a tree");
  if (a.order() != b.order()) return false;
  return tree_code(a) == tree_code(b);
}

std::optional<std::pair<int, int>> double_star_arms(const Graph& tree) {
  if (!tree.is_tree()) return std::nullopt;
  std::vector<int> internal;
  for (int v = 0; v < tree.order(); ++v)
    if (tree.degree(v) >= 2) internal.push_back(v);
  if (internal.size() != 2) return std::nullopt;
  if (!tree.has_edge(internal[0], internal[1])) return std::nullopt;  // cannot happen in a tree
  int a = tree.degree(internal[0]) - 1;
  int b = tree.degree(internal[1]) - 1;
  if (a < b) std::swap(a, b);
  return std::make_pair(a, b);
}

}  // namespace rtl
