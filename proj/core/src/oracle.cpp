#include "rtl/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <mutex>
#include <unordered_set>

#include "rtl/canonical.hpp"
#include "rtl/containment.hpp"
#include "rtl/graph6.hpp"
#include "rtl/pool.hpp"
#include "rtl/turan.hpp"

namespace rtl {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Children of g by adding one vertex joined to every subset of V(g), keeping
/// exactly one labeled representative per child isomorphism class: the new
/// vertex must land in the canonical last orbit, and duplicates arising from
/// different subsets of the same parent are dropped by canonical code.
void accepted_children(const Graph& g, const std::function<void(const Graph&)>& emit,
                       SearchStats& st) {
  const int q = g.order();
  std::unordered_set<std::string> seen;
  Graph base(q + 1);
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v)
      if (g.has_edge(u, v)) base.add_edge(u, v);
  const std::uint64_t subsets = std::uint64_t{1} << q;
  for (std::uint64_t s = 0; s < subsets; ++s) {
    Graph child = base;
    for (std::uint64_t bits = s; bits;) {
      int u = std::countr_zero(bits);
      bits &= bits - 1;
      child.add_edge(u, q);
    }
    auto check = check_canonical_last(child, q);
    if (!check.accepted || !seen.insert(check.code).second) {
      ++st.iso_rejections;
      continue;
    }
    emit(child);
  }
}

/// Depth-first canonical augmentation from `root` (an accepted class rep).
/// enter() sees every accepted graph; returning false prunes its extensions.
/// Graphs of order target_p are not extended.
void augment_dfs(const Graph& root, int target_p,
                 const std::function<bool(const Graph&)>& enter, SearchStats& st) {
  ++st.visited;
  if (!enter(root)) return;
  if (root.order() >= target_p) return;
  accepted_children(root, [&](const Graph& child) { augment_dfs(child, target_p, enter, st); }, st);
}

/// Frontier of accepted graphs at order q0 (sequential; q0 is small), used as
/// deterministic parallel subtree roots.
std::vector<Graph> frontier(int q0, SearchStats& st) {
  std::vector<Graph> out;
  augment_dfs(Graph(1), q0,
              [&](const Graph& g) {
                if (g.order() == q0) out.push_back(g);
                return true;
              },
              st);
  return out;
}

constexpr int kCacheMax = 9;
std::mutex g_cache_mu;
std::map<int, std::vector<Graph>> g_graph_cache;
std::map<int, std::vector<Graph>> g_tree_cache;

void check_graph_cap(int p, const RunConfig& cfg) {
  if (p < 1) throw std::invalid_argument("enumeration: p >= 1 required");
  if (p > cfg.cap_graphs)
    throw CapExceeded("graph enumeration cap exceeded: p=" + std::to_string(p) +
                      " > cap " + std::to_string(cfg.cap_graphs));
}

/// Runs enter() over every accepted graph up to target_p, splitting the
/// augmentation tree over workers at a shallow frontier. make_enter(w) builds
/// the per-worker visitor; merge runs afterwards in chunk order.
void parallel_augment(int target_p, const RunConfig& cfg, SearchStats* stats,
                      const std::function<std::function<bool(const Graph&)>(int)>& make_enter,
                      const std::function<void(int)>& merge_chunk) {
  auto t0 = Clock::now();
  SearchStats st;
  st.workers = std::max(1, cfg.workers);
  const int q0 = std::min(target_p, 6);
  auto roots = frontier(q0, st);

  // The frontier pass visited everything below q0 without the caller's
  // hooks; replay those shallow orders on worker 0 so callers see them.
  if (q0 >= 2) {
    auto enter0 = make_enter(0);
    SearchStats tmp;
    augment_dfs(Graph(1), q0 - 1, [&](const Graph& g) { return enter0(g); }, tmp);
  }

  std::vector<SearchStats> wstats(std::max<std::size_t>(1, std::min<std::size_t>(st.workers, roots.size())));
  parallel_chunks(roots.size(), st.workers, [&](int chunk, std::size_t b, std::size_t e) {
    auto enter = make_enter(chunk);
    for (std::size_t i = b; i < e; ++i)
      augment_dfs(roots[i], target_p, enter, wstats[chunk]);
  });
  for (auto& ws : wstats) st += ws;
  for (std::size_t c = 0; c < wstats.size(); ++c) merge_chunk(static_cast<int>(c));
  st.elapsed_s = seconds_since(t0);
  if (stats) *stats = st;
}

}  // namespace

void enum_graphs_visit(int target_p, const RunConfig& cfg,
                       const std::function<bool(int, const Graph&)>& enter, SearchStats* stats) {
  check_graph_cap(target_p, cfg);
  parallel_augment(
      target_p, cfg, stats,
      [&](int w) {
        return std::function<bool(const Graph&)>([&enter, w](const Graph& g) { return enter(w, g); });
      },
      [](int) {});
}

const std::vector<Graph>& enum_graphs(int p, const RunConfig& cfg, SearchStats* stats) {
  check_graph_cap(p, cfg);
  {
    std::lock_guard<std::mutex> lk(g_cache_mu);
    auto it = g_graph_cache.find(p);
    if (it != g_graph_cache.end()) {
      if (stats) {
        *stats = SearchStats{};
        stats->visited = it->second.size();
        stats->workers = std::max(1, cfg.workers);
      }
      return it->second;
    }
  }
  if (p > kCacheMax)
    throw CapExceeded("enum_graphs: materialized enumeration capped at order " +
                      std::to_string(kCacheMax) + "; larger orders stream internally");

  std::vector<std::vector<Graph>> parts(std::max(1, cfg.workers));
  parallel_augment(
      p, cfg, stats,
      [&](int w) {
        return std::function<bool(const Graph&)>([&parts, w, p](const Graph& g) {
          if (g.order() == p) parts[w].push_back(g);
          return true;
        });
      },
      [](int) {});
  std::vector<Graph> all;
  for (auto& part : parts)
    for (auto& g : part) all.push_back(std::move(g));

  std::lock_guard<std::mutex> lk(g_cache_mu);
  auto [it, inserted] = g_graph_cache.emplace(p, std::move(all));
  (void)inserted;
  return it->second;
}

const std::vector<Graph>& enum_trees(int n, const RunConfig& cfg) {
  if (n < 1) throw std::invalid_argument("enum_trees: n >= 1 required");
  if (n > cfg.cap_trees)
    throw CapExceeded("tree enumeration cap exceeded: n=" + std::to_string(n) + " > cap " +
                      std::to_string(cfg.cap_trees));
  std::lock_guard<std::mutex> lk(g_cache_mu);
  if (auto it = g_tree_cache.find(n); it != g_tree_cache.end()) return it->second;
  // Grow by attaching a leaf everywhere; dedup by rooted canonical code.
  if (g_tree_cache.find(1) == g_tree_cache.end()) g_tree_cache[1] = {Graph(1)};
  for (int q = 2; q <= n; ++q) {
    if (g_tree_cache.count(q)) continue;
    std::vector<Graph> next;
    std::unordered_set<std::string> seen;
    for (const Graph& t : g_tree_cache[q - 1])
      for (int v = 0; v < t.order(); ++v) {
        Graph bigger(q);
        for (int a = 0; a < t.order(); ++a)
          for (int b = a + 1; b < t.order(); ++b)
            if (t.has_edge(a, b)) bigger.add_edge(a, b);
        bigger.add_edge(v, q - 1);
        if (seen.insert(tree_code(bigger)).second) next.push_back(std::move(bigger));
      }
    g_tree_cache[q] = std::move(next);
  }
  return g_tree_cache[n];
}

long long oracle_ex(int p, const TreeSpec& tree, const RunConfig& cfg, SearchStats* stats) {
  tree.validate();
  if (tree.order() < 2) throw std::invalid_argument("oracle_ex: tree order >= 2 required");
  check_graph_cap(p, cfg);
  auto t0 = Clock::now();
  const Graph t = build(tree);
  const long long full = static_cast<long long>(p) * (p - 1) / 2;
  if (p < t.order()) {
    if (stats) *stats = SearchStats{.visited = 0, .workers = std::max(1, cfg.workers)};
    return full;  // the tree cannot fit at all; K_p attains the maximum
  }

  // Deterministic seed bound: disjoint cliques of order n-1 are always T-free.
  auto [k0, r0] = decompose(p, t.order());
  const long long seed = static_cast<long long>(k0) * (t.order() - 1) * (t.order() - 2) / 2 +
                         static_cast<long long>(r0) * (r0 - 1) / 2;

  if (p <= kCacheMax) {
    const auto& all = enum_graphs(p, cfg);
    std::vector<long long> best(std::max(1, cfg.workers), seed);
    std::vector<SearchStats> wstats(best.size());
    parallel_chunks(all.size(), cfg.workers, [&](int w, std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) {
        long long edges = all[i].edge_count();
        if (edges <= best[w]) continue;
        ++wstats[w].containment_calls;
        if (!contains_tree(all[i], t, cfg.contain_budget)) best[w] = edges;
      }
    });
    long long result = seed;
    SearchStats st;
    st.workers = std::max(1, cfg.workers);
    st.visited = all.size();
    for (std::size_t w = 0; w < best.size(); ++w) {
      result = std::max(result, best[w]);
      st += wstats[w];
    }
    st.elapsed_s = seconds_since(t0);
    if (stats) *stats = st;
    return result;
  }

  // Streaming search with subtree pruning: a T-containing graph only extends
  // to T-containing graphs, and a subtree is hopeless when even completing to
  // K_p cannot beat the worker-local best.
  std::vector<long long> best(std::max(1, cfg.workers), seed);
  std::vector<SearchStats> cstats(best.size());
  parallel_augment(
      p, cfg, stats,
      [&](int w) {
        return std::function<bool(const Graph&)>([&, w, p, full](const Graph& g) {
          const int q = g.order();
          long long edges = g.edge_count();
          long long reachable = edges + (full - static_cast<long long>(q) * (q - 1) / 2);
          if (reachable <= best[w]) return false;
          ++cstats[w].containment_calls;
          if (contains_tree(g, t, cfg.contain_budget)) return false;
          if (q == p && edges > best[w]) best[w] = edges;
          return true;
        });
      },
      [](int) {});
  long long result = seed;
  for (std::size_t w = 0; w < best.size(); ++w) result = std::max(result, best[w]);
  if (stats) {
    for (auto& cs : cstats) *stats += cs;
    stats->elapsed_s = seconds_since(t0);
  }
  return result;
}

int oracle_ramsey(const TreeSpec& a, const TreeSpec& b, int p_cap, const RunConfig& cfg,
                  SearchStats* stats) {
  a.validate();
  b.validate();
  if (p_cap < 1 || p_cap > cfg.cap_graphs)
    throw CapExceeded("oracle_ramsey: cap " + std::to_string(p_cap) + " outside 1.." +
                      std::to_string(cfg.cap_graphs));
  auto t0 = Clock::now();
  const Graph ta = build(a), tb = build(b);
  SearchStats st;
  st.workers = std::max(1, cfg.workers);

  auto is_counterexample = [&](const Graph& g) {
    st.containment_calls += 2;
    return !contains_tree(g, ta, cfg.contain_budget) &&
           !contains_tree(g.complement(), tb, cfg.contain_budget);
  };

  // Counterexamples are closed under canonical deletion, so each level is
  // generated by augmenting only the previous level's counterexamples.
  std::vector<Graph> level;
  {
    Graph k1(1);
    ++st.visited;
    if (!is_counterexample(k1)) {
      if (stats) {
        st.elapsed_s = seconds_since(t0);
        *stats = st;
      }
      return 1;
    }
    level.push_back(std::move(k1));
  }
  for (int p = 2; p <= p_cap; ++p) {
    std::vector<std::vector<Graph>> parts(std::max<std::size_t>(1, std::min<std::size_t>(std::max(1, cfg.workers), level.size())));
    std::vector<SearchStats> wstats(parts.size());
    parallel_chunks(level.size(), cfg.workers, [&](int w, std::size_t bgn, std::size_t end) {
      for (std::size_t i = bgn; i < end; ++i)
        accepted_children(level[i],
                          [&](const Graph& child) {
                            ++wstats[w].visited;
                            wstats[w].containment_calls += 2;
                            if (!contains_tree(child, ta, cfg.contain_budget) &&
                                !contains_tree(child.complement(), tb, cfg.contain_budget))
                              parts[w].push_back(child);
                          },
                          wstats[w]);
    });
    std::vector<Graph> next;
    for (auto& part : parts)
      for (auto& g : part) next.push_back(std::move(g));
    for (auto& ws : wstats) st += ws;
    if (next.empty()) {
      st.elapsed_s = seconds_since(t0);
      if (stats) *stats = st;
      return p;
    }
    level = std::move(next);
  }
  throw CapExceeded("oracle_ramsey: threshold not reached by p_cap=" + std::to_string(p_cap));
}

Conjecture1Report scan_conjecture1(int n_max, int p_max, const RunConfig& cfg) {
  if (n_max < 3 || p_max < n_max)
    throw std::invalid_argument("scan_conjecture1: requires p_max >= n_max >= 3");
  auto t0 = Clock::now();
  Conjecture1Report rep;
  rep.n_max = n_max;
  rep.p_max = p_max;
  rep.stats.workers = std::max(1, cfg.workers);

  struct TreeEntry {
    Graph t;
    int alpha = 0;
  };
  std::vector<TreeEntry> trees;
  for (int n = 3; n <= n_max; ++n)
    for (const Graph& t : enum_trees(n, cfg)) trees.push_back({t, alpha2(t)});

  for (int p = 3; p <= p_max; ++p) {
    const auto& hosts = enum_graphs(p, cfg);
    std::vector<Conjecture1Report::Violation> found;
    std::vector<std::vector<Conjecture1Report::Violation>> parts(std::max(1, cfg.workers));
    std::vector<SearchStats> wstats(parts.size());
    std::vector<std::uint64_t> checked(parts.size(), 0), hostsc(parts.size(), 0);
    parallel_chunks(hosts.size(), cfg.workers, [&](int w, std::size_t bgn, std::size_t end) {
      for (std::size_t i = bgn; i < end; ++i) {
        const Graph& g = hosts[i];
        if (!g.connected()) continue;
        ++hostsc[w];
        int delta = g.degrees().min;
        for (const auto& te : trees) {
          if (te.t.order() > p || te.alpha > delta) continue;
          ++checked[w];
          ++wstats[w].containment_calls;
          if (!contains_tree(g, te.t, cfg.contain_budget))
            parts[w].push_back({encode_graph6(g), encode_graph6(te.t)});
        }
      }
    });
    for (std::size_t w = 0; w < parts.size(); ++w) {
      for (auto& v : parts[w]) rep.violations.push_back(std::move(v));
      rep.stats += wstats[w];
      rep.pairs_checked += checked[w];
      rep.hosts_checked += hostsc[w];
    }
    (void)found;
  }
  rep.stats.elapsed_s = seconds_since(t0);
  return rep;
}

Conjecture2Report scan_conjecture2(int m_max, int n_max, const RunConfig& cfg) {
  if (m_max < 3 || n_max < 3)
    throw std::invalid_argument("scan_conjecture2: requires m_max, n_max >= 3");
  auto t0 = Clock::now();
  Conjecture2Report rep;
  rep.m_max = m_max;
  rep.n_max = n_max;
  rep.stats.workers = std::max(1, cfg.workers);
  for (int m = 3; m <= m_max; ++m) {
    TreeSpec star = TreeSpec::of(TreeFamily::Star, m);
    for (int n = 3; n <= n_max; ++n)
      for (const Graph& t : enum_trees(n, cfg)) {
        int a2 = alpha2(t);
        if (a2 < m - 2) continue;
        Conjecture2Row row;
        row.m = m;
        row.tree_g6 = encode_graph6(t);
        row.tree_order = n;
        row.alpha2 = a2;
        row.bound = m - 1 + a2;
        SearchStats st;
        try {
          row.oracle_r = oracle_ramsey(star, TreeSpec::free_tree(t), static_cast<int>(row.bound), cfg, &st);
          row.holds = *row.oracle_r <= row.bound;
        } catch (const CapExceeded&) {
          row.oracle_r = std::nullopt;
          row.holds = false;
        }
        rep.stats += st;
        if (!row.holds) ++rep.violations;
        rep.rows.push_back(std::move(row));
      }
  }
  rep.stats.elapsed_s = seconds_since(t0);
  return rep;
}

}  // namespace rtl
