#include "rtl/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "rtl/graph6.hpp"

namespace rtl {

namespace {

using u64 = std::uint64_t;

constexpr u64 kInf = ~u64{0};

struct Engine {
  int n = 0;
  std::vector<u64> adj;       // adjacency mask per vertex
  std::vector<int> color;     // refined color, used for candidate ordering
  std::vector<int> twin_rep;  // smallest vertex structurally interchangeable

  // DFS state. Invariant: along the current path, cols[0..depth-1] equals
  // best_cols[0..depth-1]; any strictly smaller column immediately replaces
  // the best tail, so pruning only ever compares against the running minimum.
  std::vector<int> perm;
  std::vector<int> pos;
  std::vector<u64> best_cols;
  std::vector<int> best_perm;
  int forced_last = -1;

  const std::vector<u64>* target = nullptr;  // match mode
  bool matched = false;

  explicit Engine(const Graph& g) {
    n = g.order();
    adj.assign(n, 0);
    if (g.words_per_row() == 1) {
      for (int v = 0; v < n; ++v) adj[v] = g.row(v)[0];
    } else {
      for (int v = 0; v < n; ++v)
        for (int u : g.neighborhood(v).members()) adj[v] |= u64{1} << u;
    }
    refine();
    find_twins();
    perm.assign(n, -1);
    pos.assign(n, -1);
  }

  void refine() {
    // One round of degree + sorted-neighbor-degree refinement. The colors
    // only steer candidate order (better first guesses, earlier pruning);
    // minimality never depends on them.
    color.assign(n, 0);
    for (int v = 0; v < n; ++v) color[v] = std::popcount(adj[v]);
    std::vector<long long> sig(n);
    for (int v = 0; v < n; ++v) {
      long long acc = color[v];
      u64 w = adj[v];
      while (w) {
        acc = acc * 131 + color[std::countr_zero(w)];
        w &= w - 1;
      }
      sig[v] = acc;
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return std::pair(color[a], sig[a]) < std::pair(color[b], sig[b]);
    });
    std::vector<int> nc(n);
    int next = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && (color[order[i]] != color[order[i - 1]] || sig[order[i]] != sig[order[i - 1]]))
        ++next;
      nc[order[i]] = next;
    }
    color = std::move(nc);
  }

  void find_twins() {
    // u, w interchangeable iff their adjacency agrees away from {u, w}.
    twin_rep.resize(n);
    std::iota(twin_rep.begin(), twin_rep.end(), 0);
    for (int u = 0; u < n; ++u)
      for (int w = u + 1; w < n; ++w) {
        if (twin_rep[w] != w) continue;
        u64 mask = ~((u64{1} << u) | (u64{1} << w));
        if ((adj[u] & mask) == (adj[w] & mask)) twin_rep[w] = twin_rep[u];
      }
  }

  u64 column_bits(int v, int depth) const {
    u64 c = 0;
    for (int i = 0; i < depth; ++i) c = (c << 1) | ((adj[v] >> perm[i]) & 1);
    return c;
  }

  struct Cand {
    u64 col;
    int colr;
    int v;
    bool operator<(const Cand& o) const {
      if (col != o.col) return col < o.col;
      if (colr != o.colr) return colr < o.colr;
      return v < o.v;
    }
  };

  int collect_candidates(int depth, Cand* cands) const {
    if (depth == n - 1 && forced_last >= 0) {
      if (pos[forced_last] != -1) return 0;
      cands[0] = {column_bits(forced_last, depth), color[forced_last], forced_last};
      return 1;
    }
    int cnt = 0;
    for (int v = 0; v < n; ++v) {
      if (pos[v] != -1) continue;
      if (forced_last >= 0 && v == forced_last) continue;
      int rep = twin_rep[v];
      if (rep != v && pos[rep] == -1 && !(forced_last >= 0 && rep == forced_last)) continue;
      cands[cnt++] = {column_bits(v, depth), color[v], v};
    }
    std::sort(cands, cands + cnt);
    return cnt;
  }

  void dfs_min(int depth) {
    if (depth == n) {
      if (best_perm.empty() || best_perm[0] < 0) best_perm = perm;
      return;
    }
    Cand cands[64];
    int cnt = collect_candidates(depth, cands);
    for (int i = 0; i < cnt; ++i) {
      const Cand& c = cands[i];
      if (c.col > best_cols[depth]) break;  // ascending: the rest are worse
      if (c.col < best_cols[depth]) {
        best_cols[depth] = c.col;
        std::fill(best_cols.begin() + depth + 1, best_cols.end(), kInf);
        if (!best_perm.empty()) best_perm[0] = -1;  // stale
      }
      perm[depth] = c.v;
      pos[c.v] = depth;
      dfs_min(depth + 1);
      pos[c.v] = -1;
      perm[depth] = -1;
    }
  }

  void dfs_match(int depth) {
    if (matched) return;
    if (depth == n) {
      matched = true;
      return;
    }
    Cand cands[64];
    int cnt = collect_candidates(depth, cands);
    for (int i = 0; i < cnt; ++i) {
      const Cand& c = cands[i];
      if (c.col > (*target)[depth]) break;
      if (c.col < (*target)[depth]) continue;  // only exact prefixes can reach the minimum
      perm[depth] = c.v;
      pos[c.v] = depth;
      dfs_match(depth + 1);
      pos[c.v] = -1;
      perm[depth] = -1;
      if (matched) return;
    }
  }

  std::vector<u64> run_canonical() {
    best_cols.assign(n, kInf);
    best_perm.assign(n, -1);
    forced_last = -1;
    target = nullptr;
    dfs_min(0);
    return best_cols;
  }

  bool run_forced_last_matches(int v, const std::vector<u64>& canon) {
    forced_last = v;
    target = &canon;
    matched = false;
    std::fill(perm.begin(), perm.end(), -1);
    std::fill(pos.begin(), pos.end(), -1);
    dfs_match(0);
    forced_last = -1;
    target = nullptr;
    return matched;
  }
};

std::string code_from_cols(int n, const std::vector<u64>& cols) {
  // Same byte layout as encode_graph6 of the canonical form: the columns are
  // exactly the upper-triangle bits in column order, MSB-first per column.
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0, nbits = 0;
  for (int col = 1; col < n; ++col)
    for (int rowv = 0; rowv < col; ++rowv) {
      int bit = static_cast<int>((cols[col] >> (col - 1 - rowv)) & 1);
      acc = (acc << 1) | bit;
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

}  // namespace

Graph canonical_form(const Graph& g, std::vector<int>* perm_out) {
  const int n = g.order();
  if (n > 64) throw std::length_error("canonical_form: order > 64 unsupported");
  if (n == 0) {
    if (perm_out) perm_out->clear();
    return g;
  }
  Engine e(g);
  e.run_canonical();
  Graph c(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.has_edge(e.best_perm[i], e.best_perm[j])) c.add_edge(i, j);
  if (perm_out) *perm_out = e.best_perm;
  return c;
}

std::string canonical_code(const Graph& g) {
  return encode_graph6(canonical_form(g));
}

bool is_canonical_last(const Graph& g, int v) {
  const int n = g.order();
  if (n > 64) throw std::length_error("is_canonical_last: order > 64 unsupported");
  if (v < 0 || v >= n) throw std::out_of_range("is_canonical_last: vertex out of range");
  if (n == 1) return true;
  Engine e(g);
  auto canon = e.run_canonical();
  return e.run_forced_last_matches(v, canon);
}

AugmentCheck check_canonical_last(const Graph& g, int v) {
  const int n = g.order();
  if (n > 62) throw std::length_error("check_canonical_last: order > 62 unsupported");
  if (v < 0 || v >= n) throw std::out_of_range("check_canonical_last: vertex out of range");
  AugmentCheck res;
  if (n == 1) {
    res.accepted = true;
    res.code = code_from_cols(1, {});
    return res;
  }
  Engine e(g);
  auto canon = e.run_canonical();
  res.accepted = e.run_forced_last_matches(v, canon);
  if (res.accepted) res.code = code_from_cols(n, canon);
  return res;
}

}  // namespace rtl
