// Acceptance suite: one criterion per selector (1..8), or "all".
// Prints one [PASS]/[FAIL] line per criterion (plus per-instance lines where
// a criterion bundles many checks) and exits nonzero when anything failed.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rtl/canonical.hpp"
#include "rtl/certify.hpp"
#include "rtl/containment.hpp"
#include "rtl/graph6.hpp"
#include "rtl/oracle.hpp"
#include "rtl/ramsey.hpp"
#include "rtl/serialize.hpp"
#include "rtl/turan.hpp"
#include "rtl/witness.hpp"

#ifndef RTL_GOLDEN_DIR
#define RTL_GOLDEN_DIR "golden"
#endif

using namespace rtl;

namespace {

using Clock = std::chrono::steady_clock;

double secs(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  int checks = 0;
  int failures = 0;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      std::printf("    mismatch: %s\n", what.c_str());
    }
  }
};

void line(bool ok, int criterion, const std::string& text) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, text.c_str());
  std::fflush(stdout);
}

// --- criterion 1: Turan formula / oracle equivalence, p <= 9 ----------------

bool criterion1(const RunConfig& cfg) {
  auto t0 = Clock::now();
  Outcome out;
  auto sweep = [&](const std::string& fam, int n_lo, int n_hi, bool star_pmin) {
    for (int n = n_lo; n <= n_hi; ++n) {
      TreeSpec spec = TreeSpec::parse(fam + ":" + std::to_string(n));
      for (int p = star_pmin ? n - 1 : n; p <= 9; ++p) {
        ExtremalValue v = ex_eval(spec, p);
        if (v.kind == ExKind::OutOfDomain) {
          // the only in-sweep gap: T* at (n,p) = (8,9), remainder 2 below the
          // order-11 formula threshold
          out.expect(fam == "tstar" && n == 8 && p == 9,
                     fam + ":" + std::to_string(n) + " p=" + std::to_string(p) +
                         " unexpectedly out of domain");
          continue;
        }
        long long truth = oracle_ex(p, spec, cfg);
        if (v.value != truth)
          out.expect(false, fam + ":" + std::to_string(n) + " p=" + std::to_string(p) +
                                " formula=" + std::to_string(v.value) +
                                " oracle=" + std::to_string(truth));
        else
          ++out.checks;
      }
    }
  };
  sweep("star", 3, 10, true);
  sweep("path", 3, 9, false);
  sweep("tprime", 5, 9, false);
  sweep("tstar", 6, 9, false);
  sweep("t1", 5, 9, false);
  sweep("t2", 5, 9, false);
  std::ostringstream ss;
  ss << "Turan formula equals exhaustive oracle on every stated domain point (p <= 9): "
     << out.checks << " comparisons, " << out.failures << " mismatches (" << secs(t0) << "s)";
  line(out.failures == 0, 1, ss.str());
  return out.failures == 0;
}

// --- criterion 2: tiny-scale Ramsey oracle agreement ------------------------

bool criterion2(const RunConfig& cfg) {
  auto t0 = Clock::now();
  Outcome out;
  struct Case {
    const char *a, *b;
    int r;
  };
  for (const Case& c : {Case{"star:3", "star:3", 3}, Case{"star:3", "star:4", 5},
                        Case{"star:4", "star:4", 6}, Case{"star:4", "tprime:5", 6}}) {
    auto tabled = ramsey_eval(TreeSpec::parse(c.a), TreeSpec::parse(c.b));
    bool ok = tabled.outcome == RamseyResult::Outcome::Exact && tabled.value == c.r;
    int oracle = oracle_ramsey(TreeSpec::parse(c.a), TreeSpec::parse(c.b), 8, cfg);
    ok = ok && oracle == c.r;
    out.expect(ok, std::string(c.a) + " vs " + c.b + ": table=" +
                       std::to_string(tabled.value) + " oracle=" + std::to_string(oracle) +
                       " want " + std::to_string(c.r));
  }
  std::ostringstream ss;
  ss << "table equals exhaustive Ramsey oracle on the four tiny pairs (" << secs(t0) << "s)";
  line(out.failures == 0, 2, ss.str());
  return out.failures == 0;
}

// --- criterion 3: full-scale certificates ------------------------------------

bool criterion3(const RunConfig& cfg) {
  struct Inst {
    std::string label;
    const char* a;
    const char* b;
    long long r;
  };
  std::vector<Inst> insts = {
      {"Thm 3.1 even n=30", "tdp:30", "tdp:30", 51},
      {"Thm 3.1 even n=30 (T'' vs T''')", "tdp:30", "ttp:30", 51},
      {"Thm 3.1 odd n=23", "tdp:23", "tdp:23", 38},
      {"Thm 3.1 odd n=23 (T'' vs T''')", "tdp:23", "ttp:23", 38},
      {"Thm 3.2 n=23 (T3,T'')", "t3:23", "tdp:23", 38},
      {"Thm 3.2 n=23 (T3,T''')", "t3:23", "ttp:23", 38},
      {"Thm 3.2 n=23 (T3,T3)", "t3:23", "t3:23", 38},
      {"Thm 3.3 n=12", "tdp:12", "tprime:12", 19},
      {"Thm 3.4 n=17", "tdp:17", "t1:17", 27},
      {"Thm 3.6 n=33 (path vs T3)", "path:33", "t3:33", 57},
      {"Thm 4.4 m=8 n=17", "star:8", "tdp:17", 20},
      {"Thm 4.5 m=7 n=12", "star:7", "tdp:12", 13},
      {"Thm 4.6 n=16 (G0 side)", "star:13", "t3:16", 24},
      {"Thm 4.6 n=17 (regular side)", "star:14", "t3:17", 26},
      {"Thm 5.1 m=9 n=13 G_m=path:9", "path:9", "tdp:13", 17},
      {"Thm 5.1 m=9 n=13 G_m=tprime:9", "tprime:9", "tdp:13", 17},
      {"Thm 5.1 m=9 n=13 G_m=tstar:9", "tstar:9", "tdp:13", 17},
      {"Thm 5.1 m=9 n=13 G_m=t1:9", "t1:9", "tdp:13", 17},
      {"Thm 5.1 m=9 n=13 G_m=t2:9", "t2:9", "tdp:13", 17},
      {"Thm 5.1 m=9 n=13 G_m=t3:9", "t3:9", "tdp:13", 17},
      {"Thm 5.1 m=9 n=13 G_m=tdp:9", "tdp:9", "tdp:13", 17},
      {"Thm 5.1 m=9 n=13 G_m=ttp:9", "ttp:9", "tdp:13", 17},
      {"Thm 5.2 m=12 n=17", "tprime:12", "tdp:17", 23},
      {"Thm 5.3 n=15", "tprime:12", "t3:15", 21},
      {"Thm 5.4 m=10 n=12", "tdp:10", "tprime:12", 19},
      {"Thm 5.4 m=10 n=51", "tdp:10", "tprime:51", 57},
      {"Thm 6.1 m=9 n=40", "t1:9", "tdp:40", 43},
  };
  int failures = 0;
  for (const auto& inst : insts) {
    auto t0 = Clock::now();
    std::string detail;
    bool ok = false;
    try {
      Certificate c = certify(TreeSpec::parse(inst.a), TreeSpec::parse(inst.b), cfg);
      ok = c.claimed_r == inst.r && c.status == Certificate::Status::Complete;
      std::ostringstream d;
      d << "r=" << c.claimed_r << " "
        << (c.status == Certificate::Status::Complete ? "COMPLETE" : "PARTIAL");
      if (!c.failing.empty()) d << " failing=" << c.failing;
      if (c.upper.constructible)
        d << " upper " << c.upper.side1.value << "+" << c.upper.side2.value << "="
          << c.upper.sum << (c.upper.holds ? " < " : " >= ") << c.upper.binom;
      if (c.lower) d << " witness=" << c.lower->construction << "@" << c.lower->order;
      detail = d.str();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("  [%s] %s: %s (%.2fs)\n", ok ? "ok" : "FAIL", inst.label.c_str(),
                detail.c_str(), secs(t0));
    std::fflush(stdout);
  }
  std::ostringstream ss;
  ss << "two-sided certificates COMPLETE at the stated parameters: " << insts.size() - failures
     << "/" << insts.size() << " instances";
  line(failures == 0, 3, ss.str());
  return failures == 0;
}

// --- criterion 4: audit reproduces the internal arithmetic -------------------

bool criterion4(const RunConfig& cfg) {
  auto t0 = Clock::now();
  Outcome out;

  auto rows32 = audit_theorem("3.2", 23, 60, 0, 0, /*probe_witness=*/false);
  out.expect(rows32.size() == 38, "expected 38 audit rows for 3.2 on 23..60");
  for (const auto& r : rows32) {
    out.expect(r.upper.binom == 2LL * r.n * r.n - 17 * r.n + 36,
               "3.2 binomial mismatch at n=" + std::to_string(r.n));
    out.expect(r.upper.holds, "3.2 certificate does not hold at n=" + std::to_string(r.n));
  }

  auto rows31 = audit_theorem("3.1", 10, 60, 0, 0, /*probe_witness=*/true);
  for (const auto& r : rows31) {
    if (r.n % 2 != 0) continue;
    bool expect_hold = r.n >= 30;
    out.expect(r.upper.holds == expect_hold,
               "3.1 even branch at n=" + std::to_string(r.n) + ": upper_holds=" +
                   (r.upper.holds ? "true" : "false"));
    if (r.n == 10) {
      out.expect(!r.witness_at_r_g6.empty(), "no refuting coloring found at n=10");
      if (!r.witness_at_r_g6.empty()) {
        Graph w = decode_graph6(r.witness_at_r_g6);
        out.expect(canonical_code(w) == canonical_code(two_clique_union(1, 9, 1, 2)),
                   "the n=10 coloring is not K_9 u K_2");
        Graph t = build(TreeSpec::parse("tdp:10"));
        out.expect(!contains_tree(w, t, cfg.contain_budget), "red side contains the broom");
        out.expect(!contains_tree(w.complement(), t, cfg.contain_budget),
                   "blue side contains the broom");
        if (out.failures == 0)
          std::printf("  note: n=10 coloring verified; the pair has lower bound >= %d\n",
                      w.order() + 1);
      }
    }
  }

  std::ostringstream ss;
  ss << "audit reproduces the certificate arithmetic (3.2 on 23..60; 3.1 even holds iff n >= 30; "
        "n=10 refuting coloring verified): "
     << out.checks << " checks, " << out.failures << " failures (" << secs(t0) << "s)";
  line(out.failures == 0, 4, ss.str());
  return out.failures == 0;
}

// --- criterion 5: G0 invariants ----------------------------------------------

bool criterion5(const RunConfig&) {
  auto t0 = Clock::now();
  Outcome out;
  for (int n = 16; n <= 40; n += 2) {
    Graph g = g0_graph(n);
    out.expect(g.order() == 2 * n - 9, "order at n=" + std::to_string(n));
    auto d = g.degrees();
    out.expect(std::count(d.sorted_desc.begin(), d.sorted_desc.end(), n - 4) == 3,
               "three high-degree vertices at n=" + std::to_string(n));
    out.expect(std::count(d.sorted_desc.begin(), d.sorted_desc.end(), n - 5) == 2 * n - 12,
               "low-degree count at n=" + std::to_string(n));
    out.expect(!contains_double_star(g, n - 5, 3), "contains S(n-5,3) at n=" + std::to_string(n));
    out.expect(g.complement().degrees().max == n - 5,
               "complement max degree at n=" + std::to_string(n));
  }
  std::ostringstream ss;
  ss << "G0 invariants for even n in 16..40 (" << out.checks << " checks, " << out.failures
     << " failures, " << secs(t0) << "s)";
  line(out.failures == 0, 5, ss.str());
  return out.failures == 0;
}

// --- criterion 6: decider vs embedder cross-product ---------------------------

bool criterion6(const RunConfig& cfg) {
  auto t0 = Clock::now();
  long long checked = 0, mismatches = 0;
  std::vector<std::pair<int, int>> stars = {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {2, 2}, {3, 2}};
  for (int p = 1; p <= 7; ++p) {
    for (const auto& host : enum_graphs(p, cfg))
      for (auto [n1, n2] : stars) {
        Graph t = build(TreeSpec::double_star(n1, n2));
        bool by_criterion = contains_double_star(host, n1, n2);
        bool by_embedder = embed_tree(host, t).has_value();
        ++checked;
        if (by_criterion != by_embedder) ++mismatches;
      }
  }
  std::ostringstream ss;
  ss << "double-star decider equals the generic embedder on all hosts of order <= 7: " << checked
     << " pairs, " << mismatches << " mismatches (" << secs(t0) << "s)";
  line(mismatches == 0, 6, ss.str());
  return mismatches == 0;
}

// --- criterion 7: conjecture scans --------------------------------------------

bool criterion7(const RunConfig& cfg) {
  auto t0 = Clock::now();
  Outcome out;
  auto rep = scan_conjecture1(7, 7, cfg);
  out.expect(rep.violations.empty(),
             "conjecture 1 scan (n<=7, p<=7) found " + std::to_string(rep.violations.size()) +
                 " violations");
  std::printf("  conj1 n<=7 p<=7: %llu host/tree pairs checked, %zu counterexamples\n",
              static_cast<unsigned long long>(rep.pairs_checked), rep.violations.size());
  auto rep_ext = scan_conjecture1(8, 8, cfg);
  out.expect(rep_ext.violations.empty(),
             "conjecture 1 extended scan (n<=8, p<=8) found " +
                 std::to_string(rep_ext.violations.size()) + " violations");
  std::printf("  conj1 n<=8 p<=8: %llu host/tree pairs checked, %zu counterexamples\n",
              static_cast<unsigned long long>(rep_ext.pairs_checked), rep_ext.violations.size());
  for (const auto& v : rep_ext.violations) {
    Graph h = decode_graph6(v.host_g6);
    Graph t = decode_graph6(v.tree_g6);
    std::printf(
        "    finding: host %s (connected, min degree %d) has no copy of tree %s "
        "(alpha2 = %d <= min degree); verified by the containment module\n",
        v.host_g6.c_str(), h.degrees().min, v.tree_g6.c_str(), alpha2(t));
  }
  auto rep2 = scan_conjecture2(4, 6, cfg);
  out.expect(rep2.violations == 0,
             "conjecture 2 scan (m<=4, n<=6) found " + std::to_string(rep2.violations) +
                 " violations");
  std::printf("  conj2 m<=4 n<=6: %zu rows, %llu bound violations\n", rep2.rows.size(),
              static_cast<unsigned long long>(rep2.violations));
  for (const auto& row : rep2.rows) {
    if (row.holds) continue;
    std::printf(
        "    finding: m=%d tree %s (order %d, alpha2 %d): bound m-1+alpha2 = %lld sits below "
        "the tree order, so no order-%lld coloring can decide it\n",
        row.m, row.tree_g6.c_str(), row.tree_order, row.alpha2, row.bound, row.bound);
  }
  std::ostringstream ss;
  ss << "conjecture scans complete with empty violation reports (findings, not assertions) ("
     << secs(t0) << "s)";
  line(out.failures == 0, 7, ss.str());
  return out.failures == 0;
}

// --- criterion 8: graph6 round trip + golden stability -------------------------

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f.good()) return {};
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

bool criterion8(const RunConfig& cfg) {
  auto t0 = Clock::now();
  Outcome out;
  long long rt = 0;
  for (int p = 1; p <= 7; ++p)
    for (const auto& g : enum_graphs(p, cfg)) {
      ++rt;
      if (!(decode_graph6(encode_graph6(g)) == g))
        out.expect(false, "round trip failed for " + encode_graph6(g));
      else
        ++out.checks;
    }

  const std::string dir = RTL_GOLDEN_DIR;
  auto stable = [&](const std::string& name, const std::string& produced) {
    std::string want = read_file(dir + "/" + name);
    out.expect(!want.empty(), "missing golden file " + name);
    out.expect(produced == want, "golden drift in " + name);
  };
  {
    TreeSpec a = TreeSpec::parse("tprime:12"), b = TreeSpec::parse("t3:17");
    auto once = finish_json("ramsey", to_json(ramsey_eval(a, b), a, b), false);
    auto twice = finish_json("ramsey", to_json(ramsey_eval(a, b), a, b), false);
    out.expect(once == twice, "ramsey serialization is not deterministic");
    stable("ramsey_tprime12_t3_17.json", once);
  }
  {
    auto cert = certify(TreeSpec::parse("tprime:9"), TreeSpec::parse("tdp:13"), cfg);
    stable("certify_tprime9_tdp13.json", finish_json("certify", to_json(cert), false));
  }
  stable("ex_table_tstar9.csv", ex_table_csv(TreeSpec::parse("tstar:9"), 9, 20));
  stable("audit_thm32.csv", audit_csv(audit_theorem("3.2", 23, 26)));
  {
    std::vector<TreeSpec> rows, cols;
    for (int m = 4; m <= 10; ++m) rows.push_back(TreeSpec::parse("star:" + std::to_string(m)));
    for (int n = 15; n <= 25; ++n) cols.push_back(TreeSpec::parse("tdp:" + std::to_string(n)));
    stable("report_star_tdp.csv", report_grid_csv(rows, cols));
  }
  std::ostringstream ss;
  ss << "graph6 round-trip identity on " << rt
     << " graphs of order <= 7 and byte-stable golden outputs: " << out.failures << " failures ("
     << secs(t0) << "s)";
  line(out.failures == 0, 8, ss.str());
  return out.failures == 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;  // workers default to the hardware
  std::string which = argc > 1 ? argv[1] : "all";
  bool ok = true;
  auto want = [&](int k) { return which == "all" || which == std::to_string(k); };
  if (want(1)) ok &= criterion1(cfg);
  if (want(2)) ok &= criterion2(cfg);
  if (want(3)) ok &= criterion3(cfg);
  if (want(4)) ok &= criterion4(cfg);
  if (want(5)) ok &= criterion5(cfg);
  if (want(6)) ok &= criterion6(cfg);
  if (want(7)) ok &= criterion7(cfg);
  if (want(8)) ok &= criterion8(cfg);
  return ok ? 0 : 1;
}
