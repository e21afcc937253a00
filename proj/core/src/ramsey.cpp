#include "rtl/ramsey.hpp"

#include <algorithm>
#include <queue>

#include "rtl/graph6.hpp"
#include "rtl/witness.hpp"

namespace rtl {

namespace {

bool even(long long x) { return x % 2 == 0; }
bool divides(long long d, long long x) { return d != 0 && x % d == 0; }

/// Isomorphism views of a spec: which named families realize the same tree
/// at this order. Small-order coincidences (T'_6 = S(3,1) = T^3_6 and the
/// like) come out of the structural comparison for free.
struct Views {
  TreeSpec spec;
  int order = 0;
  int delta = 0;
  Graph built;
  std::optional<int> star, path, tprime, tstar, t1, t2, t3, tdp, ttp;
  std::optional<std::pair<int, int>> arms;

  std::optional<int> broom() const {  // the three max-degree-(n-4) families
    if (tdp) return tdp;
    if (ttp) return ttp;
    return t3;
  }
  bool is_broom() const { return tdp || ttp || t3; }
};

Views make_views(const TreeSpec& s) {
  Views v;
  v.spec = s;
  v.order = s.order();
  v.delta = max_degree(s);
  v.built = build(s);
  v.arms = double_star_arms(v.built);
  auto probe = [&](TreeFamily f, int min_n) -> std::optional<int> {
    if (v.order < min_n) return std::nullopt;
    if (tree_isomorphic(v.built, build(TreeSpec::of(f, v.order)))) return v.order;
    return std::nullopt;
  };
  v.path = probe(TreeFamily::Path, 1);
  v.star = probe(TreeFamily::Star, 3);
  v.tprime = probe(TreeFamily::TPrime, 4);
  v.tstar = probe(TreeFamily::TStarAst, 5);
  v.t1 = probe(TreeFamily::T1, 5);
  v.t2 = probe(TreeFamily::T2, 5);
  v.t3 = probe(TreeFamily::T3, 6);
  v.tdp = probe(TreeFamily::TDoublePrime, 6);
  v.ttp = probe(TreeFamily::TTriplePrime, 6);
  return v;
}

struct RowMatch {
  std::string citation;
  bool valid = false;        // all hypotheses held
  bool is_range = false;
  long long value = 0;
  long long lo = 0, hi = 0;
};

/// Collects hypothesis evaluations for one row; valid only if all hold.
struct Hyp {
  std::string citation;
  std::vector<Condition>* out;
  bool all = true;
  void operator()(const std::string& text, const std::string& params, bool holds) {
    out->push_back({citation, text, params, holds});
    all &= holds;
  }
};

std::string mn(long long m, long long n) {
  return "m=" + std::to_string(m) + " n=" + std::to_string(n);
}

using Row = std::optional<RowMatch> (*)(const Views&, const Views&, std::vector<Condition>&);

// --- star vs star -----------------------------------------------------------

std::optional<RowMatch> row_eq11(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.star || !B.star) return std::nullopt;
  long long m = *A.star, n = *B.star;
  Hyp h{"Eq. (1.1)", &c};
  h("m, n >= 3", mn(m, n), m >= 3 && n >= 3);
  RowMatch r{h.citation, h.all};
  if (!even(m * n)) {
    h("branch: 2 does not divide mn", "mn=" + std::to_string(m * n), true);
    r.value = m + n - 3;
  } else {
    h("branch: 2 | mn", "mn=" + std::to_string(m * n), true);
    r.value = m + n - 2;
  }
  return r;
}

// --- star vs named tree ------------------------------------------------------

std::optional<RowMatch> row_eq12(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.star || !B.tprime) return std::nullopt;
  long long m = *A.star, n = *B.tprime;
  Hyp h{"Eq. (1.2)", &c};
  h("n > m >= 4", mn(m, n), n > m && m >= 4);
  RowMatch r{h.citation, h.all};
  if (even(m * (n - 1))) {
    h("branch: 2 | m(n-1)", mn(m, n), true);
    r.value = m + n - 3;
  } else {
    h("branch: 2 does not divide m(n-1)", mn(m, n), true);
    r.value = m + n - 4;
  }
  return r;
}

std::optional<RowMatch> row_eq13(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.star || !B.tstar) return std::nullopt;
  long long m = *A.star, n = *B.tstar;
  Hyp h{"Eq. (1.3)", &c};
  h("n > m >= 7", mn(m, n), n > m && m >= 7);
  RowMatch r{h.citation, h.all};
  if (divides(m - 1, n - 3)) {
    h("branch: m-1 | n-3", mn(m, n), true);
    r.value = m + n - 3;
  } else {
    h("branch: m-1 does not divide n-3", mn(m, n), true);
    r.value = m + n - 4;
  }
  return r;
}

std::optional<RowMatch> row_eq14(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.star || (!B.t1 && !B.t2)) return std::nullopt;
  long long m = *A.star, n = B.t1 ? *B.t1 : *B.t2;
  Hyp h{"Eq. (1.4)", &c};
  h("n > m >= 7", mn(m, n), n > m && m >= 7);
  h("2 | mn", "mn=" + std::to_string(m * n), even(m * n));
  RowMatch r{h.citation, h.all};
  r.value = m + n - 4;
  return r;
}

std::optional<RowMatch> row_thm43(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.star || (!B.t1 && !B.t2)) return std::nullopt;
  long long m = *A.star, n = B.t1 ? *B.t1 : *B.t2;
  Hyp h{"Theorem 4.3", &c};
  h("n > m >= 6", mn(m, n), n > m && m >= 6);
  h("2 does not divide mn", "mn=" + std::to_string(m * n), !even(m * n));
  RowMatch r{h.citation, h.all};
  r.value = m + n - 5;
  return r;
}

// --- star vs double star ------------------------------------------------------

std::optional<RowMatch> row_thm41(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.star || !B.arms) return std::nullopt;
  long long m = *A.star, n1 = B.arms->first, n2 = B.arms->second;
  if (n2 < 2) return std::nullopt;
  Hyp h{"Theorem 4.1", &c};
  std::string ps = "m=" + std::to_string(m) + " n1=" + std::to_string(n1) + " n2=" + std::to_string(n2);
  h("n1 >= m-2 >= n2 >= 2", ps, n1 >= m - 2 && m - 2 >= n2 && n2 >= 2);
  h("2 | m*n1", ps, even(m * n1));
  h("n1 > m-5+n2+(n2-1)(n2-2)/(m-1-n2)", ps,
    m - 1 - n2 > 0 && (n1 - (m - 5) - n2) * (m - 1 - n2) > (n2 - 1) * (n2 - 2));
  RowMatch r{h.citation, h.all};
  r.value = m + n1;
  return r;
}

std::optional<RowMatch> row_thm42(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.star || !B.arms) return std::nullopt;
  long long m = *A.star, n1 = B.arms->first, n2 = B.arms->second;
  Hyp h{"Theorem 4.2", &c};
  std::string ps = "m=" + std::to_string(m) + " n1=" + std::to_string(n1) + " n2=" + std::to_string(n2);
  h("n1 >= m-2 > n2 >= 1", ps, n1 >= m - 2 && m - 2 > n2 && n2 >= 1);
  h("2 does not divide m*n1", ps, !even(m * n1));
  h("n1 > m-5+n2+(n2-1)^2/(m-2-n2)", ps,
    m - 2 - n2 > 0 && (n1 - (m - 5) - n2) * (m - 2 - n2) > (n2 - 1) * (n2 - 1));
  RowMatch r{h.citation, h.all};
  r.value = m - 1 + n1;
  return r;
}

std::optional<RowMatch> row_cor41(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.star || !B.t2) return std::nullopt;
  long long m = *A.star, n = *B.t2;
  Hyp h{"Corollary 4.1", &c};
  h("n-2 >= m >= 4", mn(m, n), n - 2 >= m && m >= 4);
  h("2 | mn", mn(m, n), even(m * n));
  RowMatch r{h.citation, h.all};
  r.value = m + n - 4;
  return r;
}

std::optional<RowMatch> row_cor42(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.star || !B.t3) return std::nullopt;
  long long m = *A.star, n = *B.t3;
  Hyp h{"Corollary 4.2", &c};
  h("m >= 5", mn(m, n), m >= 5);
  h("n > m+3+2/(m-4)", mn(m, n), m - 4 > 0 && (n - m - 3) * (m - 4) > 2);
  h("2 | m(n-1)", mn(m, n), even(m * (n - 1)));
  RowMatch r{h.citation, h.all};
  r.value = m + n - 5;
  return r;
}

std::optional<RowMatch> row_cor43(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.star || !B.t2) return std::nullopt;
  long long m = *A.star, n = *B.t2;
  Hyp h{"Corollary 4.3", &c};
  h("m >= 5", mn(m, n), m >= 5);
  h("n >= m+2+[5/m]", mn(m, n), n >= m + 2 + (m == 5 ? 1 : 0));
  h("2 does not divide mn", mn(m, n), !even(m * n));
  RowMatch r{h.citation, h.all};
  r.value = m + n - 5;
  return r;
}

std::optional<RowMatch> row_cor44(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.star || !B.t3) return std::nullopt;
  long long m = *A.star, n = *B.t3;
  Hyp h{"Corollary 4.4", &c};
  h("m >= 6", mn(m, n), m >= 6);
  h("n > m+3+4/(m-5)", mn(m, n), m - 5 > 0 && (n - m - 3) * (m - 5) > 4);
  h("2 does not divide m(n-1)", mn(m, n), !even(m * (n - 1)));
  RowMatch r{h.citation, h.all};
  r.value = m + n - 6;
  return r;
}

// --- star vs the max-degree-(n-4) trio ---------------------------------------

std::optional<RowMatch> row_thm44(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.star || !B.is_broom()) return std::nullopt;
  long long m = *A.star, n = *B.broom();
  Hyp h{"Theorem 4.4", &c};
  h("n >= 15", mn(m, n), n >= 15);
  h("m >= 7", mn(m, n), m >= 7);
  h("n > m+1+8/(m-6)", mn(m, n), m - 6 > 0 && (n - m - 1) * (m - 6) > 8);
  h("2 | m(n-1)", mn(m, n), even(m * (n - 1)));
  RowMatch r{h.citation, h.all};
  r.value = m + n - 5;
  return r;
}

std::optional<RowMatch> row_cor45(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.star || !B.is_broom()) return std::nullopt;
  long long m = *A.star, n = *B.broom();
  if (m != n - 2) return std::nullopt;
  Hyp h{"Corollary 4.5", &c};
  h("n >= 17", mn(m, n), n >= 17);
  RowMatch r{h.citation, h.all};
  r.value = 2 * n - 7;
  return r;
}

std::optional<RowMatch> row_thm45(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.star || (!B.tdp && !B.ttp)) return std::nullopt;
  long long m = *A.star, n = B.tdp ? *B.tdp : *B.ttp;
  Hyp h{"Theorem 4.5", &c};
  h("m >= 6", mn(m, n), m >= 6);
  h("n >= m+3", mn(m, n), n >= m + 3);
  h("2 does not divide m(n-1)", mn(m, n), !even(m * (n - 1)));
  RowMatch r{h.citation, h.all};
  r.value = m + n - 6;
  return r;
}

std::optional<RowMatch> row_thm46(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.star || !B.t3) return std::nullopt;
  long long m = *A.star, n = *B.t3;
  if (m != n - 3) return std::nullopt;
  Hyp h{"Theorem 4.6", &c};
  h("n >= 15", mn(m, n), n >= 15);
  RowMatch r{h.citation, h.all};
  r.value = 2 * n - 8;
  return r;
}

std::optional<RowMatch> row_thm47(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.star || !B.is_broom()) return std::nullopt;
  long long m = *A.star, n = *B.broom();
  if (m != n - 1) return std::nullopt;
  Hyp h{"Theorem 4.7", &c};
  h("n >= 10", mn(m, n), n >= 10);
  RowMatch r{h.citation, h.all};
  r.value = 2 * n - 5;
  return r;
}

std::optional<RowMatch> row_rem31(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.star || !B.is_broom()) return std::nullopt;
  long long m = *A.star, n = *B.broom();
  if (m != n) return std::nullopt;
  Hyp h{"Remark 3.1", &c};
  h("n >= 6", mn(m, n), n >= 6);
  RowMatch r{h.citation, h.all};
  r.value = 2 * n - 3;
  return r;
}

// --- same-order pairs of section 3 --------------------------------------------

std::optional<RowMatch> row_thm31(const Views& A, const Views& B, std::vector<Condition>& c) {
  if ((!A.tdp && !A.ttp) || (!B.tdp && !B.ttp)) return std::nullopt;
  long long n = A.order;
  if (B.order != n) return std::nullopt;
  Hyp h{"Theorem 3.1", &c};
  h("n >= 10", "n=" + std::to_string(n), n >= 10);
  RowMatch r{h.citation, h.all};
  if (even(n)) {
    h("branch: 2 | n", "n=" + std::to_string(n), true);
    r.value = 2 * n - 9;
  } else {
    h("branch: 2 does not divide n and n > 22", "n=" + std::to_string(n), n > 22);
    r.valid = r.valid && n > 22;
    r.value = 2 * n - 8;
  }
  r.valid = h.all && r.valid;
  return r;
}

std::optional<RowMatch> row_thm32(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.t3 || !B.is_broom()) return std::nullopt;
  long long n = A.order;
  if (B.order != n) return std::nullopt;
  Hyp h{"Theorem 3.2", &c};
  h("n > 22", "n=" + std::to_string(n), n > 22);
  RowMatch r{h.citation, h.all};
  r.value = 2 * n - 8;
  return r;
}

std::optional<RowMatch> row_thm33(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.is_broom() || !B.tprime) return std::nullopt;
  long long n = A.order;
  if (B.order != n) return std::nullopt;
  Hyp h{"Theorem 3.3", &c};
  h("n >= 10", "n=" + std::to_string(n), n >= 10);
  RowMatch r{h.citation, h.all};
  r.value = 2 * n - 5;
  return r;
}

std::optional<RowMatch> row_thm34(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.is_broom() || (!B.t1 && !B.t2)) return std::nullopt;
  long long n = A.order;
  if (B.order != n) return std::nullopt;
  Hyp h{"Theorem 3.4", &c};
  h("n > 16", "n=" + std::to_string(n), n > 16);
  RowMatch r{h.citation, h.all};
  r.value = 2 * n - 7;
  return r;
}

std::optional<RowMatch> row_thm35(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.is_broom() || !B.tstar) return std::nullopt;
  long long n = A.order;
  if (B.order != n) return std::nullopt;
  Hyp h{"Theorem 3.5", &c};
  h("n >= 10", "n=" + std::to_string(n), n >= 10);
  RowMatch r{h.citation, h.all};
  r.value = 2 * n - 5;
  return r;
}

std::optional<RowMatch> row_thm36(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.path || !B.is_broom()) return std::nullopt;
  long long n = A.order;
  if (B.order != n) return std::nullopt;
  Hyp h{"Theorem 3.6", &c};
  if (B.tdp || B.ttp) {
    h("n >= 30", "n=" + std::to_string(n), n >= 30);
  } else {
    h("n >= 33 (T^3 case)", "n=" + std::to_string(n), n >= 33);
  }
  RowMatch r{h.citation, h.all};
  r.value = 2 * n - 9;
  return r;
}

// --- section 5: T' and friends vs the trio -------------------------------------

bool is_gm_family(const Views& v) {
  return v.path || v.tprime || v.tstar || v.t1 || v.t2 || v.t3 || v.tdp || v.ttp;
}

std::optional<RowMatch> row_thm51(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!is_gm_family(A) || A.star || !B.is_broom()) return std::nullopt;
  long long m = A.order, n = *B.broom();
  if (m == n) return std::nullopt;  // same-order pairs belong to section 3
  Hyp h{"Theorem 5.1", &c};
  h("m >= 9", mn(m, n), m >= 9);
  h("m-1 | n-5", mn(m, n), divides(m - 1, n - 5));
  h("n > m+1+8/(m-6)", mn(m, n), m - 6 > 0 && (n - m - 1) * (m - 6) > 8);
  RowMatch r{h.citation, h.all};
  r.value = m + n - 5;
  return r;
}

std::optional<RowMatch> row_thm52(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.tprime || !B.is_broom()) return std::nullopt;
  long long m = *A.tprime, n = *B.broom();
  Hyp h{"Theorem 5.2", &c};
  h("m >= 9", mn(m, n), m >= 9);
  h("n > m+1+max{3, 11/(m-8)}", mn(m, n),
    n - m - 1 > 3 && m - 8 > 0 && (n - m - 1) * (m - 8) > 11);
  h("m-1 does not divide n-5", mn(m, n), !divides(m - 1, n - 5));
  RowMatch r{h.citation, h.all};
  r.value = m + n - 6;
  return r;
}

std::optional<RowMatch> row_thm53(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.tprime || !B.is_broom()) return std::nullopt;
  long long m = *A.tprime, n = *B.broom();
  if (m != n - 3) return std::nullopt;
  Hyp h{"Theorem 5.3", &c};
  if (B.tdp || B.ttp) {
    h("n >= 10", mn(m, n), n >= 10);
  } else {
    h("n >= 15 (T^3 case)", mn(m, n), n >= 15);
  }
  RowMatch r{h.citation, h.all};
  r.value = 2 * n - 9;
  return r;
}

std::optional<RowMatch> row_thm54(const Views& A, const Views& B, std::vector<Condition>& c) {
  if (!A.is_broom() || (!B.tprime && !B.tstar)) return std::nullopt;
  long long m = A.order, n = B.order;
  Hyp h{"Theorem 5.4", &c};
  h("n > m >= 10", mn(m, n), n > m && m >= 10);
  RowMatch r{h.citation, h.all};
  if (divides(m - 1, n - 3)) {
    h("branch: m-1 | n-3", mn(m, n), true);
    r.value = m + n - 3;
  } else {
    h("branch: m-1 does not divide n-3 and n >= (m-3)^2+2", mn(m, n), n >= (m - 3) * (m - 3) + 2);
    r.valid = r.valid && n >= (m - 3) * (m - 3) + 2;
    r.value = m + n - 4;
  }
  r.valid = h.all && r.valid;
  return r;
}

std::optional<RowMatch> row_thm61(const Views& A, const Views& B, std::vector<Condition>& c) {
  if ((!A.tstar && !A.t1 && !A.t2) || A.star || !B.is_broom()) return std::nullopt;
  long long m = A.order, n = *B.broom();
  if (m == n) return std::nullopt;
  Hyp h{"Theorem 6.1", &c};
  h("n >= 15", mn(m, n), n >= 15);
  h("m >= 9", mn(m, n), m >= 9);
  h("m-1 does not divide n-5", mn(m, n), !divides(m - 1, n - 5));
  h("n > m+1+12/(m-8)", mn(m, n), m - 8 > 0 && (n - m - 1) * (m - 8) > 12);
  RowMatch r{h.citation, h.all};
  r.lo = m + n - 7;
  r.hi = m + n - 6;
  r.is_range = true;
  if (n >= (m - 3) * (m - 3) + 4) {
    h("upgrade: n >= (m-3)^2+4", mn(m, n), true);
    r.is_range = false;
    r.value = m + n - 6;
  } else if (auto xy = frobenius_rep(m - 1, m - 2, m + n - 7)) {
    h("upgrade: m+n-7 = (m-1)x+(m-2)y at (x,y)=(" + std::to_string(xy->first) + "," +
          std::to_string(xy->second) + ")",
      mn(m, n), true);
    r.is_range = false;
    r.value = m + n - 6;
  } else {
    h("no upgrade: n < (m-3)^2+4 and m+n-7 is not (m-1)x+(m-2)y", mn(m, n), true);
  }
  return r;
}

constexpr Row kRows[] = {
    row_eq11, row_eq12, row_eq13, row_eq14, row_thm41, row_thm42, row_cor41, row_cor42,
    row_cor43, row_cor44, row_thm43, row_thm44, row_cor45, row_thm45, row_thm46, row_thm47,
    row_rem31, row_thm31, row_thm32, row_thm33, row_thm34, row_thm35, row_thm36, row_thm51,
    row_thm52, row_thm53, row_thm54, row_thm61,
};

}  // namespace

RamseyResult ramsey_eval(const TreeSpec& a, const TreeSpec& b) {
  Views va = make_views(a), vb = make_views(b);
  RamseyResult res;
  std::vector<RowMatch> valid;
  for (Row row : kRows) {
    // Try both orientations but keep one evaluation per row: a valid one if
    // either orientation is valid (a row matching both ways is symmetric in
    // value), else the first pattern match, for its hypothesis trace.
    std::optional<RowMatch> best;
    std::vector<Condition> best_conds;
    for (int orient = 0; orient < 2 && !(best && best->valid); ++orient) {
      const Views& A = orient == 0 ? va : vb;
      const Views& B = orient == 0 ? vb : va;
      std::vector<Condition> conds;
      auto m = row(A, B, conds);
      if (!m) continue;
      if (!best || (m->valid && !best->valid)) {
        best = std::move(m);
        best_conds = std::move(conds);
      }
    }
    if (!best) continue;
    for (auto& cd : best_conds) res.conditions.push_back(std::move(cd));
    if (best->valid) valid.push_back(*best);
  }

  if (valid.empty()) {
    res.outcome = RamseyResult::Outcome::NotCovered;
    return res;
  }
  // Exact rows dominate; a Range row only surfaces alone.
  std::vector<RowMatch> exact;
  for (auto& m : valid)
    if (!m.is_range) exact.push_back(m);
  if (!exact.empty()) {
    res.outcome = RamseyResult::Outcome::Exact;
    res.value = exact.front().value;
    for (auto& m : exact) {
      res.citations.push_back(m.citation);
      if (m.value != res.value) res.conflict = true;
    }
    // A range row agreeing with the exact value adds its citation.
    for (auto& m : valid)
      if (m.is_range) {
        res.citations.push_back(m.citation);
        if (res.value < m.lo || res.value > m.hi) res.conflict = true;
      }
    if (res.conflict)
      res.conditions.push_back({"-", "CONFLICT: matched rows disagree", "", false});
    return res;
  }
  res.outcome = RamseyResult::Outcome::Range;
  res.lo = valid.front().lo;
  res.hi = valid.front().hi;
  for (auto& m : valid) res.citations.push_back(m.citation);
  return res;
}

Bound23 lower_bound_23(const TreeSpec& a, const TreeSpec& b) {
  Graph ga = build(a), gb = build(b);
  long long d1 = ga.order() >= 1 ? ga.degrees().max : 0;
  long long d2 = gb.order() >= 1 ? gb.degrees().max : 0;
  if (d1 < 2 || d2 < 2) return {0, "inapplicable (max degree < 2)"};

  Bound23 best{0, ""};
  auto consider = [&](long long v, const std::string& id) {
    if (v > best.value) best = {v, id};
  };

  long long parity = ((d1 - 1) * (d2 - 1)) % 2 != 0 ? 1 : 0;
  consider(d1 + d2 - parity, "2.3(i)");

  auto dist3_to_max = [](const Graph& g) {
    // some u with d(u, v) = 3 for a maximum-degree v
    auto deg = g.degrees();
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) != deg.max) continue;
      std::vector<int> dist(g.order(), -1);
      std::queue<int> q;
      dist[v] = 0;
      q.push(v);
      while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : g.neighborhood(x).members())
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            q.push(y);
          }
      }
      for (int u = 0; u < g.order(); ++u)
        if (dist[u] == 3) return true;
    }
    return false;
  };

  auto sided = [&](const Graph& g1, long long dd1, const Graph& g2, long long dd2,
                   const std::string& tag) {
    long long m = g1.order();
    if (g1.connected() && dd1 < dd2 && dd2 <= m) consider(2 * dd2 - 1, "2.3(ii)" + tag);
    if (g1.connected() && dd2 > m) {
      bool c1 = (dd1 + dd2 - m) % 2 == 0;
      bool c2 = dd1 != m - 1;
      bool c3 = dist3_to_max(g2);
      if (c1 || c2 || c3) consider(dd1 + dd2, "2.3(iii)" + tag);
    }
  };
  sided(ga, d1, gb, d2, "");
  sided(gb, d2, ga, d1, " [swapped]");
  return best;
}

std::optional<std::pair<long long, long long>> frobenius_rep(long long a, long long b,
                                                             long long target) {
  if (a < 1 || b < 1) throw std::invalid_argument("frobenius_rep: a, b >= 1 required");
  if (target < 0) return std::nullopt;
  for (long long x = 0; a * x <= target; ++x) {
    long long rem = target - a * x;
    if (rem % b == 0) return std::make_pair(x, rem / b);
  }
  return std::nullopt;
}

namespace {

std::optional<ExSide> resolve_side(const TreeSpec& spec, long long p, bool allow_premise) {
  ExSide s;
  s.tree = spec.to_string();
  ExtremalValue ev = ex_eval(spec, p);
  if (ev.kind == ExKind::Exact) {
    s.value = ev.value;
    s.kind = ExKind::Exact;
    s.citation = ev.citation;
    s.branch = ev.branch;
    s.within_stated_domain = true;
    return s;
  }
  // The three max-degree-(q-4) families have fallbacks.
  Views v = make_views(spec);
  if (!v.is_broom()) return std::nullopt;
  int q = v.order;
  if (q >= 10 && p >= q) {
    s.value = ex_upper_210(q, p);
    s.kind = ExKind::UpperBoundOnly;
    s.citation = "Lemma 2.10";
    s.within_stated_domain = true;
    return s;
  }
  if (allow_premise && q >= 6 && q <= 9) {
    // The composite results assume ex(p;G_q) <= (q-2)p/2 for these members;
    // below the formula range this stays an explicit recorded assumption.
    s.value = (static_cast<long long>(q - 2) * p) / 2;
    s.kind = ExKind::UpperBoundOnly;
    s.citation = "Theorem 5.1 premise: ex(p;G_m) <= (m-2)p/2";
    s.within_stated_domain = false;
    return s;
  }
  return std::nullopt;
}

}  // namespace

UpperCert upper_cert_21(const TreeSpec& a, const TreeSpec& b, long long p, bool allow_premise) {
  UpperCert u;
  u.p = p;
  u.binom = p * (p - 1) / 2;
  if (p < std::max(a.order(), b.order())) {
    u.constructible = false;
    return u;
  }
  auto s1 = resolve_side(a, p, allow_premise);
  auto s2 = resolve_side(b, p, allow_premise);
  if (s1) u.side1 = *s1;
  if (s2) u.side2 = *s2;
  if (!s1 || !s2) {
    u.constructible = false;
    if (!s1) u.side1.tree = a.to_string();
    if (!s2) u.side2.tree = b.to_string();
    return u;
  }
  u.constructible = true;
  u.sum = u.side1.value + u.side2.value;
  u.holds = u.sum < u.binom;
  return u;
}

namespace {

struct AuditPair {
  TreeSpec a, b;
};

std::optional<AuditPair> audit_pair(const std::string& id, int m, int n) {
  using F = TreeFamily;
  auto spec = [](F f, int k) { return TreeSpec::of(f, k); };
  if (id == "3.1") return AuditPair{spec(F::TDoublePrime, n), spec(F::TDoublePrime, n)};
  if (id == "3.2") return AuditPair{spec(F::T3, n), spec(F::TDoublePrime, n)};
  if (id == "3.3") return AuditPair{spec(F::TDoublePrime, n), spec(F::TPrime, n)};
  if (id == "3.4") return AuditPair{spec(F::TDoublePrime, n), spec(F::T1, n)};
  if (id == "3.5") return AuditPair{spec(F::TDoublePrime, n), spec(F::TStarAst, n)};
  if (id == "3.6") return AuditPair{spec(F::Path, n), spec(F::TDoublePrime, n)};
  if (id == "3.6t3") return AuditPair{spec(F::Path, n), spec(F::T3, n)};
  if (id == "4.4") return AuditPair{spec(F::Star, m), spec(F::TDoublePrime, n)};
  if (id == "4.5") return AuditPair{spec(F::Star, m), spec(F::TDoublePrime, n)};
  if (id == "4.6") return AuditPair{spec(F::Star, n - 3), spec(F::T3, n)};
  if (id == "4.7") return AuditPair{spec(F::Star, n - 1), spec(F::TDoublePrime, n)};
  if (id == "5.1") return AuditPair{spec(F::TPrime, m), spec(F::TDoublePrime, n)};
  if (id == "5.2") return AuditPair{spec(F::TPrime, m), spec(F::TDoublePrime, n)};
  if (id == "5.3") return AuditPair{spec(F::TPrime, n - 3), spec(F::TDoublePrime, n)};
  if (id == "5.3t3") return AuditPair{spec(F::TPrime, n - 3), spec(F::T3, n)};
  if (id == "5.4") return AuditPair{spec(F::TDoublePrime, m), spec(F::TPrime, n)};
  if (id == "6.1") return AuditPair{spec(F::T1, m), spec(F::TDoublePrime, n)};
  return std::nullopt;
}

std::string theorem_citation(const std::string& id) {
  if (id == "3.6t3") return "Theorem 3.6";
  if (id == "5.3t3") return "Theorem 5.3";
  return "Theorem " + id;
}

bool needs_m(const std::string& id) {
  return id == "4.4" || id == "4.5" || id == "5.1" || id == "5.2" || id == "5.4" || id == "6.1";
}

}  // namespace

std::vector<AuditRow> audit_theorem(const std::string& id, int n_lo, int n_hi, int m_lo, int m_hi,
                                    bool probe_witness) {
  std::vector<AuditRow> rows;
  const bool two_param = needs_m(id);
  if (two_param && (m_lo <= 0 || m_hi < m_lo))
    throw std::invalid_argument("audit: theorem " + id + " needs an m range");
  if (!two_param) {
    m_lo = 0;
    m_hi = 0;
  }
  const std::string want = theorem_citation(id);
  for (int m = m_lo; m <= m_hi; ++m)
    for (int n = n_lo; n <= n_hi; ++n) {
      std::optional<AuditPair> pr;
      try {
        pr = audit_pair(id, m, n);
      } catch (const std::invalid_argument&) {
        continue;  // parameters below a family minimum
      }
      if (!pr) throw std::invalid_argument("audit: unknown theorem id '" + id + "'");
      RamseyResult rr = ramsey_eval(pr->a, pr->b);
      if (rr.outcome != RamseyResult::Outcome::Exact) continue;
      if (std::find(rr.citations.begin(), rr.citations.end(), want) == rr.citations.end())
        continue;
      AuditRow row;
      row.theorem = want;
      if (two_param) row.m = m;
      row.n = n;
      row.pair = pr->a.to_string() + " vs " + pr->b.to_string();
      row.claimed_r = rr.value;
      auto lb = lower_bound_23(pr->a, pr->b);
      row.lower23 = lb.value;
      row.lower23_case = lb.case_id;
      row.lower_ok = lb.value >= row.claimed_r;
      row.upper = upper_cert_21(pr->a, pr->b, row.claimed_r);
      if (probe_witness && row.upper.constructible && !row.upper.holds) {
        // An upper-test failure invites a refutation probe at order claimed_r.
        if (auto w = lower_witness(pr->a, pr->b, static_cast<int>(row.claimed_r))) {
          row.witness_at_r_g6 = encode_graph6(w->graph);
          row.witness_at_r_construction = w->construction;
        }
      }
      rows.push_back(std::move(row));
    }
  return rows;
}

}  // namespace rtl
