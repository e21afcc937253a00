#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rtl/tree_families.hpp"
#include "rtl/turan.hpp"

namespace rtl {

/// One evaluated hypothesis clause of a table row.
struct Condition {
  std::string citation;
  std::string hypothesis;
  std::string params;
  bool holds = false;
};

/// Outcome of a theorem-table lookup.
struct RamseyResult {
  enum class Outcome { Exact, Range, NotCovered };
  Outcome outcome = Outcome::NotCovered;
  long long value = 0;  // Exact
  long long lo = 0, hi = 0;  // Range
  std::vector<std::string> citations;
  std::vector<Condition> conditions;
  bool conflict = false;  // matched rows disagreed (unexpected)
};

/// Table lookup over every result the catalog states. Symmetric in its
/// arguments; NotCovered is the sentinel for pairs outside the table.
RamseyResult ramsey_eval(const TreeSpec& a, const TreeSpec& b);

/// Best general lower bound (cases (i)-(iii)), with the case that won.
struct Bound23 {
  long long value = 0;
  std::string case_id;
};
Bound23 lower_bound_23(const TreeSpec& a, const TreeSpec& b);

/// Some (x, y) >= 0 with a*x + b*y = target, or absence. Exhaustive.
std::optional<std::pair<long long, long long>> frobenius_rep(long long a, long long b,
                                                             long long target);

/// One side of an edge-counting certificate: the ex bound used and where it
/// came from.
struct ExSide {
  std::string tree;
  long long value = 0;
  ExKind kind = ExKind::OutOfDomain;
  std::string citation;
  std::string branch;
  bool within_stated_domain = true;
};

/// The arithmetic half of a certificate: ex1 + ex2 < C(p,2) forces r <= p.
struct UpperCert {
  long long p = 0;
  bool constructible = false;
  ExSide side1, side2;
  long long sum = 0;
  long long binom = 0;
  bool holds = false;
};

/// Builds the edge-counting test at p for the pair. Exact values are used
/// when the formulas cover them; otherwise the simultaneous upper bound, and
/// as a last resort for the three max-degree-(n-4) families below their
/// formula range, the premise bound floor((q-2)p/2) that the catalog's own
/// composite results assert for order-q members (recorded as outside the
/// stated domain). Set allow_premise = false to disable that last step.
UpperCert upper_cert_21(const TreeSpec& a, const TreeSpec& b, long long p,
                        bool allow_premise = true);

/// One audit row: does the certificate arithmetic support the claimed value,
/// and does the general lower bound reach it?
struct AuditRow {
  std::string theorem;
  std::optional<int> m;
  int n = 0;
  std::string pair;
  long long claimed_r = 0;
  long long lower23 = 0;
  std::string lower23_case;
  bool lower_ok = false;
  UpperCert upper;
  // Probe: when the upper test fails, a verified coloring at order claimed_r
  // refutes the claim (reports lower bound >= claimed_r + 1).
  std::string witness_at_r_g6;
  std::string witness_at_r_construction;
};

/// Audit a theorem's certificate arithmetic across a parameter range.
/// Supported ids: 3.1, 3.2, 3.3, 3.4, 3.5, 3.6, 4.4, 4.5, 4.6, 4.7, 5.1,
/// 5.2, 5.3, 5.4, 6.1 (m-range required for the two-parameter families).
std::vector<AuditRow> audit_theorem(const std::string& id, int n_lo, int n_hi,
                                    int m_lo = 0, int m_hi = 0, bool probe_witness = true);

}  // namespace rtl
