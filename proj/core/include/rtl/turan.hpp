#pragma once

#include <string>
#include <utility>

#include "rtl/tree_families.hpp"

namespace rtl {

enum class ExKind { Exact, UpperBoundOnly, OutOfDomain };

/// Result of an ex(p;T) evaluation: value, validity class, and which
/// published formula (and branch) produced it.
struct ExtremalValue {
  long long value = 0;
  ExKind kind = ExKind::OutOfDomain;
  std::string citation;
  std::string branch;
  int k = 0;   // p = k(n-1) + r when a decomposition was used
  int r = -1;
};

/// p = k(n-1) + r with k >= 1 and 0 <= r <= n-2. Requires p >= n-1 >= 1.
std::pair<int, int> decompose(long long p, int n);

/// Closed-form ex(p;T) for the named families. OutOfDomain is a value, not an
/// error: it flags (n,p) outside the cited formula's hypotheses. Throws only
/// when p is below the family's stated minimum (p >= order, or p >= order-1
/// for stars).
ExtremalValue ex_eval(const TreeSpec& spec, long long p);

/// Upper bound valid simultaneously for the three max-degree-(n-4) families:
/// ex(p;T) <= (n-2)p/2 - min{n-1+r, r(n-1-r)/2}, floored as an edge count.
/// Requires p >= n >= 10.
long long ex_upper_210(int n, long long p);

const char* to_string(ExKind k);

}  // namespace rtl
