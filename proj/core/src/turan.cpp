#include "rtl/turan.hpp"

#include <algorithm>
#include <cassert>

namespace rtl {

namespace {

// Floor division for possibly negative numerators.
long long floor_div(long long a, long long b) {
  assert(b > 0);
  long long q = a / b, rem = a % b;
  return rem && ((rem < 0) != (b < 0)) ? q - 1 : q;
}

long long half_floor(long long a) { return floor_div(a, 2); }

// For expressions the formulas state as exact fractions.
long long exact_half(long long a) {
  if (a % 2 != 0) throw std::logic_error("turan: expected an even numerator");
  return a / 2;
}

ExtremalValue out_of_domain(std::string citation, std::string why, int k = 0, int r = -1) {
  ExtremalValue v;
  v.kind = ExKind::OutOfDomain;
  v.citation = std::move(citation);
  v.branch = std::move(why);
  v.k = k;
  v.r = r;
  return v;
}

ExtremalValue exact(long long value, std::string citation, std::string branch, int k, int r) {
  ExtremalValue v;
  v.value = value;
  v.kind = ExKind::Exact;
  v.citation = std::move(citation);
  v.branch = std::move(branch);
  v.k = k;
  v.r = r;
  return v;
}

// Common "no dense remainder block" expression ((n-2)p - r(n-1-r))/2.
long long base_expr(int n, long long p, int r) {
  return exact_half(static_cast<long long>(n - 2) * p - static_cast<long long>(r) * (n - 1 - r));
}

// Correction term of the max-degree-(n-4) families:
// max{0, floor((r(n-4-r) - 3(n-1))/2)}.
long long broom_correction(int n, int r) {
  long long num = static_cast<long long>(r) * (n - 4 - r) - 3LL * (n - 1);
  return std::max<long long>(0, half_floor(num));
}

ExtremalValue ex_t3(int n, long long p) {
  if (n < 10) return out_of_domain("Lemma 2.9", "requires n >= 10");
  auto [k, r] = decompose(p, n);
  if (r <= 2 || r >= n - 6)
    return exact(base_expr(n, p, r), "Lemma 2.9(i)", "r in {0,1,2,n-6..n-2}", k, r);
  if (n >= 15 && r >= 3 && r <= n - 9)
    return exact(base_expr(n, p, r) + broom_correction(n, r), "Lemma 2.9(ii)", "n>=15 and 3<=r<=n-9", k, r);
  if (n >= 15 && r == n - 8) {
    long long v = exact_half(static_cast<long long>(n - 2) * p - 7LL * n + 30) +
                  std::max<long long>(n / 2, 13);
    return exact(v, "Lemma 2.9(iii)", "n>=15 and r=n-8", k, r);
  }
  if (n >= 15 && r == n - 7) {
    long long v = exact_half(static_cast<long long>(n - 2) * p - 6LL * (n - 7)) +
                  std::max<long long>(floor_div(n - 37, 4), 0);
    return exact(v, "Lemma 2.9(iv)", "n>=15 and r=n-7", k, r);
  }
  return out_of_domain("Lemma 2.9", "10<=n<=14 with 3<=r<=n-7 uncovered", k, r);
}

ExtremalValue ex_tstar(int n, long long p) {
  auto [k, r] = decompose(p, n);
  bool lemma211 = r <= 1 || r >= n - 5;
  if (lemma211) {
    if (n > 6 && r == n - 5) {
      long long v = exact_half(static_cast<long long>(n - 2) * (p - 2)) + 1;
      return exact(v, "Lemma 2.11", "n>6 and r=n-5", k, r);
    }
    return exact(base_expr(n, p, r), "Lemma 2.11", "otherwise", k, r);
  }
  // r in {2..n-6}: Lemma 2.12, which needs n >= 11.
  if (n < 11) return out_of_domain("Lemma 2.12", "requires n >= 11 for 2<=r<=n-6", k, r);
  int t = (n - 3) % (r + 2);
  if (r >= 4 && t >= 2 && t <= r - 1) {
    long long v = half_floor(static_cast<long long>(n - 2) * (p - 1) - 2LL * r - t - 3);
    return exact(v, "Lemma 2.12", "r>=4 and 2<=t<=r-1", k, r);
  }
  long long num = static_cast<long long>(n - 2) * (p - 1) - static_cast<long long>(t) * (r + 2 - t) -
                  r - 1;
  return exact(exact_half(num), "Lemma 2.12", "otherwise", k, r);
}

}  // namespace

const char* to_string(ExKind k) {
  switch (k) {
    case ExKind::Exact:
      return "exact";
    case ExKind::UpperBoundOnly:
      return "upper_bound_only";
    case ExKind::OutOfDomain:
      return "out_of_domain";
  }
  return "?";
}

std::pair<int, int> decompose(long long p, int n) {
  if (n < 2 || p < n - 1)
    throw std::invalid_argument("decompose: requires p >= n-1 >= 1");
  long long k = p / (n - 1);
  long long r = p % (n - 1);
  return {static_cast<int>(k), static_cast<int>(r)};
}

ExtremalValue ex_eval(const TreeSpec& spec, long long p) {
  spec.validate();
  const int order = spec.order();
  const long long pmin = spec.family == TreeFamily::Star ? order - 1 : order;
  if (p < pmin)
    throw std::invalid_argument("ex_eval: p below the family minimum (" + std::to_string(pmin) + ")");

  // The double-star identities route dstar parameters to their named family.
  if (spec.family == TreeFamily::DoubleStar) {
    if (spec.n2 == 1) return ex_eval(TreeSpec::of(TreeFamily::TPrime, order), p);
    if (spec.n2 == 2) return ex_eval(TreeSpec::of(TreeFamily::T2, order), p);
    if (spec.n2 == 3) return ex_eval(TreeSpec::of(TreeFamily::T3, order), p);
    return out_of_domain("-", "no published formula for S(n1,n2) with n2 >= 4");
  }

  const int n = order;
  switch (spec.family) {
    case TreeFamily::Star: {
      long long v = half_floor(static_cast<long long>(n - 2) * p);
      return exact(v, "Lemma 2.4", "", 0, -1);
    }
    case TreeFamily::Path: {
      if (n < 2) return out_of_domain("Eq. (2.1)", "requires n >= 2");
      auto [k, r] = decompose(p, n);
      // k*C(n-1,2) + C(r,2), identically ((n-2)p - r(n-1-r))/2.
      long long v = static_cast<long long>(k) * (n - 1) * (n - 2) / 2 +
                    static_cast<long long>(r) * (r - 1) / 2;
      if (v != base_expr(n, p, r)) throw std::logic_error("Eq. (2.1): route mismatch");
      return exact(v, "Eq. (2.1)", "", k, r);
    }
    case TreeFamily::TPrime: {
      if (n < 5) return out_of_domain("Lemma 2.5", "requires n >= 5");
      auto [k, r] = decompose(p, n);
      if (n >= 7 && r >= 2 && r <= n - 4) {
        long long v = half_floor(static_cast<long long>(n - 2) * (p - 1) - r - 1);
        return exact(v, "Lemma 2.5", "n>=7 and 2<=r<=n-4", k, r);
      }
      return exact(base_expr(n, p, r), "Lemma 2.5", "otherwise", k, r);
    }
    case TreeFamily::T1:
    case TreeFamily::T2: {
      auto [k, r] = decompose(p, n);
      long long first = half_floor(static_cast<long long>(n - 2) * p) - (n - 1 + r);
      long long second = base_expr(n, p, r);
      long long v = std::max(first, second);
      bool first_branch = (n >= 16 && r >= 3 && r <= n - 6) || (n >= 13 && n <= 15 && r >= 4 && r <= n - 7);
      return exact(v, "Lemma 2.6", first_branch ? "star-defect branch" : "otherwise", k, r);
    }
    case TreeFamily::TStarAst:
      if (n < 6) return out_of_domain("Lemma 2.11", "requires n >= 6");
      return ex_tstar(n, p);
    case TreeFamily::T3:
      return ex_t3(n, p);
    case TreeFamily::TDoublePrime:
    case TreeFamily::TTriplePrime: {
      if (n < 10) return out_of_domain("Lemma 2.7", "requires n >= 10");
      auto [k, r] = decompose(p, n);
      long long v = base_expr(n, p, r) + broom_correction(n, r);
      return exact(v, "Lemma 2.7", "", k, r);
    }
    case TreeFamily::FreeTree:
      return out_of_domain("-", "no closed form for arbitrary trees; use the oracle");
    default:
      break;
  }
  throw std::logic_error("ex_eval: unreachable");
}

long long ex_upper_210(int n, long long p) {
  if (n < 10 || p < n) throw std::invalid_argument("ex_upper_210: requires p >= n >= 10");
  auto [k, r] = decompose(p, n);
  (void)k;
  long long cut = std::min<long long>(2LL * (n - 1 + r), static_cast<long long>(r) * (n - 1 - r));
  return half_floor(static_cast<long long>(n - 2) * p - cut);
}

}  // namespace rtl
