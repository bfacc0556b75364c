#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "skelcodes/errors.hpp"
#include "skelcodes/simplicial.hpp"

// Closed-form parameter formulas for the skeleton codes K(l, h, j). All
// arithmetic is exact 64-bit with overflow checks.

namespace skelcodes::formulas {

namespace detail {

inline long long add(long long a, long long b) {
  long long out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw DomainError("integer overflow in formula");
  return out;
}

inline long long mul(long long a, long long b) {
  long long out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError("integer overflow in formula");
  return out;
}

}  // namespace detail

/// C(n, k), zero whenever k < 0, n < 0 or k > n.
inline long long binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long out = 1;
  for (long long i = 1; i <= k; ++i) out = detail::mul(out, n - k + i) / i;
  return out;
}

inline long long binomial_sum(long long n, long long from, long long to) {
  long long s = 0;
  for (long long i = from; i <= to; ++i) s = detail::add(s, binomial(n, i));
  return s;
}

/// (-2)^(t-1).
inline long long ie_coefficient(long long t) {
  require(t >= 1, "ie_coefficient requires t >= 1");
  long long c = 1;
  for (long long i = 1; i < t; ++i) c = detail::mul(c, -2);
  return c;
}

/// Σ_{r=1}^t C(t, r) c_r; the coefficients are built so this is 1 for odd t
/// and 0 for even t.
inline long long ie_constraint(long long t) {
  require(t >= 1, "ie_constraint requires t >= 1");
  long long s = 0;
  for (long long r = 1; r <= t; ++r) s = detail::add(s, detail::mul(binomial(t, r), ie_coefficient(r)));
  return s;
}

/// n = Σ_{i=0}^h C(l, i).
inline long long closed_length(long long l, long long h) {
  require(0 <= h && h <= l, "closed_length requires 0 <= h <= l");
  return binomial_sum(l, 0, h);
}

/// k = Σ_{i=0}^j C(l, i).
inline long long closed_dimension(long long l, long long j) {
  require(0 <= j && j <= l, "closed_dimension requires 0 <= j <= l");
  return binomial_sum(l, 0, j);
}

/// d(K(l, h, 1)) = Σ_{a=1}^h C(l-1, a-1).
inline long long theorem_main_distance(long long l, long long h) {
  require(1 <= h && h <= l, "theorem_main_distance requires 1 <= h <= l");
  long long s = 0;
  for (long long a = 1; a <= h; ++a) s = detail::add(s, binomial(l - 1, a - 1));
  return s;
}

/// Weight of one degree-j row: d(K(l, h, j)) <= Σ_{i=0}^{h-j} C(l-j, i).
inline long long upper_bound_distance(long long l, long long h, long long j) {
  require(0 <= j && j <= h && h <= l, "upper_bound_distance requires 0 <= j <= h <= l");
  return binomial_sum(l - j, 0, h - j);
}

/// Weight of the sum of s distinct degree-one rows of K(l, h, 1):
/// Σ_{a=1}^h Σ_{t=1}^s (-2)^(t-1) C(s, t) C(l-t, a-t).
inline long long weight_sum_rows_j1(long long l, long long h, long long s) {
  require(1 <= s && s <= l, "weight_sum_rows_j1 requires 1 <= s <= l");
  require(0 <= h && h <= l, "weight_sum_rows_j1 requires 0 <= h <= l");
  long long total = 0;
  for (long long a = 1; a <= h; ++a)
    for (long long t = 1; t <= s; ++t)
      total = detail::add(total, detail::mul(ie_coefficient(t), detail::mul(binomial(s, t), binomial(l - t, a - t))));
  return total;
}

struct GValue {
  long long sum = 0;     // Σ_{t=1}^i C(s-t, i-t) C(s, t) (-2)^(t-1)
  long long closed = 0;  // as stated: C(s, i) for even i, 0 for odd i
  bool agrees() const { return sum == closed; }
};

inline GValue g_value(long long i, long long s) {
  require(1 <= i && i <= s, "g_value requires 1 <= i <= s");
  GValue g;
  for (long long t = 1; t <= i; ++t)
    g.sum = detail::add(g.sum, detail::mul(detail::mul(binomial(s - t, i - t), binomial(s, t)), ie_coefficient(t)));
  g.closed = i % 2 == 0 ? binomial(s, i) : 0;
  return g;
}

/// The supports σ_1..σ_n of rows to be summed in K(l, h, ·); repeats allowed.
struct SigmaFamily {
  std::size_t l = 0;
  std::size_t h = 0;
  std::vector<Face> supports;
};

inline void validate(const SigmaFamily& family) {
  require(family.l <= kMaxVertices && family.h <= family.l, "sigma family requires h <= l <= 30");
  const Face ground((std::uint32_t{1} << family.l) - 1);
  for (auto s : family.supports)
    require(s.is_subset_of(ground), "support " + to_string(s) + " is not inside [" + std::to_string(family.l) + "]");
}

/// Weight of the row x_σ in the full matrix (j = l): the points τ ⊇ σ with
/// |τ| <= h, i.e. Σ_{i=0}^{h-|σ|} C(l-|σ|, i), zero when |σ| > h.
inline long long single_row_weight(std::size_t l, std::size_t h, Face sigma) {
  const auto r = static_cast<long long>(sigma.size());
  if (r > static_cast<long long>(h)) return 0;
  return binomial_sum(static_cast<long long>(l) - r, 0, static_cast<long long>(h) - r);
}

/// B(σ_1, ..., σ_n) = Σ_{e=1}^n (-2)^(e-1) Σ_{|I|=e} B(∪_{i∈I} σ_i).
inline long long b_weight(const SigmaFamily& family) {
  validate(family);
  const std::size_t n = family.supports.size();
  require(n >= 1, "b_weight needs a nonempty family");
  require(n < 31, "b_weight supports at most 30 rows");
  long long total = 0;
  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << n); ++subset) {
    Face u;
    for (std::size_t i = 0; i < n; ++i)
      if ((subset >> i) & 1u) u = u | family.supports[i];
    const int e = std::popcount(subset);
    total = detail::add(total, detail::mul(ie_coefficient(e), single_row_weight(family.l, family.h, u)));
  }
  return total;
}

/// B(σ_1..σ_n) = B(σ_1..σ_{n-1}) + B(σ_n) - 2 B(σ_1∪σ_n, ..., σ_{n-1}∪σ_n).
inline bool b_recursion_check(const SigmaFamily& family) {
  const std::size_t n = family.supports.size();
  require(n >= 2, "b_recursion_check needs n >= 2");
  SigmaFamily head{family.l, family.h, {family.supports.begin(), family.supports.end() - 1}};
  SigmaFamily last{family.l, family.h, {family.supports.back()}};
  SigmaFamily joined{family.l, family.h, {}};
  for (std::size_t i = 0; i + 1 < n; ++i) joined.supports.push_back(family.supports[i] | family.supports.back());
  return b_weight(family) == b_weight(head) + b_weight(last) - 2 * b_weight(joined);
}

struct PropLastResult {
  bool hypothesis = false;  // sizes hypothesis holds and supports are distinct
  bool inequality = false;  // B(σ_1..σ_n) >= B(σ_n)
  std::size_t split = 0;    // the k of the hypothesis
};

/// After sorting by |σ|, let k = max(1, #{i : |σ_i| < |σ_n|}); the
/// hypothesis is |σ_k| < (n - k) + |σ_n|, with distinct supports.
inline PropLastResult prop_last_check(SigmaFamily family) {
  const std::size_t n = family.supports.size();
  require(n >= 2, "prop_last_check needs n >= 2");
  std::stable_sort(family.supports.begin(), family.supports.end(),
                   [](Face a, Face b) { return a.size() < b.size(); });
  const auto top = family.supports.back().size();
  std::size_t k = 0;
  for (auto s : family.supports)
    if (s.size() < top) ++k;
  k = std::max<std::size_t>(k, 1);
  std::vector<std::uint32_t> masks;
  for (auto s : family.supports) masks.push_back(s.mask());
  std::sort(masks.begin(), masks.end());
  const bool distinct = std::adjacent_find(masks.begin(), masks.end()) == masks.end();

  PropLastResult out;
  out.split = k;
  out.hypothesis = distinct && family.supports[k - 1].size() < (n - k) + top;
  out.inequality =
      b_weight(family) >= single_row_weight(family.l, family.h, family.supports.back());
  return out;
}

enum class SumConvention { from_zero, from_one };

inline std::string to_string(SumConvention c) { return c == SumConvention::from_zero ? "from_zero" : "from_one"; }

/// Conjectured d(K(l, h, j)) = Σ_{i=i0}^{h-j} C(l-j, i) with i0 = 0 or 1.
inline long long conjecture_distance(long long l, long long h, long long j, SumConvention convention) {
  require(1 <= j && j <= h && h <= l, "conjecture_distance requires 1 <= j <= h <= l");
  return binomial_sum(l - j, convention == SumConvention::from_zero ? 0 : 1, h - j);
}

}  // namespace skelcodes::formulas
