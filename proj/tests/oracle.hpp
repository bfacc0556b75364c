#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library's algorithms: spans are enumerated by running over
// every coefficient vector, weights are counted entry by entry.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<unsigned>;
using Rows = std::vector<Vec>;

// Every linear combination of `rows` over GF(q), deduplicated.
inline std::set<Vec> span(const Rows& rows, std::size_t cols, unsigned q) {
  std::set<Vec> out;
  std::vector<unsigned> coeff(rows.size(), 0);
  while (true) {
    Vec v(cols, 0);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c) v[c] = (v[c] + coeff[r] * rows[r][c]) % q;
    out.insert(v);
    std::size_t i = 0;
    while (i < coeff.size() && ++coeff[i] == q) coeff[i++] = 0;
    if (i == coeff.size()) break;
  }
  return out;
}

inline std::size_t log_q(std::size_t size, unsigned q) {
  std::size_t k = 0;
  while (size > 1) {
    size /= q;
    ++k;
  }
  return k;
}

inline std::size_t rank(const Rows& rows, std::size_t cols, unsigned q) { return log_q(span(rows, cols, q).size(), q); }

inline std::size_t weight(const Vec& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](unsigned x) { return x != 0; }));
}

inline std::size_t min_distance(const Rows& rows, std::size_t cols, unsigned q) {
  std::size_t best = cols + 1;
  for (const auto& v : span(rows, cols, q)) {
    const auto w = weight(v);
    if (w != 0) best = std::min(best, w);
  }
  return best;
}

inline std::map<std::size_t, std::uint64_t> weight_distribution(const Rows& rows, std::size_t cols, unsigned q) {
  std::map<std::size_t, std::uint64_t> out;
  // Enumerate messages, not the span, so repeated codewords would be counted.
  std::vector<unsigned> coeff(rows.size(), 0);
  while (true) {
    Vec v(cols, 0);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c) v[c] = (v[c] + coeff[r] * rows[r][c]) % q;
    ++out[weight(v)];
    std::size_t i = 0;
    while (i < coeff.size() && ++coeff[i] == q) coeff[i++] = 0;
    if (i == coeff.size()) break;
  }
  return out;
}

// All vectors of GF(q)^l that lie in at least one coordinate subspace given
// by a vertex mask (bit i = coordinate i+1).
inline std::set<Vec> coordinate_union(std::size_t l, unsigned q, const std::vector<std::uint32_t>& masks) {
  std::set<Vec> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < l; ++i) total *= q;
  for (std::size_t code = 0; code < total; ++code) {
    Vec v(l);
    std::size_t x = code;
    std::uint32_t support = 0;
    for (std::size_t i = 0; i < l; ++i) {
      v[i] = static_cast<unsigned>(x % q);
      x /= q;
      if (v[i] != 0) support |= std::uint32_t{1} << i;
    }
    for (auto m : masks)
      if ((support & ~m) == 0) {
        out.insert(v);
        break;
      }
  }
  return out;
}

inline long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Skeleton code entries straight from the definition: row σ, column τ with
// |σ| <= j, |τ| <= h; entry 1 iff σ ⊆ τ. Row and column order: masks ascending.
inline Rows skeleton_rows(std::size_t l, std::size_t h, std::size_t j, std::vector<std::uint32_t>* col_masks = nullptr) {
  std::vector<std::uint32_t> rows_m, cols_m;
  for (std::uint32_t m = 0; m < (1u << l); ++m) {
    const auto pc = static_cast<std::size_t>(__builtin_popcount(m));
    if (pc <= j) rows_m.push_back(m);
    if (pc <= h) cols_m.push_back(m);
  }
  Rows out;
  for (auto s : rows_m) {
    Vec row;
    for (auto t : cols_m) row.push_back((s & ~t) == 0 ? 1u : 0u);
    out.push_back(row);
  }
  if (col_masks) *col_masks = cols_m;
  return out;
}

}  // namespace oracle
