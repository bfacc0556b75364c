#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skelcodes/codeparams.hpp"
#include "skelcodes/errors.hpp"
#include "skelcodes/evalcode.hpp"
#include "skelcodes/linalg.hpp"
#include "skelcodes/matrix.hpp"

namespace skelcodes {

struct HammingCode {
  PrimeFieldMatrix generator;
  /// Columns are 1..2^r - 1 in increasing order, most significant bit on top.
  PrimeFieldMatrix parity_check;
};

inline HammingCode hamming_code(std::size_t r) {
  require(r >= 2, "hamming_code requires r >= 2");
  require(r <= 20, "hamming_code limited to r <= 20");
  const std::size_t n = (std::size_t{1} << r) - 1;
  PrimeFieldMatrix h(2, r, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < r; ++i) h.set(i, c, ((c + 1) >> (r - 1 - i)) & 1u);
  return {null_space(h), h};
}

/// [I_k | A] row-equivalent to a column permutation of the input.
struct StandardForm {
  PrimeFieldMatrix generator;
  /// Column c of `generator` came from column permutation[c] of the input.
  std::vector<std::size_t> permutation;
  std::size_t rank = 0;
  /// Dependent input rows dropped before reaching full row rank.
  std::size_t dropped_rows = 0;
};

inline StandardForm standard_form(const PrimeFieldMatrix& generator) {
  const auto reduced = rref(generator);
  StandardForm out;
  out.rank = reduced.rank;
  out.dropped_rows = generator.rows() - reduced.rank;
  std::vector<bool> is_pivot(generator.cols(), false);
  for (auto c : reduced.pivot_columns) {
    is_pivot[c] = true;
    out.permutation.push_back(c);
  }
  for (std::size_t c = 0; c < generator.cols(); ++c)
    if (!is_pivot[c]) out.permutation.push_back(c);
  out.generator = reduced.matrix.submatrix(0, reduced.rank, 0, generator.cols()).permute_columns(out.permutation);
  return out;
}

/// H = [-A^T | I_{n-k}] for a standard form, with columns moved back to the
/// input's coordinate order so that G H^T = 0 for the original generator.
inline PrimeFieldMatrix parity_check(const StandardForm& form) {
  const PrimeFieldMatrix& g = form.generator;
  const PrimeField& f = g.field();
  const std::size_t k = form.rank, n = g.cols();
  PrimeFieldMatrix permuted(g.q(), n - k, n);
  for (std::size_t i = 0; i < n - k; ++i) {
    for (std::size_t c = 0; c < k; ++c) permuted.set(i, c, f.neg(g(c, k + i)));
    permuted.set(i, k + i, 1);
  }
  PrimeFieldMatrix out(g.q(), n - k, n);
  for (std::size_t i = 0; i < n - k; ++i)
    for (std::size_t c = 0; c < n; ++c) out.set(i, form.permutation[c], permuted(i, c));
  return out;
}

/// True iff every column is nonzero and no two columns are equal.
inline bool columns_distinct_nonzero(const PrimeFieldMatrix& h) {
  std::vector<std::vector<std::uint8_t>> cols;
  for (std::size_t c = 0; c < h.cols(); ++c) {
    std::vector<std::uint8_t> col(h.rows());
    for (std::size_t r = 0; r < h.rows(); ++r) col[r] = h(r, c);
    if (std::all_of(col.begin(), col.end(), [](auto v) { return v == 0; })) return false;
    cols.push_back(std::move(col));
  }
  std::sort(cols.begin(), cols.end());
  return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

struct HammingVerdict {
  bool equivalent = false;
  std::size_t r = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> d;
  DistanceMethod method = DistanceMethod::exhaustive;
  /// Parity check of the code in its own coordinates; the certificate.
  PrimeFieldMatrix certificate;
  bool certificate_ok = false;
  std::string reason;
};

/// Certifies permutation equivalence to the Hamming code H_r through the
/// parameter characterization: a binary [2^r - 1, 2^r - 1 - r, 3] code.
/// The certificate is a parity check whose columns are checked to be
/// pairwise distinct and nonzero.
inline HammingVerdict is_hamming_equivalent(const PrimeFieldMatrix& generator, SearchMethod method = SearchMethod::automatic,
                                            const SearchOptions& options = {}) {
  HammingVerdict v;
  if (generator.q() != 2) {
    v.reason = "not a binary code";
    return v;
  }
  const auto form = standard_form(generator);
  v.n = generator.cols();
  v.k = form.rank;
  const std::size_t r = v.n - v.k;
  v.r = r;
  if (r < 2 || r >= 63 || v.n != (std::size_t{1} << r) - 1) {
    v.reason = "length " + std::to_string(v.n) + " is not 2^r - 1 with r = n - k = " + std::to_string(r);
    return v;
  }
  v.certificate = parity_check(form);
  v.certificate_ok = columns_distinct_nonzero(v.certificate) &&
                     is_zero(multiply(generator, v.certificate.transpose()));
  const auto dist = min_distance(generator, method, options);
  v.d = dist.d;
  v.method = dist.method;
  if (dist.d != 3) {
    v.reason = "minimum distance " + std::to_string(dist.d) + " is not 3";
    return v;
  }
  if (!v.certificate_ok) {
    v.reason = "parity-check columns are not pairwise distinct and nonzero";
    return v;
  }
  v.equivalent = true;
  v.reason = "[" + std::to_string(v.n) + "," + std::to_string(v.k) + ",3] binary code";
  return v;
}

inline HammingVerdict is_hamming_equivalent(const EvaluationCode& code, SearchMethod method = SearchMethod::automatic,
                                            const SearchOptions& options = {}) {
  return is_hamming_equivalent(code.generator, method, options);
}

}  // namespace skelcodes
