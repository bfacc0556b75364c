#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "skelcodes/bitmatrix.hpp"
#include "skelcodes/errors.hpp"
#include "skelcodes/matrix.hpp"

namespace skelcodes {

/// Reduced row-echelon form with its rank and strictly increasing pivots.
struct RrefResult {
  PrimeFieldMatrix matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Byte-per-entry Gauss-Jordan elimination, valid for every prime q.
inline RrefResult rref_generic(const PrimeFieldMatrix& m) {
  const PrimeField& f = m.field();
  PrimeFieldMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < a.cols() && next < a.rows(); ++c) {
    std::size_t pivot = next;
    while (pivot < a.rows() && a(pivot, c) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(pivot, next);
    const auto scale = f.inv(a(next, c));
    for (std::size_t k = c; k < a.cols(); ++k) a.set(next, k, f.mul(a(next, k), scale));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      const auto factor = a(r, c);
      if (r == next || factor == 0) continue;
      for (std::size_t k = c; k < a.cols(); ++k) a.set(r, k, f.sub(a(r, k), f.mul(factor, a(next, k))));
    }
    pivots.push_back(c);
    ++next;
  }
  return {std::move(a), pivots.size(), std::move(pivots)};
}

/// RREF of m. For q = 2 the elimination runs on bit-packed rows.
inline RrefResult rref(const PrimeFieldMatrix& m) {
  if (m.q() != 2) return rref_generic(m);
  BitMatrix bits = BitMatrix::from(m);
  auto pivots = bits.reduce();
  const std::size_t rank = pivots.size();
  return {bits.to_matrix(), rank, std::move(pivots)};
}

inline std::size_t rank(const PrimeFieldMatrix& m) { return rref(m).rank; }

/// The nonzero rows of rref(m): a canonical basis of the row space.
inline PrimeFieldMatrix canonical_basis(const PrimeFieldMatrix& m) {
  auto r = rref(m);
  return r.matrix.submatrix(0, r.rank, 0, m.cols());
}

inline PrimeFieldMatrix stack(const PrimeFieldMatrix& top, const PrimeFieldMatrix& bottom) {
  if (top.q() != bottom.q() || top.cols() != bottom.cols()) throw DomainError("stack: shape or field mismatch");
  PrimeFieldMatrix out = top;
  for (std::size_t r = 0; r < bottom.rows(); ++r) out.append_row(bottom.row(r));
  return out;
}

/// Basis of rowspace(a) ∩ rowspace(b), in canonical (RREF) form.
///
/// Zassenhaus: reduce [a | a ; b | 0]; rows whose left half vanishes carry
/// the intersection in their right half.
inline PrimeFieldMatrix intersect_row_spaces(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
  if (a.q() != b.q()) throw DomainError("intersect_row_spaces: field mismatch");
  if (a.cols() != b.cols()) throw DomainError("intersect_row_spaces: dimension mismatch");
  const std::size_t n = a.cols();
  PrimeFieldMatrix z(a.q(), a.rows() + b.rows(), 2 * n);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) {
      z.set(r, c, a(r, c));
      z.set(r, n + c, a(r, c));
    }
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) z.set(a.rows() + r, c, b(r, c));
  const auto reduced = rref(z);
  PrimeFieldMatrix basis(a.q(), 0, n);
  for (std::size_t r = 0; r < reduced.rank; ++r) {
    if (reduced.pivot_columns[r] < n) continue;
    basis.append_row(reduced.matrix.row(r).subspan(n, n));
  }
  return canonical_basis(basis);
}

/// Basis (rows) of the right null space {x : m x = 0}.
inline PrimeFieldMatrix null_space(const PrimeFieldMatrix& m) {
  const auto reduced = rref(m);
  const PrimeField& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : reduced.pivot_columns) is_pivot[c] = true;
  PrimeFieldMatrix basis(m.q(), 0, m.cols());
  std::vector<std::uint8_t> v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < reduced.rank; ++r) v[reduced.pivot_columns[r]] = f.neg(reduced.matrix(r, free));
    basis.append_row(v);
  }
  return basis;
}

/// All q^rank points of the row space of `basis`, in canonical point order
/// (base-q integer, coordinate 1 most significant). Includes the origin.
inline std::vector<Point> enumerate_points(const PrimeFieldMatrix& basis) {
  const PrimeFieldMatrix reduced = canonical_basis(basis);
  const PrimeField& f = basis.field();
  const std::size_t k = reduced.rows();
  const std::size_t n = reduced.cols();
  std::vector<Point> points;
  std::vector<unsigned> coeffs(k, 0);
  Point current(n, 0);
  // Odometer over coefficient vectors; each step recomputes the point.
  while (true) {
    std::fill(current.begin(), current.end(), 0);
    for (std::size_t i = 0; i < k; ++i)
      if (coeffs[i] != 0)
        for (std::size_t c = 0; c < n; ++c) current[c] = f.add(current[c], f.mul(coeffs[i], reduced(i, c)));
    points.push_back(current);
    std::size_t i = 0;
    while (i < k && ++coeffs[i] == f.size()) coeffs[i++] = 0;
    if (i == k) break;
  }
  std::sort(points.begin(), points.end());
  return points;
}

}  // namespace skelcodes
