#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "skelcodes/errors.hpp"
#include "skelcodes/matrix.hpp"

namespace skelcodes {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

inline std::size_t popcount(std::span<const Word> words) {
  std::size_t total = 0;
  for (auto w : words) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

/// Coordinate order comparison of two packed vectors: the first coordinate
/// where they differ decides, 0 < 1.
inline bool bits_less(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Word diff = a[i] ^ b[i];
    if (diff != 0) return (b[i] >> std::countr_zero(diff)) & 1u;
  }
  return false;
}

/// Binary matrix with bit-packed rows. Bit c of a row lives in word c / 64 at
/// position c % 64; padding bits past `cols` are always zero.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

  static BitMatrix from(const PrimeFieldMatrix& m) {
    if (m.q() != 2) throw DomainError("BitMatrix requires q = 2");
    BitMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m(r, c)) out.set(r, c, true);
    return out;
  }

  PrimeFieldMatrix to_matrix() const {
    PrimeFieldMatrix out(2, rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) out.set(r, c, 1);
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const { return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u; }
  void set(std::size_t r, std::size_t c, bool value) {
    Word& w = data_[r * stride_ + c / kWordBits];
    const Word bit = Word{1} << (c % kWordBits);
    w = value ? (w | bit) : (w & ~bit);
  }

  std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
  std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }

  void xor_row_into(std::size_t src, std::size_t dst) {
    Word* d = data_.data() + dst * stride_;
    const Word* s = data_.data() + src * stride_;
    for (std::size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
  }

  void append_row(std::span<const Word> words) {
    if (words.size() != stride_) throw DomainError("appended row has wrong width");
    data_.insert(data_.end(), words.begin(), words.end());
    ++rows_;
  }

  /// Drops rows from index `count` on.
  void truncate_rows(std::size_t count) {
    rows_ = std::min(rows_, count);
    data_.resize(rows_ * stride_);
  }

  std::size_t row_weight(std::size_t r) const { return popcount(row(r)); }

  /// Gauss-Jordan elimination in place; pivot search walks `column_order`
  /// (all columns in natural order when empty). Returns the pivot columns in
  /// the order they were taken; rows [0, rank) hold the reduced basis.
  std::vector<std::size_t> reduce(std::span<const std::size_t> column_order = {}) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    const std::size_t ncols = column_order.empty() ? cols_ : column_order.size();
    for (std::size_t i = 0; i < ncols && next < rows_; ++i) {
      const std::size_t c = column_order.empty() ? i : column_order[i];
      std::size_t pivot = next;
      while (pivot < rows_ && !get(pivot, c)) ++pivot;
      if (pivot == rows_) continue;
      swap_rows(pivot, next);
      for (std::size_t r = 0; r < rows_; ++r)
        if (r != next && get(r, c)) xor_row_into(next, r);
      pivots.push_back(c);
      ++next;
    }
    return pivots;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

/// Row basis of m: the nonzero rows of its reduced row-echelon form.
inline BitMatrix row_basis(const BitMatrix& m) {
  BitMatrix work = m;
  const auto pivots = work.reduce();
  work.truncate_rows(pivots.size());
  return work;
}

}  // namespace skelcodes
