#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "skelcodes/errors.hpp"
#include "skelcodes/field.hpp"

namespace skelcodes {

/// A point of GF(q)^l; coordinate 1 is element 0.
using Point = std::vector<std::uint8_t>;

/// Dense row-major matrix over a prime field GF(q), one byte per entry.
///
/// Every entry is a residue in [0, q). The q = 2 hot paths convert to a
/// bit-packed BitMatrix (see bitmatrix.hpp) rather than working here.
class PrimeFieldMatrix {
 public:
  PrimeFieldMatrix() : PrimeFieldMatrix(2, 0, 0) {}

  PrimeFieldMatrix(unsigned q, std::size_t rows, std::size_t cols)
      : field_(q), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

  PrimeFieldMatrix(unsigned q, std::size_t rows, std::size_t cols, std::vector<std::uint8_t> entries)
      : field_(q), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw DomainError("entry count " + std::to_string(entries_.size()) + " does not match " +
                        std::to_string(rows_) + "x" + std::to_string(cols_));
    for (auto e : entries_)
      if (e >= q) throw DomainError("entry " + std::to_string(e) + " is not a residue mod " + std::to_string(q));
  }

  /// Builds from nested rows; all rows must share one length. Entries are
  /// reduced mod q.
  static PrimeFieldMatrix from_rows(unsigned q, const std::vector<std::vector<unsigned>>& rows,
                                    std::size_t cols_if_empty = 0) {
    const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    std::vector<std::uint8_t> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& row : rows) {
      if (row.size() != cols) throw DomainError("ragged rows");
      for (auto e : row) entries.push_back(static_cast<std::uint8_t>(e % q));
    }
    return PrimeFieldMatrix(q, rows.size(), cols, std::move(entries));
  }

  static PrimeFieldMatrix identity(unsigned q, std::size_t n) {
    PrimeFieldMatrix m(q, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  unsigned q() const { return field_.size(); }
  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::uint8_t operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, unsigned value) {
    entries_[r * cols_ + c] = static_cast<std::uint8_t>(value % q());
  }

  std::span<const std::uint8_t> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<std::uint8_t> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  const std::vector<std::uint8_t>& entries() const { return entries_; }

  void append_row(std::span<const std::uint8_t> values) {
    if (values.size() != cols_) throw DomainError("appended row has wrong length");
    for (auto v : values)
      if (v >= q()) throw DomainError("appended entry out of range");
    entries_.insert(entries_.end(), values.begin(), values.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(entries_[a * cols_ + c], entries_[b * cols_ + c]);
  }

  /// Contiguous block [row_begin, row_end) x [col_begin, col_end).
  PrimeFieldMatrix submatrix(std::size_t row_begin, std::size_t row_end, std::size_t col_begin,
                             std::size_t col_end) const {
    if (row_begin > row_end || row_end > rows_ || col_begin > col_end || col_end > cols_)
      throw DomainError("submatrix range out of bounds");
    PrimeFieldMatrix out(q(), row_end - row_begin, col_end - col_begin);
    for (std::size_t r = row_begin; r < row_end; ++r)
      for (std::size_t c = col_begin; c < col_end; ++c) out.set(r - row_begin, c - col_begin, (*this)(r, c));
    return out;
  }

  /// Column c of the result is column perm[c] of this matrix.
  PrimeFieldMatrix permute_columns(std::span<const std::size_t> perm) const {
    if (perm.size() != cols_) throw DomainError("permutation length mismatch");
    PrimeFieldMatrix out(q(), rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, (*this)(r, perm[c]));
    return out;
  }

  PrimeFieldMatrix transpose() const {
    PrimeFieldMatrix out(q(), cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out.set(c, r, (*this)(r, c));
    return out;
  }

  friend bool operator==(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
    return a.q() == b.q() && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> entries_;
};

inline PrimeFieldMatrix multiply(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
  if (a.q() != b.q() || a.cols() != b.rows()) throw DomainError("multiply: shape or field mismatch");
  const unsigned q = a.q();
  PrimeFieldMatrix out(q, a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      unsigned acc = 0;
      for (std::size_t i = 0; i < a.cols(); ++i) acc = (acc + unsigned(a(r, i)) * b(i, c)) % q;
      out.set(r, c, acc);
    }
  return out;
}

inline bool is_zero(const PrimeFieldMatrix& m) {
  for (auto e : m.entries())
    if (e != 0) return false;
  return true;
}

// Matrix text format: "rows cols q", then one line per row of
// space-separated residues. No trailing whitespace, newline-terminated.

inline void write_matrix(std::ostream& out, const PrimeFieldMatrix& m) {
  out << m.rows() << ' ' << m.cols() << ' ' << m.q() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ' ';
      out << unsigned(m(r, c));
    }
    out << '\n';
  }
}

inline std::string to_text(const PrimeFieldMatrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

/// Lines starting with '#' are skipped, so `matrix --labels` output parses.
inline PrimeFieldMatrix read_matrix(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (!line.empty() && line.front() == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("missing matrix header");
  std::istringstream header(line);
  long long rows = -1, cols = -1, q = -1;
  if (!(header >> rows >> cols >> q) || rows < 0 || cols < 0)
    throw ParseError("bad matrix header: '" + line + "'");
  std::vector<std::uint8_t> entries;
  entries.reserve(static_cast<std::size_t>(rows * cols));
  for (long long r = 0; r < rows; ++r) {
    if (!next_line()) throw ParseError("matrix truncated at row " + std::to_string(r));
    std::istringstream row(line);
    long long v = 0;
    long long count = 0;
    while (row >> v) {
      if (v < 0 || v >= q) throw ParseError("entry out of range: " + std::to_string(v));
      entries.push_back(static_cast<std::uint8_t>(v));
      ++count;
    }
    if (count != cols) throw ParseError("row " + std::to_string(r) + " has " + std::to_string(count) + " entries");
  }
  return PrimeFieldMatrix(static_cast<unsigned>(q), static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                          std::move(entries));
}

inline PrimeFieldMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

}  // namespace skelcodes
