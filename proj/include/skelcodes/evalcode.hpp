#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "skelcodes/arrangement.hpp"
#include "skelcodes/bitmatrix.hpp"
#include "skelcodes/errors.hpp"
#include "skelcodes/matrix.hpp"
#include "skelcodes/simplicial.hpp"

namespace skelcodes {

/// x_1^{e_1} ... x_l^{e_l} with every e_i < q (square-free when q = 2).
struct Monomial {
  std::vector<std::uint8_t> exponents;

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exponents) d += e;
    return d;
  }

  /// Variables that occur; for q = 2 this determines the monomial.
  Face support() const {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i)
      if (exponents[i] != 0) mask |= std::uint32_t{1} << i;
    return Face(mask);
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    out += "x" + std::to_string(i + 1);
    if (m.exponents[i] > 1) out += "^" + std::to_string(m.exponents[i]);
  }
  return out.empty() ? "1" : out;
}

/// Degree ascending; inside a degree, exponent vectors in descending lex
/// order (x1 > x2 > ...), so square-free monomials come out lex by support:
/// 1, x1, x2, x3, x1x2, x1x3, x2x3.
inline bool degree_lex_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return b.exponents < a.exponents;
}

/// Basis of S_{<=j} as functions on GF(q)^l: exponents capped at q - 1.
inline std::vector<Monomial> monomial_basis(std::size_t l, std::size_t j, unsigned q) {
  PrimeField field(q);
  std::vector<Monomial> out;
  std::vector<std::uint8_t> exps(l, 0);
  std::function<void(std::size_t, std::size_t)> recurse = [&](std::size_t var, std::size_t budget) {
    if (var == l) {
      out.push_back({exps});
      return;
    }
    for (unsigned e = 0; e < q && e <= budget; ++e) {
      exps[var] = static_cast<std::uint8_t>(e);
      recurse(var + 1, budget - e);
    }
    exps[var] = 0;
  };
  recurse(0, j);
  std::sort(out.begin(), out.end(), degree_lex_less);
  return out;
}

/// m(p) in GF(q), with 0^0 = 1.
inline std::uint8_t evaluate(const Monomial& m, const Point& p, const PrimeField& field) {
  if (m.exponents.size() != p.size()) throw DomainError("monomial and point dimensions differ");
  unsigned value = 1 % field.size();
  for (std::size_t i = 0; i < p.size() && value != 0; ++i)
    if (m.exponents[i] != 0) value = field.mul(value, field.pow(p[i], m.exponents[i]));
  return static_cast<std::uint8_t>(value);
}

inline std::size_t hamming_weight(const Point& p) {
  return static_cast<std::size_t>(std::count_if(p.begin(), p.end(), [](auto v) { return v != 0; }));
}

enum class ColumnOrder {
  /// Weight ascending, then descending lex: the block layout of G(l, h, j),
  /// which reproduces the printed K(5,2,1) generator.
  graded,
  /// Lex on the list of (coordinate, value) pairs of nonzero entries, a
  /// proper prefix first: 000, 100, 110, 101, 010, 011, 001.
  support_lex,
};

inline bool column_less(const Point& a, const Point& b, ColumnOrder order) {
  if (order == ColumnOrder::graded) {
    const auto wa = hamming_weight(a), wb = hamming_weight(b);
    if (wa != wb) return wa < wb;
    return b < a;
  }
  auto sparse = [](const Point& p) {
    std::vector<std::pair<std::size_t, std::uint8_t>> out;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] != 0) out.emplace_back(i, p[i]);
    return out;
  };
  return sparse(a) < sparse(b);
}

inline void order_columns(std::vector<Point>& pts, ColumnOrder order) {
  std::sort(pts.begin(), pts.end(), [order](const Point& a, const Point& b) { return column_less(a, b, order); });
}

/// C(A, j): rows are monomials of S_{<=j}, columns points of P(A); entry
/// (r, c) = monomial_r(point_c). Rows are not reduced to a basis.
struct EvaluationCode {
  unsigned q = 2;
  std::size_t ambient_dim = 0;
  std::size_t degree = 0;
  std::vector<Point> points;
  std::vector<Monomial> monomials;
  PrimeFieldMatrix generator;
  std::string source;
  ColumnOrder order = ColumnOrder::graded;

  std::size_t length() const { return points.size(); }
  BitMatrix generator_bits() const { return BitMatrix::from(generator); }
};

inline EvaluationCode evaluation_code(std::vector<Point> pts, std::size_t l, unsigned q, std::size_t j,
                                      std::string source, ColumnOrder order = ColumnOrder::graded) {
  if (pts.empty()) throw DomainError("evaluation code needs at least one point");
  PrimeField field(q);
  order_columns(pts, order);
  EvaluationCode code;
  code.q = q;
  code.ambient_dim = l;
  code.degree = j;
  code.monomials = monomial_basis(l, j, q);
  code.generator = PrimeFieldMatrix(q, code.monomials.size(), pts.size());
  for (std::size_t r = 0; r < code.monomials.size(); ++r)
    for (std::size_t c = 0; c < pts.size(); ++c) code.generator.set(r, c, evaluate(code.monomials[r], pts[c], field));
  code.points = std::move(pts);
  code.source = std::move(source);
  code.order = order;
  return code;
}

inline EvaluationCode build_code(const SubspaceArrangement& a, std::size_t j,
                                 ColumnOrder order = ColumnOrder::graded) {
  if (a.empty()) throw DomainError("build_code: empty arrangement has no points");
  return evaluation_code(points(a), a.ambient_dim(), a.q(), j,
                         "arrangement of " + std::to_string(a.subspaces().size()) + " subspaces in GF(" +
                             std::to_string(a.q()) + ")^" + std::to_string(a.ambient_dim()),
                         order);
}

/// B_rs: rows of degree r against columns of weight s.
struct BlockIndex {
  std::size_t r = 0;
  std::size_t s = 0;
  std::size_t row_begin = 0, row_end = 0;
  std::size_t col_begin = 0, col_end = 0;
};

/// K(l, h, j) together with its block table (graded order only).
struct SkeletonCode {
  std::size_t l = 0, h = 0, j = 0;
  EvaluationCode code;
  std::vector<BlockIndex> blocks;
};

namespace detail {

inline std::vector<std::uint32_t> masks_up_to(std::size_t l, std::size_t max_size) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << l); ++m)
    if (static_cast<std::size_t>(std::popcount(m)) <= max_size) out.push_back(m);
  std::sort(out.begin(), out.end(), [](auto a, auto b) { return graded_lex_less(Face(a), Face(b)); });
  return out;
}

inline std::vector<std::size_t> run_starts(const std::vector<std::size_t>& degrees, std::size_t top) {
  std::vector<std::size_t> starts(top + 2, degrees.size());
  for (std::size_t i = degrees.size(); i-- > 0;) starts[degrees[i]] = i;
  for (std::size_t t = top; t-- > 0;) starts[t] = std::min(starts[t], starts[t + 1]);
  return starts;
}

}  // namespace detail

/// The binary h-skeleton code K(l, h, j) = C(A_{Δ(l,h)}, j), built directly
/// from masks: entry (x_σ, e_τ) is 1 iff σ ⊆ τ.
inline SkeletonCode skeleton_code(std::size_t l, std::size_t h, std::size_t j,
                                  ColumnOrder order = ColumnOrder::graded) {
  if (!(j <= h && h <= l)) throw DomainError("skeleton code requires 0 <= j <= h <= l");
  if (l > 24) throw DomainError("skeleton code construction limited to l <= 24");
  const auto cols = detail::masks_up_to(l, h);
  const auto rows = detail::masks_up_to(l, j);
  std::vector<Point> pts;
  pts.reserve(cols.size());
  for (auto m : cols) {
    Point p(l, 0);
    for (std::size_t i = 0; i < l; ++i) p[i] = (m >> i) & 1u;
    pts.push_back(std::move(p));
  }
  order_columns(pts, order);

  SkeletonCode out;
  out.l = l;
  out.h = h;
  out.j = j;
  EvaluationCode& code = out.code;
  code.q = 2;
  code.ambient_dim = l;
  code.degree = j;
  code.order = order;
  code.source = "K(" + std::to_string(l) + "," + std::to_string(h) + "," + std::to_string(j) + ")";
  code.generator = PrimeFieldMatrix(2, rows.size(), pts.size());
  std::vector<std::uint32_t> col_masks;
  for (const auto& p : pts) {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < l; ++i)
      if (p[i]) m |= std::uint32_t{1} << i;
    col_masks.push_back(m);
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Monomial mono{std::vector<std::uint8_t>(l, 0)};
    for (std::size_t i = 0; i < l; ++i) mono.exponents[i] = (rows[r] >> i) & 1u;
    code.monomials.push_back(std::move(mono));
    for (std::size_t c = 0; c < col_masks.size(); ++c)
      if ((rows[r] & ~col_masks[c]) == 0) code.generator.set(r, c, 1);
  }
  code.points = std::move(pts);

  if (order == ColumnOrder::graded) {
    std::vector<std::size_t> row_deg, col_wt;
    for (auto m : rows) row_deg.push_back(static_cast<std::size_t>(std::popcount(m)));
    for (auto m : col_masks) col_wt.push_back(static_cast<std::size_t>(std::popcount(m)));
    const auto rs = detail::run_starts(row_deg, j);
    const auto cs = detail::run_starts(col_wt, h);
    for (std::size_t r = 0; r <= j; ++r)
      for (std::size_t s = 0; s <= h; ++s) out.blocks.push_back({r, s, rs[r], rs[r + 1], cs[s], cs[s + 1]});
  }
  return out;
}

inline const BlockIndex& block_index(const SkeletonCode& code, std::size_t r, std::size_t s) {
  if (code.blocks.empty()) throw DomainError("block structure needs the graded column order");
  if (r > code.j || s > code.h) throw DomainError("block index out of range");
  return code.blocks[r * (code.h + 1) + s];
}

inline PrimeFieldMatrix block(const SkeletonCode& code, std::size_t r, std::size_t s) {
  const auto& b = block_index(code, r, s);
  return code.code.generator.submatrix(b.row_begin, b.row_end, b.col_begin, b.col_end);
}

/// RB_t: the degree-t rows across all columns.
inline PrimeFieldMatrix row_block(const SkeletonCode& code, std::size_t t) {
  if (t > code.j) throw DomainError("row block index out of range");
  const auto& b = block_index(code, t, 0);
  return code.code.generator.submatrix(b.row_begin, b.row_end, 0, code.code.length());
}

/// CB_t: the weight-t columns across all rows.
inline PrimeFieldMatrix column_block(const SkeletonCode& code, std::size_t t) {
  if (t > code.h) throw DomainError("column block index out of range");
  const auto& b = block_index(code, 0, t);
  return code.code.generator.submatrix(0, code.code.generator.rows(), b.col_begin, b.col_end);
}

}  // namespace skelcodes
