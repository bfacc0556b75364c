#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "skelcodes/errors.hpp"

namespace skelcodes {

inline constexpr unsigned kMaxVertices = 30;

/// A vertex set σ ⊆ [l] stored as a bit mask; bit i - 1 stands for vertex i.
class Face {
 public:
  constexpr Face() = default;
  constexpr explicit Face(std::uint32_t mask) : mask_(mask) {}

  /// From 1-based vertex numbers.
  static Face of(std::initializer_list<unsigned> vertices) {
    return of(std::vector<unsigned>(vertices));
  }
  static Face of(const std::vector<unsigned>& vertices) {
    std::uint32_t mask = 0;
    for (auto v : vertices) {
      if (v < 1 || v > kMaxVertices) throw DomainError("vertex " + std::to_string(v) + " out of range");
      mask |= std::uint32_t{1} << (v - 1);
    }
    return Face(mask);
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(mask_)); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(unsigned vertex) const { return (mask_ >> (vertex - 1)) & 1u; }
  constexpr bool is_subset_of(Face other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr Face operator|(Face other) const { return Face(mask_ | other.mask_); }
  constexpr Face operator&(Face other) const { return Face(mask_ & other.mask_); }

  std::vector<unsigned> vertices() const {
    std::vector<unsigned> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<unsigned>(std::countr_zero(m)) + 1);
    return out;
  }

  constexpr friend bool operator==(Face, Face) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Size first, then lexicographic on sorted vertex lists: {1} < {2} < {1,2} < {1,3}.
inline bool graded_lex_less(Face a, Face b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  // Lowest differing vertex belongs to the lex-smaller set.
  const std::uint32_t diff = a.mask() ^ b.mask();
  return (a.mask() >> std::countr_zero(diff)) & 1u;
}

inline std::string to_string(Face f) {
  std::string out = "{";
  bool first = true;
  for (auto v : f.vertices()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

/// Downward-closed family of faces on vertex set [l], empty face included.
///
/// Condition (2), every singleton is a face, is checked at construction.
/// The only complex built without it is skeleton(l, 0) for l >= 1, which is
/// kept and flagged degenerate.
class SimplicialComplex {
 public:
  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Face>& faces() const { return faces_; }
  bool degenerate() const { return degenerate_; }

  bool contains(Face f) const {
    return std::binary_search(faces_.begin(), faces_.end(), f, graded_lex_less);
  }

  /// Maximal faces in graded-lex order.
  std::vector<Face> facets() const {
    std::vector<Face> out;
    for (auto f : faces_) {
      bool maximal = true;
      for (unsigned v = 1; v <= vertex_count_ && maximal; ++v)
        if (!f.contains(v) && contains(f | Face::of({v}))) maximal = false;
      if (maximal) out.push_back(f);
    }
    return out;
  }

  /// Largest face cardinality minus one; -1 for the complex {∅}.
  int dimension() const { return static_cast<int>(faces_.back().size()) - 1; }

  friend SimplicialComplex from_facets(std::size_t l, const std::vector<Face>& facets);
  friend SimplicialComplex skeleton(std::size_t l, std::size_t h);

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Face> faces_;
  bool degenerate_ = false;
};

/// Smallest complex containing every facet.
inline SimplicialComplex from_facets(std::size_t l, const std::vector<Face>& facets) {
  if (l > kMaxVertices) throw DomainError("at most 30 vertices are supported");
  const std::uint32_t ground = (std::uint32_t{1} << l) - 1;
  std::unordered_set<std::uint32_t> seen{0};
  std::vector<std::uint32_t> stack;
  for (auto f : facets) {
    if (!f.is_subset_of(Face(ground)))
      throw DomainError("facet " + to_string(f) + " has a vertex outside [" + std::to_string(l) + "]");
    if (seen.insert(f.mask()).second) stack.push_back(f.mask());
  }
  while (!stack.empty()) {
    const std::uint32_t m = stack.back();
    stack.pop_back();
    for (std::uint32_t rest = m; rest != 0; rest &= rest - 1) {
      const std::uint32_t sub = m & ~(rest & -rest);
      if (seen.insert(sub).second) stack.push_back(sub);
    }
  }
  for (unsigned v = 1; v <= l; ++v)
    if (!seen.contains(std::uint32_t{1} << (v - 1)))
      throw DomainError("vertex " + std::to_string(v) + " is in no facet");
  SimplicialComplex out;
  out.vertex_count_ = l;
  for (auto m : seen) out.faces_.emplace_back(m);
  std::sort(out.faces_.begin(), out.faces_.end(), graded_lex_less);
  return out;
}

/// Δ(l, h): every σ ⊆ [l] with |σ| <= h.
inline SimplicialComplex skeleton(std::size_t l, std::size_t h) {
  if (l > kMaxVertices) throw DomainError("at most 30 vertices are supported");
  if (h > l) throw DomainError("skeleton requires h <= l");
  SimplicialComplex out;
  out.vertex_count_ = l;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << l); ++m)
    if (static_cast<std::size_t>(std::popcount(m)) <= h) out.faces_.emplace_back(m);
  std::sort(out.faces_.begin(), out.faces_.end(), graded_lex_less);
  out.degenerate_ = (h == 0 && l >= 1);
  return out;
}

/// f_i = number of faces with i vertices; f_0 = 1, last entry nonzero.
inline std::vector<std::size_t> f_vector(const SimplicialComplex& complex) {
  std::vector<std::size_t> f(static_cast<std::size_t>(complex.dimension() + 2), 0);
  for (auto face : complex.faces()) ++f[face.size()];
  return f;
}

/// Minimal non-faces, i.e. the supports of the monomial generators of the
/// Stanley-Reisner ideal, in graded-lex order.
inline std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex) {
  std::vector<Face> out;
  const auto l = static_cast<unsigned>(complex.vertex_count());
  for (auto face : complex.faces()) {
    for (unsigned v = 1; v <= l; ++v) {
      if (face.contains(v)) continue;
      const Face candidate = face | Face::of({v});
      if (complex.contains(candidate)) continue;
      bool minimal = true;
      for (auto u : candidate.vertices())
        if (!complex.contains(Face(candidate.mask() & ~(std::uint32_t{1} << (u - 1))))) {
          minimal = false;
          break;
        }
      if (minimal) out.push_back(candidate);
    }
  }
  std::sort(out.begin(), out.end(), graded_lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Complex text format: first line l, then one facet per line as
/// space-separated vertex numbers. Blank lines and '#' lines are ignored.
inline SimplicialComplex read_complex(std::istream& in) {
  std::string line;
  long long l = -1;
  std::vector<Face> facets;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line.front() == '#') continue;
    std::istringstream row(line);
    if (!have_header) {
      if (!(row >> l) || l < 0) throw ParseError("bad complex header: '" + line + "'");
      have_header = true;
      continue;
    }
    std::vector<unsigned> vertices;
    long long v = 0;
    while (row >> v) {
      if (v < 1 || v > l) throw ParseError("vertex out of range: " + std::to_string(v));
      vertices.push_back(static_cast<unsigned>(v));
    }
    if (!row.eof()) throw ParseError("bad facet line: '" + line + "'");
    facets.push_back(Face::of(vertices));
  }
  if (!have_header) throw ParseError("missing complex header");
  return from_facets(static_cast<std::size_t>(l), facets);
}

/// Parses a facet list such as "1 2, 1 3, 2 3".
inline std::vector<Face> parse_facet_list(const std::string& text) {
  std::vector<Face> facets;
  std::istringstream in(text);
  std::string chunk;
  while (std::getline(in, chunk, ',')) {
    std::istringstream row(chunk);
    std::vector<unsigned> vertices;
    long long v = 0;
    while (row >> v) {
      if (v < 1 || v > static_cast<long long>(kMaxVertices)) throw ParseError("vertex out of range: " + std::to_string(v));
      vertices.push_back(static_cast<unsigned>(v));
    }
    if (!row.eof()) throw ParseError("bad facet: '" + chunk + "'");
    if (!vertices.empty()) facets.push_back(Face::of(vertices));
  }
  return facets;
}

}  // namespace skelcodes
