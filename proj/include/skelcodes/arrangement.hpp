#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "skelcodes/errors.hpp"
#include "skelcodes/field.hpp"
#include "skelcodes/linalg.hpp"
#include "skelcodes/matrix.hpp"
#include "skelcodes/simplicial.hpp"

namespace skelcodes {

/// One member of an arrangement: either the coordinate subspace
/// X_σ = span{e_i : i ∈ σ} or the row space of an explicit basis.
class Subspace {
 public:
  static Subspace coordinate(Face sigma) { return Subspace(sigma); }
  static Subspace general(PrimeFieldMatrix basis) { return Subspace(std::move(basis)); }

  bool is_coordinate() const { return std::holds_alternative<Face>(value_); }
  Face face() const { return std::get<Face>(value_); }
  const PrimeFieldMatrix& explicit_basis() const { return std::get<PrimeFieldMatrix>(value_); }

  /// A basis with one row per spanning vector, over GF(q) in dimension l.
  PrimeFieldMatrix basis(std::size_t l, unsigned q) const {
    if (!is_coordinate()) return explicit_basis();
    PrimeFieldMatrix out(q, 0, l);
    std::vector<std::uint8_t> row(l, 0);
    for (auto v : face().vertices()) {
      std::fill(row.begin(), row.end(), 0);
      row[v - 1] = 1;
      out.append_row(row);
    }
    return out;
  }

 private:
  explicit Subspace(Face f) : value_(f) {}
  explicit Subspace(PrimeFieldMatrix m) : value_(std::move(m)) {}
  std::variant<Face, PrimeFieldMatrix> value_;
};

/// A finite set of linear subspaces of GF(q)^l.
class SubspaceArrangement {
 public:
  SubspaceArrangement(std::size_t ambient_dim, unsigned q, std::vector<Subspace> subspaces = {})
      : ambient_dim_(ambient_dim), q_(PrimeField(q).size()) {
    if (ambient_dim > kMaxVertices) throw DomainError("ambient dimension above 30");
    for (auto& s : subspaces) add(std::move(s));
  }

  void add(Subspace s) {
    if (s.is_coordinate()) {
      if (!s.face().is_subset_of(Face((std::uint32_t{1} << ambient_dim_) - 1)))
        throw DomainError("coordinate subspace " + to_string(s.face()) + " outside ambient dimension");
    } else if (s.explicit_basis().cols() != ambient_dim_ || s.explicit_basis().q() != q_) {
      throw DomainError("general subspace basis must have l columns over GF(q)");
    }
    subspaces_.push_back(std::move(s));
  }

  std::size_t ambient_dim() const { return ambient_dim_; }
  unsigned q() const { return q_; }
  const std::vector<Subspace>& subspaces() const { return subspaces_; }
  bool empty() const { return subspaces_.empty(); }
  bool all_coordinate() const {
    return std::all_of(subspaces_.begin(), subspaces_.end(), [](const Subspace& s) { return s.is_coordinate(); });
  }

  /// Same arrangement with every coordinate member written as an explicit basis.
  SubspaceArrangement as_general() const {
    SubspaceArrangement out(ambient_dim_, q_);
    for (const auto& s : subspaces_) out.add(Subspace::general(s.basis(ambient_dim_, q_)));
    return out;
  }

 private:
  std::size_t ambient_dim_;
  unsigned q_;
  std::vector<Subspace> subspaces_;
};

/// A_Δ with one coordinate subspace per facet of Δ. Lower faces lie inside a
/// facet's subspace, so they change neither P(A) nor the lattice.
inline SubspaceArrangement coordinate_arrangement(const SimplicialComplex& complex, unsigned q = 2) {
  SubspaceArrangement out(complex.vertex_count(), q);
  for (auto facet : complex.facets()) out.add(Subspace::coordinate(facet));
  return out;
}

struct LatticeElement {
  PrimeFieldMatrix basis;  // canonical RREF basis
  std::size_t dim = 0;
  long long mobius = 0;
  std::optional<Face> coordinate;  // set on the coordinate route
};

/// L(A) ordered by decreasing dimension; element 0 is V.
struct IntersectionLattice {
  std::size_t ambient_dim = 0;
  unsigned q = 2;
  std::vector<LatticeElement> elements;
  // V itself is a member of A, so P(A) = V.
  bool ambient_is_member = false;
};

enum class LatticeRoute { automatic, coordinate, general };

namespace detail {

inline bool contains_subspace(const LatticeElement& big, const LatticeElement& small) {
  if (big.coordinate && small.coordinate) return small.coordinate->is_subset_of(*big.coordinate);
  if (small.dim > big.dim) return false;
  if (small.dim == 0) return true;
  return rank(stack(big.basis, small.basis)) == big.dim;
}

// mu(V) = 1; mu(X) = -sum of mu(Y) over Y strictly containing X. Elements
// arrive sorted by decreasing dimension so every such Y precedes X.
inline void assign_mobius(std::vector<LatticeElement>& elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i == 0) {
      elements[i].mobius = 1;
      continue;
    }
    long long sum = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (elements[j].dim > elements[i].dim && contains_subspace(elements[j], elements[i])) sum += elements[j].mobius;
    elements[i].mobius = -sum;
  }
}

inline IntersectionLattice coordinate_lattice(const SubspaceArrangement& a) {
  const std::uint32_t full = (std::uint32_t{1} << a.ambient_dim()) - 1;
  std::set<std::uint32_t> closure{full};
  std::vector<std::uint32_t> work;
  for (const auto& s : a.subspaces())
    if (closure.insert(s.face().mask()).second) work.push_back(s.face().mask());
  while (!work.empty()) {
    const std::uint32_t x = work.back();
    work.pop_back();
    const std::vector<std::uint32_t> snapshot(closure.begin(), closure.end());
    for (auto y : snapshot)
      if (closure.insert(x & y).second) work.push_back(x & y);
  }
  std::vector<Face> faces;
  for (auto m : closure) faces.emplace_back(m);
  std::sort(faces.begin(), faces.end(), [](Face x, Face y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return graded_lex_less(x, y);
  });
  IntersectionLattice out{a.ambient_dim(), a.q(), {}, false};
  for (auto f : faces)
    out.elements.push_back({Subspace::coordinate(f).basis(a.ambient_dim(), a.q()), f.size(), 0, f});
  return out;
}

inline IntersectionLattice general_lattice(const SubspaceArrangement& a) {
  const std::size_t l = a.ambient_dim();
  std::map<std::vector<std::uint8_t>, PrimeFieldMatrix> closure;
  auto key = [](const PrimeFieldMatrix& b) {
    std::vector<std::uint8_t> k(b.entries());
    k.push_back(static_cast<std::uint8_t>(b.rows()));
    return k;
  };
  std::vector<PrimeFieldMatrix> work;
  auto insert = [&](PrimeFieldMatrix b) {
    auto k = key(b);
    if (closure.emplace(std::move(k), b).second) work.push_back(std::move(b));
  };
  insert(PrimeFieldMatrix::identity(a.q(), l));
  for (const auto& s : a.subspaces()) insert(canonical_basis(s.basis(l, a.q())));
  while (!work.empty()) {
    const PrimeFieldMatrix x = work.back();
    work.pop_back();
    std::vector<PrimeFieldMatrix> snapshot;
    for (const auto& [k, b] : closure) snapshot.push_back(b);
    for (const auto& y : snapshot) insert(intersect_row_spaces(x, y));
  }
  IntersectionLattice out{l, a.q(), {}, false};
  for (auto& [k, b] : closure) out.elements.push_back({b, b.rows(), 0, std::nullopt});
  std::stable_sort(out.elements.begin(), out.elements.end(),
                   [](const LatticeElement& x, const LatticeElement& y) { return x.dim > y.dim; });
  return out;
}

}  // namespace detail

/// Closure of {V} ∪ A under intersection, with Möbius values.
inline IntersectionLattice intersection_lattice(const SubspaceArrangement& a,
                                                LatticeRoute route = LatticeRoute::automatic) {
  const bool coordinate = route == LatticeRoute::coordinate ||
                          (route == LatticeRoute::automatic && a.all_coordinate());
  if (coordinate && !a.all_coordinate()) throw DomainError("coordinate route needs a coordinate arrangement");
  IntersectionLattice lattice = coordinate ? detail::coordinate_lattice(a) : detail::general_lattice(a);
  for (const auto& s : a.subspaces()) {
    const std::size_t dim = s.is_coordinate() ? s.face().size() : rank(s.explicit_basis());
    if (dim == a.ambient_dim()) lattice.ambient_is_member = true;
  }
  detail::assign_mobius(lattice.elements);
  return lattice;
}

/// χ(A, t) = Σ μ(X) t^dim X; coefficient i multiplies t^i.
struct CharacteristicPolynomial {
  std::vector<long long> coefficients;

  std::size_t degree() const { return coefficients.size() - 1; }

  long long evaluate(long long t) const {
    long long acc = 0;
    for (std::size_t i = coefficients.size(); i-- > 0;) {
      if (__builtin_mul_overflow(acc, t, &acc) || __builtin_add_overflow(acc, coefficients[i], &acc))
        throw DomainError("characteristic polynomial evaluation overflows 64 bits");
    }
    return acc;
  }
};

inline CharacteristicPolynomial characteristic_polynomial(const IntersectionLattice& lattice) {
  CharacteristicPolynomial chi{std::vector<long long>(lattice.ambient_dim + 1, 0)};
  for (const auto& x : lattice.elements) chi.coefficients[x.dim] += x.mobius;
  return chi;
}

inline long long checked_power(long long base, std::size_t exponent) {
  long long out = 1;
  for (std::size_t i = 0; i < exponent; ++i)
    if (__builtin_mul_overflow(out, base, &out)) throw DomainError("power overflows 64 bits");
  return out;
}

/// |P(A)| from the lattice: q^l - χ(A, q). When V is itself a member the
/// point set is all of V.
inline long long athanasiadis_count(const IntersectionLattice& lattice, unsigned q) {
  if (!is_prime(q)) throw DomainError("q must be prime");
  const long long total = checked_power(q, lattice.ambient_dim);
  if (lattice.ambient_is_member) return total;
  return total - characteristic_polynomial(lattice).evaluate(q);
}

/// P(A): the union of the members, deduplicated, in canonical point order.
inline std::vector<Point> points(const SubspaceArrangement& a) {
  std::vector<Point> out;
  const std::size_t l = a.ambient_dim();
  const unsigned q = a.q();
  for (const auto& s : a.subspaces()) {
    if (s.is_coordinate()) {
      const auto support = s.face().vertices();
      std::vector<unsigned> digits(support.size(), 0);
      while (true) {
        Point p(l, 0);
        for (std::size_t i = 0; i < support.size(); ++i) p[support[i] - 1] = static_cast<std::uint8_t>(digits[i]);
        out.push_back(std::move(p));
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
        if (i == digits.size()) break;
      }
    } else {
      auto pts = enumerate_points(s.explicit_basis());
      out.insert(out.end(), std::make_move_iterator(pts.begin()), std::make_move_iterator(pts.end()));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace skelcodes
