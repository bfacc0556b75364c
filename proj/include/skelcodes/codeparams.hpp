#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "skelcodes/bitmatrix.hpp"
#include "skelcodes/errors.hpp"
#include "skelcodes/evalcode.hpp"
#include "skelcodes/linalg.hpp"
#include "skelcodes/matrix.hpp"

namespace skelcodes {

enum class DistanceMethod { exhaustive, information_set, formula };

inline std::string to_string(DistanceMethod m) {
  switch (m) {
    case DistanceMethod::exhaustive: return "exhaustive";
    case DistanceMethod::information_set: return "information_set";
    case DistanceMethod::formula: return "formula";
  }
  return "?";
}

/// [n, k, d]; d is absent until a search (or a formula) supplies it.
struct CodeParameters {
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> d;
  DistanceMethod method = DistanceMethod::formula;
};

struct SearchOptions {
  /// Binary exhaustive search runs only when k <= k_cap; generic q requires
  /// q^k <= 2^k_cap.
  std::size_t k_cap = 26;
  unsigned threads = 1;
};

struct DistanceResult {
  std::size_t d = 0;
  /// A codeword of weight d; the first such in coordinate order.
  Point witness;
  DistanceMethod method = DistanceMethod::exhaustive;
};

/// A_w for w = 0..n.
struct WeightDistribution {
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
  }
  /// Smallest w > 0 with A_w > 0, or 0 for the zero code.
  std::size_t min_distance() const {
    for (std::size_t w = 1; w < counts.size(); ++w)
      if (counts[w] != 0) return w;
    return 0;
  }
};

/// n = number of columns, k = rank; d is left unset.
inline CodeParameters parameters(const PrimeFieldMatrix& generator) {
  const std::size_t k = rank(generator);
  if (k == 0) throw DomainError("zero generator matrix: dimension 0");
  return {generator.cols(), k, std::nullopt, DistanceMethod::formula};
}

inline CodeParameters parameters(const EvaluationCode& code) { return parameters(code.generator); }

namespace detail {

// Lightest codeword seen so far; ties go to the coordinate-order minimum so
// the result does not depend on visiting order.
struct BestWord {
  std::size_t weight = std::numeric_limits<std::size_t>::max();
  std::vector<Word> word;

  void offer(std::span<const Word> candidate, std::size_t w) {
    if (w < weight || (w == weight && bits_less(candidate, word))) {
      weight = w;
      word.assign(candidate.begin(), candidate.end());
    }
  }
  void merge(const BestWord& other) {
    if (other.weight != std::numeric_limits<std::size_t>::max()) offer(other.word, other.weight);
  }
};

inline Point unpack(std::span<const Word> words, std::size_t n) {
  Point p(n, 0);
  for (std::size_t c = 0; c < n; ++c) p[c] = (words[c / kWordBits] >> (c % kWordBits)) & 1u;
  return p;
}

template <class Fn>
void run_workers(unsigned threads, Fn&& fn) {
  if (threads <= 1) {
    fn(0u);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back([&fn, t] { fn(t); });
}

// Visits every codeword m·basis whose message has the given top bits
// (rows low_bits..k-1) and arbitrary low bits, in Gray-code order: each step
// flips one message bit, i.e. one row XOR per codeword.
template <std::size_t W, class Visit>
void gray_walk(const BitMatrix& basis, std::uint64_t prefix, std::size_t low_bits, Visit&& visit) {
  const std::size_t stride = W == 0 ? basis.stride() : W;
  std::vector<Word> current(stride, 0);
  for (std::size_t i = low_bits; i < basis.rows(); ++i)
    if ((prefix >> (i - low_bits)) & 1u) {
      const auto row = basis.row(i);
      for (std::size_t x = 0; x < stride; ++x) current[x] ^= row[x];
    }
  visit(std::span<const Word>(current), std::uint64_t{0});
  const std::uint64_t steps = std::uint64_t{1} << low_bits;
  for (std::uint64_t step = 1; step < steps; ++step) {
    const auto row = basis.row(static_cast<std::size_t>(std::countr_zero(step)));
    for (std::size_t x = 0; x < stride; ++x) current[x] ^= row[x];
    visit(std::span<const Word>(current), step);
  }
}

template <class Visit>
void gray_walk_dispatch(const BitMatrix& basis, std::uint64_t prefix, std::size_t low_bits, Visit&& visit) {
  switch (basis.stride()) {
    case 1: gray_walk<1>(basis, prefix, low_bits, visit); break;
    case 2: gray_walk<2>(basis, prefix, low_bits, visit); break;
    default: gray_walk<0>(basis, prefix, low_bits, visit); break;
  }
}

struct Partition {
  std::size_t high_bits = 0;
  std::size_t low_bits = 0;
};

inline Partition partition_messages(std::size_t k, unsigned threads) {
  std::size_t high = 0;
  while (threads > 1 && (std::size_t{1} << high) < 4u * threads && high < k) ++high;
  return {high, k - high};
}

// Splits the 2^k messages by their top bits across workers.
template <class MakeVisitor, class Merge>
void binary_enumerate(const BitMatrix& basis, unsigned threads, MakeVisitor&& make_visitor, Merge&& merge) {
  const auto part = partition_messages(basis.rows(), threads);
  const std::uint64_t chunks = std::uint64_t{1} << part.high_bits;
  std::vector<decltype(make_visitor())> visitors;
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(threads, 1u), chunks));
  for (unsigned t = 0; t < workers; ++t) visitors.push_back(make_visitor());
  std::atomic<std::uint64_t> next{0};
  run_workers(workers, [&](unsigned t) {
    for (std::uint64_t chunk = next++; chunk < chunks; chunk = next++)
      gray_walk_dispatch(basis, chunk, part.low_bits,
                         [&](std::span<const Word> word, std::uint64_t step) { visitors[t](word, chunk, step); });
  });
  for (auto& v : visitors) merge(v);
}

struct MinWeightVisitor {
  BestWord best;
  void operator()(std::span<const Word> word, std::uint64_t chunk, std::uint64_t step) {
    if (chunk == 0 && step == 0) return;  // zero message
    best.offer(word, popcount(word));
  }
};

struct TallyVisitor {
  std::vector<std::uint64_t> counts;
  void operator()(std::span<const Word> word, std::uint64_t, std::uint64_t) { ++counts[popcount(word)]; }
};

// Modular q-ary Gray code: step s adds row t, where t counts the trailing
// (q - 1) digits of s - 1, so every message is visited exactly once.
template <class Visit>
void qary_gray_walk(const PrimeFieldMatrix& basis, Visit&& visit) {
  const PrimeField& f = basis.field();
  const std::size_t k = basis.rows(), n = basis.cols();
  const unsigned q = f.size();
  std::vector<unsigned> counter(k, 0);
  Point current(n, 0);
  visit(current);
  while (true) {
    std::size_t t = 0;
    while (t < k && counter[t] == q - 1) counter[t++] = 0;
    if (t == k) return;
    ++counter[t];
    for (std::size_t c = 0; c < n; ++c) current[c] = f.add(current[c], basis(t, c));
    visit(current);
  }
}

inline void check_generic_cap(unsigned q, std::size_t k, std::size_t cap_bits) {
  long double space = 1;
  for (std::size_t i = 0; i < k; ++i) space *= q;
  if (space > static_cast<long double>(std::uint64_t{1} << cap_bits))
    throw CapExceeded("q^k = " + std::to_string(q) + "^" + std::to_string(k) + " exceeds 2^" +
                      std::to_string(cap_bits));
}

}  // namespace detail

/// Exact minimum distance by visiting every nonzero codeword of a row basis.
inline DistanceResult min_distance_exhaustive(const PrimeFieldMatrix& generator, const SearchOptions& options = {}) {
  const PrimeFieldMatrix basis = canonical_basis(generator);
  const std::size_t k = basis.rows();
  if (k == 0) throw DomainError("zero code has no minimum distance");
  if (generator.q() == 2) {
    if (k > options.k_cap || k > 62)
      throw CapExceeded("k = " + std::to_string(k) + " exceeds the exhaustive cap " + std::to_string(options.k_cap));
    const BitMatrix bits = BitMatrix::from(basis);
    detail::BestWord best;
    detail::binary_enumerate(
        bits, options.threads, [] { return detail::MinWeightVisitor{}; },
        [&](const detail::MinWeightVisitor& v) { best.merge(v.best); });
    return {best.weight, detail::unpack(best.word, generator.cols()), DistanceMethod::exhaustive};
  }
  detail::check_generic_cap(generator.q(), k, options.k_cap);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  Point witness;
  detail::qary_gray_walk(basis, [&](const Point& word) {
    const std::size_t w = hamming_weight(word);
    if (w == 0) return;
    if (w < best || (w == best && word < witness)) {
      best = w;
      witness = word;
    }
  });
  return {best, witness, DistanceMethod::exhaustive};
}

inline DistanceResult min_distance_exhaustive(const EvaluationCode& code, const SearchOptions& options = {}) {
  return min_distance_exhaustive(code.generator, options);
}

/// Exact A_w counts over all q^k codewords (q^k <= 2^cap_bits).
inline WeightDistribution weight_distribution(const PrimeFieldMatrix& generator, const SearchOptions& options = {},
                                              std::size_t cap_bits = 24) {
  const PrimeFieldMatrix basis = canonical_basis(generator);
  const std::size_t n = generator.cols();
  detail::check_generic_cap(generator.q(), basis.rows(), cap_bits);
  WeightDistribution out{std::vector<std::uint64_t>(n + 1, 0)};
  if (generator.q() == 2) {
    const BitMatrix bits = BitMatrix::from(basis);
    detail::binary_enumerate(
        bits, options.threads, [n] { return detail::TallyVisitor{std::vector<std::uint64_t>(n + 1, 0)}; },
        [&](const detail::TallyVisitor& v) {
          for (std::size_t w = 0; w <= n; ++w) out.counts[w] += v.counts[w];
        });
    return out;
  }
  detail::qary_gray_walk(basis, [&](const Point& word) { ++out.counts[hamming_weight(word)]; });
  return out;
}

inline WeightDistribution weight_distribution(const EvaluationCode& code, const SearchOptions& options = {}) {
  return weight_distribution(code.generator, options);
}

/// One systematic generator of an information-set chain: identity on its
/// pivot columns, `fresh` of which are disjoint from every earlier set.
struct InformationSet {
  BitMatrix generator;
  std::vector<std::size_t> pivots;
  std::size_t fresh = 0;
};

/// Greedy chain of information sets: each new generator pivots first on
/// columns no earlier set has claimed.
inline std::vector<InformationSet> information_sets(const BitMatrix& basis) {
  const std::size_t n = basis.cols();
  const std::size_t k = basis.rows();
  std::vector<bool> used(n, false);
  std::vector<InformationSet> out;
  while (true) {
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < n; ++c)
      if (!used[c]) order.push_back(c);
    const std::size_t unused = order.size();
    for (std::size_t c = 0; c < n; ++c)
      if (used[c]) order.push_back(c);
    if (unused == 0) break;
    BitMatrix g = basis;
    auto pivots = g.reduce(order);
    if (pivots.size() != k) throw DomainError("information_sets: basis rows are dependent");
    std::size_t fresh = 0;
    for (auto c : pivots)
      if (!used[c]) ++fresh;
    if (fresh == 0) break;
    for (auto c : pivots) used[c] = true;
    out.push_back({std::move(g), std::move(pivots), fresh});
  }
  return out;
}

namespace detail {

// Codewords whose message under `set` has weight >= w + 1 have at least
// w + 1 - (k - fresh) ones on that set's fresh pivots.
inline std::size_t fresh_contribution(std::size_t w, std::size_t k, std::size_t fresh) {
  const std::size_t hidden = k - fresh;
  return w + 1 > hidden ? w + 1 - hidden : 0;
}

// Every weight-w message of g, split across workers by the first row index.
inline BestWord enumerate_weight(const BitMatrix& g, std::size_t w, unsigned threads) {
  const std::size_t k = g.rows();
  const std::size_t stride = g.stride();
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(k)));
  std::vector<BestWord> local(workers);
  std::atomic<std::size_t> next{0};
  run_workers(workers, [&](unsigned t) {
    std::vector<Word> acc((w + 1) * stride, 0);
    std::vector<std::size_t> idx(w + 1, 0);
    for (std::size_t first = next++; first + w <= k; first = next++) {
      auto row = g.row(first);
      std::copy(row.begin(), row.end(), acc.begin() + static_cast<std::ptrdiff_t>(stride));
      if (w == 1) {
        local[t].offer(std::span<const Word>(acc.data() + stride, stride), popcount(row));
        continue;
      }
      // acc level d holds the XOR of the first d chosen rows; idx[d] is the
      // candidate for row d + 1.
      std::size_t depth = 1;
      idx[1] = first + 1;
      while (depth >= 1) {
        if (idx[depth] + (w - depth - 1) >= k) {
          --depth;
          if (depth >= 1) ++idx[depth];
          continue;
        }
        const Word* prev = acc.data() + depth * stride;
        Word* cur = acc.data() + (depth + 1) * stride;
        const auto r = g.row(idx[depth]);
        for (std::size_t x = 0; x < stride; ++x) cur[x] = prev[x] ^ r[x];
        if (depth + 1 == w) {
          std::span<const Word> word(cur, stride);
          local[t].offer(word, popcount(word));
          ++idx[depth];
        } else {
          ++depth;
          idx[depth] = idx[depth - 1] + 1;
        }
      }
    }
  });
  BestWord best;
  for (const auto& b : local) best.merge(b);
  return best;
}

}  // namespace detail

/// Brouwer-Zimmermann style search over a chain of information sets: after
/// all messages of weight <= w are tried in every generator, an unseen
/// codeword has weight >= Σ max(0, w + 1 - (k - fresh_i)). Stops once that
/// lower bound meets the lightest codeword found. Binary codes only.
inline DistanceResult min_distance_information_set(const PrimeFieldMatrix& generator, unsigned threads = 1) {
  if (generator.q() != 2) throw DomainError("information-set search supports q = 2 only");
  const BitMatrix basis = row_basis(BitMatrix::from(generator));
  const std::size_t k = basis.rows();
  if (k == 0) throw DomainError("zero code has no minimum distance");
  const auto sets = information_sets(basis);
  detail::BestWord best;
  for (std::size_t w = 1; w <= k; ++w) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
      best.merge(detail::enumerate_weight(sets[i].generator, w, threads));
      std::size_t lower = 0;
      for (std::size_t m = 0; m < sets.size(); ++m)
        lower += detail::fresh_contribution(m <= i ? w : w - 1, k, sets[m].fresh);
      if (lower >= best.weight) return {best.weight, detail::unpack(best.word, generator.cols()),
                                        DistanceMethod::information_set};
    }
  }
  return {best.weight, detail::unpack(best.word, generator.cols()), DistanceMethod::information_set};
}

inline DistanceResult min_distance_information_set(const EvaluationCode& code, unsigned threads = 1) {
  return min_distance_information_set(code.generator, threads);
}

enum class SearchMethod { automatic, exhaustive, information_set };

/// Exhaustive within the cap, otherwise the information-set search (q = 2).
inline DistanceResult min_distance(const PrimeFieldMatrix& generator, SearchMethod method,
                                   const SearchOptions& options = {}) {
  if (method == SearchMethod::exhaustive) return min_distance_exhaustive(generator, options);
  if (method == SearchMethod::information_set) return min_distance_information_set(generator, options.threads);
  const std::size_t k = rank(generator);
  if (generator.q() != 2 || k <= options.k_cap) return min_distance_exhaustive(generator, options);
  return min_distance_information_set(generator, options.threads);
}

}  // namespace skelcodes
