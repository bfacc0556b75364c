#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "skelcodes/codeparams.hpp"
#include "skelcodes/formulas.hpp"

using namespace skelcodes;

namespace {

oracle::Rows rows_of(const PrimeFieldMatrix& m) {
  oracle::Rows out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
  return out;
}

PrimeFieldMatrix random_generator(std::mt19937& rng, unsigned q, std::size_t rows, std::size_t cols) {
  while (true) {
    PrimeFieldMatrix m(q, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() % q);
    if (rank(m) > 0) return m;
  }
}

// A random subcode of K(l, h, j): `dim` random combinations of its rows.
PrimeFieldMatrix random_subcode(std::mt19937& rng, const PrimeFieldMatrix& g, std::size_t dim) {
  PrimeFieldMatrix out(2, dim, g.cols());
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t s = 0; s < g.rows(); ++s)
      if (rng() & 1u)
        for (std::size_t c = 0; c < g.cols(); ++c) out.set(r, c, out(r, c) ^ g(s, c));
  return out;
}

std::size_t weight_of(const Point& p) { return hamming_weight(p); }

}  // namespace

TEST(Parameters, PrintedCodes) {
  const auto k321 = parameters(skeleton_code(3, 2, 1).code);
  EXPECT_EQ(k321.n, 7u);
  EXPECT_EQ(k321.k, 4u);
  EXPECT_FALSE(k321.d.has_value());
  const auto k521 = parameters(skeleton_code(5, 2, 1).code);
  EXPECT_EQ(k521.n, 16u);
  EXPECT_EQ(k521.k, 6u);
  for (std::size_t l = 1; l <= 6; ++l) EXPECT_EQ(parameters(skeleton_code(l, l / 2, 0).code).k, 1u);
  EXPECT_THROW(parameters(PrimeFieldMatrix(2, 2, 3)), DomainError);
}

TEST(Exhaustive, PrintedAndDerivedDistances) {
  EXPECT_EQ(min_distance_exhaustive(skeleton_code(3, 2, 1).code).d, 3u);
  EXPECT_EQ(min_distance_exhaustive(skeleton_code(5, 2, 1).code).d, 5u);
  // Frozen from an independent pass over all 2^22 messages.
  EXPECT_EQ(min_distance_exhaustive(skeleton_code(6, 4, 2).code).d, 11u);
}

TEST(Exhaustive, TrivialCodes) {
  EXPECT_EQ(min_distance_exhaustive(PrimeFieldMatrix::from_rows(2, {{1, 1, 0, 1, 1}})).d, 4u);
  EXPECT_EQ(min_distance_exhaustive(PrimeFieldMatrix::identity(2, 5)).d, 1u);
  EXPECT_EQ(min_distance_exhaustive(PrimeFieldMatrix::identity(3, 4)).d, 1u);
  EXPECT_THROW(min_distance_exhaustive(PrimeFieldMatrix(2, 3, 4)), DomainError);
}

TEST(Exhaustive, CapIsEnforced) {
  const auto g = skeleton_code(6, 4, 2).code.generator;  // k = 22
  EXPECT_THROW(min_distance_exhaustive(g, {20, 1}), CapExceeded);
  EXPECT_THROW(min_distance_exhaustive(PrimeFieldMatrix::identity(3, 20), {24, 1}), CapExceeded);
}

TEST(Exhaustive, MatchesBruteForceOracle) {
  std::mt19937 rng(41);
  for (unsigned q : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t rows = 1 + rng() % (q == 2 ? 7 : 4);
      const auto g = random_generator(rng, q, rows, 1 + rng() % 12);
      const auto result = min_distance_exhaustive(g);
      EXPECT_EQ(result.d, oracle::min_distance(rows_of(g), g.cols(), q));
      EXPECT_EQ(weight_of(result.witness), result.d);
    }
  }
}

TEST(Exhaustive, WitnessIsInTheCodeAndIndependentOfThreads) {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_generator(rng, 2, 4 + rng() % 8, 20 + rng() % 80);
    const auto one = min_distance_exhaustive(g, {26, 1});
    const auto four = min_distance_exhaustive(g, {26, 4});
    EXPECT_EQ(one.d, four.d);
    EXPECT_EQ(one.witness, four.witness);
    auto extended = g;
    extended.append_row(std::vector<std::uint8_t>(one.witness.begin(), one.witness.end()));
    EXPECT_EQ(rank(extended), rank(g));
  }
}

TEST(WeightDistribution, HammingCode) {
  const auto wd = weight_distribution(skeleton_code(3, 2, 1).code);
  EXPECT_EQ(wd.counts, (std::vector<std::uint64_t>{1, 0, 0, 7, 7, 0, 0, 1}));
  EXPECT_EQ(wd.min_distance(), 3u);
}

TEST(WeightDistribution, RepetitionAndK521) {
  const auto rep = weight_distribution(PrimeFieldMatrix::from_rows(2, {{1, 1, 1, 1}}));
  EXPECT_EQ(rep.counts, (std::vector<std::uint64_t>{1, 0, 0, 0, 1}));
  const auto wd = weight_distribution(skeleton_code(5, 2, 1).code);
  EXPECT_EQ(wd.total(), 64u);
  for (std::size_t w = 1; w < 5; ++w) EXPECT_EQ(wd.counts[w], 0u);
  EXPECT_GT(wd.counts[5], 0u);
}

TEST(WeightDistribution, TalliesEqualQToTheKAndMatchOracle) {
  std::mt19937 rng(43);
  for (unsigned q : {2u, 3u}) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto g = random_generator(rng, q, 1 + rng() % 5, 1 + rng() % 9);
      const auto basis = canonical_basis(g);
      const auto wd = weight_distribution(g, {26, 2});
      std::uint64_t expected_total = 1;
      for (std::size_t i = 0; i < basis.rows(); ++i) expected_total *= q;
      EXPECT_EQ(wd.total(), expected_total);
      const auto oracle_wd = oracle::weight_distribution(rows_of(basis), g.cols(), q);
      for (const auto& [w, c] : oracle_wd) EXPECT_EQ(wd.counts[w], c) << "w=" << w;
      EXPECT_EQ(wd.counts[0], 1u);
    }
  }
}

TEST(InformationSet, ChainCoversEveryColumnOnce) {
  const auto basis = row_basis(BitMatrix::from(skeleton_code(5, 3, 1).code.generator));
  const auto sets = information_sets(basis);
  ASSERT_FALSE(sets.empty());
  EXPECT_EQ(sets.front().fresh, basis.rows());
  std::size_t fresh_total = 0;
  for (const auto& s : sets) {
    fresh_total += s.fresh;
    EXPECT_EQ(s.pivots.size(), basis.rows());
    for (std::size_t r = 0; r < s.pivots.size(); ++r)
      for (std::size_t x = 0; x < s.pivots.size(); ++x) EXPECT_EQ(s.generator.get(x, s.pivots[r]), x == r);
  }
  EXPECT_LE(fresh_total, basis.cols());
}

TEST(InformationSet, AgreesWithExhaustiveOnSkeletonSubcodes) {
  std::mt19937 rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t l = 3 + rng() % 4;
    const std::size_t h = 1 + rng() % l;
    const std::size_t j = rng() % (h + 1);
    const auto g = skeleton_code(l, h, j).code.generator;
    const auto sub = random_subcode(rng, g, 1 + rng() % std::min<std::size_t>(g.rows(), 16));
    if (rank(sub) == 0) continue;
    const auto a = min_distance_exhaustive(sub);
    const auto b = min_distance_information_set(sub, 1 + trial % 3);
    EXPECT_EQ(a.d, b.d);
    EXPECT_EQ(weight_of(b.witness), b.d);
  }
}

TEST(InformationSet, AgreesWithExhaustiveOnRandomCodes) {
  std::mt19937 rng(45);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_generator(rng, 2, 1 + rng() % 10, 5 + rng() % 30);
    EXPECT_EQ(min_distance_exhaustive(g).d, min_distance_information_set(g).d);
  }
  EXPECT_THROW(min_distance_information_set(PrimeFieldMatrix::identity(3, 2)), DomainError);
  EXPECT_THROW(min_distance_information_set(PrimeFieldMatrix(2, 2, 2)), DomainError);
}

TEST(MinDistance, TheoremMainForSmallSkeletons) {
  for (long long l = 1; l <= 9; ++l)
    for (long long h = 1; h <= l; ++h) {
      const auto code = skeleton_code(static_cast<std::size_t>(l), static_cast<std::size_t>(h), 1);
      EXPECT_EQ(static_cast<long long>(min_distance(code.code.generator, SearchMethod::automatic).d),
                formulas::theorem_main_distance(l, h));
    }
}

TEST(MinDistance, FullDegreeSkeletonsHaveDistanceOne) {
  for (std::size_t l = 1; l <= 7; ++l)
    for (std::size_t h = 1; h <= l; ++h)
      EXPECT_EQ(min_distance(skeleton_code(l, h, h).code.generator, SearchMethod::automatic).d, 1u);
}

TEST(MinDistance, OneRowBoundHolds) {
  for (std::size_t l = 2; l <= 6; ++l)
    for (std::size_t h = 1; h <= l; ++h)
      for (std::size_t j = 1; j <= h; ++j) {
        const auto d = min_distance(skeleton_code(l, h, j).code.generator, SearchMethod::automatic).d;
        EXPECT_LE(static_cast<long long>(d),
                  formulas::upper_bound_distance(static_cast<long long>(l), static_cast<long long>(h),
                                                 static_cast<long long>(j)));
      }
}

TEST(MinDistance, AutomaticFallsBackToInformationSet) {
  const auto g = skeleton_code(6, 5, 3).code.generator;  // k = 42
  const auto r = min_distance(g, SearchMethod::automatic, {24, 1});
  EXPECT_EQ(r.method, DistanceMethod::information_set);
  EXPECT_EQ(r.d, 7u);
}
