#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "stdpairs/diophantine.hpp"

using namespace stdpairs;

namespace {

SolutionSet sols(std::initializer_list<std::initializer_list<long long>> v) {
  SolutionSet out;
  for (auto r : v) out.push_back(make_vector(r));
  return out;
}

}  // namespace

TEST(MinNonnegSolutions, SpecExamples) {
  const IntMatrix m{{1, 2}, {0, 2}};
  EXPECT_EQ(min_nonneg_solutions(m, make_vector({3, 2})), sols({{1, 1}}));
  EXPECT_EQ(min_nonneg_solutions(m, make_vector({0, 0})), sols({{0, 0}}));
  EXPECT_TRUE(min_nonneg_solutions(m, make_vector({1, 1})).empty());
}

TEST(MinNonnegSolutions, DimensionMismatch) {
  const IntMatrix m{{1, 2}, {0, 2}};
  EXPECT_THROW(min_nonneg_solutions(m, make_vector({1})), ContractError);
}

TEST(MinNonnegSolutions, SeveralMinimalSolutionsInLexOrder) {
  const IntMatrix m{{1, 1, -1}};
  const SolutionSet s = min_nonneg_solutions(m, make_vector({2}));
  EXPECT_EQ(s, sols({{0, 2, 0}, {1, 1, 0}, {2, 0, 0}}));
}

TEST(MinNonnegSolutions, ZeroColumnMatrix) {
  const IntMatrix empty(2, 0);
  EXPECT_EQ(min_nonneg_solutions(empty, make_vector({0, 0})).size(), 1u);
  EXPECT_TRUE(min_nonneg_solutions(empty, make_vector({0, 1})).empty());
}

TEST(HilbertKernel, SpecExamples) {
  EXPECT_EQ(hilbert_kernel(IntMatrix{{1, -1}}), sols({{1, 1}}));
  EXPECT_EQ(hilbert_kernel(IntMatrix{{2, -3}}), sols({{3, 2}}));
  EXPECT_TRUE(hilbert_kernel(IntMatrix{{1, 2}, {0, 2}}).empty());
}

TEST(RationalRank, SpecExamples) {
  EXPECT_EQ(rational_rank(IntMatrix{{1, 2}, {0, 2}}), 2u);
  EXPECT_EQ(rational_rank(IntMatrix{{1, 1}, {1, 1}}), 1u);
  EXPECT_EQ(rational_rank(IntMatrix(0, 0)), 0u);
}

TEST(MinNonnegSolutions, ZeroRightHandSideIsZero) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const oracle::Mat a = oracle::random_pointed(rng, 2, 3, -3, 3);
    EXPECT_EQ(min_nonneg_solutions(oracle::to_int(a, 3), zero_vector(2)), SolutionSet{zero_vector(3)});
  }
}

TEST(MinNonnegSolutions, MatchesBruteForce) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> size(1, 3), entry(-4, 4), rhs(0, 6);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = size(rng), c = size(rng);
    oracle::Mat m(r, oracle::Vec(c));
    for (auto& row : m)
      for (auto& v : row) v = entry(rng);
    oracle::Vec b(r);
    for (auto& v : b) v = rhs(rng);
    const SolutionSet got = min_nonneg_solutions(oracle::to_int(m, c), oracle::to_int(b));
    std::vector<oracle::Vec> got_small;
    for (const IntVector& x : got) got_small.push_back(oracle::to_vec(x));
    EXPECT_EQ(got_small, oracle::min_solutions(m, b, c, 25));
  }
}
