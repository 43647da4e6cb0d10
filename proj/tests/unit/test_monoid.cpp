#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "stdpairs/ideal.hpp"
#include "stdpairs/monoid.hpp"

using namespace stdpairs;

TEST(NewMonoid, SpecExamples) {
  const MonoidPtr q = new_monoid(IntMatrix{{1, 2}, {0, 2}});
  EXPECT_EQ(q->face_lattice().size(), 5u);
  EXPECT_EQ(minimal_generators(*new_monoid(IntMatrix{{1, 2, 3}})), (IntMatrix{{1}}));
  EXPECT_THROW(new_monoid(IntMatrix{{1, -1}}), NotPointedError);
}

TEST(NewMonoid, TrivialMonoid) {
  const MonoidPtr q = new_monoid(IntMatrix(2, 0));
  EXPECT_TRUE(q->is_empty());
  EXPECT_EQ(q->mingens().cols(), 0u);
  EXPECT_TRUE(q->is_element(make_vector({0, 0})));
  EXPECT_FALSE(q->is_element(make_vector({1, 0})));
}

TEST(NewMonoid, DropsZeroAndRepeatedColumns) {
  const MonoidPtr q = new_monoid(IntMatrix{{1, 0, 1, 2}, {0, 0, 0, 2}});
  EXPECT_EQ(q->gens(), (IntMatrix{{1, 2}, {0, 2}}));
}

TEST(MinimalGenerators, SpecExamples) {
  EXPECT_EQ(minimal_generators(*new_monoid(IntMatrix{{1, 1, 2, 3}, {1, 2, 0, 0}})).cols(), 4u);
  EXPECT_EQ(minimal_generators(*new_monoid(IntMatrix::identity(2))).cols(), 2u);
}

TEST(MonoidContains, SpecExamples) {
  const MonoidPtr q = new_monoid(IntMatrix{{1, 2}, {0, 2}});
  EXPECT_EQ(monoid_contains(*q, make_vector({3, 2})), SolutionSet{make_vector({1, 1})});
  EXPECT_EQ(monoid_contains(*q, make_vector({0, 0})), SolutionSet{make_vector({0, 0})});
  EXPECT_TRUE(monoid_contains(*q, make_vector({1, 1})).empty());
}

TEST(MonoidContains, RandomMembers) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> x(0, 5);
  for (int t = 0; t < 10; ++t) {
    const oracle::Mat a = oracle::random_pointed(rng, 2, 3, -2, 3);
    const MonoidPtr q = new_monoid(oracle::to_int(a, 3));
    const oracle::Semigroup sg(a);
    for (int s = 0; s < 10; ++s) {
      oracle::Vec v(3);
      for (auto& e : v) e = x(rng);
      const IntVector b = oracle::to_int(oracle::times(a, v));
      const SolutionSet sol = monoid_contains(*q, b);
      ASSERT_FALSE(sol.empty());
      for (const IntVector& y : sol) EXPECT_EQ(q->gens() * y, b);
    }
    for (const oracle::Vec& b : std::set<oracle::Vec>{{1, 0}, {0, 1}, {2, -1}, {-1, 3}, {3, 3}})
      EXPECT_EQ(!monoid_contains(*q, oracle::to_int(b)).empty(), sg.contains(b));
  }
}

TEST(FaceSubmatrix, SpecExamples) {
  const MonoidPtr q = new_monoid(IntMatrix{{1, 2}, {0, 2}});
  EXPECT_EQ(face_submatrix(*q, FaceIndex{1}), (IntMatrix{{2}, {2}}));
  EXPECT_EQ(face_submatrix(*q, FaceIndex{}).cols(), 0u);
  EXPECT_EQ(face_submatrix(*q, FaceIndex{}).rows(), 2u);
  EXPECT_EQ(face_submatrix(*q, FaceIndex{0, 1}), q->gens());
  EXPECT_THROW(face_submatrix(*q, FaceIndex{0, 5}), DomainError);
}

TEST(IndexOfFace, SpecExamples) {
  const MonoidPtr q = new_monoid(IntMatrix{{1, 2}, {0, 2}});
  EXPECT_EQ(index_of_face(*q, IntMatrix{{2}, {2}}), FaceIndex{1});
  EXPECT_EQ(index_of_face(*q, q->gens()), q->top_face());
  EXPECT_EQ(index_of_face(*q, IntMatrix{{1}, {0}}), FaceIndex{0});
  EXPECT_THROW(index_of_face(*q, IntMatrix{{3}, {0}}), DomainError);
}

TEST(IndexOfFace, RoundTrip) {
  const MonoidPtr q = new_monoid(IntMatrix{{0, 1, 1, 0}, {0, 0, 1, 1}, {1, 1, 1, 1}});
  for (const FaceIndex& f : q->face_lattice()) {
    if (f.is_bottom() || f.size() == 0) continue;
    EXPECT_EQ(index_of_face(*q, face_submatrix(*q, f)), f);
  }
}

TEST(PrimeIdeal, SpecExamples) {
  const MonoidPtr q = new_monoid(IntMatrix{{1, 2}, {0, 2}});
  EXPECT_EQ(prime_ideal(q, FaceIndex{1}).generators(), std::vector<IntVector>{make_vector({1, 0})});
  EXPECT_TRUE(prime_ideal(q, FaceIndex{0, 1}).is_empty());
  EXPECT_EQ(prime_ideal(q, FaceIndex{}).generators(),
            (std::vector<IntVector>{make_vector({1, 0}), make_vector({2, 2})}));
  EXPECT_THROW(prime_ideal(q, FaceIndex::bottom()), DomainError);
}

TEST(PrimeIdeal, EveryFaceGivesAPrime) {
  const MonoidPtr q = new_monoid(IntMatrix{{0, 1, 1, 0}, {0, 0, 1, 1}, {1, 1, 1, 1}});
  for (const FaceIndex& f : q->face_lattice()) {
    if (f.is_bottom()) continue;
    EXPECT_TRUE(is_prime(prime_ideal(q, f))) << f.str();
  }
}

TEST(HashOfMonoid, SpecExamples) {
  EXPECT_EQ(hash_of_monoid(*new_monoid(IntMatrix{{1, 2}, {0, 2}})), hash_of_monoid(*new_monoid(IntMatrix{{2, 1}, {2, 0}})));
  EXPECT_EQ(hash_of_monoid(*new_monoid(IntMatrix{{1, 2, 3}})), hash_of_monoid(*new_monoid(IntMatrix{{1}})));
  EXPECT_NE(hash_of_monoid(*new_monoid(IntMatrix::identity(2))), hash_of_monoid(*new_monoid(IntMatrix{{1, 2}, {0, 2}})));
  EXPECT_TRUE(*new_monoid(IntMatrix{{1, 2, 3}}) == *new_monoid(IntMatrix{{1}}));
}
