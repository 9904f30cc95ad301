#include <gtest/gtest.h>

#include "relate/error.hpp"
#include "relate/generate.hpp"

using namespace relate;

TEST(Rng, DeterministicAndBounded) {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.below(7);
    EXPECT_EQ(x, b.below(7));
    EXPECT_LT(x, 7u);
    const int y = a.between(-3, 3);
    EXPECT_EQ(y, b.between(-3, 3));
    EXPECT_GE(y, -3);
    EXPECT_LE(y, 3);
  }
  EXPECT_NE(Rng::for_instance(1, 0).next(), Rng::for_instance(1, 1).next());
  EXPECT_EQ(Rng::for_instance(9, 4).next(), Rng::for_instance(9, 4).next());
}

TEST(RandomFormula, ShapeAndDeterminism) {
  Rng a(3), b(3);
  for (int i = 0; i < 200; ++i) {
    const CnfFormula f = random_formula(a, 6, 8, 2, 5);
    EXPECT_EQ(f, random_formula(b, 6, 8, 2, 5));
    EXPECT_EQ(f.num_clauses(), 8u);
    for (const auto& c : f.clauses()) {
      EXPECT_GE(c.size(), 2u);
      EXPECT_LE(c.size(), 5u);
    }
  }
  EXPECT_THROW(random_formula(a, 3, 2, 3, 2), ContractViolation);
}

TEST(Random23Sat, AlwaysValid) {
  Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    const CnfFormula f = random_23sat(rng, rng.between(2, 12), rng.between(0, 12));
    ASSERT_TRUE(is_23sat_instance(f));
  }
}

TEST(RandomGraph, RespectsForbiddenCycles) {
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(rng, 12, 14, {4, 6});
    EXPECT_EQ(g.num_edges(), 14u);
    EXPECT_FALSE(contains_cycle_of_length(g, 4));
    EXPECT_FALSE(contains_cycle_of_length(g, 6));
  }
}

TEST(RandomGraph, RetryCapIsAResourceError) {
  Rng rng(1);
  // A triangle-free graph on 4 vertices has at most 4 edges.
  EXPECT_THROW(random_graph(rng, 4, 5, {3}, 50), ResourceError);
  EXPECT_THROW(random_graph(rng, 4, 7, {}), ContractViolation);
}
