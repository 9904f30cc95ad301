#include <gtest/gtest.h>

#include "oracles.hpp"
#include "relate/error.hpp"
#include "relate/generate.hpp"
#include "relate/graph.hpp"

using namespace relate;

namespace {

Graph path(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(1, n);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST(Graph, SimpleGraphInvariants) {
  Graph g(3);
  EXPECT_TRUE(g.add_edge(1, 2));
  EXPECT_FALSE(g.add_edge(2, 1));
  EXPECT_THROW(g.add_edge(2, 2), ContractViolation);
  EXPECT_THROW(g.add_edge(1, 4), ContractViolation);
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.add_vertex(), 4);
  EXPECT_EQ(g.degree(4), 0);
}

TEST(Neighborhood, Examples) {
  const Graph p3 = path(3);
  EXPECT_EQ(neighborhood_layer(p3, VertexSet{1}, 2), (VertexSet{3}));
  EXPECT_EQ(closed_neighborhood(p3, VertexSet{1}, 1), (VertexSet{1, 2}));
  EXPECT_EQ(neighborhood_layer(cycle(5), VertexSet{1}, 2), (VertexSet{3, 4}));
  EXPECT_EQ(neighborhood_layer(cycle(5), VertexSet{2, 4}, 0), (VertexSet{2, 4}));
  Graph two(5, {{1, 2}, {3, 4}});
  EXPECT_EQ(closed_neighborhood(two, VertexSet{1}, 10), (VertexSet{1, 2}));
  EXPECT_THROW(neighborhood_layer(p3, VertexSet{}, 1), ContractViolation);
  EXPECT_THROW(closed_neighborhood(p3, VertexSet{}, 1), ContractViolation);
}

TEST(Neighborhood, LayersPartitionReachableVertices) {
  Rng rng(4);
  for (int it = 0; it < 300; ++it) {
    const int n = rng.between(1, 10);
    const Graph g = random_graph(rng, n, rng.between(0, n * (n - 1) / 2), {});
    const auto d = oracle::all_distances(g);
    VertexSet s;
    for (int v = 1; v <= n; ++v)
      if (rng.coin()) s.insert(v);
    if (s.empty()) s.insert(1);
    VertexSet seen;
    for (int i = 0; i <= n; ++i) {
      const VertexSet layer = neighborhood_layer(g, s, i);
      for (Vertex v : layer) {
        EXPECT_TRUE(seen.insert(v).second) << "layers overlap";
        int best = -1;
        for (Vertex u : s)
          if (d[u][v] >= 0 && (best < 0 || d[u][v] < best)) best = d[u][v];
        EXPECT_EQ(best, i);
      }
      VertexSet upto;
      for (int j = 0; j <= i; ++j) {
        const VertexSet l = neighborhood_layer(g, s, j);
        upto.insert(l.begin(), l.end());
      }
      EXPECT_EQ(closed_neighborhood(g, s, i), upto);
    }
    for (int v = 1; v <= n; ++v) {
      bool reachable = false;
      for (Vertex u : s) reachable = reachable || d[u][v] >= 0;
      EXPECT_EQ(seen.contains(v), reachable);
    }
  }
}

TEST(Dominates, Examples) {
  EXPECT_TRUE(dominates(path(3), {}, {}));
  EXPECT_FALSE(dominates(path(3), {}, {1}));
  EXPECT_TRUE(dominates(path(3), {2}, {1, 3}));
  EXPECT_FALSE(dominates(path(4), {1}, {4}));
}

TEST(Independence, Examples) {
  EXPECT_TRUE(is_independent(path(3), {}));
  EXPECT_TRUE(is_independent(cycle(4), {1, 3}));
  EXPECT_FALSE(is_independent(cycle(4), {1, 2}));
  EXPECT_TRUE(is_maximal_independent(path(3), {2}));
  EXPECT_FALSE(is_maximal_independent(path(3), {1}));
  EXPECT_TRUE(is_maximal_independent(complete(2), {1}));
}

TEST(Independence, MaximalityEquivalenceOnAllSmallGraphs) {
  for (int n = 1; n <= 5; ++n) {
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      const Graph g = oracle::graph_from_mask(n, mask);
      const oracle::Masks m(g);
      for (std::uint32_t s = 0; s <= m.full(); ++s) {
        const VertexSet set = oracle::to_set(s);
        ASSERT_EQ(is_maximal_independent(g, set), m.maximal_independent(s));
        ASSERT_EQ(is_maximal_independent(g, set),
                  is_independent(g, set) && dominates(g, set, g.vertices()));
      }
    }
  }
}

TEST(MaximalIndependentSets, Examples) {
  EXPECT_EQ(enumerate_maximal_independent_sets(cycle(4)),
            (std::vector<VertexSet>{{1, 3}, {2, 4}}));
  EXPECT_EQ(enumerate_maximal_independent_sets(complete(3)),
            (std::vector<VertexSet>{{1}, {2}, {3}}));
  EXPECT_EQ(enumerate_maximal_independent_sets(path(3)), (std::vector<VertexSet>{{1, 3}, {2}}));
  EXPECT_EQ(enumerate_maximal_independent_sets(Graph(0)), (std::vector<VertexSet>{{}}));
  EXPECT_THROW(enumerate_maximal_independent_sets(path(3), 1), ResourceError);
}

TEST(WellCovered, Examples) {
  EXPECT_TRUE(is_well_covered(complete(2)));
  EXPECT_FALSE(is_well_covered(path(3)));
  EXPECT_TRUE(is_well_covered(cycle(4)));
}

TEST(GreedyMis, Examples) {
  EXPECT_EQ(greedy_mis(path(3)), (VertexSet{1, 3}));
  EXPECT_EQ(greedy_mis(complete(3)), (VertexSet{1}));
}

TEST(MisAndWellCovered, AgreeWithPowersetOracle) {
  Rng rng(99);
  for (int it = 0; it < 600; ++it) {
    const int n = rng.between(0, 10);
    const Graph g = random_graph(rng, n, rng.between(0, n * (n - 1) / 2), {});
    const auto sets = enumerate_maximal_independent_sets(g);
    ASSERT_EQ(sets, oracle::maximal_independent_sets(g));
    const bool wc = is_well_covered(g);
    ASSERT_EQ(wc, oracle::well_covered(g));
    const VertexSet greedy = greedy_mis(g);
    EXPECT_TRUE(is_maximal_independent(g, greedy));
    if (wc) {
      std::size_t biggest = 0;
      for (const auto& s : sets) biggest = std::max(biggest, s.size());
      EXPECT_EQ(greedy.size(), biggest);
    }
  }
}

TEST(Cycles, Examples) {
  EXPECT_EQ(contains_cycle_of_length(cycle(6), 6), (std::vector<Vertex>{1, 2, 3, 4, 5, 6}));
  EXPECT_FALSE(contains_cycle_of_length(cycle(5), 6));
  Graph chord = cycle(6);
  chord.add_edge(1, 4);
  EXPECT_TRUE(contains_cycle_of_length(chord, 6));
  EXPECT_EQ(contains_cycle_of_length(chord, 4), (std::vector<Vertex>{1, 2, 3, 4}));
  EXPECT_THROW(contains_cycle_of_length(chord, 2), ContractViolation);
  EXPECT_THROW(contains_cycle_of_length(chord, 9), ContractViolation);
}

TEST(Cycles, AgreeWithPermutationOracle) {
  Rng rng(1234);
  for (int it = 0; it < 250; ++it) {
    const int n = rng.between(3, 8);
    const Graph g = random_graph(rng, n, rng.between(n - 1, std::min(n * (n - 1) / 2, 2 * n)), {});
    for (int k = 3; k <= n; ++k) {
      ASSERT_EQ(contains_cycle_of_length(g, k), oracle::least_cycle(g, k)) << "k=" << k;
    }
  }
}

TEST(ConnectedComponents, OrderedBySmallestMember) {
  Graph g(6, {{5, 6}, {1, 3}, {3, 4}});
  EXPECT_EQ(connected_components(g, g.vertices()),
            (std::vector<std::vector<Vertex>>{{1, 3, 4}, {2}, {5, 6}}));
  EXPECT_EQ(connected_components(g, {1, 4, 6}),
            (std::vector<std::vector<Vertex>>{{1}, {4}, {6}}));
}

TEST(GraphDimacs, RoundTripAndErrors) {
  Graph g(4, {{3, 1}, {1, 2}, {2, 4}});
  const std::string text = emit_graph_dimacs(g);
  EXPECT_EQ(text, "p edge 4 3\ne 1 2\ne 1 3\ne 2 4\n");
  EXPECT_EQ(parse_graph_dimacs(text), g);
  EXPECT_EQ(parse_graph_dimacs("c x\np edge 2 1\ne 2 1\n"), Graph(2, {{1, 2}}));
  auto line_of = [](std::string_view t) {
    try {
      parse_graph_dimacs(t);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("p edge 2 1\ne 1 1\n"), 2);
  EXPECT_EQ(line_of("p edge 2 2\ne 1 2\ne 2 1\n"), 3);
  EXPECT_EQ(line_of("p edge 2 1\ne 1 3\n"), 2);
  EXPECT_EQ(line_of("e 1 2\n"), 1);
  EXPECT_GT(line_of("p edge 3 2\ne 1 2\n"), 0);
  EXPECT_EQ(line_of("p graph 2 1\n"), 1);
}
