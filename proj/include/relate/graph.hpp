#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace relate {

using Vertex = int;
using VertexSet = std::set<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 1..num_vertices.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);
  Graph(int num_vertices, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  int num_vertices() const { return static_cast<int>(adjacency_.size()) - 1; }
  std::size_t num_edges() const { return num_edges_; }

  Vertex add_vertex();
  /// Returns false if the edge already exists. Loops and unknown vertices throw.
  bool add_edge(Vertex u, Vertex v);

  bool has_vertex(Vertex v) const { return v >= 1 && v <= num_vertices(); }
  bool adjacent(Vertex u, Vertex v) const;
  /// Sorted ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  /// Sorted, each edge once with u < v.
  std::vector<Edge> edges() const;
  VertexSet vertices() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_{1};
  std::size_t num_edges_ = 0;
};

inline constexpr std::uint64_t kDefaultMisCap = 1'000'000;

/// BFS distance from the nearest member of `s`; -1 when unreachable. Index 0 unused.
std::vector<int> distances_from(const Graph& g, const VertexSet& s);

/// Vertices at distance exactly `i` from `s`. `s` must be nonempty.
VertexSet neighborhood_layer(const Graph& g, const VertexSet& s, int i);
VertexSet neighborhood_layer(const Graph& g, Vertex v, int i);
/// Vertices at distance at most `i` from `s`. `s` must be nonempty.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s, int i);
VertexSet closed_neighborhood(const Graph& g, Vertex v, int i);

bool dominates(const Graph& g, const VertexSet& s, const VertexSet& t);
bool is_independent(const Graph& g, const VertexSet& s);
bool is_maximal_independent(const Graph& g, const VertexSet& s);

/// Every maximal independent set exactly once, sorted lexicographically.
/// Throws ResourceError when more than `cap` sets exist.
std::vector<VertexSet> enumerate_maximal_independent_sets(const Graph& g,
                                                          std::uint64_t cap = kDefaultMisCap);
bool is_well_covered(const Graph& g, std::uint64_t cap = kDefaultMisCap);
VertexSet greedy_mis(const Graph& g);

/// Some C_k subgraph (not necessarily induced) as a vertex cycle, or nullopt.
/// The returned sequence is the lexicographically least one that starts at
/// the cycle's smallest vertex. Requires 3 <= k <= 8.
std::optional<std::vector<Vertex>> contains_cycle_of_length(const Graph& g, int k);

/// Components of the subgraph induced by `within`, each sorted, ordered by
/// smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g, const VertexSet& within);

Graph parse_graph_dimacs(std::istream& in);
Graph parse_graph_dimacs(std::string_view text);
std::string emit_graph_dimacs(const Graph& g);

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

}  // namespace relate
