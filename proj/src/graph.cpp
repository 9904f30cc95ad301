#include "relate/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

#include "relate/error.hpp"

namespace relate {

Graph::Graph(int num_vertices) {
  if (num_vertices < 0) throw ContractViolation("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(num_vertices) + 1);
}

Graph::Graph(int num_vertices, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(num_vertices) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
  if (!has_vertex(v)) {
    throw ContractViolation("vertex " + std::to_string(v) + " not in graph of order " +
                            std::to_string(num_vertices()));
  }
}

Vertex Graph::add_vertex() {
  adjacency_.emplace_back();
  return num_vertices();
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ContractViolation("loop at vertex " + std::to_string(u));
  auto& nu = adjacency_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return false;
  nu.insert(it, v);
  auto& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++num_edges_;
  return true;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nu = neighbors(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 1; u <= num_vertices(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

VertexSet Graph::vertices() const {
  VertexSet out;
  for (Vertex v = 1; v <= num_vertices(); ++v) out.insert(out.end(), v);
  return out;
}

// Neighborhoods ------------------------------------------------------------------

std::vector<int> distances_from(const Graph& g, const VertexSet& s) {
  std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()) + 1, -1);
  std::deque<Vertex> queue;
  for (Vertex v : s) {
    if (!g.has_vertex(v)) throw ContractViolation("vertex " + std::to_string(v) + " not in graph");
    dist[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

namespace {

template <typename Pred>
VertexSet layer_filter(const Graph& g, const VertexSet& s, int i, Pred keep) {
  if (s.empty()) throw ContractViolation("neighborhood of an empty set is undefined");
  if (i < 0) throw ContractViolation("negative distance");
  auto dist = distances_from(g, s);
  VertexSet out;
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    if (dist[v] >= 0 && keep(dist[v])) out.insert(out.end(), v);
  }
  return out;
}

}  // namespace

VertexSet neighborhood_layer(const Graph& g, const VertexSet& s, int i) {
  return layer_filter(g, s, i, [i](int d) { return d == i; });
}

VertexSet neighborhood_layer(const Graph& g, Vertex v, int i) {
  return neighborhood_layer(g, VertexSet{v}, i);
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s, int i) {
  return layer_filter(g, s, i, [i](int d) { return d <= i; });
}

VertexSet closed_neighborhood(const Graph& g, Vertex v, int i) {
  return closed_neighborhood(g, VertexSet{v}, i);
}

bool dominates(const Graph& g, const VertexSet& s, const VertexSet& t) {
  for (Vertex v : t) {
    if (s.contains(v)) continue;
    const auto& nv = g.neighbors(v);
    bool hit = std::any_of(nv.begin(), nv.end(), [&](Vertex w) { return s.contains(w); });
    if (!hit) return false;
  }
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (w > v && s.contains(w)) return false;
    }
  }
  return true;
}

bool is_maximal_independent(const Graph& g, const VertexSet& s) {
  return is_independent(g, s) && dominates(g, s, g.vertices());
}

// Maximal independent sets -------------------------------------------------------------

namespace {

// Bron-Kerbosch with pivoting on the complement graph: maximal cliques of the
// complement are exactly the maximal independent sets.
class MisEnumerator {
 public:
  MisEnumerator(const Graph& g, std::uint64_t cap) : g_(g), cap_(cap) {}

  std::vector<VertexSet> run() {
    std::vector<Vertex> p;
    for (Vertex v = 1; v <= g_.num_vertices(); ++v) p.push_back(v);
    std::vector<Vertex> r, x;
    expand(r, p, x);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  // Members of `from` that are non-adjacent to and distinct from v.
  std::vector<Vertex> compatible(const std::vector<Vertex>& from, Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w : from) {
      if (w != v && !g_.adjacent(v, w)) out.push_back(w);
    }
    return out;
  }

  void expand(std::vector<Vertex>& r, std::vector<Vertex> p, std::vector<Vertex> x) {
    if (p.empty()) {
      if (x.empty()) {
        if (out_.size() >= cap_) {
          throw ResourceError("more than " + std::to_string(cap_) + " maximal independent sets");
        }
        out_.emplace_back(r.begin(), r.end());
      }
      return;
    }
    Vertex pivot = 0;
    std::size_t best = 0;
    bool first = true;
    for (const auto* pool : {&p, &x}) {
      for (Vertex u : *pool) {
        std::size_t c = 0;
        for (Vertex w : p) c += (w != u && !g_.adjacent(u, w)) ? 1 : 0;
        if (first || c > best) {
          pivot = u;
          best = c;
          first = false;
        }
      }
    }
    std::vector<Vertex> branch;
    for (Vertex v : p) {
      if (v == pivot || g_.adjacent(pivot, v)) branch.push_back(v);
    }
    for (Vertex v : branch) {
      r.push_back(v);
      expand(r, compatible(p, v), compatible(x, v));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  }

  const Graph& g_;
  std::uint64_t cap_;
  std::vector<VertexSet> out_;
};

}  // namespace

std::vector<VertexSet> enumerate_maximal_independent_sets(const Graph& g, std::uint64_t cap) {
  if (cap == 0) throw ContractViolation("MIS cap must be positive");
  return MisEnumerator(g, cap).run();
}

bool is_well_covered(const Graph& g, std::uint64_t cap) {
  auto sets = enumerate_maximal_independent_sets(g, cap);
  return std::all_of(sets.begin(), sets.end(),
                     [&](const VertexSet& s) { return s.size() == sets.front().size(); });
}

VertexSet greedy_mis(const Graph& g) {
  VertexSet chosen;
  std::vector<bool> blocked(static_cast<std::size_t>(g.num_vertices()) + 1, false);
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    if (blocked[v]) continue;
    chosen.insert(chosen.end(), v);
    for (Vertex w : g.neighbors(v)) blocked[w] = true;
  }
  return chosen;
}

// Cycles ------------------------------------------------------------------------

namespace {

// Paths start at their minimum vertex and only visit larger vertices; a closed
// path is accepted in one orientation (second vertex < last vertex).
class CycleSearch {
 public:
  CycleSearch(const Graph& g, int k)
      : g_(g), k_(k), on_path_(static_cast<std::size_t>(g.num_vertices()) + 1, false) {}

  std::optional<std::vector<Vertex>> run() {
    for (Vertex s = 1; s <= g_.num_vertices(); ++s) {
      if (g_.degree(s) < 2) continue;
      path_.assign(1, s);
      on_path_[s] = true;
      bool found = extend();
      on_path_[s] = false;
      if (found) return path_;
    }
    return std::nullopt;
  }

 private:
  bool extend() {
    const Vertex start = path_.front();
    const Vertex last = path_.back();
    if (static_cast<int>(path_.size()) == k_) {
      return path_[1] < last && g_.adjacent(last, start);
    }
    for (Vertex w : g_.neighbors(last)) {
      if (w <= start || on_path_[w]) continue;
      path_.push_back(w);
      on_path_[w] = true;
      if (extend()) return true;
      on_path_[w] = false;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<Vertex> path_;
  std::vector<bool> on_path_;
};

}  // namespace

std::optional<std::vector<Vertex>> contains_cycle_of_length(const Graph& g, int k) {
  if (k < 3 || k > 8) throw ContractViolation("cycle length must be in 3..8");
  return CycleSearch(g, k).run();
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g, const VertexSet& within) {
  std::vector<std::vector<Vertex>> out;
  VertexSet seen;
  for (Vertex root : within) {
    if (seen.contains(root)) continue;
    std::vector<Vertex> comp{root};
    seen.insert(root);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (within.contains(w) && seen.insert(w).second) comp.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// DIMACS edge format ------------------------------------------------------------------

namespace {

bool to_int(std::string_view tok, long long& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace

Graph parse_graph_dimacs(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<Graph> g;
  long long declared_edges = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.empty() || tokens[0][0] == 'c') continue;
    if (tokens[0] == "p") {
      long long n = 0;
      if (g) throw ParseError("duplicate problem line", line_no);
      if (tokens.size() != 4 || tokens[1] != "edge" || !to_int(tokens[2], n) ||
          !to_int(tokens[3], declared_edges) || n < 0 || declared_edges < 0 || n > 10000000) {
        throw ParseError("malformed header, expected 'p edge <vertices> <edges>'", line_no);
      }
      g.emplace(static_cast<int>(n));
      continue;
    }
    if (tokens[0] != "e") throw ParseError("unexpected line '" + line + "'", line_no);
    if (!g) throw ParseError("edge before 'p edge' header", line_no);
    long long u = 0, v = 0;
    if (tokens.size() != 3 || !to_int(tokens[1], u) || !to_int(tokens[2], v)) {
      throw ParseError("malformed edge line, expected 'e <u> <v>'", line_no);
    }
    if (u < 1 || v < 1 || u > g->num_vertices() || v > g->num_vertices()) {
      throw ParseError("edge endpoint out of range", line_no);
    }
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u), line_no);
    if (!g->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw ParseError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v), line_no);
    }
  }
  if (!g) throw ParseError("missing 'p edge' header", line_no);
  if (static_cast<long long>(g->num_edges()) != declared_edges) {
    throw ParseError("header declares " + std::to_string(declared_edges) + " edges, found " +
                         std::to_string(g->num_edges()),
                     line_no);
  }
  return std::move(*g);
}

Graph parse_graph_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph_dimacs(in);
}

std::string emit_graph_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) os << ", ";
    os << v;
    first = false;
  }
  return os << '}';
}

}  // namespace relate
