#include "relate/generate.hpp"

#include <algorithm>
#include <string>

#include "relate/error.hpp"

namespace relate {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// True when the current graph has a simple path with `length` edges from u to v.
bool has_path(const Graph& g, Vertex u, Vertex v, int length, std::vector<bool>& used) {
  if (length == 0) return u == v;
  if (u == v) return false;
  used[u] = true;
  bool found = false;
  for (Vertex w : g.neighbors(u)) {
    if (used[w]) continue;
    if (w == v ? length == 1 : has_path(g, w, v, length - 1, used)) {
      found = true;
      break;
    }
  }
  used[u] = false;
  return found;
}

}  // namespace

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw ContractViolation("empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

int Rng::between(int lo, int hi) {
  if (hi < lo) throw ContractViolation("empty range");
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rng Rng::for_instance(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(seed) ^ splitmix64(index + 0x632BE59BD9B4E019ull));
}

CnfFormula random_formula(Rng& rng, int num_vars, int num_clauses, int min_size, int max_size) {
  if (num_vars < 1 || num_clauses < 0 || min_size < 1 || max_size < min_size) {
    throw ContractViolation("invalid random formula parameters");
  }
  std::vector<Clause> clauses;
  std::vector<int> vars(static_cast<std::size_t>(num_vars));
  for (int v = 0; v < num_vars; ++v) vars[v] = v + 1;
  for (int j = 0; j < num_clauses; ++j) {
    const int size = std::min(rng.between(min_size, max_size), num_vars);
    // partial Fisher-Yates
    for (int i = 0; i < size; ++i) {
      std::swap(vars[i], vars[i + static_cast<int>(rng.below(num_vars - i))]);
    }
    std::vector<Literal> lits;
    for (int i = 0; i < size; ++i) lits.push_back({vars[i], rng.coin()});
    clauses.emplace_back(std::move(lits));
  }
  return CnfFormula(num_vars, std::move(clauses));
}

CnfFormula random_23sat(Rng& rng, int num_vars, int num_clauses) {
  if (num_vars < 2 || num_clauses < 0) throw ContractViolation("invalid 23SAT parameters");
  enum class Use { kFresh, kOnce, kShared };
  // index 2(v-1) positive, 2(v-1)+1 negative
  std::vector<Use> use(static_cast<std::size_t>(2 * num_vars), Use::kFresh);
  auto lit_of = [](int idx) { return Literal{idx / 2 + 1, idx % 2 == 1}; };

  std::vector<Clause> clauses;
  for (int j = 0; j < num_clauses; ++j) {
    const int size = std::min(rng.between(2, 3), num_vars);
    std::vector<int> picked;
    auto var_free = [&](int idx) {
      return std::none_of(picked.begin(), picked.end(), [&](int p) { return p / 2 == idx / 2; });
    };
    // Optional shareable slot.
    if (rng.coin()) {
      std::vector<int> pool;
      for (int idx = 0; idx < 2 * num_vars; ++idx) {
        if (use[idx] != Use::kOnce) pool.push_back(idx);
      }
      if (!pool.empty()) {
        const int idx = pool[rng.below(pool.size())];
        picked.push_back(idx);
        use[idx] = Use::kShared;
      }
    }
    bool ok = true;
    while (static_cast<int>(picked.size()) < size) {
      std::vector<int> pool;
      for (int idx = 0; idx < 2 * num_vars; ++idx) {
        if (use[idx] == Use::kFresh && var_free(idx)) pool.push_back(idx);
      }
      if (pool.empty()) {
        ok = false;
        break;
      }
      const int idx = pool[rng.below(pool.size())];
      picked.push_back(idx);
      use[idx] = Use::kOnce;
    }
    if (!ok) {
      // Roll back marks made by this clause only if it still holds a single literal.
      if (picked.size() < 2) break;
    }
    std::vector<Literal> lits;
    for (int idx : picked) lits.push_back(lit_of(idx));
    clauses.emplace_back(std::move(lits));
    if (!ok) break;
  }
  CnfFormula f(num_vars, std::move(clauses));
  if (auto check = is_23sat_instance(f); !check) {
    throw std::logic_error("random_23sat produced an invalid instance: " + check.violation);
  }
  return f;
}

Graph random_graph(Rng& rng, int num_vertices, int num_edges, const std::vector<int>& forbidden,
                   int retry_cap) {
  const long long max_edges = static_cast<long long>(num_vertices) * (num_vertices - 1) / 2;
  if (num_vertices < 0 || num_edges < 0 || num_edges > max_edges) {
    throw ContractViolation("invalid random graph parameters");
  }
  for (int k : forbidden) {
    if (k < 3) throw ContractViolation("forbidden cycle lengths start at 3");
  }
  Graph g(num_vertices);
  std::vector<bool> used(static_cast<std::size_t>(num_vertices) + 1, false);
  int rejected = 0;
  auto reject = [&] {
    if (++rejected > retry_cap) {
      throw ResourceError("gave up after " + std::to_string(retry_cap) +
                          " rejected edges; lower the edge count");
    }
  };
  auto closes_forbidden = [&](Vertex u, Vertex v) {
    return std::any_of(forbidden.begin(), forbidden.end(),
                       [&](int k) { return has_path(g, u, v, k - 1, used); });
  };
  constexpr int kSamplesBeforeScan = 64;
  while (static_cast<int>(g.num_edges()) < num_edges) {
    bool added = false;
    for (int t = 0; t < kSamplesBeforeScan && !added; ++t) {
      const Vertex u = rng.between(1, num_vertices);
      const Vertex v = rng.between(1, num_vertices);
      if (u == v || g.adjacent(u, v)) continue;
      if (closes_forbidden(u, v)) {
        reject();
        continue;
      }
      g.add_edge(u, v);
      added = true;
    }
    if (added) continue;
    // Sampling keeps missing: scan every non-edge in random order, and start
    // over when the graph is saturated.
    std::vector<Edge> open;
    for (Vertex u = 1; u <= num_vertices; ++u)
      for (Vertex v = u + 1; v <= num_vertices; ++v)
        if (!g.adjacent(u, v)) open.push_back({u, v});
    for (std::size_t i = open.size(); i > 1; --i) std::swap(open[i - 1], open[rng.below(i)]);
    for (const Edge e : open) {
      if (closes_forbidden(e.u, e.v)) {
        reject();
        continue;
      }
      g.add_edge(e.u, e.v);
      added = true;
      break;
    }
    if (!added) g = Graph(num_vertices);
  }
  return g;
}

}  // namespace relate
