#include "relate/decide.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "relate/error.hpp"

namespace relate {

namespace {

// One connected piece of the search: local candidate indices follow ascending
// vertex order so that the depth-first scan visits k-subsets lexicographically.
class DominatorSearch {
 public:
  DominatorSearch(const Graph& g, std::vector<Vertex> cands, const std::vector<Vertex>& targets,
                  std::uint64_t cap, std::uint64_t& nodes)
      : cands_(std::move(cands)), cap_(cap), nodes_(nodes) {
    const std::size_t c = cands_.size();
    std::unordered_map<Vertex, int> local;
    for (std::size_t i = 0; i < c; ++i) local[cands_[i]] = static_cast<int>(i);

    conflicts_.resize(c);
    covers_.resize(c);
    expiring_.resize(c);
    for (std::size_t i = 0; i < c; ++i) {
      for (Vertex w : g.neighbors(cands_[i])) {
        auto it = local.find(w);
        if (it != local.end()) conflicts_[i].push_back(it->second);
      }
    }
    for (std::size_t t = 0; t < targets.size(); ++t) {
      int last = -1;
      auto note = [&](Vertex w) {
        auto it = local.find(w);
        if (it == local.end()) return;
        covers_[it->second].push_back(static_cast<int>(t));
        last = std::max(last, it->second);
      };
      note(targets[t]);
      for (Vertex w : g.neighbors(targets[t])) note(w);
      if (last < 0) {
        feasible_ = false;
      } else {
        expiring_[last].push_back(static_cast<int>(t));
      }
    }
    dominated_by_.assign(targets.size(), 0);
    undominated_ = static_cast<int>(targets.size());
    blocked_by_.assign(c, 0);
  }

  std::optional<VertexSet> run() {
    if (!feasible_) return std::nullopt;
    for (std::size_t k = 0; k <= cands_.size(); ++k) {
      if (search(0, static_cast<int>(k))) {
        VertexSet out;
        for (int i : chosen_) out.insert(cands_[i]);
        return out;
      }
    }
    return std::nullopt;
  }

 private:
  void choose(int i, int delta) {
    for (int t : covers_[i]) {
      if (delta > 0 && dominated_by_[t]++ == 0) --undominated_;
      if (delta < 0 && --dominated_by_[t] == 0) ++undominated_;
    }
    for (int j : conflicts_[i]) blocked_by_[j] += delta;
  }

  bool expired_uncovered(int skipped) const {
    return std::any_of(expiring_[skipped].begin(), expiring_[skipped].end(),
                       [&](int t) { return dominated_by_[t] == 0; });
  }

  bool search(int pos, int remaining) {
    if (++nodes_ > cap_) {
      throw ResourceError("independent-set search exceeded cap of " + std::to_string(cap_) +
                          " nodes");
    }
    if (remaining == 0) return undominated_ == 0;
    const int c = static_cast<int>(cands_.size());
    for (int i = pos; i + remaining <= c; ++i) {
      if (i > pos && expired_uncovered(i - 1)) return false;
      if (blocked_by_[i] != 0) continue;
      choose(i, +1);
      chosen_.push_back(i);
      if (search(i + 1, remaining - 1)) return true;
      chosen_.pop_back();
      choose(i, -1);
    }
    return false;
  }

  std::vector<Vertex> cands_;
  std::uint64_t cap_;
  std::uint64_t& nodes_;
  bool feasible_ = true;
  std::vector<std::vector<int>> conflicts_;
  std::vector<std::vector<int>> covers_;
  std::vector<std::vector<int>> expiring_;  // targets whose last dominator is this index
  std::vector<int> dominated_by_;
  std::vector<int> blocked_by_;
  int undominated_ = 0;
  std::vector<int> chosen_;
};

}  // namespace

std::optional<VertexSet> find_independent_dominator(const Graph& g, const VertexSet& candidates,
                                                    const VertexSet& targets, std::uint64_t cap,
                                                    std::uint64_t* nodes) {
  if (cap == 0) throw ContractViolation("subset cap must be positive");
  std::uint64_t local_nodes = 0;
  std::uint64_t& counter = nodes ? *nodes : local_nodes;

  // Pieces: a candidate links to every adjacent candidate or target; target-only
  // vertices link only through candidates.
  VertexSet universe = candidates;
  universe.insert(targets.begin(), targets.end());
  VertexSet seen;
  VertexSet result;
  for (Vertex root : universe) {
    if (seen.contains(root)) continue;
    std::vector<Vertex> piece{root};
    seen.insert(root);
    for (std::size_t i = 0; i < piece.size(); ++i) {
      const Vertex u = piece[i];
      const bool u_cand = candidates.contains(u);
      for (Vertex w : g.neighbors(u)) {
        if (!universe.contains(w) || seen.contains(w)) continue;
        if (!u_cand && !candidates.contains(w)) continue;
        seen.insert(w);
        piece.push_back(w);
      }
    }
    std::sort(piece.begin(), piece.end());
    std::vector<Vertex> piece_cands, piece_targets;
    for (Vertex v : piece) {
      if (candidates.contains(v)) piece_cands.push_back(v);
      if (targets.contains(v)) piece_targets.push_back(v);
    }
    if (piece_targets.empty()) continue;
    auto part = DominatorSearch(g, std::move(piece_cands), piece_targets, cap, counter).run();
    if (!part) return std::nullopt;
    result.insert(part->begin(), part->end());
  }
  return result;
}

RelatingDecision is_relating(const Graph& g, Vertex x, Vertex y, std::uint64_t cap) {
  if (!g.has_vertex(x) || !g.has_vertex(y) || !g.adjacent(x, y)) {
    throw ContractViolation("(" + std::to_string(x) + ", " + std::to_string(y) +
                            ") is not an edge of the graph");
  }
  const VertexSet nx = closed_neighborhood(g, x, 1);
  const VertexSet ny = closed_neighborhood(g, y, 1);
  VertexSet candidates, targets;
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    const bool in_x = nx.contains(v), in_y = ny.contains(v);
    if (!in_x && !in_y) candidates.insert(v);
    if (!(in_x && in_y)) targets.insert(v);
  }
  RelatingDecision out;
  auto s = find_independent_dominator(g, candidates, targets, cap, &out.nodes);
  out.relating = s.has_value();
  if (s) out.witness = RelatingWitness{std::move(*s)};
  return out;
}

SheddingDecision is_shedding(const Graph& g, Vertex v, std::uint64_t cap) {
  if (!g.has_vertex(v)) throw ContractViolation("vertex " + std::to_string(v) + " not in graph");
  SheddingDecision out;
  auto s = find_independent_dominator(g, neighborhood_layer(g, v, 2), neighborhood_layer(g, v, 1),
                                      cap, &out.nodes);
  out.shedding = !s.has_value();
  if (s) out.witness = ShedComplementWitness{std::move(*s)};
  return out;
}

bool is_w2_desk(const Graph& g, std::uint64_t cap, std::uint64_t mis_cap) {
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    if (g.degree(v) == 0) {
      throw ContractViolation("vertex " + std::to_string(v) +
                              " is isolated; the shedding characterization needs none");
    }
  }
  if (!is_well_covered(g, mis_cap)) return false;
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    if (!is_shedding(g, v, cap).shedding) return false;
  }
  return true;
}

bool is_valid_relating_witness(const Graph& g, Vertex x, Vertex y, const RelatingWitness& w) {
  if (!g.has_vertex(x) || !g.has_vertex(y) || !g.adjacent(x, y)) return false;
  for (Vertex v : w.set_s) {
    if (!g.has_vertex(v)) return false;
  }
  if (w.set_s.contains(x) || w.set_s.contains(y)) return false;
  VertexSet with_x = w.set_s, with_y = w.set_s;
  with_x.insert(x);
  with_y.insert(y);
  return is_independent(g, w.set_s) && is_maximal_independent(g, with_x) &&
         is_maximal_independent(g, with_y);
}

bool is_valid_shed_witness(const Graph& g, Vertex v, const ShedComplementWitness& w) {
  if (!g.has_vertex(v)) return false;
  const VertexSet layer2 = neighborhood_layer(g, v, 2);
  if (!std::includes(layer2.begin(), layer2.end(), w.set_s.begin(), w.set_s.end())) return false;
  return is_independent(g, w.set_s) && dominates(g, w.set_s, neighborhood_layer(g, v, 1));
}

ShedRelateReport crosscheck_shed_relating(const Graph& g, Vertex x, Vertex y, std::uint64_t cap) {
  if (!g.has_vertex(x) || !g.has_vertex(y) || !g.adjacent(x, y)) {
    throw ContractViolation("(" + std::to_string(x) + ", " + std::to_string(y) +
                            ") is not an edge of the graph");
  }
  ShedRelateReport r;
  for (int k : {4, 5, 6}) {
    if (contains_cycle_of_length(g, k)) {
      r.unmet = "graph contains a cycle of length " + std::to_string(k);
      return r;
    }
  }
  if (g.degree(x) < 2 || g.degree(y) < 2) {
    r.unmet = "an endpoint has degree below 2";
    return r;
  }
  const auto& nx = g.neighbors(x);
  const auto& ny = g.neighbors(y);
  std::vector<Vertex> common;
  std::set_intersection(nx.begin(), nx.end(), ny.begin(), ny.end(), std::back_inserter(common));
  if (!common.empty()) {
    r.unmet = "endpoints share a neighbor";
    return r;
  }
  r.hypotheses_met = true;
  r.relating = is_relating(g, x, y, cap).relating;
  r.x_shedding = is_shedding(g, x, cap).shedding;
  r.y_shedding = is_shedding(g, y, cap).shedding;
  r.consistent = r.relating == (!r.x_shedding && !r.y_shedding);
  return r;
}

}  // namespace relate
