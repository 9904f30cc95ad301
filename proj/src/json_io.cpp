#include "relate/json_io.hpp"

#include <stdexcept>

#include "relate/error.hpp"

namespace relate {

namespace {

Json lits_to_json(const std::vector<Literal>& lits) {
  Json out = Json::array();
  for (Literal l : lits) out.push_back(l.to_dimacs());
  return out;
}

std::vector<Literal> lits_from_json(const Json& j) {
  std::vector<Literal> out;
  for (const auto& v : j) out.push_back(Literal::from_dimacs(v.get<int>()));
  return out;
}

Json pair_to_json(const BadPair& p) {
  Json out;
  out["clause_a"] = p.clause_a;
  out["clause_b"] = p.clause_b;
  out["lit_1"] = p.lit_1.to_dimacs();
  out["lit_2"] = p.lit_2.to_dimacs();
  return out;
}

BadPair pair_from_json(const Json& j) {
  return {j.at("clause_a").get<int>(), j.at("clause_b").get<int>(),
          Literal::from_dimacs(j.at("lit_1").get<int>()),
          Literal::from_dimacs(j.at("lit_2").get<int>())};
}

Json index_map(const std::vector<Vertex>& v) {
  Json out = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i) out[std::to_string(i + 1)] = v[i];
  return out;
}

std::vector<Vertex> index_map_from(const Json& j) {
  std::vector<Vertex> out(j.size(), 0);
  for (const auto& [key, value] : j.items()) {
    const std::size_t idx = std::stoul(key);
    if (idx < 1 || idx > out.size()) throw ParseError("map index " + key + " out of range", 0);
    out[idx - 1] = value.get<Vertex>();
  }
  return out;
}

template <typename Fn>
auto guarded(Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw ParseError(e.what(), 0);
  } catch (const ContractViolation& e) {
    throw ParseError(e.what(), 0);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  } catch (const std::out_of_range& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace

Json trace_to_json(const ReductionTrace& trace) {
  Json out = Json::array();
  for (const auto& step : trace.steps) {
    Json s;
    if (const auto* u = std::get_if<UnitPropStep>(&step)) {
      s["kind"] = "unit-prop";
      s["forced"] = lits_to_json(u->forced);
      s["conflict"] = u->conflict;
      s["core_vars"] = u->core_vars;
    } else if (const auto* c = std::get_if<ChainSplitStep>(&step)) {
      s["kind"] = "chain-split";
      s["clause"] = c->clause;
      s["literals"] = lits_to_json(c->literals);
      s["aux"] = c->aux;
    } else if (const auto* b1 = std::get_if<BadPairCase1Step>(&step)) {
      s["kind"] = "badpair-case1";
      s["bad_pair"] = pair_to_json(b1->pair);
      s["forced"] = Json::array({Json{{"literal", b1->l1.to_dimacs()}, {"value", 0}},
                                 Json{{"literal", b1->l2.to_dimacs()}, {"value", 1}}});
      s["deleted"] = b1->deleted;
    } else if (const auto* b2 = std::get_if<BadPairCase2Step>(&step)) {
      s["kind"] = "badpair-case2";
      s["bad_pair"] = pair_to_json(b2->pair);
      s["substitution"] =
          Json{{"literal", b2->l1.to_dimacs()}, {"equals_negation_of", b2->l2.to_dimacs()}};
      s["deleted"] = b2->deleted;
    } else if (const auto* p = std::get_if<PendantStep>(&step)) {
      s["kind"] = "pendant";
      s["x"] = p->x;
      s["y"] = p->y;
    }
    out.push_back(std::move(s));
  }
  return out;
}

ReductionTrace trace_from_json(const Json& j) {
  return guarded([&] {
    ReductionTrace trace;
    if (!j.is_array()) throw ParseError("trace must be a JSON array", 0);
    for (const auto& s : j) {
      const auto kind = s.at("kind").get<std::string>();
      if (kind == "unit-prop") {
        trace.steps.emplace_back(UnitPropStep{lits_from_json(s.at("forced")),
                                              s.at("conflict").get<bool>(),
                                              s.at("core_vars").get<std::vector<int>>()});
      } else if (kind == "chain-split") {
        trace.steps.emplace_back(ChainSplitStep{s.at("clause").get<int>(),
                                                lits_from_json(s.at("literals")),
                                                s.at("aux").get<std::vector<int>>()});
      } else if (kind == "badpair-case1") {
        const auto& forced = s.at("forced");
        if (forced.size() != 2) throw ParseError("case-1 step needs two forced literals", 0);
        trace.steps.emplace_back(BadPairCase1Step{
            pair_from_json(s.at("bad_pair")),
            Literal::from_dimacs(forced.at(0).at("literal").get<int>()),
            Literal::from_dimacs(forced.at(1).at("literal").get<int>()),
            s.at("deleted").get<std::vector<int>>()});
      } else if (kind == "badpair-case2") {
        const auto& sub = s.at("substitution");
        trace.steps.emplace_back(BadPairCase2Step{
            pair_from_json(s.at("bad_pair")), Literal::from_dimacs(sub.at("literal").get<int>()),
            Literal::from_dimacs(sub.at("equals_negation_of").get<int>()),
            s.at("deleted").get<std::vector<int>>()});
      } else if (kind == "pendant") {
        trace.steps.emplace_back(PendantStep{s.at("x").get<Vertex>(), s.at("y").get<Vertex>()});
      } else {
        throw ParseError("unknown trace step kind '" + kind + "'", 0);
      }
    }
    return trace;
  });
}

Json map_to_json(const SatGraphMap& map) {
  Json out;
  out["hub"] = map.hub;
  out["clauses"] = index_map(map.clause_vertex);
  out["pos"] = index_map(map.pos_vertex);
  out["neg"] = index_map(map.neg_vertex);
  return out;
}

SatGraphMap map_from_json(const Json& j) {
  return guarded([&] {
    SatGraphMap map;
    map.hub = j.at("hub").get<Vertex>();
    map.clause_vertex = index_map_from(j.at("clauses"));
    map.pos_vertex = index_map_from(j.at("pos"));
    map.neg_vertex = index_map_from(j.at("neg"));
    return map;
  });
}

Json witness_to_json(const WitnessFile& w) {
  Json out;
  out["kind"] = w.kind == WitnessFile::Kind::kRelating ? "relating" : "not-shedding";
  out["graph"] = w.graph;
  if (w.kind == WitnessFile::Kind::kRelating) {
    out["edge"] = Json::array({w.edge.u, w.edge.v});
  } else {
    out["vertex"] = w.vertex;
  }
  out["set"] = Json(std::vector<Vertex>(w.set.begin(), w.set.end()));
  return out;
}

WitnessFile witness_from_json(const Json& j) {
  return guarded([&] {
    WitnessFile w;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "relating") {
      w.kind = WitnessFile::Kind::kRelating;
      const auto& e = j.at("edge");
      if (e.size() != 2) throw ParseError("edge must have two endpoints", 0);
      w.edge = {e.at(0).get<Vertex>(), e.at(1).get<Vertex>()};
    } else if (kind == "not-shedding") {
      w.kind = WitnessFile::Kind::kNotShedding;
      w.vertex = j.at("vertex").get<Vertex>();
    } else {
      throw ParseError("unknown witness kind '" + kind + "'", 0);
    }
    w.graph = j.value("graph", std::string{});
    for (const auto& v : j.at("set")) w.set.insert(v.get<Vertex>());
    return w;
  });
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace relate
