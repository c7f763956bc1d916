#include "lienil/classify.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace lienil {

using nlohmann::json;

std::string characteristic_str(Characteristic ch) {
  return ch == Characteristic::two ? "2" : "not2";
}

Characteristic parse_characteristic(const std::string& text) {
  if (text == "2") return Characteristic::two;
  if (text == "not2" || text == "not 2") return Characteristic::not_two;
  throw precondition_error("characteristic must be '2' or 'not2', got '" +
                           text + "'");
}

ClassificationReport classify(const Graph& g, Characteristic ch) {
  ClassificationReport rep;
  rep.characteristic = ch;

  auto no_exit = check_no_exit(g);
  rep.no_exit = no_exit.no_exit;
  rep.exit_witness = no_exit.witness;

  auto char2 = check_char2_condition(g);
  rep.char2_condition = char2.holds;
  rep.char2_witness = char2.failing_vertex;

  auto iso = check_isolated_and_loops(g);
  rep.isolated_and_loops = iso.holds;

  rep.emitter_violations = emitter_path_violations(g);
  rep.emitters_clean = rep.emitter_violations.empty();

  rep.nilpotent = iso.holds;

  if (ch == Characteristic::two) {
    rep.solvable = rep.no_exit && rep.char2_condition;
    rep.explanation.push_back(
        "characteristic 2: solvable iff the graph is no-exit and every "
        "vertex is a sink, on a cycle of length at most 2, or sends each "
        "edge onto a sink with in-fiber {e} or a loop with in-fiber {e, f}");
    rep.explanation.push_back(std::string("no-exit: ") +
                              (rep.no_exit ? "yes" : "no"));
    rep.explanation.push_back(std::string("vertex condition: ") +
                              (rep.char2_condition ? "yes" : "no"));
    if (!rep.solvable) {
      if (!rep.no_exit) {
        rep.witness = rep.exit_witness;
      } else {
        rep.witness = "vertex " + (rep.char2_witness ? *rep.char2_witness
                                                     : std::string("?")) +
                      " violates the vertex condition";
        if (char2.detail) rep.explanation.push_back(*char2.detail);
      }
    }
  } else {
    rep.solvable = rep.isolated_and_loops;
    rep.explanation.push_back(
        "characteristic not 2: solvable iff the graph is a disjoint union "
        "of isolated vertices and loops");
    if (!rep.solvable && iso.witness)
      rep.witness = "vertex " + *iso.witness +
                    " is neither isolated nor a private loop vertex";
  }
  rep.explanation.push_back(
      std::string("isolated vertices and loops (nilpotency shape): ") +
      (rep.isolated_and_loops ? "yes" : "no"));
  rep.explanation.push_back(std::string("solvable: ") +
                            (rep.solvable ? "yes" : "no"));
  rep.explanation.push_back(std::string("nilpotent: ") +
                            (rep.nilpotent ? "yes" : "no"));

  if (rep.nilpotent && !rep.solvable)
    throw internal_error("classification inconsistency: nilpotent but not "
                         "solvable");
  return rep;
}

namespace {

json count_to_json(const Count& c) {
  if (c.is_omega()) return json("omega");
  return json(c.value());
}

json block_to_json(const DecompBlock& b) {
  json j;
  j["kind"] = b.kind;
  j["size"] = count_to_json(b.size);
  j["at"] = b.at;
  j["count"] = count_to_json(b.count);
  return j;
}

// Vertex names sorted, for deterministic block order.
std::vector<std::string> sorted_vertex_names(const Graph& g) {
  std::vector<std::string> names;
  for (const auto& v : g.vertices()) names.push_back(v.name);
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace

DecompositionReport decompose(const Graph& g, Characteristic ch) {
  auto cls = classify(g, ch);
  if (!cls.solvable)
    throw precondition_error(
        "graph is not Lie solvable at characteristic " +
        characteristic_str(ch) +
        (cls.witness ? " (witness: " + *cls.witness + ")" : ""));

  DecompositionReport rep;
  rep.characteristic = ch;

  for (const auto& name : sorted_vertex_names(g)) {
    std::size_t v = *g.find_vertex(name);
    if (g.is_sink(v)) {
      Count n = count_paths_ending_at(g, v);
      rep.sink_blocks.push_back(DecompBlock{"MatK", n, name, Count::of(1)});
    }
  }
  // Pendant sink families: each private sink receives exactly one edge from
  // its owner, so its n is 1 (the trivial path) plus the paths ending at the
  // owner.
  for (const auto& name : sorted_vertex_names(g)) {
    std::size_t v = *g.find_vertex(name);
    Count ps = g.vertex(v).pendant_sinks;
    if (ps == 0) continue;
    Count n = Count::of(1) + count_paths_ending_at(g, v);
    rep.sink_blocks.push_back(DecompBlock{"MatK", n, name, ps});
  }
  for (const auto& c : distinct_cycles(g)) {
    Count m = count_paths_to_cycle(g, c);
    rep.cycle_blocks.push_back(
        DecompBlock{"MatLaurent", m, c.base(), Count::of(1)});
  }
  // Pendant loop families: the private vertex receives its loop and one edge
  // from the owner, so its m is 1 plus the paths ending at the owner.
  for (const auto& name : sorted_vertex_names(g)) {
    std::size_t v = *g.find_vertex(name);
    Count pl = g.vertex(v).pendant_loops;
    if (pl == 0) continue;
    Count m = Count::of(1) + count_paths_ending_at(g, v);
    rep.cycle_blocks.push_back(DecompBlock{"MatLaurent", m, name, pl});
  }

  for (const auto& name : sorted_vertex_names(g))
    if (g.is_infinite_emitter(*g.find_vertex(name)))
      rep.quotient_emitters.push_back(name);
  rep.row_finite = rep.quotient_emitters.empty();
  rep.exact = rep.row_finite;

  // Internal cross-checks: solvability bounds every block size by 2 at
  // characteristic 2 and pins it to 1 otherwise.
  std::uint64_t bound = ch == Characteristic::two ? 2 : 1;
  for (const auto* blocks : {&rep.sink_blocks, &rep.cycle_blocks})
    for (const auto& b : *blocks)
      if (!b.size.leq(bound) || b.size == 0)
        throw internal_error(
            "decomposition inconsistency: solvable graph produced block of "
            "size " +
            b.size.str() + " at " + b.at + " (bound " +
            std::to_string(bound) + ")");
  return rep;
}

std::string classification_to_json(const ClassificationReport& rep) {
  json j;
  j["characteristic"] = characteristic_str(rep.characteristic);
  j["no_exit"] = rep.no_exit;
  j["exit_witness"] = rep.exit_witness ? json(*rep.exit_witness) : json();
  j["char2_condition"] = rep.char2_condition;
  j["char2_witness"] = rep.char2_witness ? json(*rep.char2_witness) : json();
  j["isolated_and_loops"] = rep.isolated_and_loops;
  j["emitters_clean"] = rep.emitters_clean;
  j["emitter_violations"] = rep.emitter_violations;
  j["solvable"] = rep.solvable;
  j["nilpotent"] = rep.nilpotent;
  j["witness"] = rep.witness ? json(*rep.witness) : json();
  j["explanation"] = rep.explanation;
  return j.dump(2) + "\n";
}

std::string decomposition_to_json(const DecompositionReport& rep) {
  json j;
  j["characteristic"] = characteristic_str(rep.characteristic);
  json blocks = json::array();
  for (const auto& b : rep.sink_blocks) blocks.push_back(block_to_json(b));
  for (const auto& b : rep.cycle_blocks) blocks.push_back(block_to_json(b));
  j["blocks"] = blocks;
  j["quotient_emitters"] = rep.quotient_emitters;
  j["row_finite"] = rep.row_finite;
  j["exact"] = rep.exact;
  return j.dump(2) + "\n";
}

}  // namespace lienil
