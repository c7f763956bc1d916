// _lienil: thin pybind11 bindings.  Every entry point takes plain strings /
// integers and returns a JSON string; the `lienil` python package decodes
// them into dicts.  Errors surface as ValueError (precondition violations)
// or RuntimeError (internal checks).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "lienil/algebra_io.hpp"
#include "lienil/classify.hpp"
#include "lienil/enumerate.hpp"
#include "lienil/field.hpp"
#include "lienil/graph.hpp"
#include "lienil/lpa.hpp"
#include "lienil/novikov.hpp"
#include "lienil/structure_algebra.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace lienil;

namespace {

FieldTag field_from_string(const std::string& text) {
  if (text == "Q" || text == "q") return FieldTag::rationals();
  if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'f')) {
    return FieldTag::prime(std::stoull(text.substr(1)));
  }
  throw precondition_error("unknown field '" + text +
                           "' (expected Q or F<prime>)");
}

std::string classify_json(const std::string& graph_text,
                          const std::string& characteristic) {
  Graph g = parse_graph(graph_text);
  return classification_to_json(
      classify(g, parse_characteristic(characteristic)));
}

std::string decompose_json(const std::string& graph_text,
                           const std::string& characteristic) {
  Graph g = parse_graph(graph_text);
  return decomposition_to_json(
      decompose(g, parse_characteristic(characteristic)));
}

std::string canonical_graph(const std::string& graph_text) {
  return serialize_graph(parse_graph(graph_text));
}

std::string gl_verdicts_json(std::size_t n, std::uint64_t p) {
  StructureAlgebra alg = StructureAlgebra::gl(n, FieldTag::prime(p));
  SeriesReport ds = alg.derived_series();
  json j;
  j["n"] = n;
  j["p"] = p;
  j["dim"] = alg.dim();
  j["derived_dims"] = ds.dims();
  j["solvable"] = alg.is_lie_solvable();
  j["nilpotent"] = alg.is_lie_nilpotent();
  return j.dump(2) + "\n";
}

std::string truncated_novikov_json(std::size_t n, std::size_t low,
                                   const std::string& field) {
  return algebra_to_json(
      make_truncated_derivation_novikov(n, low, field_from_string(field)));
}

json check_to_json(const ChainCheckReport& rep) {
  json j;
  j["claim"] = rep.claim_id;
  j["holds"] = rep.holds;
  j["params"] = rep.params;
  j["notes"] = rep.notes;
  if (rep.violation) {
    j["violation"] = {{"indices", rep.violation->indices},
                      {"detail", rep.violation->detail}};
  } else {
    j["violation"] = nullptr;
  }
  return j;
}

std::string novikov_checks_json(const std::string& algebra_json,
                                std::size_t trials, std::uint64_t seed) {
  StructureAlgebra alg = algebra_from_json(algebra_json);
  json j;
  j["dim"] = alg.dim();
  j["field"] = alg.field().str();
  VerifyResult nv = alg.verify_novikov();
  if (!nv.ok) {
    j["verified_novikov"] = false;
    j["refusal"] = nv.identity + " fails at basis triple (" +
                   std::to_string(nv.triple[0]) + ", " +
                   std::to_string(nv.triple[1]) + ", " +
                   std::to_string(nv.triple[2]) + "): " + nv.detail;
    j["all_hold"] = false;
    j["checks"] = json::array();
    return j.dump(2) + "\n";
  }
  alg.refresh_flavor();
  j["verified_novikov"] = true;
  j["refusal"] = nullptr;
  j["trials"] = trials;
  j["seed"] = seed;
  j["checks"] = json::array();
  bool all_hold = true;
  for (const ChainCheckReport& rep :
       {check_lemma_2_1(alg, trials, seed), check_lemma_2_3(alg),
        check_lemma_2_4(alg, trials, seed), check_theorem_2_5(alg),
        check_theorem_2_8(alg), check_theorem_2_9(alg)}) {
    all_hold = all_hold && rep.holds;
    j["checks"].push_back(check_to_json(rep));
  }
  j["all_hold"] = all_hold;
  return j.dump(2) + "\n";
}

std::string verify_embedding_json(const std::string& which,
                                  const std::string& field) {
  EmbeddingKind kind = embedding_kind_from_string(which);
  FieldTag k = field_from_string(field);
  Embedding emb = embedding_fixture(kind, k);
  MatrixUnitsVerdict v = verify_matrix_units(emb.graph, emb.units, emb.n);
  json j;
  j["which"] = which;
  j["field"] = k.str();
  j["n"] = emb.n;
  j["ok"] = v.ok;
  j["detail"] = v.detail;
  j["failing"] = v.failing;
  return j.dump(2) + "\n";
}

std::string oracle_sweep_json(std::size_t max_vertices, std::size_t max_edges,
                              const std::vector<std::uint64_t>& primes) {
  SweepOptions opts;
  opts.max_vertices = max_vertices;
  opts.max_edges = max_edges;
  if (!primes.empty()) opts.primes = primes;
  SweepResult r = run_oracle_sweep(opts);
  json j;
  j["max_vertices"] = opts.max_vertices;
  j["max_edges"] = opts.max_edges;
  j["primes"] = opts.primes;
  j["graphs"] = r.graphs;
  j["no_exit_graphs"] = r.no_exit_graphs;
  j["solvable_char2"] = r.solvable_char2;
  j["solvable_not2"] = r.solvable_not2;
  j["nilpotent"] = r.nilpotent;
  j["oracle_algebras"] = r.oracle_algebras;
  j["nilpotency_consistent"] = r.nilpotency_consistent;
  j["oracle_consistent"] = r.oracle_consistent;
  j["mismatches"] = r.mismatches;
  return j.dump(2) + "\n";
}

}  // namespace

PYBIND11_MODULE(_lienil, m) {
  m.doc() = "Exact Lie solvability / nilpotency toolkit (JSON-string core)";
  m.def("classify_json", &classify_json, py::arg("graph_text"),
        py::arg("characteristic"),
        "Classify a graph (text format) at characteristic '2' or 'not2'.");
  m.def("decompose_json", &decompose_json, py::arg("graph_text"),
        py::arg("characteristic"),
        "Matrix-block decomposition of a solvable graph algebra.");
  m.def("canonical_graph", &canonical_graph, py::arg("graph_text"),
        "Parse and re-serialize a graph description.");
  m.def("gl_verdicts_json", &gl_verdicts_json, py::arg("n"), py::arg("p"),
        "Derived-series dims and Lie verdicts of gl(n, F_p).");
  m.def("truncated_novikov_json", &truncated_novikov_json, py::arg("n"),
        py::arg("low"), py::arg("field"),
        "Structure constants of the truncated derivation algebra.");
  m.def("novikov_checks_json", &novikov_checks_json, py::arg("algebra_json"),
        py::arg("trials") = 25, py::arg("seed") = 2024,
        "Run the central-chain check suite on a structure-constant file.");
  m.def("verify_embedding_json", &verify_embedding_json, py::arg("which"),
        py::arg("field"),
        "Verify a built-in 3x3 matrix-unit table over the given field.");
  m.def("oracle_sweep_json", &oracle_sweep_json, py::arg("max_vertices"),
        py::arg("max_edges"),
        py::arg("primes") = std::vector<std::uint64_t>{},
        "Exhaustive classifier-vs-algebra consistency sweep.");
}
