// lienil: command-line front end for the Lie solvability / nilpotency
// toolkit.
//
// Subcommands:
//   classify     graph file + characteristic -> classification report
//   decompose    graph file + characteristic -> matrix-block decomposition
//   novikov      structure-constant file -> central-chain check suite
//   oracle-sweep exhaustive classifier-vs-algebra consistency sweep
//   embeddings   verify a built-in 3x3 matrix-unit table
//   gen-novikov  write a truncated-derivation algebra file
//
// Exit codes: 0 = success (including "not solvable" classifications),
// 1 = a checked property failed (non-solvable decompose input, failing
// Novikov checks, sweep mismatch, failing unit table), 2 = usage, I/O, or
// parse errors, 3 = internal consistency error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
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

namespace {

using nlohmann::json;
using namespace lienil;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw precondition_error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to --out when given, else to stdout.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw precondition_error("cannot open output file '" + out_path + "'");
  }
  out << text;
}

FieldTag parse_field_tag(const std::string& text) {
  if (text == "Q" || text == "q") return FieldTag::rationals();
  if ((text.size() >= 2) && (text[0] == 'F' || text[0] == 'f')) {
    return FieldTag::prime(std::stoull(text.substr(1)));
  }
  throw precondition_error("unknown field '" + text +
                           "' (expected Q or F<prime>)");
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

int cmd_classify(const std::string& path, const std::string& char_text,
                 bool as_json, const std::string& out_path) {
  Graph g = parse_graph(read_file(path));
  ClassificationReport rep = classify(g, parse_characteristic(char_text));
  if (as_json) {
    emit(classification_to_json(rep), out_path);
    return 0;
  }
  std::ostringstream out;
  for (const auto& line : rep.explanation) out << line << '\n';
  if (rep.witness) out << "witness: " << *rep.witness << '\n';
  emit(out.str(), out_path);
  return 0;
}

int cmd_decompose(const std::string& path, const std::string& char_text,
                  bool as_json, const std::string& out_path) {
  Graph g = parse_graph(read_file(path));
  Characteristic ch = parse_characteristic(char_text);
  ClassificationReport cls = classify(g, ch);
  if (!cls.solvable) {
    std::cerr << "error: graph is not Lie solvable at characteristic "
              << characteristic_str(ch) << " (witness: "
              << cls.witness.value_or("none recorded") << ")\n";
    return 1;
  }
  DecompositionReport rep = decompose(g, ch);
  if (as_json) {
    emit(decomposition_to_json(rep), out_path);
    return 0;
  }
  std::ostringstream out;
  out << "ideal decomposition at characteristic "
      << characteristic_str(rep.characteristic) << ":\n";
  auto block_line = [&](const DecompBlock& b) {
    out << "  M_" << b.size.str()
        << (b.kind == "MatK" ? "(K)" : "(K[x,x^-1])") << " at '" << b.at
        << "'";
    if (b.count != 1) out << " x" << b.count.str();
    out << '\n';
  };
  for (const auto& b : rep.sink_blocks) block_line(b);
  for (const auto& b : rep.cycle_blocks) block_line(b);
  if (rep.sink_blocks.empty() && rep.cycle_blocks.empty()) {
    out << "  (no blocks: the graph has no sinks or cycles)\n";
  }
  if (rep.quotient_emitters.empty()) {
    out << "quotient: none\n";
  } else {
    out << "quotient: K^(S) over infinite emitters {";
    for (std::size_t i = 0; i < rep.quotient_emitters.size(); ++i) {
      out << (i ? ", " : "") << rep.quotient_emitters[i];
    }
    out << "}\n";
  }
  out << "row-finite: " << yesno(rep.row_finite) << '\n';
  out << "exact: " << yesno(rep.exact) << '\n';
  emit(out.str(), out_path);
  return 0;
}

json check_to_json(const ChainCheckReport& rep) {
  json j;
  j["claim"] = rep.claim_id;
  j["holds"] = rep.holds;
  j["params"] = rep.params;
  j["notes"] = rep.notes;
  if (rep.violation) {
    json v;
    v["indices"] = rep.violation->indices;
    v["detail"] = rep.violation->detail;
    j["violation"] = v;
  } else {
    j["violation"] = nullptr;
  }
  return j;
}

int cmd_novikov(const std::string& path, std::vector<std::string> checks,
                std::size_t trials, std::uint64_t seed, bool as_json,
                const std::string& out_path) {
  StructureAlgebra alg = algebra_from_json(read_file(path));
  VerifyResult nv = alg.verify_novikov();
  if (!nv.ok) {
    std::cerr << "error: input algebra is not Novikov: " << nv.identity
              << " fails at basis triple (" << nv.triple[0] << ", "
              << nv.triple[1] << ", " << nv.triple[2] << "): " << nv.detail
              << '\n';
    return 1;
  }
  alg.refresh_flavor();
  if (checks.empty()) {
    checks = {"lemma-2.1",   "lemma-2.3",   "lemma-2.4",
              "theorem-2.5", "theorem-2.8", "theorem-2.9"};
  }
  std::vector<ChainCheckReport> reports;
  for (const auto& name : checks) {
    if (name == "lemma-2.1") {
      reports.push_back(check_lemma_2_1(alg, trials, seed));
    } else if (name == "lemma-2.3") {
      reports.push_back(check_lemma_2_3(alg));
    } else if (name == "lemma-2.4") {
      reports.push_back(check_lemma_2_4(alg, trials, seed));
    } else if (name == "theorem-2.5") {
      reports.push_back(check_theorem_2_5(alg));
    } else if (name == "theorem-2.8") {
      reports.push_back(check_theorem_2_8(alg));
    } else if (name == "theorem-2.9") {
      reports.push_back(check_theorem_2_9(alg));
    } else {
      throw precondition_error(
          "unknown check '" + name +
          "' (expected lemma-2.1, lemma-2.3, lemma-2.4, theorem-2.5, "
          "theorem-2.8, or theorem-2.9)");
    }
  }
  bool all_hold = true;
  for (const auto& r : reports) all_hold = all_hold && r.holds;

  if (as_json) {
    json j;
    j["dim"] = alg.dim();
    j["field"] = alg.field().str();
    j["verified_novikov"] = true;
    j["trials"] = trials;
    j["seed"] = seed;
    j["all_hold"] = all_hold;
    j["checks"] = json::array();
    for (const auto& r : reports) j["checks"].push_back(check_to_json(r));
    emit(j.dump(2) + "\n", out_path);
  } else {
    std::ostringstream out;
    out << "algebra: dim " << alg.dim() << " over " << alg.field().str()
        << ", verified Novikov\n";
    for (const auto& r : reports) {
      out << r.claim_id << ": " << (r.holds ? "holds" : "FAILS") << " ("
          << r.params << ")";
      if (!r.notes.empty()) out << " -- " << r.notes;
      out << '\n';
      if (r.violation) out << "  violation: " << r.violation->detail << '\n';
    }
    out << (all_hold ? "all checks hold\n" : "some checks FAILED\n");
    emit(out.str(), out_path);
  }
  return all_hold ? 0 : 1;
}

int cmd_oracle_sweep(std::size_t max_vertices, std::size_t max_edges,
                     std::vector<std::uint64_t> primes, bool as_json,
                     const std::string& out_path) {
  SweepOptions opts;
  opts.max_vertices = max_vertices;
  opts.max_edges = max_edges;
  if (!primes.empty()) opts.primes = std::move(primes);
  SweepResult r = run_oracle_sweep(opts);
  bool ok = r.consistent() && r.nilpotency_consistent && r.oracle_consistent;

  if (as_json) {
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
    emit(j.dump(2) + "\n", out_path);
  } else {
    std::ostringstream out;
    out << "oracle sweep: <= " << opts.max_vertices << " vertices, <= "
        << opts.max_edges << " edges, primes {";
    for (std::size_t i = 0; i < opts.primes.size(); ++i) {
      out << (i ? ", " : "") << opts.primes[i];
    }
    out << "}\n";
    out << "graphs: " << r.graphs << '\n';
    out << "no-exit graphs: " << r.no_exit_graphs << '\n';
    out << "solvable (char 2): " << r.solvable_char2 << '\n';
    out << "solvable (char != 2): " << r.solvable_not2 << '\n';
    out << "nilpotent: " << r.nilpotent << '\n';
    out << "oracle algebras built: " << r.oracle_algebras << '\n';
    out << "mismatches: " << r.mismatches.size() << '\n';
    for (const auto& m : r.mismatches) out << "  " << m << '\n';
    out << (ok ? "consistent\n" : "INCONSISTENT\n");
    emit(out.str(), out_path);
  }
  return ok ? 0 : 1;
}

int cmd_embeddings(const std::string& which, bool as_json,
                   const std::string& out_path) {
  EmbeddingKind kind = embedding_kind_from_string(which);
  std::vector<FieldTag> fields = {FieldTag::prime(2), FieldTag::prime(3),
                                  FieldTag::rationals()};
  bool all_ok = true;
  json results = json::array();
  std::ostringstream human;
  human << "matrix-unit table '" << which << "' (3 x 3, 81 products per "
        << "field):\n";
  for (FieldTag k : fields) {
    Embedding emb = embedding_fixture(kind, k);
    MatrixUnitsVerdict v = verify_matrix_units(emb.graph, emb.units, emb.n);
    all_ok = all_ok && v.ok;
    json r;
    r["field"] = k.str();
    r["ok"] = v.ok;
    r["detail"] = v.detail;
    results.push_back(r);
    human << "  over " << k.str() << ": " << (v.ok ? "pass" : "FAIL");
    if (!v.ok) human << " (" << v.detail << ")";
    human << '\n';
  }
  if (as_json) {
    json j;
    j["which"] = which;
    j["ok"] = all_ok;
    j["results"] = results;
    emit(j.dump(2) + "\n", out_path);
  } else {
    human << (all_ok ? "pass\n" : "FAIL\n");
    emit(human.str(), out_path);
  }
  return all_ok ? 0 : 1;
}

int cmd_gen_novikov(std::size_t n, std::size_t low,
                    const std::string& field_text,
                    const std::string& out_path) {
  StructureAlgebra alg =
      make_truncated_derivation_novikov(n, low, parse_field_tag(field_text));
  emit(algebra_to_json(alg), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lienil: exact Lie solvability / nilpotency toolkit for Leavitt path "
      "algebras and Novikov algebras"};
  app.require_subcommand(1);

  std::string graph_path, char_text = "2", out_path;
  bool as_json = false;

  auto* classify_cmd =
      app.add_subcommand("classify", "Classify a graph's Leavitt path "
                                     "algebra as Lie solvable / nilpotent");
  classify_cmd->add_option("graph", graph_path, "graph description file")
      ->required();
  classify_cmd->add_option("--char", char_text, "field characteristic: 2 or "
                                                "not2")
      ->required();
  classify_cmd->add_flag("--json", as_json, "emit JSON");
  classify_cmd->add_option("--out", out_path, "write output to this file");

  auto* decompose_cmd = app.add_subcommand(
      "decompose", "Matrix-block decomposition of a solvable graph algebra");
  decompose_cmd->add_option("graph", graph_path, "graph description file")
      ->required();
  decompose_cmd
      ->add_option("--char", char_text, "field characteristic: 2 or not2")
      ->required();
  decompose_cmd->add_flag("--json", as_json, "emit JSON");
  decompose_cmd->add_option("--out", out_path, "write output to this file");

  std::string algebra_path;
  std::vector<std::string> checks;
  std::size_t trials = 25;
  std::uint64_t seed = 2024;
  auto* novikov_cmd = app.add_subcommand(
      "novikov", "Run the central-chain check suite on a Novikov algebra");
  novikov_cmd->add_option("algebra", algebra_path, "structure-constant JSON "
                                                   "file")
      ->required();
  novikov_cmd->add_option("--check", checks,
                          "check to run (repeatable; default all): lemma-2.1 "
                          "lemma-2.3 lemma-2.4 theorem-2.5 theorem-2.8 "
                          "theorem-2.9");
  novikov_cmd->add_option("--trials", trials, "randomized trial count");
  novikov_cmd->add_option("--seed", seed, "PRNG seed");
  novikov_cmd->add_flag("--json", as_json, "emit JSON");
  novikov_cmd->add_option("--out", out_path, "write output to this file");

  std::size_t max_vertices = 5, max_edges = 6;
  std::vector<std::uint64_t> primes;
  auto* sweep_cmd = app.add_subcommand(
      "oracle-sweep",
      "Exhaustively compare the graph classifier against the structure-"
      "algebra solvability oracle");
  sweep_cmd->add_option("--max-vertices", max_vertices,
                        "enumerate graphs with at most this many vertices");
  sweep_cmd->add_option("--max-edges", max_edges,
                        "enumerate graphs with at most this many edges");
  sweep_cmd->add_option("--p", primes,
                        "oracle primes (repeatable; default 2 3 5)");
  sweep_cmd->add_flag("--json", as_json, "emit JSON");
  sweep_cmd->add_option("--out", out_path, "write output to this file");

  std::string which;
  auto* embed_cmd = app.add_subcommand(
      "embeddings", "Verify a built-in 3x3 matrix-unit table over F_2, F_3, "
                    "and Q");
  embed_cmd->add_option("which", which, "lemma33, case1, or case2")
      ->required();
  embed_cmd->add_flag("--json", as_json, "emit JSON");
  embed_cmd->add_option("--out", out_path, "write output to this file");

  std::size_t gen_n = 6, gen_low = 2;
  std::string field_text = "Q";
  auto* gen_cmd = app.add_subcommand(
      "gen-novikov", "Write a truncated-derivation algebra file (basis "
                     "x^low .. x^(n-1), product a*(db/dx) mod x^n)");
  gen_cmd->add_option("--n", gen_n, "truncation exponent")->required();
  gen_cmd->add_option("--low", gen_low, "lowest basis degree (default 2)");
  gen_cmd->add_option("--field", field_text, "Q or F<prime> (default Q)");
  gen_cmd->add_option("--out", out_path, "write output to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(classify_cmd)) {
      return cmd_classify(graph_path, char_text, as_json, out_path);
    }
    if (app.got_subcommand(decompose_cmd)) {
      return cmd_decompose(graph_path, char_text, as_json, out_path);
    }
    if (app.got_subcommand(novikov_cmd)) {
      return cmd_novikov(algebra_path, checks, trials, seed, as_json,
                         out_path);
    }
    if (app.got_subcommand(sweep_cmd)) {
      return cmd_oracle_sweep(max_vertices, max_edges, primes, as_json,
                              out_path);
    }
    if (app.got_subcommand(embed_cmd)) {
      return cmd_embeddings(which, as_json, out_path);
    }
    if (app.got_subcommand(gen_cmd)) {
      return cmd_gen_novikov(gen_n, gen_low, field_text, out_path);
    }
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
