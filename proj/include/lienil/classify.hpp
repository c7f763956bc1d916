#pragma once

// Lie solvability / nilpotency classification of the Leavitt path algebra
// L_K(E) from the shape of the graph E, and its block decomposition on the
// solvable class.
//
// The verdicts depend on the field K only through char(K) = 2 or not:
//   char 2:   solvable  <=>  E is no-exit and every vertex is a sink, or on
//             a cycle of length <= 2, or all its out-edges land on a sink
//             with in-fiber {e} or on a loop f with in-fiber {e, f};
//   char != 2: solvable <=>  E is a disjoint union of isolated vertices and
//             loops.
//   Either characteristic: nilpotent <=> isolated vertices and loops.
//
// On the solvable class, L_K(E) has an ideal isomorphic to
//   (⊕_{sinks v} M_{n(v)}(K)) ⊕ (⊕_{cycles c} M_{m(c)}(K[x,x^-1]))
// with n(v) (resp. m(c)) the path counts of module graph; the quotient is
// K^(S) over the infinite emitters S, and the ideal is everything iff the
// graph is row-finite.

#include <optional>
#include <string>
#include <vector>

#include "lienil/graph.hpp"

namespace lienil {

enum class Characteristic { two, not_two };

// "2" / "not2" (the CLI spelling).
std::string characteristic_str(Characteristic ch);
Characteristic parse_characteristic(const std::string& text);

struct ClassificationReport {
  Characteristic characteristic = Characteristic::two;
  bool no_exit = true;
  std::optional<std::string> exit_witness;
  bool char2_condition = true;
  std::optional<std::string> char2_witness;  // first failing vertex
  bool isolated_and_loops = true;
  // "No paths of positive length end at an infinite emitter" diagnostic;
  // implied by the vertex condition but reported independently.
  bool emitters_clean = true;
  std::vector<std::string> emitter_violations;
  bool solvable = false;
  bool nilpotent = false;
  // Attached whenever solvable is false: the exit edge, offending vertex, or
  // non-loop structure that blocks solvability.
  std::optional<std::string> witness;
  std::vector<std::string> explanation;
};

ClassificationReport classify(const Graph& g, Characteristic ch);

// One matrix block (or pendant family of identical blocks) of the ideal
// decomposition.  kind "MatK" for M_size(K) at a sink, "MatLaurent" for
// M_size(K[x,x^-1]) at a cycle base; count > 1 (or omega) summarizes a
// pendant family of identical blocks anchored at the owning vertex.
struct DecompBlock {
  std::string kind;
  Count size;
  std::string at;
  Count count = Count::of(1);
};

struct DecompositionReport {
  Characteristic characteristic = Characteristic::two;
  std::vector<DecompBlock> sink_blocks;   // M_{n(v)}(K)
  std::vector<DecompBlock> cycle_blocks;  // M_{m(c)}(K[x,x^-1])
  std::vector<std::string> quotient_emitters;
  bool row_finite = true;
  bool exact = true;  // the ideal is all of L_K(E), iff row_finite
};

// Requires classify(g, ch).solvable; errors otherwise, citing the witness.
// Cross-checks the block sizes against the characteristic (<= 2 at char 2,
// = 1 otherwise) and fails with internal_error on any inconsistency.
DecompositionReport decompose(const Graph& g, Characteristic ch);

// Deterministic JSON renderings (sorted keys, two-space indent, trailing
// newline).  Counts render as integers, or the string "omega".
std::string classification_to_json(const ClassificationReport& rep);
std::string decomposition_to_json(const DecompositionReport& rep);

}  // namespace lienil
