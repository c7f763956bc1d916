#pragma once

// Exhaustive enumeration of small directed multigraphs up to isomorphism,
// plus the consistency sweep that checks the graph classifier against the
// structure-algebra solvability oracle:
//
//   * for every enumerated graph: the nilpotency verdict equals the
//     isolated-vertices-and-loops shape test and the all-blocks-size-1 test,
//     nilpotent implies solvable, solvable away from characteristic 2
//     implies solvable at 2, and solvable implies no-exit;
//   * for every no-exit graph (always row-finite here): the classifier's
//     solvability verdicts agree with is_lie_solvable of the block algebra
//     ⊕ gl(n(v)) ⊕ gl(m(c)) over F_2 (characteristic 2) and over F_3 / F_5
//     (characteristic not 2), and with the equivalent route through the Lie
//     nilpotency of the commutator subalgebra [L, L].

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lienil/graph.hpp"

namespace lienil {

// Calls fn once per isomorphism class of directed multigraphs with exactly
// n vertices (for each n <= max_vertices) and at most max_edges edges.
// Parallel edges and self-loops are included; vertices are named v0..,
// edges e0...  Graphs of different vertex count are distinct classes even
// when they differ only by isolated vertices.
void enumerate_small_graphs(std::size_t max_vertices, std::size_t max_edges,
                            const std::function<void(const Graph&)>& fn);

// Upper bound on the labeled-graph count of the sweep (the enumeration
// visits every labeled multigraph once before filtering to canonical
// representatives); saturates at UINT64_MAX.
std::uint64_t sweep_size_estimate(std::size_t max_vertices,
                                  std::size_t max_edges);

// Sink and cycle block sizes n(v) / m(c) of the ideal decomposition, with no
// solvability precondition (sizes may be omega on graphs with exits).
// Pendant families contribute their size once; multiplicity never affects
// the solvability of the block sum.
std::vector<Count> oracle_block_sizes(const Graph& g);

struct SweepOptions {
  std::size_t max_vertices = 5;
  std::size_t max_edges = 6;
  std::vector<std::uint64_t> primes = {2, 3, 5};
};

struct SweepResult {
  std::uint64_t graphs = 0;          // isomorphism classes visited
  std::uint64_t no_exit_graphs = 0;  // classes where the algebra oracle ran
  std::uint64_t solvable_char2 = 0;
  std::uint64_t solvable_not2 = 0;
  std::uint64_t nilpotent = 0;
  std::uint64_t oracle_algebras = 0;  // distinct block multisets built
  bool nilpotency_consistent = true;  // shape/blocks/nilpotency equivalences
  bool oracle_consistent = true;      // classifier vs structure algebra
  std::vector<std::string> mismatches;
  bool consistent() const { return mismatches.empty(); }
};

// Refuses (precondition_error, citing the estimate) when the labeled-graph
// estimate exceeds the documented budget of 2,000,000; the default (5, 6)
// bounds stay within it.
SweepResult run_oracle_sweep(const SweepOptions& opts);

}  // namespace lienil
