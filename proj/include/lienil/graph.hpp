#pragma once

// Directed multigraphs for Leavitt path algebra classification.
//
// A graph is a finite set of named vertices and named edges (parallel edges
// and self-loops allowed).  Two per-vertex attributes, pendant_sinks and
// pendant_loops, each a count in N ∪ {omega}, stand for that many additional
// edges from the vertex, each to its own fresh private sink (respectively to
// a fresh private vertex carrying a loop, the private vertex receiving
// exactly the incoming edge and its loop).  They give a finite presentation
// of the infinite-emitter shapes the classifier can accept, e.g. the
// "infinite clock" (one vertex emitting omega edges to distinct sinks).
//
// Text format (line oriented, '#' starts a comment):
//   vertex <name> [pendant_sinks=<n|omega>] [pendant_loops=<n|omega>]
//   edge <name> : <src> -> <dst>
// Vertex and edge names share one namespace and must be unique.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lienil/field.hpp"  // precondition_error / internal_error

namespace lienil {

// A count in N ∪ {omega}.  omega compares greater than every integer and is
// absorbing under addition.
struct Count {
  bool omega = false;
  std::uint64_t n = 0;

  static Count of(std::uint64_t k) { return Count{false, k}; }
  static Count inf() { return Count{true, 0}; }

  bool is_omega() const { return omega; }
  bool is_finite() const { return !omega; }
  // Finite value; calling it on omega is a logic error.
  std::uint64_t value() const {
    if (omega) throw internal_error("Count::value() on omega");
    return n;
  }

  Count operator+(const Count& o) const;
  bool operator==(const Count& o) const {
    return omega == o.omega && (omega || n == o.n);
  }
  bool operator!=(const Count& o) const { return !(*this == o); }
  bool operator==(std::uint64_t k) const { return !omega && n == k; }
  bool operator!=(std::uint64_t k) const { return !(*this == k); }
  // omega <= k is false for every integer k.
  bool leq(std::uint64_t k) const { return !omega && n <= k; }

  std::string str() const { return omega ? "omega" : std::to_string(n); }
};

struct GraphVertex {
  std::string name;
  Count pendant_sinks = Count::of(0);
  Count pendant_loops = Count::of(0);
};

struct GraphEdge {
  std::string name;
  std::size_t src = 0;
  std::size_t dst = 0;
};

class Graph {
 public:
  Graph() = default;

  std::size_t add_vertex(const std::string& name,
                         Count pendant_sinks = Count::of(0),
                         Count pendant_loops = Count::of(0));
  std::size_t add_edge(const std::string& name, const std::string& src,
                       const std::string& dst);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<GraphVertex>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const GraphVertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const GraphEdge& edge(std::size_t i) const { return edges_.at(i); }

  std::optional<std::size_t> find_vertex(const std::string& name) const;
  std::optional<std::size_t> find_edge(const std::string& name) const;

  // Edge indices leaving / entering a vertex, sorted by edge name.
  std::vector<std::size_t> out_edges(std::size_t v) const;
  std::vector<std::size_t> in_edges(std::size_t v) const;

  // Out-degree including pendant contributions (s^{-1}(v) in the expanded
  // graph); in-degree counts explicit edges only, since pendant edges end at
  // private vertices.
  Count total_out_degree(std::size_t v) const;
  std::size_t explicit_in_degree(std::size_t v) const;

  bool is_sink(std::size_t v) const { return total_out_degree(v) == 0; }
  bool is_infinite_emitter(std::size_t v) const {
    return total_out_degree(v).is_omega();
  }

  // reachable(u)[w] = true iff there is a path (length >= 0) from u to w
  // along explicit edges.
  std::vector<bool> reachable_from(std::size_t u) const;
  // True iff v lies on an explicit cycle (a path of length >= 1 from v back
  // to v).
  bool on_cycle(std::size_t v) const;

 private:
  std::vector<GraphVertex> vertices_;
  std::vector<GraphEdge> edges_;
  // Single namespace over vertex and edge names: value is (is_edge, index).
  std::unordered_map<std::string, std::pair<bool, std::size_t>> names_;
};

// Structural equality: same vertex set (names + pendant attributes) and same
// edge set (names + endpoints), irrespective of declaration order.
bool graph_equal(const Graph& a, const Graph& b);

// Parses the line-oriented text format; errors carry "line L, column C".
Graph parse_graph(const std::string& text);
// Emits the text format; parse_graph(serialize_graph(g)) equals g.
std::string serialize_graph(const Graph& g);

// Classification of vertices.  A vertex may be both isolated and a sink
// (a lone vertex is).  Pendant-generated private vertices appear only in
// summarized family form.
struct PendantFamily {
  std::string owner;
  bool loop = false;  // false: family of private sinks; true: private loops
  Count count;
};
struct VertexKinds {
  std::vector<std::string> sinks;              // total out-degree 0
  std::vector<std::string> regular;            // 0 < out-degree < omega
  std::vector<std::string> infinite_emitters;  // out-degree omega
  std::vector<std::string> isolated;           // in- and out-degree 0
  std::vector<PendantFamily> pendant_families;
};
VertexKinds vertex_kinds(const Graph& g);

// A cycle: edges e_1..e_n with r(e_i) = s(e_{i+1}), s(e_1) = r(e_n), and
// pairwise distinct source vertices.  Stored in canonical rotation: the base
// vertices[0] is the smallest vertex name on the cycle; vertices[i] is the
// source of edges[i].  Two cycles are the same iff they have the same vertex
// set, so distinct_cycles is keyed by vertex set.
struct Cycle {
  std::vector<std::string> edges;
  std::vector<std::string> vertices;
  std::size_t length() const { return edges.size(); }
  const std::string& base() const { return vertices.front(); }
};

// All cycles of g up to rotation, keyed by vertex set, sorted by base name.
std::vector<Cycle> distinct_cycles(const Graph& g);

// No-exit test: every vertex lying on some cycle has out-degree exactly 1
// (pendant counts included).  On failure the witness names an offending
// edge or pendant attribute.
struct NoExitReport {
  bool no_exit = true;
  std::optional<std::string> witness;
};
NoExitReport check_no_exit(const Graph& g);
inline bool is_no_exit(const Graph& g) { return check_no_exit(g).no_exit; }

// The characteristic-2 vertex condition: every vertex v is (a) a sink, or
// (b) in a cycle of length at most 2, or (c) for each edge e leaving v, r(e)
// is either a sink whose whole in-edge fiber is {e}, or lies on a loop f
// with in-edge fiber exactly {e, f}.  Pendant families satisfy branch (c) by
// construction.  Vertices are scanned in name order; the first failure is
// reported.
struct Char2Report {
  bool holds = true;
  std::optional<std::string> failing_vertex;
  std::optional<std::string> detail;
};
Char2Report check_char2_condition(const Graph& g);
inline bool char2_condition(const Graph& g) {
  return check_char2_condition(g).holds;
}

// Disjoint-union-of-isolated-vertices-and-loops test: every vertex is
// isolated, or carries a self-loop l with out-fiber and in-fiber both
// exactly {l} (and pendant counts 0).  The witness names the first vertex
// violating this.
struct IsoLoopsReport {
  bool holds = true;
  std::optional<std::string> witness;
};
IsoLoopsReport check_isolated_and_loops(const Graph& g);
inline bool is_isolated_and_loops(const Graph& g) {
  return check_isolated_and_loops(g).holds;
}

// Number of paths ending at vertex v (explicit edges; the length-0 path
// counts), omega iff some cycle reaches v.
Count count_paths_ending_at(const Graph& g, std::size_t v);

// n(v) for a sink v: number of paths ending at v including the trivial one.
// Errors when the named vertex is missing or not a sink.
Count count_paths_to_sink(const Graph& g, const std::string& vertex);

// m(c): number of paths ending at the canonical base of c (smallest vertex
// name on the cycle) that do not contain the full cycle; omega iff another
// cycle reaches c.  c must be a cycle of g (as returned by distinct_cycles).
Count count_paths_to_cycle(const Graph& g, const Cycle& c);

// "No paths of positive length end at an infinite emitter": lists each
// explicit edge ending at an infinite emitter (empty iff the condition
// holds).  Implied by the characteristic-2 condition; kept as an independent
// diagnostic.
std::vector<std::string> emitter_path_violations(const Graph& g);

}  // namespace lienil
