#include "lienil/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <set>
#include <sstream>

namespace lienil {

namespace {

std::uint64_t checked_add_u64(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    throw internal_error("path count overflow");
  return a + b;
}

// Vertex indices sorted by vertex name (deterministic scan order).
std::vector<std::size_t> vertices_by_name(const Graph& g) {
  std::vector<std::size_t> idx(g.vertex_count());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return g.vertex(a).name < g.vertex(b).name;
  });
  return idx;
}

std::vector<std::size_t> edges_by_name(const Graph& g) {
  std::vector<std::size_t> idx(g.edge_count());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return g.edge(a).name < g.edge(b).name;
  });
  return idx;
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

}  // namespace

Count Count::operator+(const Count& o) const {
  if (omega || o.omega) return inf();
  return of(checked_add_u64(n, o.n));
}

std::size_t Graph::add_vertex(const std::string& name, Count pendant_sinks,
                              Count pendant_loops) {
  if (name.empty()) throw precondition_error("empty name");
  if (names_.count(name))
    throw precondition_error("duplicate name " + quoted(name));
  vertices_.push_back(GraphVertex{name, pendant_sinks, pendant_loops});
  names_[name] = {false, vertices_.size() - 1};
  return vertices_.size() - 1;
}

std::size_t Graph::add_edge(const std::string& name, const std::string& src,
                            const std::string& dst) {
  if (name.empty()) throw precondition_error("empty name");
  if (names_.count(name))
    throw precondition_error("duplicate name " + quoted(name));
  auto s = find_vertex(src);
  if (!s) throw precondition_error("unknown vertex " + quoted(src));
  auto d = find_vertex(dst);
  if (!d) throw precondition_error("unknown vertex " + quoted(dst));
  edges_.push_back(GraphEdge{name, *s, *d});
  names_[name] = {true, edges_.size() - 1};
  return edges_.size() - 1;
}

std::optional<std::size_t> Graph::find_vertex(const std::string& name) const {
  auto it = names_.find(name);
  if (it == names_.end() || it->second.first) return std::nullopt;
  return it->second.second;
}

std::optional<std::size_t> Graph::find_edge(const std::string& name) const {
  auto it = names_.find(name);
  if (it == names_.end() || !it->second.first) return std::nullopt;
  return it->second.second;
}

std::vector<std::size_t> Graph::out_edges(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].src == v) out.push_back(e);
  std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
    return edges_[a].name < edges_[b].name;
  });
  return out;
}

std::vector<std::size_t> Graph::in_edges(std::size_t v) const {
  std::vector<std::size_t> in;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].dst == v) in.push_back(e);
  std::sort(in.begin(), in.end(), [&](std::size_t a, std::size_t b) {
    return edges_[a].name < edges_[b].name;
  });
  return in;
}

Count Graph::total_out_degree(std::size_t v) const {
  std::uint64_t explicit_deg = 0;
  for (const auto& e : edges_)
    if (e.src == v) ++explicit_deg;
  return Count::of(explicit_deg) + vertices_.at(v).pendant_sinks +
         vertices_.at(v).pendant_loops;
}

std::size_t Graph::explicit_in_degree(std::size_t v) const {
  std::size_t deg = 0;
  for (const auto& e : edges_)
    if (e.dst == v) ++deg;
  return deg;
}

std::vector<bool> Graph::reachable_from(std::size_t u) const {
  std::vector<bool> seen(vertices_.size(), false);
  std::deque<std::size_t> queue{u};
  seen[u] = true;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (const auto& e : edges_)
      if (e.src == x && !seen[e.dst]) {
        seen[e.dst] = true;
        queue.push_back(e.dst);
      }
  }
  return seen;
}

bool Graph::on_cycle(std::size_t v) const {
  for (const auto& e : edges_)
    if (e.src == v && reachable_from(e.dst)[v]) return true;
  return false;
}

bool graph_equal(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() ||
      a.edge_count() != b.edge_count())
    return false;
  for (const auto& v : a.vertices()) {
    auto i = b.find_vertex(v.name);
    if (!i) return false;
    const auto& w = b.vertex(*i);
    if (v.pendant_sinks != w.pendant_sinks ||
        v.pendant_loops != w.pendant_loops)
      return false;
  }
  for (const auto& e : a.edges()) {
    auto i = b.find_edge(e.name);
    if (!i) return false;
    const auto& f = b.edge(*i);
    if (a.vertex(e.src).name != b.vertex(f.src).name ||
        a.vertex(e.dst).name != b.vertex(f.dst).name)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Token {
  std::string text;
  std::size_t col = 0;  // 1-based
};

std::vector<Token> tokenize_line(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != '#' &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    tokens.push_back(Token{line.substr(start, i - start), start + 1});
  }
  return tokens;
}

[[noreturn]] void parse_fail(std::size_t line, std::size_t col,
                             const std::string& msg) {
  throw precondition_error("line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ": " + msg);
}

Count parse_count(std::size_t line, const Token& tok,
                  const std::string& value) {
  if (value == "omega") return Count::inf();
  if (value.empty()) parse_fail(line, tok.col, "malformed count: empty");
  for (char ch : value)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      parse_fail(line, tok.col, "malformed count '" + value + "'");
  try {
    return Count::of(std::stoull(value));
  } catch (const std::out_of_range&) {
    parse_fail(line, tok.col, "count out of range '" + value + "'");
  }
}

}  // namespace

Graph parse_graph(const std::string& text) {
  Graph g;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  // Edges are checked after all vertices exist, so declaration order between
  // vertices and edges does not matter.
  struct PendingEdge {
    std::size_t line;
    Token name, src, dst;
  };
  std::vector<PendingEdge> pending;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokenize_line(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    if (kw == "vertex") {
      if (toks.size() < 2)
        parse_fail(line_no, line.size() + 1, "expected vertex name");
      Count ps = Count::of(0), pl = Count::of(0);
      bool have_ps = false, have_pl = false;
      for (std::size_t t = 2; t < toks.size(); ++t) {
        auto eq = toks[t].text.find('=');
        if (eq == std::string::npos)
          parse_fail(line_no, toks[t].col,
                     "expected key=value attribute, got '" + toks[t].text +
                         "'");
        std::string key = toks[t].text.substr(0, eq);
        std::string value = toks[t].text.substr(eq + 1);
        if (key == "pendant_sinks") {
          if (have_ps)
            parse_fail(line_no, toks[t].col, "duplicate attribute " + key);
          ps = parse_count(line_no, toks[t], value);
          have_ps = true;
        } else if (key == "pendant_loops") {
          if (have_pl)
            parse_fail(line_no, toks[t].col, "duplicate attribute " + key);
          pl = parse_count(line_no, toks[t], value);
          have_pl = true;
        } else {
          parse_fail(line_no, toks[t].col, "unknown attribute '" + key + "'");
        }
      }
      try {
        g.add_vertex(toks[1].text, ps, pl);
      } catch (const precondition_error& e) {
        parse_fail(line_no, toks[1].col, e.what());
      }
    } else if (kw == "edge") {
      if (toks.size() != 6 || toks[2].text != ":" || toks[4].text != "->") {
        std::size_t col = toks.size() > 1 ? toks[1].col : line.size() + 1;
        parse_fail(line_no, col, "expected 'edge <name> : <src> -> <dst>'");
      }
      pending.push_back(PendingEdge{line_no, toks[1], toks[3], toks[5]});
    } else {
      parse_fail(line_no, toks[0].col,
                 "unknown directive '" + kw + "' (expected vertex or edge)");
    }
  }
  for (const auto& pe : pending) {
    if (!g.find_vertex(pe.src.text))
      parse_fail(pe.line, pe.src.col, "unknown vertex " + quoted(pe.src.text));
    if (!g.find_vertex(pe.dst.text))
      parse_fail(pe.line, pe.dst.col, "unknown vertex " + quoted(pe.dst.text));
    try {
      g.add_edge(pe.name.text, pe.src.text, pe.dst.text);
    } catch (const precondition_error& e) {
      parse_fail(pe.line, pe.name.col, e.what());
    }
  }
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  for (const auto& v : g.vertices()) {
    out << "vertex " << v.name;
    if (v.pendant_sinks != 0) out << " pendant_sinks=" << v.pendant_sinks.str();
    if (v.pendant_loops != 0) out << " pendant_loops=" << v.pendant_loops.str();
    out << "\n";
  }
  for (const auto& e : g.edges())
    out << "edge " << e.name << " : " << g.vertex(e.src).name << " -> "
        << g.vertex(e.dst).name << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Vertex kinds

VertexKinds vertex_kinds(const Graph& g) {
  VertexKinds kinds;
  for (std::size_t v : vertices_by_name(g)) {
    const auto& vert = g.vertex(v);
    Count out = g.total_out_degree(v);
    std::size_t in = g.explicit_in_degree(v);
    if (out == 0) kinds.sinks.push_back(vert.name);
    if (out.is_omega())
      kinds.infinite_emitters.push_back(vert.name);
    else if (!(out == 0))
      kinds.regular.push_back(vert.name);
    if (out == 0 && in == 0) kinds.isolated.push_back(vert.name);
    if (vert.pendant_sinks != 0)
      kinds.pendant_families.push_back(
          PendantFamily{vert.name, false, vert.pendant_sinks});
    if (vert.pendant_loops != 0)
      kinds.pendant_families.push_back(
          PendantFamily{vert.name, true, vert.pendant_loops});
  }
  return kinds;
}

// ---------------------------------------------------------------------------
// Cycles

namespace {

// Depth-first enumeration of simple cycles whose smallest vertex name is the
// start vertex; each cycle is found in its canonical rotation.
void cycle_dfs(const Graph& g, std::size_t start, std::size_t current,
               std::vector<std::size_t>& path_edges,
               std::vector<bool>& on_path,
               std::set<std::vector<std::string>>& seen_vertex_sets,
               std::vector<Cycle>& out) {
  for (std::size_t e : g.out_edges(current)) {
    std::size_t w = g.edge(e).dst;
    if (w == start) {
      path_edges.push_back(e);
      Cycle c;
      for (std::size_t pe : path_edges) {
        c.edges.push_back(g.edge(pe).name);
        c.vertices.push_back(g.vertex(g.edge(pe).src).name);
      }
      std::vector<std::string> key = c.vertices;
      std::sort(key.begin(), key.end());
      if (seen_vertex_sets.insert(key).second) out.push_back(std::move(c));
      path_edges.pop_back();
      continue;
    }
    if (on_path[w] || g.vertex(w).name <= g.vertex(start).name) continue;
    on_path[w] = true;
    path_edges.push_back(e);
    cycle_dfs(g, start, w, path_edges, on_path, seen_vertex_sets, out);
    path_edges.pop_back();
    on_path[w] = false;
  }
}

}  // namespace

std::vector<Cycle> distinct_cycles(const Graph& g) {
  std::vector<Cycle> cycles;
  std::set<std::vector<std::string>> seen;
  for (std::size_t start : vertices_by_name(g)) {
    std::vector<std::size_t> path_edges;
    std::vector<bool> on_path(g.vertex_count(), false);
    on_path[start] = true;
    cycle_dfs(g, start, start, path_edges, on_path, seen, cycles);
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const Cycle& a, const Cycle& b) { return a.base() < b.base(); });
  return cycles;
}

NoExitReport check_no_exit(const Graph& g) {
  for (std::size_t v : vertices_by_name(g)) {
    if (!g.on_cycle(v)) continue;
    Count out = g.total_out_degree(v);
    if (out == 1) continue;
    NoExitReport rep;
    rep.no_exit = false;
    const auto& vert = g.vertex(v);
    if (vert.pendant_sinks != 0 || vert.pendant_loops != 0) {
      rep.witness = "pendant edges at vertex " + quoted(vert.name) +
                    " exit its cycle";
      return rep;
    }
    // v has >= 2 explicit out-edges.  Pick the smallest-named edge that
    // continues a cycle through v; the smallest other out-edge exits it.
    auto out_idx = g.out_edges(v);
    std::size_t continuing = out_idx.front();
    for (std::size_t e : out_idx)
      if (g.reachable_from(g.edge(e).dst)[v]) {
        continuing = e;
        break;
      }
    for (std::size_t e : out_idx)
      if (e != continuing) {
        rep.witness = "edge " + quoted(g.edge(e).name) +
                      " exits a cycle at vertex " + quoted(vert.name);
        break;
      }
    return rep;
  }
  return NoExitReport{};
}

// ---------------------------------------------------------------------------
// Characteristic-2 vertex condition

namespace {

// Is v on a cycle of length at most 2 (self-loop, or 2-cycle via some w)?
bool on_short_cycle(const Graph& g, std::size_t v) {
  for (const auto& e : g.edges())
    if (e.src == v && e.dst == v) return true;
  for (const auto& e : g.edges()) {
    if (e.src != v || e.dst == v) continue;
    for (const auto& f : g.edges())
      if (f.src == e.dst && f.dst == v) return true;
  }
  return false;
}

// Self-loop edges at vertex w, sorted by name.
std::vector<std::size_t> loops_at(const Graph& g, std::size_t w) {
  std::vector<std::size_t> loops;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (g.edge(e).src == w && g.edge(e).dst == w) loops.push_back(e);
  return loops;
}

}  // namespace

Char2Report check_char2_condition(const Graph& g) {
  for (std::size_t v : vertices_by_name(g)) {
    if (g.total_out_degree(v) == 0) continue;  // sink
    if (on_short_cycle(g, v)) continue;        // on a cycle of length <= 2
    // Branch 3: every explicit out-edge must land on a private-enough sink
    // or loop vertex.  Pendant edges satisfy this by construction: each
    // private sink receives exactly its incoming edge, each private loop
    // vertex exactly the incoming edge and its loop.
    for (std::size_t e : g.out_edges(v)) {
      std::size_t w = g.edge(e).dst;
      auto fiber = g.in_edges(w);  // pendant edges never end at named vertices
      bool ok = false;
      if (g.is_sink(w)) {
        ok = fiber.size() == 1 && fiber[0] == e;
      } else {
        auto loops = loops_at(g, w);
        if (loops.size() == 1) {
          std::size_t f = loops[0];
          ok = fiber.size() == 2 &&
               ((fiber[0] == e && fiber[1] == f) ||
                (fiber[0] == f && fiber[1] == e));
        }
      }
      if (!ok) {
        Char2Report rep;
        rep.holds = false;
        rep.failing_vertex = g.vertex(v).name;
        rep.detail = "edge " + quoted(g.edge(e).name) + " from " +
                     quoted(g.vertex(v).name) + ": range " +
                     quoted(g.vertex(w).name) +
                     " is neither a sink received only by this edge nor on a "
                     "single loop with in-fiber exactly {edge, loop}";
        return rep;
      }
    }
  }
  return Char2Report{};
}

IsoLoopsReport check_isolated_and_loops(const Graph& g) {
  for (std::size_t v : vertices_by_name(g)) {
    const auto& vert = g.vertex(v);
    bool pendant_free = vert.pendant_sinks == 0 && vert.pendant_loops == 0;
    auto out = g.out_edges(v);
    auto in = g.in_edges(v);
    if (pendant_free && out.empty() && in.empty()) continue;  // isolated
    bool loop_vertex = pendant_free && out.size() == 1 && in.size() == 1 &&
                       out[0] == in[0] && g.edge(out[0]).src == v &&
                       g.edge(out[0]).dst == v;
    if (loop_vertex) continue;
    IsoLoopsReport rep;
    rep.holds = false;
    rep.witness = vert.name;
    return rep;
  }
  return IsoLoopsReport{};
}

// ---------------------------------------------------------------------------
// Path counts

Count count_paths_ending_at(const Graph& g, std::size_t v) {
  if (v >= g.vertex_count())
    throw precondition_error("vertex index out of range");
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    if (g.on_cycle(u) && g.reachable_from(u)[v]) return Count::inf();
  // No cycle reaches v: the predecessor subgraph is acyclic.
  std::vector<std::optional<std::uint64_t>> memo(g.vertex_count());
  auto paths = [&](auto&& self, std::size_t u) -> std::uint64_t {
    if (memo[u]) return *memo[u];
    std::uint64_t total = 1;  // the length-0 path
    for (std::size_t e : g.in_edges(u))
      total = checked_add_u64(total, self(self, g.edge(e).src));
    memo[u] = total;
    return total;
  };
  return Count::of(paths(paths, v));
}

Count count_paths_to_sink(const Graph& g, const std::string& vertex) {
  auto v = g.find_vertex(vertex);
  if (!v) throw precondition_error("unknown vertex " + quoted(vertex));
  if (!g.is_sink(*v))
    throw precondition_error("vertex " + quoted(vertex) + " is not a sink");
  return count_paths_ending_at(g, *v);
}

Count count_paths_to_cycle(const Graph& g, const Cycle& c) {
  // c must be one of this graph's cycles, in canonical rotation.
  bool found = false;
  for (const auto& d : distinct_cycles(g))
    if (d.edges == c.edges && d.vertices == c.vertices) {
      found = true;
      break;
    }
  if (!found)
    throw precondition_error("not a cycle of this graph (expected a member of "
                             "distinct_cycles in canonical rotation)");

  std::vector<bool> in_c0(g.vertex_count(), false);
  for (const auto& name : c.vertices) in_c0[*g.find_vertex(name)] = true;
  std::set<std::string> c_edges(c.edges.begin(), c.edges.end());

  // reaches_c0[x]: some vertex of the cycle is reachable from x.
  std::vector<bool> reaches_c0(g.vertex_count(), false);
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    auto r = g.reachable_from(x);
    for (std::size_t w = 0; w < g.vertex_count(); ++w)
      if (in_c0[w] && r[w]) {
        reaches_c0[x] = true;
        break;
      }
  }

  // m(c) is infinite iff some cycle other than c reaches c: equivalently,
  // some edge outside c's edge set lies on a cycle (its range reaches its
  // source) that reaches c.
  for (const auto& e : g.edges()) {
    if (c_edges.count(e.name)) continue;
    if (reaches_c0[e.src] && g.reachable_from(e.dst)[e.src])
      return Count::inf();
  }

  // Finite case: every path ending at the base splits uniquely into a path
  // avoiding c's edges that ends at some cycle vertex u, followed by the arc
  // of c from u to the base (length < |c|).  Summing the avoiding-path
  // counts over the cycle's vertices counts them all, for any base.
  Graph reduced;
  for (const auto& v : g.vertices())
    reduced.add_vertex(v.name, v.pendant_sinks, v.pendant_loops);
  for (const auto& e : g.edges())
    if (!c_edges.count(e.name))
      reduced.add_edge(e.name, g.vertex(e.src).name, g.vertex(e.dst).name);

  Count total = Count::of(0);
  for (const auto& name : c.vertices) {
    Count ext = count_paths_ending_at(reduced, *reduced.find_vertex(name));
    if (ext.is_omega())
      throw internal_error(
          "cycle path count: residual cycle after removing the cycle edges");
    total = total + ext;
  }
  return total;
}

std::vector<std::string> emitter_path_violations(const Graph& g) {
  std::vector<std::string> violations;
  for (std::size_t e : edges_by_name(g)) {
    std::size_t w = g.edge(e).dst;
    if (g.is_infinite_emitter(w))
      violations.push_back("edge " + quoted(g.edge(e).name) +
                           " ends at infinite emitter " +
                           quoted(g.vertex(w).name));
  }
  return violations;
}

}  // namespace lienil
