#include "lienil/lpa.hpp"

#include <optional>
#include <sstream>

namespace lienil {

namespace {

// Resolves an edge name, rejecting unknown names and vertex names.
std::size_t require_edge(const Graph& g, const std::string& name) {
  auto idx = g.find_edge(name);
  if (!idx) {
    throw precondition_error("path refers to unknown edge '" + name + "'");
  }
  return *idx;
}

void require_vertex(const Graph& g, const std::string& name) {
  if (!g.find_vertex(name)) {
    throw precondition_error("unknown vertex '" + name + "'");
  }
}

std::string path_str(const LpaPath& p) {
  if (p.edges.empty()) return p.vertex;
  std::string out;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) out += '.';
    out += p.edges[i];
  }
  return out;
}

// If b = a · t for a path t, returns t (which starts at r(a)); otherwise
// nothing.  A vertex path a is a prefix of b exactly when s(b) is that
// vertex.
std::optional<LpaPath> strip_prefix(const Graph& g, const LpaPath& a,
                                    const LpaPath& b) {
  if (a.edges.size() > b.edges.size()) return std::nullopt;
  if (a.edges.empty()) {
    if (path_source(g, b) != a.vertex) return std::nullopt;
    return b;
  }
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    if (a.edges[i] != b.edges[i]) return std::nullopt;
  }
  LpaPath t;
  t.edges.assign(b.edges.begin() + static_cast<std::ptrdiff_t>(a.edges.size()),
                 b.edges.end());
  t.vertex = b.vertex;  // r(t) = r(b); for empty t this is r(a) = r(b)
  return t;
}

// p · t, assuming s(t) = r(p) (guaranteed by strip_prefix results).
LpaPath concat(const LpaPath& p, const LpaPath& t) {
  LpaPath out;
  out.edges = p.edges;
  out.edges.insert(out.edges.end(), t.edges.begin(), t.edges.end());
  out.vertex = t.vertex;
  return out;
}

void validate_path(const Graph& g, const LpaPath& p) {
  if (p.edges.empty()) {
    require_vertex(g, p.vertex);
    return;
  }
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    std::size_t e = require_edge(g, p.edges[i]);
    if (i + 1 < p.edges.size()) {
      std::size_t f = require_edge(g, p.edges[i + 1]);
      if (g.edge(e).dst != g.edge(f).src) {
        throw precondition_error("edges '" + p.edges[i] + "' and '" +
                                 p.edges[i + 1] + "' are not consecutive");
      }
    } else if (g.vertex(g.edge(e).dst).name != p.vertex) {
      throw precondition_error("path range mismatch: path ends at '" +
                               g.vertex(g.edge(e).dst).name +
                               "', not at '" + p.vertex + "'");
    }
  }
}

}  // namespace

LpaPath vertex_path(const Graph& g, const std::string& vertex) {
  require_vertex(g, vertex);
  return LpaPath{{}, vertex};
}

LpaPath edge_path(const Graph& g, const std::vector<std::string>& edges) {
  if (edges.empty()) {
    throw precondition_error(
        "edge_path needs at least one edge; use vertex_path for length 0");
  }
  LpaPath p;
  p.edges = edges;
  std::size_t last = require_edge(g, edges.back());
  p.vertex = g.vertex(g.edge(last).dst).name;
  validate_path(g, p);
  return p;
}

std::string path_source(const Graph& g, const LpaPath& p) {
  if (p.edges.empty()) return p.vertex;
  std::size_t e = require_edge(g, p.edges.front());
  return g.vertex(g.edge(e).src).name;
}

LpaMonomial make_monomial(const Graph& g, LpaPath p, LpaPath q) {
  LpaMonomial m{std::move(p), std::move(q)};
  validate_monomial(g, m);
  return m;
}

LpaMonomial vertex_monomial(const Graph& g, const std::string& vertex) {
  LpaPath v = vertex_path(g, vertex);
  return LpaMonomial{v, v};
}

void validate_monomial(const Graph& g, const LpaMonomial& m) {
  validate_path(g, m.p);
  validate_path(g, m.q);
  if (m.p.vertex != m.q.vertex) {
    throw precondition_error("monomial ranges differ: r(p) = '" +
                             m.p.vertex + "' but r(q) = '" + m.q.vertex +
                             "'");
  }
}

LpaElement LpaElement::monomial(FieldTag field, const LpaMonomial& m) {
  LpaElement e(field);
  e.add_term(m, Scalar::one(field));
  return e;
}

void LpaElement::add_term(const LpaMonomial& m, const Scalar& c) {
  if (c.field() != field_) {
    throw precondition_error("scalar field " + c.field().str() +
                             " does not match element field " + field_.str());
  }
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LpaElement LpaElement::operator+(const LpaElement& o) const {
  if (field_ != o.field_) {
    throw precondition_error("field mismatch: " + field_.str() + " vs " +
                             o.field_.str());
  }
  LpaElement out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

LpaElement LpaElement::operator-(const LpaElement& o) const {
  return *this + (-o);
}

LpaElement LpaElement::operator-() const {
  LpaElement out(field_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

LpaElement LpaElement::scaled(const Scalar& c) const {
  if (c.field() != field_) {
    throw precondition_error("scalar field " + c.field().str() +
                             " does not match element field " + field_.str());
  }
  LpaElement out(field_);
  if (c.is_zero()) return out;
  for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
  return out;
}

std::string LpaElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.str() << '*' << path_str(m.p);
    if (!m.q.edges.empty()) out << '(' << path_str(m.q) << ")^*";
  }
  return out.str();
}

LpaElement mono_mul(const Graph& g, const LpaMonomial& a, const LpaMonomial& b,
                    FieldTag field) {
  validate_monomial(g, a);
  validate_monomial(g, b);
  // (p1 q1*)(p2 q2*): q1* p2 collapses by prefix cancellation from
  // e*f = delta_{ef} r(e).
  if (auto t = strip_prefix(g, a.q, b.p)) {
    // p2 = q1 · t, so the product is (p1 · t) q2*.
    return LpaElement::monomial(field, LpaMonomial{concat(a.p, *t), b.q});
  }
  if (auto t = strip_prefix(g, b.p, a.q)) {
    // q1 = p2 · t', so the product is p1 (q2 · t')*.
    return LpaElement::monomial(field, LpaMonomial{a.p, concat(b.q, *t)});
  }
  return LpaElement::zero(field);
}

LpaElement element_mul(const Graph& g, const LpaElement& x,
                       const LpaElement& y) {
  if (x.field() != y.field()) {
    throw precondition_error("field mismatch: " + x.field().str() + " vs " +
                             y.field().str());
  }
  LpaElement out(x.field());
  for (const auto& [ma, ca] : x.terms()) {
    for (const auto& [mb, cb] : y.terms()) {
      LpaElement prod = mono_mul(g, ma, mb, x.field());
      for (const auto& [m, c] : prod.terms()) out.add_term(m, ca * cb * c);
    }
  }
  return out;
}

LpaElement commutator(const Graph& g, const LpaElement& x,
                      const LpaElement& y) {
  return element_mul(g, x, y) - element_mul(g, y, x);
}

MatrixUnitsVerdict verify_matrix_units(
    const Graph& g,
    const std::map<std::pair<std::size_t, std::size_t>, LpaElement>& units,
    std::size_t n) {
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (!units.count({i, j})) {
        throw precondition_error("missing unit (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
      }
    }
  }
  MatrixUnitsVerdict verdict;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const LpaElement& left = units.at({i, j});
      for (std::size_t p = 1; p <= n; ++p) {
        for (std::size_t q = 1; q <= n; ++q) {
          const LpaElement& right = units.at({p, q});
          LpaElement got = element_mul(g, left, right);
          LpaElement want = j == p ? units.at({i, q})
                                   : LpaElement::zero(left.field());
          if (got != want) {
            verdict.ok = false;
            verdict.failing = {i, j, p, q};
            std::ostringstream detail;
            detail << "E(" << i << ',' << j << ") * E(" << p << ',' << q
                   << ") = " << got.str() << ", expected " << want.str();
            verdict.detail = detail.str();
            return verdict;
          }
        }
      }
    }
  }
  return verdict;
}

EmbeddingKind embedding_kind_from_string(const std::string& name) {
  if (name == "lemma33") return EmbeddingKind::lemma33;
  if (name == "case1") return EmbeddingKind::case1;
  if (name == "case2") return EmbeddingKind::case2;
  throw precondition_error("unknown embedding '" + name +
                           "' (expected lemma33, case1, or case2)");
}

std::string embedding_kind_str(EmbeddingKind kind) {
  switch (kind) {
    case EmbeddingKind::lemma33: return "lemma33";
    case EmbeddingKind::case1: return "case1";
    case EmbeddingKind::case2: return "case2";
  }
  throw internal_error("unhandled embedding kind");
}

Embedding embedding_fixture(EmbeddingKind kind, FieldTag field) {
  Embedding emb;
  emb.n = 3;
  Graph& g = emb.graph;
  auto unit = [&](std::size_t i, std::size_t j, const LpaPath& p,
                  const LpaPath& q) {
    emb.units.emplace(std::make_pair(i, j),
                      LpaElement::monomial(field, make_monomial(g, p, q)));
  };
  switch (kind) {
    case EmbeddingKind::lemma33: {
      // Loop c at v with exit f : v -> w; unit (i,j) is (c^i f)(c^j f)*.
      g.add_vertex("v");
      g.add_vertex("w");
      g.add_edge("c", "v", "v");
      g.add_edge("f", "v", "w");
      auto cpow_f = [&](std::size_t k) {
        std::vector<std::string> edges(k, "c");
        edges.push_back("f");
        return edge_path(g, edges);
      };
      for (std::size_t i = 1; i <= 3; ++i) {
        for (std::size_t j = 1; j <= 3; ++j) {
          unit(i, j, cpow_f(i), cpow_f(j));
        }
      }
      break;
    }
    case EmbeddingKind::case1: {
      // Path u -f-> w -e-> v.
      g.add_vertex("u");
      g.add_vertex("w");
      g.add_vertex("v");
      g.add_edge("f", "u", "w");
      g.add_edge("e", "w", "v");
      LpaPath v = vertex_path(g, "v");
      LpaPath e = edge_path(g, {"e"});
      LpaPath fe = edge_path(g, {"f", "e"});
      unit(1, 1, fe, fe);  // f e e* f*
      unit(2, 2, e, e);    // e e*
      unit(3, 3, v, v);    // v
      unit(1, 2, fe, e);   // f e e*
      unit(2, 1, e, fe);   // e e* f*
      unit(2, 3, e, v);    // e
      unit(3, 2, v, e);    // e*
      unit(1, 3, fe, v);   // f e
      unit(3, 1, v, fe);   // e* f*
      break;
    }
    case EmbeddingKind::case2: {
      // Two edges converging on v: e : u -> v and f : w -> v.
      g.add_vertex("u");
      g.add_vertex("w");
      g.add_vertex("v");
      g.add_edge("e", "u", "v");
      g.add_edge("f", "w", "v");
      LpaPath v = vertex_path(g, "v");
      LpaPath e = edge_path(g, {"e"});
      LpaPath f = edge_path(g, {"f"});
      unit(1, 1, e, e);  // e e*
      unit(2, 2, f, f);  // f f*
      unit(3, 3, v, v);  // v
      unit(1, 2, e, f);  // e f*
      unit(2, 1, f, e);  // f e*
      unit(1, 3, e, v);  // e
      unit(3, 1, v, e);  // e*
      unit(2, 3, f, v);  // f
      unit(3, 2, v, f);  // f*
      break;
    }
  }
  return emb;
}

}  // namespace lienil
