#pragma once

// Exact arithmetic with pq*-monomials of a Leavitt path algebra L_K(E).
//
// L_K(E) is spanned by monomials p q* where p, q are paths of E with
// r(p) = r(q); a vertex is a length-0 path and v* = v.  Products of
// monomials follow by prefix cancellation from the relation e*f = δ_{ef}
// r(e):
//     (p q*)(r s*) = (p t) s*    if r = q·t,
//                  = p (s t')*   if q = r·t',
//                  = 0           otherwise,
// so a product of two monomials is again a monomial or zero.  Elements are
// finite K-linear combinations of monomials.  Distinct monomials are NOT
// assumed linearly independent (the relation v = Σ e e* at regular vertices
// creates dependencies); every check in this module is a multiplication-
// table computation, which is independence-free.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "lienil/field.hpp"
#include "lienil/graph.hpp"

namespace lienil {

// A path: consecutive edges, or a single vertex when edges is empty.
// `vertex` always holds the range r(path).
struct LpaPath {
  std::vector<std::string> edges;
  std::string vertex;

  bool operator==(const LpaPath& o) const {
    return edges == o.edges && vertex == o.vertex;
  }
  bool operator<(const LpaPath& o) const {
    return edges != o.edges ? edges < o.edges : vertex < o.vertex;
  }
};

// The length-0 path at a named vertex.
LpaPath vertex_path(const Graph& g, const std::string& vertex);
// A path from consecutive edge names (errors when edges are unknown, the
// list is empty, or consecutive edges do not meet).
LpaPath edge_path(const Graph& g, const std::vector<std::string>& edges);
// Source vertex s(path).
std::string path_source(const Graph& g, const LpaPath& p);

// p q* with r(p) = r(q).  The vertex monomial v is (v, v), since v* = v.
struct LpaMonomial {
  LpaPath p, q;

  bool operator==(const LpaMonomial& o) const { return p == o.p && q == o.q; }
  bool operator<(const LpaMonomial& o) const {
    return !(p == o.p) ? p < o.p : q < o.q;
  }
};

LpaMonomial make_monomial(const Graph& g, LpaPath p, LpaPath q);
LpaMonomial vertex_monomial(const Graph& g, const std::string& vertex);
// Validates paths and the shared range; used by every monomial operation.
void validate_monomial(const Graph& g, const LpaMonomial& m);

// A finite K-linear combination of monomials; zero coefficients are never
// stored.
class LpaElement {
 public:
  explicit LpaElement(FieldTag field) : field_(field) {}
  static LpaElement zero(FieldTag field) { return LpaElement(field); }
  static LpaElement monomial(FieldTag field, const LpaMonomial& m);

  FieldTag field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<LpaMonomial, Scalar>& terms() const { return terms_; }

  // Adds c * m, merging and dropping zeros.
  void add_term(const LpaMonomial& m, const Scalar& c);

  LpaElement operator+(const LpaElement& o) const;
  LpaElement operator-(const LpaElement& o) const;
  LpaElement operator-() const;
  LpaElement scaled(const Scalar& c) const;
  bool operator==(const LpaElement& o) const {
    return field_ == o.field_ && terms_ == o.terms_;
  }
  bool operator!=(const LpaElement& o) const { return !(*this == o); }

  // "k1*p1(q1)^* + ...": paths print as dot-joined edge names (bare vertex
  // name for length 0); the (q)^* factor is omitted for vertex q.
  std::string str() const;

 private:
  FieldTag field_;
  std::map<LpaMonomial, Scalar> terms_;
};

// Product of two monomials by prefix cancellation: one monomial or zero.
LpaElement mono_mul(const Graph& g, const LpaMonomial& a, const LpaMonomial& b,
                    FieldTag field);
// Bilinear extension of mono_mul; fields must match.
LpaElement element_mul(const Graph& g, const LpaElement& x,
                       const LpaElement& y);
// element_mul(x, y) - element_mul(y, x).
LpaElement commutator(const Graph& g, const LpaElement& x,
                      const LpaElement& y);

// Checks units(i,j) · units(p,q) = δ_{jp} units(i,q) for all 1 <= i,j,p,q
// <= n; a pass means the span multiplies exactly as the matrix algebra
// M_n(K).
struct MatrixUnitsVerdict {
  bool ok = true;
  std::array<std::size_t, 4> failing{{0, 0, 0, 0}};  // (i, j, p, q), 1-based
  std::string detail;
};
MatrixUnitsVerdict verify_matrix_units(
    const Graph& g,
    const std::map<std::pair<std::size_t, std::size_t>, LpaElement>& units,
    std::size_t n);

// Built-in 3x3 matrix-unit embeddings (claim-catalog ids):
//   lemma33: loop c at v with exit f : v -> w; units (c^i f)(c^j f)* for
//            1 <= i,j <= 3;
//   case1:   path u -f-> w -e-> v; units f e e* f*, e e*, v, f e e*,
//            e e* f*, e, e*, f e, e* f*;
//   case2:   edges e : u -> v and f : w -> v; units e e*, f f*, v, e f*,
//            f e*, e, e*, f, f*.
// Each passes verify_matrix_units over any field.
enum class EmbeddingKind { lemma33, case1, case2 };
EmbeddingKind embedding_kind_from_string(const std::string& name);
std::string embedding_kind_str(EmbeddingKind kind);

struct Embedding {
  Graph graph;
  std::size_t n = 3;
  std::map<std::pair<std::size_t, std::size_t>, LpaElement> units;
};
Embedding embedding_fixture(EmbeddingKind kind, FieldTag field);

}  // namespace lienil
