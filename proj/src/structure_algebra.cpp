#include "lienil/structure_algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

namespace lienil {

std::string flavor_str(AlgebraFlavor f) {
  switch (f) {
    case AlgebraFlavor::plain: return "plain";
    case AlgebraFlavor::verified_novikov: return "verified_novikov";
    case AlgebraFlavor::verified_associative: return "verified_associative";
  }
  return "?";
}

std::vector<std::size_t> SeriesReport::dims() const {
  std::vector<std::size_t> d;
  d.reserve(chain.size());
  for (const auto& s : chain) d.push_back(s.dim());
  return d;
}

std::size_t max_series_steps(std::size_t dim) {
  if (const char* env = std::getenv("LIENIL_MAX_STEPS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (env[0] != '\0' && end && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
    throw precondition_error("LIENIL_MAX_STEPS must be a positive integer");
  }
  return 2 * dim + 2;
}

namespace {

// ---- raw field kernels ----------------------------------------------------

struct FpOps {
  std::uint64_t p;
  using value = std::uint64_t;
  value zero() const { return 0; }
  value one() const { return 1 % p; }
  bool is_zero(const value& a) const { return a == 0; }
  value add(const value& a, const value& b) const { return fp_add(a, b, p); }
  value sub(const value& a, const value& b) const { return fp_sub(a, b, p); }
  value mul(const value& a, const value& b) const { return fp_mul(a, b, p); }
  value inv(const value& a) const { return fp_inv(a, p); }
  value from_scalar(const Scalar& s) const { return s.residue(); }
  Scalar to_scalar(const value& a) const {
    return Scalar::of_residue(a, FieldTag{p});
  }
};

struct QOps {
  using value = Rational;
  value zero() const { return Rational(0); }
  value one() const { return Rational(1); }
  bool is_zero(const value& a) const { return a.is_zero(); }
  value add(const value& a, const value& b) const { return a + b; }
  value sub(const value& a, const value& b) const { return a - b; }
  value mul(const value& a, const value& b) const { return a * b; }
  value inv(const value& a) const { return 1 / a; }
  value from_scalar(const Scalar& s) const { return s.rational(); }
  Scalar to_scalar(const value& a) const { return Scalar::of_rational(a); }
};

// Row-echelon accumulator over raw field values; mirrors Subspace's RREF
// invariants (unit pivots, cleared pivot columns, rows sorted by pivot).
template <class Ops>
struct RawEchelon {
  using value = typename Ops::value;
  using Row = std::vector<value>;

  Ops ops;
  std::size_t n;
  std::vector<Row> rows;
  std::vector<std::size_t> pivots;

  RawEchelon(Ops o, std::size_t ambient) : ops(o), n(ambient) {}

  std::size_t rank() const { return rows.size(); }

  // Reduces v against the basis; if a new pivot survives, stores the
  // normalized row and returns a copy of it.
  std::optional<Row> insert(Row v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      value c = v[pivots[r]];
      if (ops.is_zero(c)) continue;
      const Row& row = rows[r];
      for (std::size_t j = pivots[r]; j < n; ++j)
        if (!ops.is_zero(row[j])) v[j] = ops.sub(v[j], ops.mul(c, row[j]));
    }
    std::size_t pivot = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (!ops.is_zero(v[j])) {
        pivot = j;
        break;
      }
    }
    if (pivot == n) return std::nullopt;
    value f = ops.inv(v[pivot]);
    for (std::size_t j = pivot; j < n; ++j)
      if (!ops.is_zero(v[j])) v[j] = ops.mul(v[j], f);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      value c = rows[r][pivot];
      if (ops.is_zero(c)) continue;
      Row& row = rows[r];
      for (std::size_t j = pivot; j < n; ++j)
        if (!ops.is_zero(v[j])) row[j] = ops.sub(row[j], ops.mul(c, v[j]));
    }
    auto pos = std::upper_bound(pivots.begin(), pivots.end(), pivot);
    std::size_t at = static_cast<std::size_t>(pos - pivots.begin());
    pivots.insert(pos, pivot);
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(at), v);
    return v;
  }
};

template <class Ops>
struct Engine {
  using value = typename Ops::value;
  using Row = std::vector<value>;

  Ops ops;
  std::size_t d;
  const value* table;  // dense d^3, index (i*d + j)*d + k

  Row to_raw(const Vec& v) const {
    Row r;
    r.reserve(v.size());
    for (const auto& s : v) r.push_back(ops.from_scalar(s));
    return r;
  }

  Vec to_vec(const Row& r) const {
    Vec v;
    v.reserve(r.size());
    for (const auto& x : r) v.push_back(ops.to_scalar(x));
    return v;
  }

  std::vector<Row> to_raw_rows(const Subspace& s) const {
    std::vector<Row> out;
    out.reserve(s.dim());
    for (const auto& row : s.basis()) out.push_back(to_raw(row));
    return out;
  }

  Subspace to_subspace(const RawEchelon<Ops>& e, FieldTag tag) const {
    // already RREF, so Subspace::span re-inserts without extra elimination
    std::vector<Vec> rows;
    rows.reserve(e.rows.size());
    for (const auto& r : e.rows) rows.push_back(to_vec(r));
    return Subspace::span(d, tag, rows);
  }

  void multiply_into(const Row& a, const Row& b, Row& out) const {
    out.assign(d, ops.zero());
    for (std::size_t i = 0; i < d; ++i) {
      if (ops.is_zero(a[i])) continue;
      const value* plane = table + i * d * d;
      for (std::size_t j = 0; j < d; ++j) {
        if (ops.is_zero(b[j])) continue;
        value coef = ops.mul(a[i], b[j]);
        const value* slice = plane + j * d;
        for (std::size_t k = 0; k < d; ++k)
          if (!ops.is_zero(slice[k]))
            out[k] = ops.add(out[k], ops.mul(coef, slice[k]));
      }
    }
  }

  Row multiply(const Row& a, const Row& b) const {
    Row out;
    multiply_into(a, b, out);
    return out;
  }

  Row bracket(const Row& a, const Row& b) const {
    Row ab = multiply(a, b);
    Row ba = multiply(b, a);
    for (std::size_t k = 0; k < d; ++k) ab[k] = ops.sub(ab[k], ba[k]);
    return ab;
  }

  // e_i * f
  Row mult_unit_left(std::size_t i, const Row& f) const {
    Row out(d, ops.zero());
    const value* plane = table + i * d * d;
    for (std::size_t j = 0; j < d; ++j) {
      if (ops.is_zero(f[j])) continue;
      const value* slice = plane + j * d;
      for (std::size_t k = 0; k < d; ++k)
        if (!ops.is_zero(slice[k]))
          out[k] = ops.add(out[k], ops.mul(f[j], slice[k]));
    }
    return out;
  }

  // f * e_i
  Row mult_unit_right(const Row& f, std::size_t i) const {
    Row out(d, ops.zero());
    for (std::size_t j = 0; j < d; ++j) {
      if (ops.is_zero(f[j])) continue;
      const value* slice = table + (j * d + i) * d;
      for (std::size_t k = 0; k < d; ++k)
        if (!ops.is_zero(slice[k]))
          out[k] = ops.add(out[k], ops.mul(f[j], slice[k]));
    }
    return out;
  }

  // e_i * e_j as a row
  Row unit_product(std::size_t i, std::size_t j) const {
    const value* slice = table + (i * d + j) * d;
    return Row(slice, slice + d);
  }

  Row unit_bracket(std::size_t i, std::size_t j) const {
    Row r = unit_product(i, j);
    Row s = unit_product(j, i);
    for (std::size_t k = 0; k < d; ++k) r[k] = ops.sub(r[k], s[k]);
    return r;
  }

  bool rows_equal(const Row& a, const Row& b) const {
    for (std::size_t k = 0; k < d; ++k)
      if (!ops.is_zero(ops.sub(a[k], b[k]))) return false;
    return true;
  }

  bool row_is_zero(const Row& a) const {
    for (std::size_t k = 0; k < d; ++k)
      if (!ops.is_zero(a[k])) return false;
    return true;
  }

  // span{ a*b } or span{ [a,b] } over basis pairs, with early exit once the
  // span is the whole ambient space.
  RawEchelon<Ops> pair_span(const std::vector<Row>& A,
                            const std::vector<Row>& B,
                            bool use_bracket) const {
    RawEchelon<Ops> ech(ops, d);
    Row scratch;
    for (const auto& a : A) {
      for (const auto& b : B) {
        if (use_bracket) {
          ech.insert(bracket(a, b));
        } else {
          multiply_into(a, b, scratch);
          ech.insert(scratch);
        }
        if (ech.rank() == d) return ech;
      }
    }
    return ech;
  }
};

}  // namespace

// ---- StructureAlgebra ------------------------------------------------------

StructureAlgebra::StructureAlgebra(std::size_t dim, FieldTag tag)
    : dim_(dim), tag_(tag) {
  if (dim == 0) throw precondition_error("algebra dimension must be positive");
  std::size_t total = dim * dim * dim;
  if (tag.is_rational())
    q_table_.assign(total, Rational(0));
  else
    fp_table_.assign(total, 0);
}

void StructureAlgebra::check_index(std::size_t i, std::size_t j,
                                   std::size_t k) const {
  if (i >= dim_ || j >= dim_ || k >= dim_)
    throw precondition_error("structure-constant index out of range");
}

Scalar StructureAlgebra::entry(std::size_t i, std::size_t j,
                               std::size_t k) const {
  check_index(i, j, k);
  if (tag_.is_rational()) return Scalar::of_rational(q_table_[idx(i, j, k)]);
  return Scalar::of_residue(fp_table_[idx(i, j, k)], tag_);
}

void StructureAlgebra::set_entry(std::size_t i, std::size_t j, std::size_t k,
                                 const Scalar& c) {
  check_index(i, j, k);
  if (!(c.field() == tag_))
    throw precondition_error("scalar field mismatch in set_entry");
  if (tag_.is_rational())
    q_table_[idx(i, j, k)] = c.rational();
  else
    fp_table_[idx(i, j, k)] = c.residue();
  flavor_ = AlgebraFlavor::plain;
}

bool operator==(const StructureAlgebra& a, const StructureAlgebra& b) {
  return a.dim_ == b.dim_ && a.tag_ == b.tag_ && a.fp_table_ == b.fp_table_ &&
         a.q_table_ == b.q_table_;
}

// Friend shim giving the raw engine access to the private tables.
template <class Ops, class F>
struct EngineAccess {
  static auto run(const StructureAlgebra& alg, F&& f) {
    if (alg.field().is_rational()) {
      Engine<QOps> e{QOps{}, alg.dim(), alg.q_table_.data()};
      return f(e);
    }
    Engine<FpOps> e{FpOps{alg.field().p}, alg.dim(), alg.fp_table_.data()};
    return f(e);
  }
};

namespace {

template <class F>
auto engine_run(const StructureAlgebra& alg, F&& f) {
  return EngineAccess<void, F>::run(alg, std::forward<F>(f));
}

void require_space(const StructureAlgebra& alg, const Subspace& s,
                   const char* what) {
  if (s.ambient_dim() != alg.dim() || !(s.field() == alg.field()))
    throw precondition_error(
        std::string("subspace incompatible with algebra in ") + what);
}

}  // namespace

Vec StructureAlgebra::multiply(const Vec& a, const Vec& b) const {
  if (a.size() != dim_ || b.size() != dim_)
    throw precondition_error("multiply: coordinate length mismatch");
  return engine_run(*this, [&](auto e) {
    return e.to_vec(e.multiply(e.to_raw(a), e.to_raw(b)));
  });
}

Vec StructureAlgebra::bracket(const Vec& a, const Vec& b) const {
  if (a.size() != dim_ || b.size() != dim_)
    throw precondition_error("bracket: coordinate length mismatch");
  return engine_run(*this, [&](auto e) {
    return e.to_vec(e.bracket(e.to_raw(a), e.to_raw(b)));
  });
}

Subspace StructureAlgebra::product_space(const Subspace& A,
                                         const Subspace& B) const {
  require_space(*this, A, "product_space");
  require_space(*this, B, "product_space");
  return engine_run(*this, [&](auto e) {
    auto ech = e.pair_span(e.to_raw_rows(A), e.to_raw_rows(B), false);
    return e.to_subspace(ech, tag_);
  });
}

Subspace StructureAlgebra::bracket_space(const Subspace& A,
                                         const Subspace& B) const {
  require_space(*this, A, "bracket_space");
  require_space(*this, B, "bracket_space");
  return engine_run(*this, [&](auto e) {
    auto ech = e.pair_span(e.to_raw_rows(A), e.to_raw_rows(B), true);
    return e.to_subspace(ech, tag_);
  });
}

Subspace StructureAlgebra::ideal_closure(const Subspace& S) const {
  require_space(*this, S, "ideal_closure");
  return engine_run(*this, [&](auto e) {
    using Row = typename decltype(e)::Row;
    RawEchelon ech(e.ops, dim_);
    std::vector<Row> frontier;
    for (const auto& r : e.to_raw_rows(S))
      if (auto added = ech.insert(r)) frontier.push_back(std::move(*added));
    while (!frontier.empty() && ech.rank() < dim_) {
      std::vector<Row> next;
      for (const auto& f : frontier) {
        for (std::size_t i = 0; i < dim_; ++i) {
          if (auto added = ech.insert(e.mult_unit_left(i, f)))
            next.push_back(std::move(*added));
          if (ech.rank() == dim_) break;
          if (auto added = ech.insert(e.mult_unit_right(f, i)))
            next.push_back(std::move(*added));
          if (ech.rank() == dim_) break;
        }
        if (ech.rank() == dim_) break;
      }
      frontier = std::move(next);
    }
    return e.to_subspace(ech, tag_);
  });
}

// ---- identity verification -------------------------------------------------

VerifyResult StructureAlgebra::verify_novikov() const {
  return engine_run(*this, [&](auto e) {
    using Row = typename decltype(e)::Row;
    VerifyResult res;
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        Row eij = e.unit_product(i, j);
        Row eji = e.unit_product(j, i);
        for (std::size_t k = 0; k < dim_; ++k) {
          // left symmetry: x(yz) - (xy)z = y(xz) - (yx)z on (e_i, e_j, e_k)
          Row lhs = e.mult_unit_left(i, e.unit_product(j, k));
          Row t = e.mult_unit_right(eij, k);
          for (std::size_t c = 0; c < dim_; ++c)
            lhs[c] = e.ops.sub(lhs[c], t[c]);
          Row rhs = e.mult_unit_left(j, e.unit_product(i, k));
          t = e.mult_unit_right(eji, k);
          for (std::size_t c = 0; c < dim_; ++c)
            rhs[c] = e.ops.sub(rhs[c], t[c]);
          if (!e.rows_equal(lhs, rhs)) {
            res.ok = false;
            res.identity = "left symmetry";
            res.triple = {i, j, k};
            res.detail = "x(yz)-(xy)z = " + vec_str(e.to_vec(lhs)) +
                         " but y(xz)-(yx)z = " + vec_str(e.to_vec(rhs));
            return res;
          }
          // right commutativity: (xy)z = (xz)y
          Row a = e.mult_unit_right(eij, k);
          Row b = e.mult_unit_right(e.unit_product(i, k), j);
          if (!e.rows_equal(a, b)) {
            res.ok = false;
            res.identity = "right commutativity";
            res.triple = {i, j, k};
            res.detail = "(xy)z = " + vec_str(e.to_vec(a)) +
                         " but (xz)y = " + vec_str(e.to_vec(b));
            return res;
          }
        }
      }
    }
    return res;
  });
}

VerifyResult StructureAlgebra::verify_associative() const {
  return engine_run(*this, [&](auto e) {
    VerifyResult res;
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        auto eij = e.unit_product(i, j);
        for (std::size_t k = 0; k < dim_; ++k) {
          auto lhs = e.mult_unit_right(eij, k);
          auto rhs = e.mult_unit_left(i, e.unit_product(j, k));
          if (!e.rows_equal(lhs, rhs)) {
            res.ok = false;
            res.identity = "associativity";
            res.triple = {i, j, k};
            res.detail = "(xy)z = " + vec_str(e.to_vec(lhs)) +
                         " but x(yz) = " + vec_str(e.to_vec(rhs));
            return res;
          }
        }
      }
    }
    return res;
  });
}

VerifyResult StructureAlgebra::verify_lie_admissible() const {
  return engine_run(*this, [&](auto e) {
    using Row = typename decltype(e)::Row;
    VerifyResult res;
    auto bracket_with_unit = [&](const Row& r, std::size_t k) {
      Row a = e.mult_unit_right(r, k);
      Row b = e.mult_unit_left(k, r);
      for (std::size_t c = 0; c < dim_; ++c) a[c] = e.ops.sub(a[c], b[c]);
      return a;
    };
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        Row bij = e.unit_bracket(i, j);
        for (std::size_t k = 0; k < dim_; ++k) {
          Row sum = bracket_with_unit(bij, k);
          Row t = bracket_with_unit(e.unit_bracket(j, k), i);
          for (std::size_t c = 0; c < dim_; ++c)
            sum[c] = e.ops.add(sum[c], t[c]);
          t = bracket_with_unit(e.unit_bracket(k, i), j);
          for (std::size_t c = 0; c < dim_; ++c)
            sum[c] = e.ops.add(sum[c], t[c]);
          if (!e.row_is_zero(sum)) {
            res.ok = false;
            res.identity = "Jacobi identity for [x,y] = xy - yx";
            res.triple = {i, j, k};
            res.detail = "cyclic sum = " + vec_str(e.to_vec(sum));
            return res;
          }
        }
      }
    }
    return res;
  });
}

void StructureAlgebra::refresh_flavor() {
  if (verify_novikov().ok)
    flavor_ = AlgebraFlavor::verified_novikov;
  else if (verify_associative().ok)
    flavor_ = AlgebraFlavor::verified_associative;
  else
    flavor_ = AlgebraFlavor::plain;
}

// ---- series ----------------------------------------------------------------

SeriesReport StructureAlgebra::run_series(const Subspace& first,
                                          bool lower_central) const {
  SeriesReport rep;
  rep.chain.push_back(first);
  std::size_t cap = max_series_steps(dim_);
  while (true) {
    if (rep.chain.size() > cap)
      throw internal_error("series exceeded the step bound (" +
                           std::to_string(cap) +
                           "); raise LIENIL_MAX_STEPS to override");
    const Subspace& cur = rep.chain.back();
    Subspace next =
        lower_central ? bracket_space(first, cur) : bracket_space(cur, cur);
    rep.chain.push_back(next);
    if (rep.chain.back().is_zero()) {
      rep.terminated_at_zero = true;
      return rep;
    }
    if (rep.chain.back() == cur) {
      rep.stabilized = true;
      return rep;
    }
  }
}

SeriesReport StructureAlgebra::derived_series() const {
  return run_series(full_space(), false);
}

bool StructureAlgebra::is_lie_solvable() const {
  return derived_series().terminated_at_zero;
}

SeriesReport StructureAlgebra::lie_lower_central_series() const {
  return run_series(full_space(), true);
}

bool StructureAlgebra::is_lie_nilpotent() const {
  return lie_lower_central_series().terminated_at_zero;
}

SeriesReport StructureAlgebra::lcs_of_subspace(const Subspace& V) const {
  require_space(*this, V, "lcs_of_subspace");
  return run_series(V, true);
}

PowerChainReport StructureAlgebra::power_chain(const Subspace& V,
                                               std::size_t max_n) const {
  require_space(*this, V, "power_chain");
  PowerChainReport rep;
  rep.powers.push_back(V);
  if (V.is_zero()) {
    rep.nilpotent = true;
    rep.index = 1;
    return rep;
  }
  Subspace running_union = V;
  std::size_t cap = max_n > 0 ? max_n : max_series_steps(dim_);
  std::size_t window = dim_ + 1;
  auto periodic_tail = [&]() {
    std::size_t m = rep.powers.size();
    for (std::size_t t = 1; t <= window; ++t) {
      if (m < window + t) break;
      bool ok = true;
      for (std::size_t s = m - window; s < m; ++s) {
        if (!(rep.powers[s] == rep.powers[s - t])) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  };
  for (std::size_t n = 2;; ++n) {
    if (n > cap)
      throw internal_error("power chain exceeded the step bound (" +
                           std::to_string(cap) +
                           "); raise LIENIL_MAX_STEPS to override");
    Subspace vn(dim_, tag_);
    for (std::size_t i = 1; i < n; ++i)
      vn = vn + product_space(rep.powers[i - 1], rep.powers[n - i - 1]);
    rep.powers.push_back(vn);
    if (vn.is_zero()) {
      rep.nilpotent = true;
      rep.index = n;
      return rep;
    }
    Subspace u = running_union + vn;
    bool union_stable = (u == running_union);
    running_union = u;
    if (union_stable && periodic_tail()) {
      rep.nilpotent = false;
      return rep;
    }
  }
}

bool StructureAlgebra::is_nilpotent_subspace(const Subspace& V) const {
  return power_chain(V).nilpotent;
}

SeriesReport StructureAlgebra::finite_class_chain() const {
  SeriesReport rep;
  rep.chain.push_back(full_space());
  std::size_t cap = max_series_steps(dim_);
  Subspace full = full_space();
  while (true) {
    if (rep.chain.size() > cap)
      throw internal_error("finite-class chain exceeded the step bound (" +
                           std::to_string(cap) +
                           "); raise LIENIL_MAX_STEPS to override");
    const Subspace& cur = rep.chain.back();
    Subspace next = ideal_closure(bracket_space(cur, full));
    rep.chain.push_back(next);
    if (rep.chain.back().is_zero()) {
      rep.terminated_at_zero = true;
      return rep;
    }
    if (rep.chain.back() == cur) {
      rep.stabilized = true;
      return rep;
    }
  }
}

// ---- constructions ----------------------------------------------------------

StructureAlgebra StructureAlgebra::change_of_basis(
    const std::vector<Vec>& M) const {
  if (M.size() != dim_)
    throw precondition_error("change_of_basis: matrix must be dim x dim");
  auto inv = invert_matrix(M);
  if (!inv)
    throw precondition_error("change_of_basis: matrix is not invertible");
  StructureAlgebra out(dim_, tag_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      Vec prod = multiply(M[i], M[j]);  // in old coordinates
      for (std::size_t k = 0; k < dim_; ++k) {
        Scalar c = Scalar::zero(tag_);
        for (std::size_t m = 0; m < dim_; ++m) c += prod[m] * (*inv)[m][k];
        if (!c.is_zero()) out.set_entry(i, j, k, c);
      }
    }
  }
  return out;
}

StructureAlgebra StructureAlgebra::gl(std::size_t n, FieldTag tag) {
  if (n == 0) throw precondition_error("gl(n) requires n >= 1");
  std::size_t d = n * n;
  StructureAlgebra alg(d, tag);
  auto unit = [n](std::size_t a, std::size_t b) { return a * n + b; };
  // E_ij E_jq = E_iq
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t q = 0; q < n; ++q) {
        std::size_t pos = alg.idx(unit(i, j), unit(j, q), unit(i, q));
        if (tag.is_rational())
          alg.q_table_[pos] = 1;
        else
          alg.fp_table_[pos] = 1 % tag.p;
      }
  return alg;
}

StructureAlgebra StructureAlgebra::direct_sum(
    const std::vector<StructureAlgebra>& parts) {
  if (parts.empty())
    throw precondition_error("direct_sum of an empty list");
  FieldTag tag = parts[0].field();
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (!(p.field() == tag))
      throw precondition_error("direct_sum: mixed fields");
    total += p.dim();
  }
  StructureAlgebra out(total, tag);
  std::size_t off = 0;
  for (const auto& p : parts) {
    std::size_t d = p.dim();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          std::size_t src = p.idx(i, j, k);
          std::size_t dst = out.idx(off + i, off + j, off + k);
          if (tag.is_rational()) {
            if (!p.q_table_[src].is_zero()) out.q_table_[dst] = p.q_table_[src];
          } else {
            if (p.fp_table_[src] != 0) out.fp_table_[dst] = p.fp_table_[src];
          }
        }
    off += d;
  }
  return out;
}

GlVerdicts gl_laurent_verdicts(std::size_t n, FieldTag tag) {
  StructureAlgebra alg = StructureAlgebra::gl(n, tag);
  return GlVerdicts{alg.is_lie_solvable(), alg.is_lie_nilpotent()};
}

}  // namespace lienil
