#include "lienil/subspace.hpp"

#include <algorithm>

namespace lienil {

Vec zero_vec(std::size_t n, FieldTag tag) {
  return Vec(n, Scalar::zero(tag));
}

Vec unit_vec(std::size_t n, std::size_t i, FieldTag tag) {
  if (i >= n) throw precondition_error("unit_vec index out of range");
  Vec v = zero_vec(n, tag);
  v[i] = Scalar::one(tag);
  return v;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

static void require_same_shape(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw precondition_error("vector length mismatch");
}

Vec vec_add(const Vec& a, const Vec& b) {
  require_same_shape(a, b);
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  require_same_shape(a, b);
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

Subspace::Subspace(std::size_t ambient, FieldTag tag)
    : ambient_(ambient), tag_(tag) {}

void Subspace::require_compatible(std::size_t n, FieldTag tag) const {
  if (n != ambient_)
    throw precondition_error("ambient dimension mismatch: " +
                             std::to_string(n) + " vs " +
                             std::to_string(ambient_));
  if (!(tag == tag_)) throw precondition_error("field mismatch on subspace op");
}

Vec Subspace::reduce(Vec v) const {
  require_compatible(v.size(), v.empty() ? tag_ : v[0].field());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar c = v[pivots_[r]];  // copy: the loop below overwrites v[pivot]
    if (c.is_zero()) continue;
    // v -= c * row  (row has pivot 1)
    const Vec& row = rows_[r];
    for (std::size_t j = pivots_[r]; j < ambient_; ++j)
      if (!row[j].is_zero()) v[j] -= c * row[j];
  }
  return v;
}

bool Subspace::insert(Vec v) {
  v = reduce(std::move(v));
  std::size_t pivot = ambient_;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (!v[j].is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot == ambient_) return false;
  if (!v[pivot].is_one()) {
    Scalar inv = v[pivot].inverse();
    for (std::size_t j = pivot; j < ambient_; ++j)
      if (!v[j].is_zero()) v[j] *= inv;
  }
  // clear the new pivot column in existing rows
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar c = rows_[r][pivot];  // copy: the loop below overwrites it
    if (c.is_zero()) continue;
    Vec& row = rows_[r];
    for (std::size_t j = pivot; j < ambient_; ++j)
      if (!v[j].is_zero()) row[j] -= c * v[j];
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pivot);
  std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
  return true;
}

Subspace Subspace::span(std::size_t ambient, FieldTag tag,
                        const std::vector<Vec>& rows) {
  Subspace s(ambient, tag);
  for (const auto& r : rows) {
    if (r.size() != ambient) throw precondition_error("ragged input rows");
    s.insert(r);
  }
  return s;
}

Subspace Subspace::full(std::size_t ambient, FieldTag tag) {
  Subspace s(ambient, tag);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.pivots_.push_back(i);
    s.rows_.push_back(unit_vec(ambient, i, tag));
  }
  return s;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::leq(const Subspace& other) const {
  require_compatible(other.ambient_, other.tag_);
  if (dim() > other.dim()) return false;
  for (const auto& r : rows_)
    if (!other.contains(r)) return false;
  return true;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  a.require_compatible(b.ambient_, b.tag_);
  Subspace s = a;
  for (const auto& r : b.rows_) s.insert(r);
  return s;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.tag_ == b.tag_ &&
         a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
}

Subspace rref(const std::vector<Vec>& rows, FieldTag tag) {
  if (rows.empty())
    throw precondition_error("rref of an empty row list (ambient unknown)");
  std::size_t ambient = rows[0].size();
  if (ambient == 0) throw precondition_error("rref rows must have length >= 1");
  return Subspace::span(ambient, tag, rows);
}

std::optional<std::vector<Vec>> invert_matrix(const std::vector<Vec>& rows) {
  std::size_t n = rows.size();
  if (n == 0) throw precondition_error("invert_matrix on empty matrix");
  FieldTag tag = rows[0][0].field();
  // augmented Gauss-Jordan
  std::vector<Vec> a = rows;
  std::vector<Vec> inv;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw precondition_error("invert_matrix: not square");
    inv.push_back(unit_vec(n, i, tag));
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = col; r < n; ++r) {
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Scalar f = a[col][col].inverse();
    a[col] = vec_scale(f, a[col]);
    inv[col] = vec_scale(f, inv[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Scalar c = a[r][col];
      a[r] = vec_sub(a[r], vec_scale(c, a[col]));
      inv[r] = vec_sub(inv[r], vec_scale(c, inv[col]));
    }
  }
  return inv;
}

}  // namespace lienil
