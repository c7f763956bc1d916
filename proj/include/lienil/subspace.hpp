#pragma once

// Subspaces of K^n represented by their reduced row echelon basis. The RREF
// basis is canonical, so subspace equality is plain structural equality of
// the stored rows.

#include <cstddef>
#include <optional>
#include <vector>

#include "lienil/field.hpp"

namespace lienil {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n, FieldTag tag);
Vec unit_vec(std::size_t n, std::size_t i, FieldTag tag);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
std::string vec_str(const Vec& v);

class Subspace {
 public:
  // The zero subspace of K^ambient.
  Subspace(std::size_t ambient, FieldTag tag);

  static Subspace span(std::size_t ambient, FieldTag tag,
                       const std::vector<Vec>& rows);
  static Subspace full(std::size_t ambient, FieldTag tag);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  FieldTag field() const { return tag_; }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return rows_.size() == ambient_; }

  bool contains(const Vec& v) const;
  bool leq(const Subspace& other) const;  // subspace inclusion
  // Residual of v after reduction against the basis ({0} iff contained).
  Vec reduce(Vec v) const;

  // Inserts a row, keeping the basis in RREF. Returns true if dim grew.
  bool insert(Vec v);

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }

 private:
  void require_compatible(std::size_t n, FieldTag tag) const;

  std::size_t ambient_;
  FieldTag tag_;
  std::vector<Vec> rows_;            // RREF, sorted by pivot column
  std::vector<std::size_t> pivots_;  // pivot column of each row
};

// RREF of the given rows (ambient inferred; rows must be non-ragged).
Subspace rref(const std::vector<Vec>& rows, FieldTag tag);

// Gauss-Jordan inverse of a square matrix given as rows; nullopt if singular.
std::optional<std::vector<Vec>> invert_matrix(const std::vector<Vec>& rows);

}  // namespace lienil
