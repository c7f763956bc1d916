#pragma once

// Finite-dimensional algebras given by structure constants: e_i e_j =
// sum_k c_{ij}^k e_k, with the dense rank-3 tensor stored per field in raw
// form (uint64 residues for F_p, exact rationals for Q). On top of the
// bilinear product this provides the Lie-theoretic machinery used
// everywhere else: derived series, lower central series, ideal closures,
// power chains of subspaces, and identity verification (Novikov /
// associative / Lie-admissible).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lienil/subspace.hpp"

namespace lienil {

enum class AlgebraFlavor { plain, verified_novikov, verified_associative };

std::string flavor_str(AlgebraFlavor f);

struct VerifyResult {
  bool ok = true;
  std::string identity;  // name of the law that failed
  std::array<std::size_t, 3> triple{0, 0, 0};  // 0-based basis indices
  std::string detail;    // printable evidence
};

struct SeriesReport {
  std::vector<Subspace> chain;
  bool terminated_at_zero = false;
  bool stabilized = false;  // reached a nonzero fixed point
  std::vector<std::size_t> dims() const;
};

struct PowerChainReport {
  std::vector<Subspace> powers;  // powers[i] = V^{i+1}
  bool nilpotent = false;
  std::size_t index = 0;  // minimal n with V^n = {0}, when nilpotent
};

// Hard safety bound on series lengths: 2*dim + 2, overridable through the
// LIENIL_MAX_STEPS environment variable. Exceeding it throws internal_error.
std::size_t max_series_steps(std::size_t dim);

class StructureAlgebra {
 public:
  StructureAlgebra(std::size_t dim, FieldTag tag);  // zero multiplication

  std::size_t dim() const { return dim_; }
  FieldTag field() const { return tag_; }
  AlgebraFlavor flavor() const { return flavor_; }

  // Entry access; set_entry resets the flavor to plain.
  Scalar entry(std::size_t i, std::size_t j, std::size_t k) const;
  void set_entry(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);

  Vec multiply(const Vec& a, const Vec& b) const;
  Vec bracket(const Vec& a, const Vec& b) const;  // ab - ba

  Subspace zero_space() const { return Subspace(dim_, tag_); }
  Subspace full_space() const { return Subspace::full(dim_, tag_); }

  // span{ a*b : a in A, b in B } and span{ [a,b] : ... }
  Subspace product_space(const Subspace& A, const Subspace& B) const;
  Subspace bracket_space(const Subspace& A, const Subspace& B) const;
  // Smallest two-sided multiplicative ideal containing S.
  Subspace ideal_closure(const Subspace& S) const;

  VerifyResult verify_novikov() const;
  VerifyResult verify_associative() const;
  VerifyResult verify_lie_admissible() const;
  // Runs the verifiers and records the strongest flavor that holds.
  void refresh_flavor();

  // D_1 = full, D_{k+1} = [D_k, D_k].
  SeriesReport derived_series() const;
  bool is_lie_solvable() const;
  // N_[1] = full, N_[i+1] = [full, N_[i]].
  SeriesReport lie_lower_central_series() const;
  bool is_lie_nilpotent() const;
  // Lower central series of a Lie subalgebra V: M_1 = V, M_{k+1} = [V, M_k].
  SeriesReport lcs_of_subspace(const Subspace& V) const;

  // V^1 = V, V^n = sum_{i=1..n-1} V^i V^{n-i}; nilpotent iff some V^n = {0}.
  // Non-nilpotency is declared once the running union stabilizes and the
  // power sequence is periodic over a window of dim+1 steps (exact for
  // subalgebras, whose power chain is monotone). max_n = 0 means the
  // default step bound.
  PowerChainReport power_chain(const Subspace& V, std::size_t max_n = 0) const;
  bool is_nilpotent_subspace(const Subspace& V) const;

  // Generic finite-class chain: H_1 = full, H_{i+1} = Id([H_i, full]),
  // computed by ideal closure (no Novikov hypothesis needed).
  SeriesReport finite_class_chain() const;

  // Basis change by an invertible matrix M (rows = new basis in old coords).
  StructureAlgebra change_of_basis(const std::vector<Vec>& M) const;

  static StructureAlgebra gl(std::size_t n, FieldTag tag);
  static StructureAlgebra direct_sum(const std::vector<StructureAlgebra>& parts);

  friend bool operator==(const StructureAlgebra& a, const StructureAlgebra& b);

 private:
  template <class Ops, class F> friend struct EngineAccess;

  std::size_t idx(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * dim_ + j) * dim_ + k;
  }
  void check_index(std::size_t i, std::size_t j, std::size_t k) const;
  SeriesReport run_series(const Subspace& first, bool lower_central) const;

  std::size_t dim_;
  FieldTag tag_;
  AlgebraFlavor flavor_ = AlgebraFlavor::plain;
  std::vector<std::uint64_t> fp_table_;  // dense dim^3 when tag_.p != 0
  std::vector<Rational> q_table_;        // dense dim^3 when tag_.p == 0
};

struct GlVerdicts {
  bool solvable = false;
  bool nilpotent = false;
};

// Verdicts for gl(n, K[x, x^-1]); solvability/nilpotency delegate to
// gl(n, K), which decides them (no Laurent-coefficient arithmetic needed).
GlVerdicts gl_laurent_verdicts(std::size_t n, FieldTag tag);

}  // namespace lienil
