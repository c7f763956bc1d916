#pragma once

// Machinery specific to Novikov algebras (left-symmetric, right-commutative
// products): commutator ideals A∘B, the descending chain H_1 = N,
// H_{i+1} = H_i ∘ N, the class of an algebra, and executable checks of the
// central-chain claims lemma-2.1 / 2.3 / 2.4 and theorem-2.5 / 2.8 / 2.9.
// Every chain-level formula is cross-validated against a direct
// ideal-closure computation; a mismatch on a verified Novikov algebra is an
// internal error, never silently accepted.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lienil/structure_algebra.hpp"

namespace lienil {

struct ChainViolation {
  std::vector<std::size_t> indices;  // offending (p, q, ...) combination
  Vec element;                       // witness vector, re-checkable
  std::string detail;
};

struct ChainCheckReport {
  std::string claim_id;  // e.g. "lemma-2.1"
  std::string params;    // ranges / trial counts actually exercised
  bool holds = true;
  std::optional<ChainViolation> violation;
  std::string notes;
};

// The algebra on basis x^low_degree, ..., x^{n-1} with product
// a∘b = a·(db/dx) computed in K[x] and truncated mod x^n. The constructor
// runs the Novikov verifier and records the resulting flavor; truncation
// genuinely breaks left symmetry when low_degree = 0 and char(K) does not
// divide n, so such instances come back with flavor plain, not
// verified_novikov.
StructureAlgebra make_truncated_derivation_novikov(std::size_t n,
                                                   std::size_t low_degree,
                                                   FieldTag tag);

// A ∘ B = [A, B] + N[A, B] for Lie ideals A, B of a verified Novikov
// algebra; cross-checked against ideal_closure([A, B]).
Subspace commutator_ideal(const StructureAlgebra& alg, const Subspace& A,
                          const Subspace& B);

// H_1 = N, H_{i+1} = H_i ∘ N; stops at {0} (finite class) or at a nonzero
// fixed point (not of finite class).
SeriesReport lower_central_chain_H(const StructureAlgebra& alg);

// Class of the algebra: n - 1 for the minimal n with H_n = {0}; nullopt
// when the chain stabilizes at a nonzero subspace ("not of finite class").
std::optional<std::size_t> class_of(const StructureAlgebra& alg);

// Id(N_[i]) for each term of the Lie lower central series, computed by the
// closed formula Id(N_[i]) = N_[i] + N·N_[i] and cross-checked against
// ideal_closure(N_[i]).
std::vector<Subspace> lie_commutator_ideal_chain(const StructureAlgebra& alg);

// A Lie ideal by construction: ideal_closure(bracket_space(N, R)) for a
// span R of `generators` pseudorandom vectors.
Subspace random_lie_ideal(const StructureAlgebra& alg, std::uint64_t seed,
                          std::size_t generators = 2);

// Dual-computation check of the commutator-ideal formula on random pairs of
// Lie ideals, including the symmetry A∘B = B∘A.
ChainCheckReport check_lemma_2_1(const StructureAlgebra& alg,
                                 std::size_t trials, std::uint64_t seed);

// Central-chain inclusion H_p ∘ A_q ⊆ A_{p+q}. The default chain is
// A_i = H_i; a user-supplied chain must start at the full space, descend,
// consist of ideals, and satisfy N ∘ A_i ⊆ A_{i+1}.
ChainCheckReport check_lemma_2_3(
    const StructureAlgebra& alg,
    const std::optional<std::vector<Subspace>>& user_chain = std::nullopt);

// The two cyclic identities [x,y]z + [y,z]x + [z,x]y = 0 and
// x[y,z] + y[z,x] + z[x,y] = 0 on all basis triples plus random triples.
ChainCheckReport check_lemma_2_4(const StructureAlgebra& alg,
                                 std::size_t trials, std::uint64_t seed);

// (a) H_p H_q ⊆ H_{p+q-1} for all p, q; when the algebra is of finite
// class, additionally (b) the power chain of H_2 reaches {0} and (c) its
// nilpotency index is at most the class.
ChainCheckReport check_theorem_2_5(const StructureAlgebra& alg);

// Id(N_[i]) = H_i for all i, plus the product inclusion
// Id(N_[p]) Id(N_[q]) ⊆ Id(N_[p+q-1]).
ChainCheckReport check_theorem_2_8(const StructureAlgebra& alg);

// Lie nilpotency ⇔ finite class; when both hold, Id([N, N]) is nilpotent.
ChainCheckReport check_theorem_2_9(const StructureAlgebra& alg);

}  // namespace lienil
