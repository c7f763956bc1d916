// Novikov-chain machinery tests. All chain contents, classes, and witness
// triples for the truncated-derivation family were computed by hand from
// the rule x^s ∘ x^t = t·x^{s+t-1} (mod x^n) before the implementation
// existed, and are frozen here as regression constants.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lienil/novikov.hpp"

using namespace lienil;

namespace {

const FieldTag Q = FieldTag::rationals();
const FieldTag F2 = FieldTag::prime(2);
const FieldTag F3 = FieldTag::prime(3);
const FieldTag F5 = FieldTag::prime(5);

// coordinate vector of c * x^deg inside the (n, low) truncated algebra
Vec mono(const StructureAlgebra& alg, std::size_t low, std::size_t deg,
         long long c = 1) {
  Vec v = zero_vec(alg.dim(), alg.field());
  v[deg - low] = Scalar::of_int(c, alg.field());
  return v;
}

Vec random_vec(std::mt19937_64& rng, std::size_t n, FieldTag tag) {
  Vec v;
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(Scalar::of_int(static_cast<long long>(rng() % 7) - 3, tag));
  return v;
}

}  // namespace

TEST_CASE("truncated-derivation family: construction") {
  SUBCASE("n=3, low=2: one basis vector, all products truncate to zero") {
    auto alg = make_truncated_derivation_novikov(3, 2, Q);
    CHECK(alg.dim() == 1);
    CHECK(alg.flavor() == AlgebraFlavor::verified_novikov);
    CHECK(vec_is_zero(alg.multiply(mono(alg, 2, 2), mono(alg, 2, 2))));
  }
  SUBCASE("product rule: x^2 * x^3 = 3x^4 in the (6,2) algebra") {
    auto alg = make_truncated_derivation_novikov(6, 2, Q);
    CHECK(alg.multiply(mono(alg, 2, 2), mono(alg, 2, 3)) ==
          mono(alg, 2, 4, 3));
    // and the reverse order: x^3 * x^2 = 2x^4
    CHECK(alg.multiply(mono(alg, 2, 3), mono(alg, 2, 2)) ==
          mono(alg, 2, 4, 2));
    CHECK(alg.bracket(mono(alg, 2, 2), mono(alg, 2, 3)) == mono(alg, 2, 4));
  }
  SUBCASE("degree-range errors") {
    CHECK_THROWS_AS(make_truncated_derivation_novikov(1, 0, Q),
                    precondition_error);
    CHECK_THROWS_AS(make_truncated_derivation_novikov(6, 6, Q),
                    precondition_error);
  }
}

TEST_CASE("truncated-derivation family: which instances are Novikov") {
  // low >= 1 is always Novikov; low = 0 is Novikov iff char divides n,
  // because truncation breaks left symmetry on (1, x^j, x^k), j+k = n+1.
  CHECK(make_truncated_derivation_novikov(6, 2, Q).flavor() ==
        AlgebraFlavor::verified_novikov);
  CHECK(make_truncated_derivation_novikov(6, 1, Q).flavor() ==
        AlgebraFlavor::verified_novikov);
  CHECK(make_truncated_derivation_novikov(6, 0, F2).flavor() ==
        AlgebraFlavor::verified_novikov);
  CHECK(make_truncated_derivation_novikov(6, 0, F3).flavor() ==
        AlgebraFlavor::verified_novikov);
  CHECK(make_truncated_derivation_novikov(6, 0, F5).flavor() ==
        AlgebraFlavor::plain);

  SUBCASE("the (6,0,Q) left-symmetry defect, with hand-computed witness") {
    auto alg = make_truncated_derivation_novikov(6, 0, Q);
    CHECK(alg.flavor() == AlgebraFlavor::plain);
    VerifyResult r = alg.verify_novikov();
    REQUIRE_FALSE(r.ok);
    CHECK(r.identity == "left symmetry");
    // first failing triple (x, y, z) = (1, x^2, x^5):
    //   x(yz) - (xy)z = 0 - (2x)(x^5)' wait-free: = -10x^5
    //   y(xz) - (yx)z = x^2 * 5x^4 - 0 = 20x^5
    CHECK(r.triple == std::array<std::size_t, 3>{0, 2, 5});
    Vec one = mono(alg, 0, 0), x2 = mono(alg, 0, 2), x5 = mono(alg, 0, 5);
    Vec lhs = vec_sub(alg.multiply(one, alg.multiply(x2, x5)),
                      alg.multiply(alg.multiply(one, x2), x5));
    Vec rhs = vec_sub(alg.multiply(x2, alg.multiply(one, x5)),
                      alg.multiply(alg.multiply(x2, one), x5));
    CHECK(lhs == mono(alg, 0, 5, -10));
    CHECK(rhs == mono(alg, 0, 5, 20));
  }
}

TEST_CASE("class of the truncated family (hand-computed)") {
  auto cls = [](std::size_t n, std::size_t low, FieldTag tag) {
    return class_of(make_truncated_derivation_novikov(n, low, tag));
  };
  CHECK(cls(4, 2, Q) == std::size_t{1});  // all brackets vanish
  CHECK(cls(5, 2, Q) == std::size_t{2});
  CHECK(cls(6, 2, Q) == std::size_t{3});
  CHECK(cls(7, 2, Q) == std::size_t{4});
  CHECK_FALSE(cls(6, 1, Q).has_value());   // [x, x^j] = (j-1)x^j persists
  CHECK_FALSE(cls(6, 0, F2).has_value());  // [x, x^2] = x^2 mod 2 persists
}

TEST_CASE("H chain contents for (6,2) over Q") {
  auto alg = make_truncated_derivation_novikov(6, 2, Q);
  SeriesReport h = lower_central_chain_H(alg);
  CHECK(h.terminated_at_zero);
  CHECK(h.dims() == std::vector<std::size_t>{4, 2, 1, 0});
  // H_2 = span{x^4, x^5}: [x^2, x^3] = x^4, [x^2, x^4] = 2x^5
  CHECK(h.chain[1].contains(mono(alg, 2, 4)));
  CHECK(h.chain[1].contains(mono(alg, 2, 5)));
  CHECK_FALSE(h.chain[1].contains(mono(alg, 2, 3)));
  // H_3 = span{x^5}
  CHECK(h.chain[2].contains(mono(alg, 2, 5)));
  CHECK(h.chain[2].dim() == 1);
  // monotone: H_{i+1} inside H_i
  for (std::size_t i = 0; i + 1 < h.chain.size(); ++i)
    CHECK(h.chain[i + 1].leq(h.chain[i]));
}

TEST_CASE("H chain stabilizes for the non-finite-class instances") {
  auto alg = make_truncated_derivation_novikov(6, 0, F2);
  SeriesReport h = lower_central_chain_H(alg);
  CHECK(h.stabilized);
  CHECK_FALSE(h.terminated_at_zero);
  // stable term = span{1, x^2, x^4}
  const Subspace& w = h.chain.back();
  CHECK(w.dim() == 3);
  CHECK(w.contains(mono(alg, 0, 0)));
  CHECK(w.contains(mono(alg, 0, 2)));
  CHECK(w.contains(mono(alg, 0, 4)));
  CHECK_FALSE(w.contains(mono(alg, 0, 1)));
  // H_2 of this algebra squares to zero
  CHECK(alg.product_space(h.chain[1], h.chain[1]).is_zero());
  CHECK_FALSE(alg.is_lie_nilpotent());
}

TEST_CASE("commutator_ideal") {
  auto alg = make_truncated_derivation_novikov(6, 2, Q);
  SUBCASE("A = B = full gives H_2, matching the ideal closure") {
    Subspace h2 = commutator_ideal(alg, alg.full_space(), alg.full_space());
    CHECK(h2 == lower_central_chain_H(alg).chain[1]);
    CHECK(h2 == alg.ideal_closure(alg.bracket_space(alg.full_space(),
                                                    alg.full_space())));
  }
  SUBCASE("zero ideal in, zero out") {
    CHECK(commutator_ideal(alg, alg.zero_space(), alg.full_space())
              .is_zero());
  }
  SUBCASE("commutative algebra: everything brackets to zero") {
    auto comm = make_truncated_derivation_novikov(4, 2, Q);
    CHECK(commutator_ideal(comm, comm.full_space(), comm.full_space())
              .is_zero());
  }
  SUBCASE("symmetry A∘B = B∘A on random Lie ideals") {
    for (std::uint64_t s = 0; s < 6; ++s) {
      Subspace A = random_lie_ideal(alg, 100 + s);
      Subspace B = random_lie_ideal(alg, 200 + s);
      CHECK(commutator_ideal(alg, A, B) == commutator_ideal(alg, B, A));
    }
  }
  SUBCASE("flavor gate") {
    auto gl2 = StructureAlgebra::gl(2, F2);
    CHECK_THROWS_AS(
        commutator_ideal(gl2, gl2.full_space(), gl2.full_space()),
        precondition_error);
  }
  SUBCASE("non-Lie-ideal input is rejected with a witness") {
    Subspace notideal =
        Subspace::span(alg.dim(), Q, {mono(alg, 2, 2)});  // span{x^2}
    CHECK_THROWS_WITH_AS(
        commutator_ideal(alg, notideal, alg.full_space()),
        doctest::Contains("first argument is not a Lie ideal"),
        precondition_error);
    CHECK_THROWS_WITH_AS(
        commutator_ideal(alg, alg.full_space(), notideal),
        doctest::Contains("second argument is not a Lie ideal"),
        precondition_error);
  }
}

TEST_CASE("lie_commutator_ideal_chain agrees with the H chain") {
  for (auto& alg : {make_truncated_derivation_novikov(6, 2, Q),
                    make_truncated_derivation_novikov(7, 2, Q),
                    make_truncated_derivation_novikov(6, 0, F2)}) {
    std::vector<Subspace> ids = lie_commutator_ideal_chain(alg);
    REQUIRE(!ids.empty());
    CHECK(ids[0] == alg.full_space());
    SeriesReport h = lower_central_chain_H(alg);
    // Id(N_[i]) = H_i on the overlap of the two chains
    std::size_t overlap = std::min(ids.size(), h.chain.size());
    for (std::size_t i = 0; i < overlap; ++i) CHECK(ids[i] == h.chain[i]);
  }
}

TEST_CASE("random_lie_ideal produces genuine two-sided Lie ideals") {
  auto alg = make_truncated_derivation_novikov(7, 2, Q);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Subspace L = random_lie_ideal(alg, seed);
    CHECK(alg.bracket_space(alg.full_space(), L).leq(L));
    CHECK(alg.ideal_closure(L) == L);
  }
}

TEST_CASE("check_lemma_2_1: dual computation on >= 100 random ideal pairs") {
  std::size_t total = 0;
  for (auto& alg : {make_truncated_derivation_novikov(6, 2, Q),
                    make_truncated_derivation_novikov(7, 2, Q),
                    make_truncated_derivation_novikov(6, 0, F2)}) {
    ChainCheckReport rep = check_lemma_2_1(alg, 40, 9000 + total);
    CHECK(rep.holds);
    CHECK(rep.claim_id == "lemma-2.1");
    CHECK_FALSE(rep.violation.has_value());
    total += 40;
  }
  CHECK(total >= 100);
}

TEST_CASE("check_lemma_2_3") {
  SUBCASE("default chain holds on the example family") {
    for (auto& alg : {make_truncated_derivation_novikov(4, 2, Q),
                      make_truncated_derivation_novikov(6, 2, Q),
                      make_truncated_derivation_novikov(7, 2, Q)}) {
      ChainCheckReport rep = check_lemma_2_3(alg);
      CHECK(rep.holds);
      CHECK(rep.claim_id == "lemma-2.3");
    }
  }
  SUBCASE("valid user chain (the H chain itself)") {
    auto alg = make_truncated_derivation_novikov(6, 2, Q);
    SeriesReport h = lower_central_chain_H(alg);
    ChainCheckReport rep = check_lemma_2_3(alg, h.chain);
    CHECK(rep.holds);
  }
  SUBCASE("invalid user chains are rejected") {
    auto alg = make_truncated_derivation_novikov(6, 2, Q);
    SeriesReport h = lower_central_chain_H(alg);
    // must start at the full algebra
    CHECK_THROWS_WITH_AS(
        check_lemma_2_3(alg, std::vector<Subspace>{h.chain[1]}),
        doctest::Contains("must start at the full algebra"),
        precondition_error);
    // not central: full followed by something too small
    CHECK_THROWS_WITH_AS(
        check_lemma_2_3(alg,
                        std::vector<Subspace>{alg.full_space(), h.chain[2]}),
        doctest::Contains("not central"), precondition_error);
    // not descending
    std::vector<Subspace> bad = {alg.full_space(), h.chain[2], h.chain[1]};
    CHECK_THROWS_AS(check_lemma_2_3(alg, bad), precondition_error);
  }
}

TEST_CASE("check_lemma_2_4") {
  for (auto& alg : {make_truncated_derivation_novikov(5, 2, Q),
                    make_truncated_derivation_novikov(6, 2, Q),
                    make_truncated_derivation_novikov(6, 0, F2)}) {
    ChainCheckReport rep = check_lemma_2_4(alg, 50, 31337);
    CHECK(rep.holds);
    CHECK(rep.claim_id == "lemma-2.4");
  }
  // flavor gate: a plain algebra is rejected outright
  auto gl2 = StructureAlgebra::gl(2, Q);
  CHECK_THROWS_AS(check_lemma_2_4(gl2, 5, 1), precondition_error);
}

TEST_CASE("check_theorem_2_5") {
  SUBCASE("finite class: product inclusion + H_2 nilpotency + index bound") {
    auto alg = make_truncated_derivation_novikov(6, 2, Q);
    ChainCheckReport rep = check_theorem_2_5(alg);
    CHECK(rep.holds);
    CHECK(rep.claim_id == "theorem-2.5");
    CHECK(rep.notes == "class=3 H_2 nilpotency index=2");
    // the index is genuinely 2: H_2 = span{x^4, x^5} squares to zero
    SeriesReport h = lower_central_chain_H(alg);
    PowerChainReport pc = alg.power_chain(h.chain[1]);
    CHECK(pc.nilpotent);
    CHECK(pc.index == 2);
  }
  SUBCASE("larger instance") {
    auto alg = make_truncated_derivation_novikov(7, 2, Q);
    ChainCheckReport rep = check_theorem_2_5(alg);
    CHECK(rep.holds);
    CHECK(rep.notes == "class=4 H_2 nilpotency index=2");
  }
  SUBCASE("not of finite class: only the product inclusion applies") {
    auto alg = make_truncated_derivation_novikov(6, 1, Q);
    ChainCheckReport rep = check_theorem_2_5(alg);
    CHECK(rep.holds);
    CHECK(rep.notes ==
          "not of finite class; the H_2 nilpotency clause does not apply");
  }
}

TEST_CASE("check_theorem_2_8") {
  for (auto& alg : {make_truncated_derivation_novikov(6, 2, Q),
                    make_truncated_derivation_novikov(7, 2, Q),
                    make_truncated_derivation_novikov(6, 1, Q),
                    make_truncated_derivation_novikov(6, 0, F2)}) {
    ChainCheckReport rep = check_theorem_2_8(alg);
    CHECK(rep.holds);
    CHECK(rep.claim_id == "theorem-2.8");
  }
}

TEST_CASE("check_theorem_2_9") {
  SUBCASE("both sides true, with nilpotent Id([N,N])") {
    auto alg = make_truncated_derivation_novikov(6, 2, Q);
    ChainCheckReport rep = check_theorem_2_9(alg);
    CHECK(rep.holds);
    CHECK(rep.claim_id == "theorem-2.9");
    CHECK(rep.notes == "Id([N,N]) verified nilpotent");
    CHECK(alg.is_lie_nilpotent());
  }
  SUBCASE("both sides false") {
    for (auto& alg : {make_truncated_derivation_novikov(6, 1, Q),
                      make_truncated_derivation_novikov(6, 0, F2)}) {
      ChainCheckReport rep = check_theorem_2_9(alg);
      CHECK(rep.holds);
      CHECK_FALSE(alg.is_lie_nilpotent());
      CHECK_FALSE(class_of(alg).has_value());
    }
  }
}

TEST_CASE("class is invariant under a change of basis") {
  auto alg = make_truncated_derivation_novikov(6, 2, Q);
  std::mt19937_64 rng(20240817);
  int done = 0;
  while (done < 3) {
    std::vector<Vec> m;
    for (std::size_t r = 0; r < alg.dim(); ++r)
      m.push_back(random_vec(rng, alg.dim(), Q));
    if (!invert_matrix(m)) continue;
    ++done;
    StructureAlgebra conj = alg.change_of_basis(m);
    conj.refresh_flavor();
    REQUIRE(conj.flavor() == AlgebraFlavor::verified_novikov);
    CHECK(class_of(conj) == std::size_t{3});
  }
}
