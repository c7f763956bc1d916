#include "lienil/novikov.hpp"

#include <random>
#include <utility>

namespace lienil {

namespace {

void require_novikov(const StructureAlgebra& alg, const char* what) {
  if (alg.flavor() != AlgebraFlavor::verified_novikov)
    throw precondition_error(std::string(what) +
                             " requires a verified Novikov algebra "
                             "(flavor verified_novikov)");
}

// First bracket [e_i, a] falling outside S, if any (S fails to be a Lie
// ideal exactly when such a witness exists).
std::optional<Vec> lie_ideal_defect(const StructureAlgebra& alg,
                                    const Subspace& S) {
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    Vec e = unit_vec(alg.dim(), i, alg.field());
    for (const auto& a : S.basis()) {
      Vec b = alg.bracket(e, a);
      if (!S.contains(b)) return b;
    }
  }
  return std::nullopt;
}

// First product (or bracket) of basis pairs of A x B not contained in the
// target subspace.
std::optional<std::pair<Vec, std::string>> product_outside(
    const StructureAlgebra& alg, const Subspace& A, const Subspace& B,
    const Subspace& target, bool use_bracket) {
  for (const auto& a : A.basis()) {
    for (const auto& b : B.basis()) {
      Vec p = use_bracket ? alg.bracket(a, b) : alg.multiply(a, b);
      if (!target.contains(p)) {
        std::string d = (use_bracket ? std::string("[") + vec_str(a) + ", " +
                                           vec_str(b) + "]"
                                     : vec_str(a) + " * " + vec_str(b)) +
                        " = " + vec_str(p);
        return std::make_pair(std::move(p), std::move(d));
      }
    }
  }
  return std::nullopt;
}

// Basis row of A that is missing from B (witness for A != B when A ⊄ B).
std::optional<Vec> row_outside(const Subspace& A, const Subspace& B) {
  for (const auto& r : A.basis())
    if (!B.contains(r)) return r;
  return std::nullopt;
}

Subspace commutator_ideal_formula(const StructureAlgebra& alg,
                                  const Subspace& A, const Subspace& B) {
  Subspace c = alg.bracket_space(A, B);
  return c + alg.product_space(alg.full_space(), c);
}

Vec random_vec(std::mt19937_64& rng, std::size_t n, FieldTag tag) {
  Vec v;
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(Scalar::of_int(static_cast<long long>(rng() % 7) - 3, tag));
  return v;
}

// Term of a terminated-or-stabilized descending chain at 1-based index i,
// extending past the end by {0} (terminated) or the fixed point (stabilized).
const Subspace& chain_term(const SeriesReport& rep, const Subspace& zero,
                           std::size_t i) {
  if (i <= rep.chain.size()) return rep.chain[i - 1];
  return rep.terminated_at_zero ? zero : rep.chain.back();
}

}  // namespace

StructureAlgebra make_truncated_derivation_novikov(std::size_t n,
                                                   std::size_t low_degree,
                                                   FieldTag tag) {
  if (n < 2 || low_degree >= n)
    throw precondition_error(
        "invalid degree range: need n >= 2 and low_degree < n");
  std::size_t dim = n - low_degree;  // basis x^low_degree ... x^{n-1}
  StructureAlgebra alg(dim, tag);
  for (std::size_t s = 0; s < dim; ++s) {
    for (std::size_t t = 0; t < dim; ++t) {
      std::size_t deg_t = low_degree + t;
      if (deg_t == 0) continue;  // d(x^0)/dx = 0
      // x^{low+s} * (deg_t x^{deg_t - 1}), exponent low+s+deg_t-1
      std::size_t exponent = low_degree + s + deg_t - 1;
      if (exponent > n - 1) continue;  // truncated away
      alg.set_entry(s, t, exponent - low_degree,
                    Scalar::of_int(static_cast<long long>(deg_t), tag));
    }
  }
  alg.refresh_flavor();
  return alg;
}

Subspace commutator_ideal(const StructureAlgebra& alg, const Subspace& A,
                          const Subspace& B) {
  require_novikov(alg, "commutator_ideal");
  if (auto w = lie_ideal_defect(alg, A))
    throw precondition_error(
        "commutator_ideal: first argument is not a Lie ideal; witness "
        "bracket " +
        vec_str(*w) + " lies outside it");
  if (auto w = lie_ideal_defect(alg, B))
    throw precondition_error(
        "commutator_ideal: second argument is not a Lie ideal; witness "
        "bracket " +
        vec_str(*w) + " lies outside it");
  Subspace formula = commutator_ideal_formula(alg, A, B);
  Subspace closure = alg.ideal_closure(alg.bracket_space(A, B));
  if (formula != closure)
    throw internal_error(
        "commutator_ideal: [A,B] + N[A,B] differs from the ideal closure of "
        "[A,B] on a verified Novikov algebra");
  return formula;
}

SeriesReport lower_central_chain_H(const StructureAlgebra& alg) {
  require_novikov(alg, "lower_central_chain_H");
  SeriesReport rep;
  rep.chain.push_back(alg.full_space());
  std::size_t cap = max_series_steps(alg.dim());
  while (true) {
    if (rep.chain.size() > cap)
      throw internal_error("H chain exceeded the step bound (" +
                           std::to_string(cap) + ")");
    const Subspace& cur = rep.chain.back();
    Subspace next = commutator_ideal(alg, cur, alg.full_space());
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

std::optional<std::size_t> class_of(const StructureAlgebra& alg) {
  SeriesReport rep = lower_central_chain_H(alg);
  if (!rep.terminated_at_zero) return std::nullopt;
  return rep.chain.size() - 1;  // H_n = {0} first at n = chain length
}

std::vector<Subspace> lie_commutator_ideal_chain(const StructureAlgebra& alg) {
  require_novikov(alg, "lie_commutator_ideal_chain");
  SeriesReport lcs = alg.lie_lower_central_series();
  std::vector<Subspace> out;
  for (const auto& term : lcs.chain) {
    Subspace formula = term + alg.product_space(alg.full_space(), term);
    if (formula != alg.ideal_closure(term))
      throw internal_error(
          "lie_commutator_ideal_chain: N_[i] + N N_[i] differs from the "
          "ideal closure of N_[i] on a verified Novikov algebra");
    out.push_back(std::move(formula));
  }
  return out;
}

Subspace random_lie_ideal(const StructureAlgebra& alg, std::uint64_t seed,
                          std::size_t generators) {
  std::mt19937_64 rng(seed);
  std::vector<Vec> gens;
  for (std::size_t g = 0; g < generators; ++g)
    gens.push_back(random_vec(rng, alg.dim(), alg.field()));
  Subspace r = Subspace::span(alg.dim(), alg.field(), gens);
  return alg.ideal_closure(alg.bracket_space(alg.full_space(), r));
}

ChainCheckReport check_lemma_2_1(const StructureAlgebra& alg,
                                 std::size_t trials, std::uint64_t seed) {
  require_novikov(alg, "check_lemma_2_1");
  ChainCheckReport rep;
  rep.claim_id = "lemma-2.1";
  rep.params = "trials=" + std::to_string(trials) +
               " seed=" + std::to_string(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Subspace A = random_lie_ideal(alg, seed + 2 * t);
    Subspace B = random_lie_ideal(alg, seed + 2 * t + 1);
    Subspace formula = commutator_ideal_formula(alg, A, B);
    Subspace closure = alg.ideal_closure(alg.bracket_space(A, B));
    if (formula != closure) {
      rep.holds = false;
      Vec w = row_outside(formula, closure)
                  .value_or(row_outside(closure, formula).value());
      rep.violation = ChainViolation{
          {t},
          w,
          "[A,B] + N[A,B] != Id([A,B]) at trial " + std::to_string(t)};
      return rep;
    }
    Subspace sym = commutator_ideal_formula(alg, B, A);
    if (formula != sym) {
      rep.holds = false;
      Vec w = row_outside(formula, sym)
                  .value_or(row_outside(sym, formula).value());
      rep.violation = ChainViolation{
          {t}, w, "A∘B != B∘A at trial " + std::to_string(t)};
      return rep;
    }
  }
  return rep;
}

ChainCheckReport check_lemma_2_3(
    const StructureAlgebra& alg,
    const std::optional<std::vector<Subspace>>& user_chain) {
  require_novikov(alg, "check_lemma_2_3");
  SeriesReport h = lower_central_chain_H(alg);

  SeriesReport a_chain;
  if (user_chain) {
    const auto& c = *user_chain;
    if (c.empty() || !(c.front() == alg.full_space()))
      throw precondition_error(
          "check_lemma_2_3: user chain must start at the full algebra");
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!(alg.ideal_closure(c[i]) == c[i]))
        throw precondition_error("check_lemma_2_3: chain term " +
                                 std::to_string(i + 1) + " is not an ideal");
      if (i + 1 < c.size()) {
        if (!c[i + 1].leq(c[i]))
          throw precondition_error("check_lemma_2_3: chain not descending at "
                                   "term " +
                                   std::to_string(i + 1));
        if (!commutator_ideal(alg, alg.full_space(), c[i]).leq(c[i + 1]))
          throw precondition_error(
              "check_lemma_2_3: chain is not central at term " +
              std::to_string(i + 1) + " (N ∘ A_i is not inside A_{i+1})");
      }
    }
    a_chain.chain = c;
    // past-the-end terms of a user chain are {0} by convention
    a_chain.terminated_at_zero = true;
  } else {
    a_chain = h;
  }

  ChainCheckReport rep;
  rep.claim_id = "lemma-2.3";
  std::size_t len = a_chain.chain.size();
  rep.params = std::string(user_chain ? "user chain" : "default chain A_i=H_i") +
               " length=" + std::to_string(len);
  Subspace zero = alg.zero_space();
  for (std::size_t p = 1; p + 1 <= len; ++p) {
    for (std::size_t q = 1; p + q <= len; ++q) {
      const Subspace& hp = chain_term(h, zero, p);
      const Subspace& aq = a_chain.chain[q - 1];
      Subspace lhs = commutator_ideal(alg, hp, aq);
      const Subspace& target = a_chain.chain[p + q - 1];
      if (!lhs.leq(target)) {
        rep.holds = false;
        Vec w = row_outside(lhs, target).value();
        rep.violation = ChainViolation{
            {p, q},
            w,
            "H_" + std::to_string(p) + " ∘ A_" + std::to_string(q) +
                " is not inside A_" + std::to_string(p + q)};
        return rep;
      }
    }
  }
  return rep;
}

ChainCheckReport check_lemma_2_4(const StructureAlgebra& alg,
                                 std::size_t trials, std::uint64_t seed) {
  require_novikov(alg, "check_lemma_2_4");
  ChainCheckReport rep;
  rep.claim_id = "lemma-2.4";
  rep.params = "basis triples=" + std::to_string(alg.dim() * alg.dim() *
                                                 alg.dim()) +
               " random trials=" + std::to_string(trials) +
               " seed=" + std::to_string(seed);

  auto residuals = [&](const Vec& x, const Vec& y, const Vec& z)
      -> std::pair<Vec, Vec> {
    // [x,y]z + [y,z]x + [z,x]y  and  x[y,z] + y[z,x] + z[x,y]
    Vec r1 = vec_add(vec_add(alg.multiply(alg.bracket(x, y), z),
                             alg.multiply(alg.bracket(y, z), x)),
                     alg.multiply(alg.bracket(z, x), y));
    Vec r2 = vec_add(vec_add(alg.multiply(x, alg.bracket(y, z)),
                             alg.multiply(y, alg.bracket(z, x))),
                     alg.multiply(z, alg.bracket(x, y)));
    return {r1, r2};
  };
  auto report_violation = [&](std::vector<std::size_t> idx, const Vec& r,
                              const char* which) {
    rep.holds = false;
    rep.violation = ChainViolation{
        std::move(idx), r,
        std::string(which) + " has nonzero residual " + vec_str(r)};
  };

  std::size_t d = alg.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec x = unit_vec(d, i, alg.field());
        Vec y = unit_vec(d, j, alg.field());
        Vec z = unit_vec(d, k, alg.field());
        auto [r1, r2] = residuals(x, y, z);
        if (!vec_is_zero(r1)) {
          report_violation({i, j, k}, r1, "[x,y]z + [y,z]x + [z,x]y");
          return rep;
        }
        if (!vec_is_zero(r2)) {
          report_violation({i, j, k}, r2, "x[y,z] + y[z,x] + z[x,y]");
          return rep;
        }
      }

  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Vec x = random_vec(rng, d, alg.field());
    Vec y = random_vec(rng, d, alg.field());
    Vec z = random_vec(rng, d, alg.field());
    auto [r1, r2] = residuals(x, y, z);
    if (!vec_is_zero(r1)) {
      report_violation({t}, r1, "[x,y]z + [y,z]x + [z,x]y (random trial)");
      return rep;
    }
    if (!vec_is_zero(r2)) {
      report_violation({t}, r2, "x[y,z] + y[z,x] + z[x,y] (random trial)");
      return rep;
    }
  }
  return rep;
}

ChainCheckReport check_theorem_2_5(const StructureAlgebra& alg) {
  require_novikov(alg, "check_theorem_2_5");
  SeriesReport h = lower_central_chain_H(alg);
  std::size_t len = h.chain.size();
  Subspace zero = alg.zero_space();

  ChainCheckReport rep;
  rep.claim_id = "theorem-2.5";
  rep.params = "H chain length=" + std::to_string(len);

  for (std::size_t p = 1; p <= len; ++p) {
    for (std::size_t q = 1; q <= len; ++q) {
      const Subspace& hp = chain_term(h, zero, p);
      const Subspace& hq = chain_term(h, zero, q);
      const Subspace& target = chain_term(h, zero, p + q - 1);
      if (auto w = product_outside(alg, hp, hq, target, false)) {
        rep.holds = false;
        rep.violation = ChainViolation{
            {p, q},
            w->first,
            "H_" + std::to_string(p) + " H_" + std::to_string(q) +
                " is not inside H_" + std::to_string(p + q - 1) + ": " +
                w->second};
        return rep;
      }
    }
  }

  if (!h.terminated_at_zero) {
    rep.notes =
        "not of finite class; the H_2 nilpotency clause does not apply";
    return rep;
  }
  std::size_t cls = len - 1;
  const Subspace& h2 = chain_term(h, zero, 2);
  PowerChainReport pc = alg.power_chain(h2);
  if (!pc.nilpotent) {
    rep.holds = false;
    rep.violation = ChainViolation{
        {2},
        row_outside(pc.powers.back(), zero).value(),
        "power chain of H_2 does not reach {0}"};
    return rep;
  }
  if (pc.index > cls) {
    rep.holds = false;
    rep.violation = ChainViolation{
        {pc.index, cls},
        Vec{},
        "nilpotency index " + std::to_string(pc.index) +
            " of H_2 exceeds the class " + std::to_string(cls)};
    return rep;
  }
  rep.notes = "class=" + std::to_string(cls) +
              " H_2 nilpotency index=" + std::to_string(pc.index);
  return rep;
}

ChainCheckReport check_theorem_2_8(const StructureAlgebra& alg) {
  require_novikov(alg, "check_theorem_2_8");
  SeriesReport h = lower_central_chain_H(alg);
  SeriesReport lcs = alg.lie_lower_central_series();
  std::vector<Subspace> ids = lie_commutator_ideal_chain(alg);
  Subspace zero = alg.zero_space();

  ChainCheckReport rep;
  rep.claim_id = "theorem-2.8";
  rep.params = "H length=" + std::to_string(h.chain.size()) +
               " N_[i] length=" + std::to_string(lcs.chain.size());

  auto id_term = [&](std::size_t i) -> const Subspace& {
    if (i <= ids.size()) return ids[i - 1];
    return lcs.terminated_at_zero ? zero : ids.back();
  };

  std::size_t span = std::max(h.chain.size(), ids.size());
  for (std::size_t i = 1; i <= span; ++i) {
    const Subspace& lhs = id_term(i);
    const Subspace& rhs = chain_term(h, zero, i);
    if (lhs != rhs) {
      rep.holds = false;
      Vec w = row_outside(lhs, rhs).value_or(
          row_outside(rhs, lhs).value());
      rep.violation = ChainViolation{
          {i},
          w,
          "Id(N_[" + std::to_string(i) + "]) != H_" + std::to_string(i)};
      return rep;
    }
  }

  // product inclusion Id(N_[p]) Id(N_[q]) ⊆ Id(N_[p+q-1])
  for (std::size_t p = 1; p <= ids.size(); ++p) {
    for (std::size_t q = 1; q <= ids.size(); ++q) {
      if (auto w = product_outside(alg, id_term(p), id_term(q),
                                   id_term(p + q - 1), false)) {
        rep.holds = false;
        rep.violation = ChainViolation{
            {p, q},
            w->first,
            "Id(N_[" + std::to_string(p) + "]) Id(N_[" + std::to_string(q) +
                "]) is not inside Id(N_[" + std::to_string(p + q - 1) +
                "]): " + w->second};
        return rep;
      }
    }
  }
  return rep;
}

ChainCheckReport check_theorem_2_9(const StructureAlgebra& alg) {
  require_novikov(alg, "check_theorem_2_9");
  bool nil = alg.is_lie_nilpotent();
  std::optional<std::size_t> cls = class_of(alg);

  ChainCheckReport rep;
  rep.claim_id = "theorem-2.9";
  rep.params = std::string("lie_nilpotent=") + (nil ? "true" : "false") +
               " finite_class=" +
               (cls ? std::to_string(*cls) : std::string("none"));
  if (nil != cls.has_value()) {
    rep.holds = false;
    rep.violation = ChainViolation{
        {},
        Vec{},
        std::string("Lie nilpotency (") + (nil ? "true" : "false") +
            ") does not match finite class (" + (cls ? "true" : "false") +
            ")"};
    return rep;
  }
  if (nil) {
    Subspace nn = alg.ideal_closure(
        alg.bracket_space(alg.full_space(), alg.full_space()));
    if (!alg.is_nilpotent_subspace(nn)) {
      rep.holds = false;
      rep.violation = ChainViolation{
          {},
          row_outside(nn, alg.zero_space()).value_or(Vec{}),
          "Id([N, N]) is not nilpotent despite Lie nilpotency"};
      return rep;
    }
    rep.notes = "Id([N,N]) verified nilpotent";
  }
  return rep;
}

}  // namespace lienil
