#include "lienil/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "lienil/classify.hpp"
#include "lienil/structure_algebra.hpp"

namespace lienil {

namespace {

constexpr std::uint64_t kSweepBudget = 2000000;

// A labeled multigraph on n vertices is a nondecreasing sequence of pair
// codes i*n+j (edge from i to j).  It is canonical when no vertex
// permutation produces a lexicographically smaller sorted code sequence.
bool is_canonical(const std::vector<std::size_t>& codes, std::size_t n) {
  if (n < 2) return true;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> mapped(codes.size());
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (std::size_t k = 0; k < codes.size(); ++k) {
      std::size_t i = codes[k] / n, j = codes[k] % n;
      mapped[k] = perm[i] * n + perm[j];
    }
    std::sort(mapped.begin(), mapped.end());
    if (std::lexicographical_compare(mapped.begin(), mapped.end(),
                                     codes.begin(), codes.end()))
      return false;
  }
  return true;
}

Graph build_graph(const std::vector<std::size_t>& codes, std::size_t n) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (std::size_t k = 0; k < codes.size(); ++k)
    g.add_edge("e" + std::to_string(k), "v" + std::to_string(codes[k] / n),
               "v" + std::to_string(codes[k] % n));
  return g;
}

void gen_codes(std::size_t n, std::size_t max_edges,
               std::vector<std::size_t>& codes, std::size_t min_code,
               const std::function<void(const Graph&)>& fn) {
  if (is_canonical(codes, n)) fn(build_graph(codes, n));
  if (codes.size() == max_edges) return;
  for (std::size_t c = min_code; c < n * n; ++c) {
    codes.push_back(c);
    gen_codes(n, max_edges, codes, c, fn);
    codes.pop_back();
  }
}

std::uint64_t saturating_mul_div(std::uint64_t acc, std::uint64_t num,
                                 std::uint64_t den) {
  // acc * num / den without overflow for the binomial recurrence
  // C(k) = C(k-1) * (pairs + k - 1) / k (always divisible).
  using u128 = unsigned __int128;
  u128 wide = static_cast<u128>(acc) * num / den;
  if (wide > std::numeric_limits<std::uint64_t>::max())
    return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(wide);
}

}  // namespace

void enumerate_small_graphs(std::size_t max_vertices, std::size_t max_edges,
                            const std::function<void(const Graph&)>& fn) {
  for (std::size_t n = 0; n <= max_vertices; ++n) {
    std::vector<std::size_t> codes;
    gen_codes(n, max_edges, codes, 0, fn);
  }
}

std::uint64_t sweep_size_estimate(std::size_t max_vertices,
                                  std::size_t max_edges) {
  const std::uint64_t sat = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  for (std::size_t n = 0; n <= max_vertices; ++n) {
    std::uint64_t pairs = static_cast<std::uint64_t>(n) * n;
    std::uint64_t multisets = 1;  // e = 0
    std::uint64_t count = 1;
    for (std::size_t e = 1; e <= max_edges && pairs > 0; ++e) {
      count = saturating_mul_div(count, pairs + e - 1, e);
      if (count == sat || sat - multisets < count) return sat;
      multisets += count;
    }
    if (sat - total < multisets) return sat;
    total += multisets;
  }
  return total;
}

std::vector<Count> oracle_block_sizes(const Graph& g) {
  std::vector<Count> sizes;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.is_sink(v)) sizes.push_back(count_paths_ending_at(g, v));
  for (const auto& c : distinct_cycles(g))
    sizes.push_back(count_paths_to_cycle(g, c));
  for (const auto& v : g.vertices()) {
    if (v.pendant_sinks != 0)
      sizes.push_back(Count::of(1) +
                      count_paths_ending_at(g, *g.find_vertex(v.name)));
    if (v.pendant_loops != 0)
      sizes.push_back(Count::of(1) +
                      count_paths_ending_at(g, *g.find_vertex(v.name)));
  }
  return sizes;
}

namespace {

struct AlgebraVerdicts {
  bool solvable = true;
  bool commutator_nilpotent = true;  // [L, L] is a nilpotent Lie algebra
};

// is_lie_solvable of ⊕ gl(size_i, F_p), plus the equivalent commutator
// route, memoized by (sorted sizes, p).
class OracleCache {
 public:
  AlgebraVerdicts verdicts(std::vector<std::uint64_t> sizes,
                           std::uint64_t p) {
    std::sort(sizes.begin(), sizes.end());
    auto key = std::make_pair(sizes, p);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    AlgebraVerdicts v;
    if (!sizes.empty()) {
      std::vector<StructureAlgebra> parts;
      for (std::uint64_t s : sizes)
        parts.push_back(StructureAlgebra::gl(static_cast<std::size_t>(s),
                                             FieldTag::prime(p)));
      StructureAlgebra sum = StructureAlgebra::direct_sum(parts);
      v.solvable = sum.is_lie_solvable();
      Subspace d2 = sum.bracket_space(sum.full_space(), sum.full_space());
      v.commutator_nilpotent =
          sum.lcs_of_subspace(d2).terminated_at_zero;
    }
    ++builds;
    cache_.emplace(std::move(key), v);
    return v;
  }

  std::uint64_t builds = 0;

 private:
  std::map<std::pair<std::vector<std::uint64_t>, std::uint64_t>,
           AlgebraVerdicts>
      cache_;
};

void record(SweepResult& res, bool& flag, const Graph& g,
            const std::string& what) {
  flag = false;
  std::ostringstream msg;
  msg << what << " in graph:\n" << serialize_graph(g);
  res.mismatches.push_back(msg.str());
}

}  // namespace

SweepResult run_oracle_sweep(const SweepOptions& opts) {
  std::uint64_t estimate = sweep_size_estimate(opts.max_vertices,
                                               opts.max_edges);
  if (estimate > kSweepBudget)
    throw precondition_error(
        "sweep bounds too large: about " + std::to_string(estimate) +
        " labeled multigraphs on up to " + std::to_string(opts.max_vertices) +
        " vertices / " + std::to_string(opts.max_edges) +
        " edges exceed the budget of " + std::to_string(kSweepBudget));
  for (std::uint64_t p : opts.primes)
    (void)FieldTag::prime(p);  // validates primality up front

  SweepResult res;
  OracleCache cache;
  enumerate_small_graphs(opts.max_vertices, opts.max_edges, [&](const Graph& g) {
    ++res.graphs;
    auto at2 = classify(g, Characteristic::two);
    auto not2 = classify(g, Characteristic::not_two);
    auto sizes = oracle_block_sizes(g);
    bool all_one = true, all_le2 = true, all_finite = true;
    for (const auto& s : sizes) {
      all_one = all_one && s == 1;
      all_le2 = all_le2 && s.leq(2);
      all_finite = all_finite && s.is_finite();
    }

    if (at2.solvable) ++res.solvable_char2;
    if (not2.solvable) ++res.solvable_not2;
    if (at2.nilpotent) ++res.nilpotent;

    // Shape / block-size / nilpotency equivalences, plus the implications
    // between the solvability verdicts.
    bool shape = is_isolated_and_loops(g);
    if (at2.nilpotent != shape || not2.nilpotent != shape)
      record(res, res.nilpotency_consistent, g,
             "nilpotent verdict disagrees with the isolated-and-loops shape");
    if (at2.nilpotent != all_one)
      record(res, res.nilpotency_consistent, g,
             "nilpotent verdict disagrees with the all-blocks-size-1 test");
    if (at2.nilpotent && !(at2.solvable && not2.solvable))
      record(res, res.nilpotency_consistent, g,
             "nilpotent but not solvable");
    if (not2.solvable != at2.nilpotent)
      record(res, res.nilpotency_consistent, g,
             "solvable away from char 2 must equal the nilpotency verdict");
    if (not2.solvable && !at2.solvable)
      record(res, res.nilpotency_consistent, g,
             "solvable away from char 2 but not at char 2");
    if ((at2.solvable || not2.solvable) && !at2.no_exit)
      record(res, res.nilpotency_consistent, g, "solvable graph has an exit");

    if (!at2.no_exit) return;
    ++res.no_exit_graphs;
    if (!all_finite) {
      record(res, res.oracle_consistent, g,
             "no-exit graph produced an infinite block size");
      return;
    }
    if (at2.solvable != all_le2)
      record(res, res.oracle_consistent, g,
             "char-2 classifier disagrees with the block sizes");
    if (not2.solvable != all_one)
      record(res, res.oracle_consistent, g,
             "char-not-2 classifier disagrees with the block sizes");

    std::vector<std::uint64_t> finite_sizes;
    for (const auto& s : sizes) finite_sizes.push_back(s.value());
    for (std::uint64_t p : opts.primes) {
      auto v = cache.verdicts(finite_sizes, p);
      bool expected = p == 2 ? at2.solvable : not2.solvable;
      if (v.solvable != expected)
        record(res, res.oracle_consistent, g,
               "classifier disagrees with is_lie_solvable of the block "
               "algebra over F_" + std::to_string(p));
      if (v.commutator_nilpotent != v.solvable)
        record(res, res.oracle_consistent, g,
               "['L','L'] nilpotency route disagrees with solvability over "
               "F_" + std::to_string(p));
    }
  });
  res.oracle_algebras = cache.builds;
  return res;
}

}  // namespace lienil
