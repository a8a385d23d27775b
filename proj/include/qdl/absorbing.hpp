#pragma once

#include "qdl/layout.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qdl {

// Census of (a, b) absorbing sets: a = number of variable nodes, b = number of
// odd-degree check neighbors. A variable set A is absorbing when every node of
// A has strictly more even-degree than odd-degree check neighbors in the
// subgraph induced by A and N(A).
struct AbsorbingProfile {
    std::map<std::pair<int, int>, long long> counts;  // (a, b) -> count
    bool connected_only = true;  // sets whose induced subgraph is connected
    std::string descriptor;

    long long total() const;
    long long count_for_a(int a) const;  // sum over b at fixed a
};

// 1 x n row of permutation blocks over F_2^ell: the graph is 2^ell disjoint
// stars K_{1,n}; every connected absorbing set is an even-size variable subset
// of one star. Per-a count 2^ell * C(n, a) for even a >= 2; total
// 2^ell * (2^(n-1) - 1).
AbsorbingProfile absorbing_count_1xn(unsigned ell, std::size_t n);

// Single all-ones dyadic block (signature all ones): the graph is one
// K_{2^ell, 2^ell}; absorbing sets are exactly the even-size variable subsets.
// Per-a count C(2^ell, a); total 2^(2^ell - 1) - 1.
AbsorbingProfile absorbing_count_allones(unsigned ell);

// Single dyadic block whose signature support is a k-dimensional subspace (or
// coset) of F_2^ell: the graph splits into 2^(ell-k) copies of
// K_{2^k, 2^k}. Per-a count 2^(ell-k) * C(2^k, a) for even a >= 2.
AbsorbingProfile absorbing_count_block_diagonal(unsigned ell, unsigned k);

// m x n grid where every cell is the same permutation block: the graph is
// 2^ell disjoint copies of K_{m,n}, so the connected count per even a is
// (number of components) * C(n, a). Two candidate multipliers circulate for
// this layout — the component count 2^ell and the block-column count n; they
// coincide only when n = 2^ell. Both are reported; `resolved` uses the
// component count, which the brute-force census confirms.
struct IdenticalBlocksCount {
    AbsorbingProfile resolved;            // multiplier = 2^ell (component count)
    long long multiplier_components = 0;  // 2^ell
    long long multiplier_alt = 0;         // n
    std::map<int, long long> per_a_alt;   // n * C(n, a) reading
};
IdenticalBlocksCount absorbing_count_identical_blocks(unsigned ell, std::size_t m,
                                                      std::size_t n);

// Connected-component decomposition of a Tanner graph with a completeness
// check: reports whether every component is a complete bipartite K_{m,n}.
struct BipartiteStructure {
    std::size_t component_count = 0;
    bool all_complete_bipartite = false;
    bool uniform_shape = false;     // all components share (checks, vars)
    std::size_t shape_checks = 0;   // valid when uniform_shape
    std::size_t shape_vars = 0;     // valid when uniform_shape
    std::vector<std::pair<std::size_t, std::size_t>> shapes;  // per component
};
BipartiteStructure complete_bipartite_decomposition(const TannerGraph& g);
BipartiteStructure complete_bipartite_decomposition(const Layout& l);

// Absorbing predicate for one candidate variable set.
struct AbsorbingCheck {
    bool absorbing = false;
    int b = 0;  // number of odd-degree check neighbors
};
AbsorbingCheck is_absorbing(const TannerGraph& g, const std::vector<std::uint32_t>& vars);

// Group the brute-force enumeration into an (a, b) census.
AbsorbingProfile absorbing_profile_bruteforce(const TannerGraph& g, int a_max,
                                              bool connected_only,
                                              long long step_budget = 500'000'000);

// Exact binomial coefficient; throws std::overflow_error if the value would
// not fit in long long.
long long binomial(std::size_t n, std::size_t k);

}  // namespace qdl
