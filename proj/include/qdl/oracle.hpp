#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qdl/bits.hpp"
#include "qdl/layout.hpp"

// Exhaustive reference computations on small instances: exact cycle counts,
// girth, absorbing-set search, minimum distance and CSS parameters. These are
// deliberately simple enumerations; every closed-form routine elsewhere in the
// library is tested against them. Budgets are hard errors, never silent
// truncation: a reference count that might be wrong is worthless.

namespace qdl {

// k -> number of k-cycles (distinct vertices and edges, counted once,
// unoriented and without a distinguished base point)
using CycleInventory = std::map<int, long long>;

inline constexpr long long kDefaultStepBudget = 500'000'000;

// Exact census of all cycles of length <= k_max (k_max <= 10). DFS rooted at
// the smallest vertex of each cycle; each cycle is seen once per direction.
CycleInventory enumerate_cycles(const TannerGraph& g, int k_max,
                                long long step_budget = kDefaultStepBudget);

// Shortest cycle length, or -1 if the graph is acyclic. Per-vertex BFS with
// the tree edge excluded; exact because a BFS started on a shortest cycle
// realizes its length.
int girth_bfs(const TannerGraph& g);

struct AbsorbingSet {
    std::vector<std::uint32_t> vars;  // variable nodes, increasing
    int b = 0;                        // number of odd-degree check neighbors
};

// All variable subsets A with 1 <= |A| <= a_max such that every v in A has
// strictly more even-degree than odd-degree check neighbors (degrees measured
// in the subgraph induced by A and its check neighborhood). With
// connected_only, that induced subgraph must additionally be connected.
std::vector<AbsorbingSet> absorbing_bruteforce(const TannerGraph& g, int a_max,
                                               bool connected_only,
                                               long long step_budget = kDefaultStepBudget);

// Minimum weight of a nonzero kernel vector of h, or nullopt for the trivial
// code ker(h) = {0}. Enumerates all 2^k - 1 combinations (k <= max_kernel_dim,
// else throws).
std::optional<int> min_distance(const BitMatrix& h, int max_kernel_dim = 24);

struct CssParams {
    int n = 0;
    int k = 0;
    std::optional<int> d;  // absent when k = 0 or the coset walk was over budget
};

// Exact CSS parameters of the pair (hx, hz) with hz·hxᵀ = 0 (throws
// otherwise). k = n - rank(hx) - rank(hz); d = min weight over
// (ker hx \ rowspace hz) ∪ (ker hz \ rowspace hx), enumerated exhaustively
// while both kernel dimensions stay <= max_kernel_dim, else d is left unset.
CssParams css_params(const BitMatrix& hx, const BitMatrix& hz,
                     int max_kernel_dim = 24);

}  // namespace qdl
