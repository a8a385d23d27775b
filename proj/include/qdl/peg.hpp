#pragma once

#include <cstdint>
#include <vector>

#include "qdl/layout.hpp"

// Progressive cell-by-cell construction of permutation layouts. Each step
// computes the set of shift values that would close a short cycle (length
// <= 4 or <= 6) through the cell being placed, given the cells already
// assigned, and draws from the complement at the largest achievable target.
// A cycle-scoring variant additionally ranks the admissible candidates by
// the number of shortest creatable cycles and draws from the best band.

namespace qdl {

struct ForbiddenSet {
    std::size_t row = 0, col = 0;
    int g = 4;                          // target girth bound: 4 or 6
    std::vector<std::uint32_t> values;  // sorted; assigning any of them makes girth <= g
};

// Shift values that close a cycle of length <= g through cell (row, col),
// computed over the already-assigned singleton cells only. The cell itself
// must be unset.
ForbiddenSet forbidden_set(const Layout& l, std::size_t row, std::size_t col, int g);

// admissible = [0, 2^ell) minus the forbidden values
std::vector<std::uint32_t> forbidden_complement(const Layout& l, std::size_t row,
                                                std::size_t col, int g);

enum class PegOrdering { column_major, row_major, random_order };
enum class PegStrategy { uniform, min_cycles, max_cycles, avg_cycles };

struct PegConfig {
    std::size_t n_c = 0, n_v = 0;
    unsigned ell = 0;
    PegOrdering ordering = PegOrdering::column_major;
    PegStrategy strategy = PegStrategy::uniform;
    std::uint64_t seed = 0;
    // Restores the literal fallback branch, which scores
    // candidates but then draws from the whole shift space anyway. Off by
    // default: the fallback draws from the scored band like the main branch.
    bool literal_fallback = false;
};

// Girth-greedy construction: per cell, try target 6 then 4; draw uniformly
// from the admissible values, or from all of [0, 2^ell) when even target 4
// is unachievable. Deterministic for a fixed config (including seed).
Layout peg_construct(const PegConfig& cfg);

// As peg_construct, but draws from the band of admissible candidates that
// minimizes (resp. maximizes, or sits at the floor-median of) the number of
// shortest cycles the assignment can introduce: 8-cycle score at target 6,
// 6-cycle score at target 4, 4-cycle score in the fallback. Scores are the
// closed-form counts on the partial layout with the candidate filled in;
// unset cells count as zero blocks.
Layout peg_construct_min_cycles(const PegConfig& cfg);

// The position sequence the ordering visits; exposed for tests.
std::vector<std::pair<std::size_t, std::size_t>> peg_ordering(const PegConfig& cfg);

}  // namespace qdl
