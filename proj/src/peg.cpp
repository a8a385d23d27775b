#include "qdl/peg.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>

#include "qdl/cyclecount.hpp"
#include "qdl/rng.hpp"

namespace qdl {

namespace {

std::optional<std::uint32_t> assigned_shift(const Layout& l, std::size_t i, std::size_t j) {
    const Cell& c = l.cell(i, j);
    if (!c.is_assigned()) return std::nullopt;
    if (c.shift_set().size() != 1)
        throw std::invalid_argument("forbidden_set: layout has a multi-shift cell");
    return c.shift_set()[0];
}

}  // namespace

ForbiddenSet forbidden_set(const Layout& l, std::size_t row, std::size_t col, int g) {
    if (g != 4 && g != 6) throw std::invalid_argument("forbidden_set: g must be 4 or 6");
    if (!l.cell(row, col).is_unset())
        throw std::invalid_argument("forbidden_set: cell is already set");
    const std::size_t nc = l.n_c(), nv = l.n_v();
    std::vector<std::uint32_t> vals;

    // quadrilaterals through (row, col): rows {row, i}, columns {col, u}
    for (std::size_t i = 0; i < nc; ++i) {
        if (i == row) continue;
        auto a = assigned_shift(l, i, col);
        if (!a) continue;
        for (std::size_t u = 0; u < nv; ++u) {
            if (u == col) continue;
            auto b = assigned_shift(l, i, u);
            auto c = assigned_shift(l, row, u);
            if (b && c) vals.push_back(*a ^ *b ^ *c);
        }
    }

    if (g == 6) {
        // hexagons through (row, col): rows {row, i, j}, columns {col, u, m},
        // cell chain (i,col)-(i,u)-(j,u)-(j,m)-(row,m)
        for (std::size_t i = 0; i < nc; ++i) {
            if (i == row) continue;
            auto a = assigned_shift(l, i, col);
            if (!a) continue;
            for (std::size_t j = 0; j < nc; ++j) {
                if (j == row || j == i) continue;
                for (std::size_t u = 0; u < nv; ++u) {
                    if (u == col) continue;
                    auto b = assigned_shift(l, i, u);
                    auto c = assigned_shift(l, j, u);
                    if (!b || !c) continue;
                    for (std::size_t m = 0; m < nv; ++m) {
                        if (m == col || m == u) continue;
                        auto d = assigned_shift(l, j, m);
                        auto e = assigned_shift(l, row, m);
                        if (d && e) vals.push_back(*a ^ *b ^ *c ^ *d ^ *e);
                    }
                }
            }
        }
    }

    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return {row, col, g, std::move(vals)};
}

std::vector<std::uint32_t> forbidden_complement(const Layout& l, std::size_t row,
                                                std::size_t col, int g) {
    ForbiddenSet f = forbidden_set(l, row, col, g);
    std::vector<std::uint32_t> out;
    const std::uint32_t n = std::uint32_t{1} << l.ell();
    auto it = f.values.begin();
    for (std::uint32_t v = 0; v < n; ++v) {
        while (it != f.values.end() && *it < v) ++it;
        if (it == f.values.end() || *it != v) out.push_back(v);
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> peg_ordering(const PegConfig& cfg) {
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    pos.reserve(cfg.n_c * cfg.n_v);
    if (cfg.ordering == PegOrdering::row_major) {
        for (std::size_t l = 0; l < cfg.n_c; ++l)
            for (std::size_t k = 0; k < cfg.n_v; ++k) pos.push_back({l, k});
    } else {
        for (std::size_t k = 0; k < cfg.n_v; ++k)
            for (std::size_t l = 0; l < cfg.n_c; ++l) pos.push_back({l, k});
    }
    if (cfg.ordering == PegOrdering::random_order) {
        // Fisher-Yates driven by a dedicated stream so the shuffle does not
        // disturb the value-selection draws
        SplitMix gen(splitmix64(cfg.seed ^ 0x6f72646572ULL));
        for (std::size_t i = pos.size(); i > 1; --i)
            std::swap(pos[i - 1], pos[bounded(gen, i)]);
    }
    return pos;
}

namespace {

// number of shortest cycles this assignment could have introduced
long long candidate_score(Layout& l, std::size_t row, std::size_t col,
                          std::uint32_t v, int branch_g) {
    l.set_cell(row, col, Cell::singleton(v));
    long long s = 0;
    switch (branch_g) {
        case 6: s = count8_quasi(l); break;
        case 4: s = count6_quasi(l); break;
        default: s = count4_quasi(l); break;
    }
    l.set_cell(row, col, Cell::unset());
    return s;
}

std::vector<std::uint32_t> score_band(Layout& l, std::size_t row, std::size_t col,
                                      const std::vector<std::uint32_t>& candidates,
                                      int branch_g, PegStrategy strategy) {
    std::vector<long long> scores(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i)
        scores[i] = candidate_score(l, row, col, candidates[i], branch_g);
    long long target;
    if (strategy == PegStrategy::min_cycles) {
        target = *std::min_element(scores.begin(), scores.end());
    } else if (strategy == PegStrategy::max_cycles) {
        target = *std::max_element(scores.begin(), scores.end());
    } else {  // avg_cycles: the floor-median score
        std::vector<long long> sorted = scores;
        std::sort(sorted.begin(), sorted.end());
        target = sorted[(sorted.size() - 1) / 2];
    }
    std::vector<std::uint32_t> band;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (scores[i] == target) band.push_back(candidates[i]);
    return band;
}

Layout construct(const PegConfig& cfg) {
    if (cfg.n_c == 0 || cfg.n_v == 0)
        throw std::invalid_argument("peg: empty grid");
    Layout l(cfg.ell, cfg.n_c, cfg.n_v, Cell::unset());
    SplitMix gen(splitmix64(cfg.seed));
    const std::uint32_t full = std::uint32_t{1} << cfg.ell;
    const bool scored = cfg.strategy != PegStrategy::uniform;

    for (auto [row, col] : peg_ordering(cfg)) {
        std::vector<std::uint32_t> admissible = forbidden_complement(l, row, col, 6);
        int branch_g = 6;
        if (admissible.empty()) {
            admissible = forbidden_complement(l, row, col, 4);
            branch_g = 4;
        }
        std::uint32_t pick;
        if (!admissible.empty()) {
            if (scored) {
                auto band = score_band(l, row, col, admissible, branch_g, cfg.strategy);
                pick = band[bounded(gen, band.size())];
            } else {
                pick = admissible[bounded(gen, admissible.size())];
            }
        } else if (scored && !cfg.literal_fallback) {
            std::vector<std::uint32_t> all(full);
            for (std::uint32_t v = 0; v < full; ++v) all[v] = v;
            auto band = score_band(l, row, col, all, 0, cfg.strategy);
            pick = band[bounded(gen, band.size())];
        } else {
            pick = static_cast<std::uint32_t>(bounded(gen, full));
        }
        l.set_cell(row, col, Cell::singleton(pick));
    }
    return l;
}

}  // namespace

Layout peg_construct(const PegConfig& cfg) {
    PegConfig c = cfg;
    c.strategy = PegStrategy::uniform;
    return construct(c);
}

Layout peg_construct_min_cycles(const PegConfig& cfg) {
    if (cfg.strategy == PegStrategy::uniform)
        throw std::invalid_argument("peg_construct_min_cycles: pick a scoring strategy");
    return construct(cfg);
}

}  // namespace qdl
