#include "qdl/css.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "qdl/cyclecount.hpp"

namespace qdl {

namespace {

Cell cell_from_dyadic(const DyadicMatrix& d) {
    if (d.is_zero()) return Cell::zero();
    return Cell::shifts(d.support());
}

Layout single_block_layout(const DyadicMatrix& d) {
    Layout l(d.ell(), 1, 1, cell_from_dyadic(d));
    return l;
}

void require_all_assigned(const Layout& l, const char* what) {
    for (std::size_t i = 0; i < l.n_c(); ++i)
        for (std::size_t j = 0; j < l.n_v(); ++j)
            if (l.cell(i, j).is_unset())
                throw std::invalid_argument(std::string(what) + ": grid has unset cells");
}

CssPair make_verified(Layout hx, Layout hz, const char* what) {
    CssPair pair{std::move(hx), std::move(hz), false};
    if (!css_commutes(pair.hx, pair.hz))
        throw std::logic_error(std::string(what) + ": product H_X H_Z^T is nonzero");
    pair.commute_verified = true;
    return pair;
}

}  // namespace

bool css_commutes(const Layout& hx, const Layout& hz) {
    if (hx.ell() != hz.ell() || hx.n_v() != hz.n_v()) return false;
    return mat_mul(hx.expand(), hz.expand().transposed()).is_zero();
}

CssParams css_pair_params(const CssPair& pair, int max_kernel_dim) {
    return css_params(pair.hx.expand(), pair.hz.expand(), max_kernel_dim);
}

std::string css_pair_to_json(const CssPair& pair) {
    nlohmann::json j;
    j["hx"] = nlohmann::json::parse(pair.hx.to_json());
    j["hz"] = nlohmann::json::parse(pair.hz.to_json());
    j["commute_verified"] = pair.commute_verified;
    return j.dump(2);
}

CssPair css_pair_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CssPair pair;
    pair.hx = Layout::from_json(j.at("hx").dump());
    pair.hz = Layout::from_json(j.at("hz").dump());
    pair.commute_verified = j.value("commute_verified", false);
    if (pair.commute_verified && !css_commutes(pair.hx, pair.hz))
        throw std::invalid_argument("css_pair_from_json: claimed commuting pair does not commute");
    return pair;
}

// ---------------------------------------------------------------------------

std::vector<std::uint32_t> cyclic_permutation(std::size_t omega) {
    std::vector<std::uint32_t> p(omega);
    for (std::size_t k = 0; k < omega; ++k) p[k] = static_cast<std::uint32_t>((k + 1) % omega);
    return p;
}

unsigned long long permutation_order(const std::vector<std::uint32_t>& perm) {
    std::size_t n = perm.size();
    std::vector<char> seen(n, 0);
    for (std::uint32_t v : perm)
        if (v >= n || seen[v]++) throw std::invalid_argument("permutation_order: not a permutation");
    std::fill(seen.begin(), seen.end(), 0);
    unsigned long long order = 1;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        unsigned long long len = 0;
        for (std::size_t v = s; !seen[v]; v = perm[v]) {
            seen[v] = 1;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

Construction1Result construction_main(unsigned ell, const std::vector<std::uint32_t>& x,
                                      const std::vector<std::uint32_t>& y,
                                      const std::vector<std::uint32_t>& sigma,
                                      const std::vector<std::uint32_t>& tau) {
    return construction_main_rows(ell, x, y, sigma, tau, x.size());
}

Construction1Result construction_main_rows(unsigned ell, const std::vector<std::uint32_t>& x,
                                           const std::vector<std::uint32_t>& y,
                                           const std::vector<std::uint32_t>& sigma,
                                           const std::vector<std::uint32_t>& tau,
                                           std::size_t rows) {
    std::size_t omega = x.size();
    if (omega == 0 || y.size() != omega || sigma.size() != omega || tau.size() != omega)
        throw std::invalid_argument("construction_main: x, y, sigma, tau must share length omega >= 1");
    if (permutation_order(sigma) != omega || permutation_order(tau) != omega)
        throw std::invalid_argument("construction_main: sigma and tau must have order omega");
    if (rows == 0 || rows > omega)
        throw std::invalid_argument("construction_main: rows must be in 1..omega");
    std::uint32_t mask = (ell >= 32) ? ~0u : ((1u << ell) - 1);
    for (std::uint32_t v : x)
        if (v > mask) throw std::invalid_argument("construction_main: x shift out of range");
    for (std::uint32_t v : y)
        if (v > mask) throw std::invalid_argument("construction_main: y shift out of range");

    // sigma_pow[i][j] = sigma applied i times to j (block row i uses this).
    auto powers = [omega, rows](const std::vector<std::uint32_t>& p) {
        std::vector<std::vector<std::uint32_t>> pw(rows, std::vector<std::uint32_t>(omega));
        for (std::size_t j = 0; j < omega; ++j) pw[0][j] = static_cast<std::uint32_t>(j);
        for (std::size_t i = 1; i < rows; ++i)
            for (std::size_t j = 0; j < omega; ++j) pw[i][j] = p[pw[i - 1][j]];
        return pw;
    };
    auto sp = powers(sigma), tp = powers(tau);

    Layout hx(ell, rows, 2 * omega, Cell::unset());
    Layout hz(ell, rows, 2 * omega, Cell::unset());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < omega; ++j) {
            hx.set_cell(i, j, Cell::singleton(x[sp[i][j]]));
            hx.set_cell(i, omega + j, Cell::singleton(y[sp[i][j]]));
            hz.set_cell(i, j, Cell::singleton(y[tp[i][j]]));
            hz.set_cell(i, omega + j, Cell::singleton(x[tp[i][j]]));
        }

    // Block (i, j) of H_X H_Z^T vanishes iff the combined label multiset has
    // even multiplicities.
    Construction1Result out;
    out.terms.ok = true;
    for (std::size_t i = 0; i < rows && out.terms.ok; ++i)
        for (std::size_t j = 0; j < rows && out.terms.ok; ++j) {
            std::unordered_map<std::uint32_t, int> mult;
            for (std::size_t k = 0; k < omega; ++k) {
                ++mult[x[sp[i][k]] ^ y[tp[j][k]]];
                ++mult[y[sp[i][k]] ^ x[tp[j][k]]];
            }
            std::vector<std::uint32_t> odd;
            for (const auto& [label, m] : mult)
                if (m % 2) odd.push_back(label);
            if (!odd.empty()) {
                std::sort(odd.begin(), odd.end());
                out.terms = TermDiagnostic{false, i, j, std::move(odd)};
            }
        }

    out.pair.hx = std::move(hx);
    out.pair.hz = std::move(hz);
    bool matrix_zero = css_commutes(out.pair.hx, out.pair.hz);
    if (matrix_zero != out.terms.ok)
        throw std::logic_error("construction_main: term condition disagrees with expansion");
    out.pair.commute_verified = matrix_zero;
    return out;
}

ShiftFamilySample sample_commuting_shifts(unsigned ell, std::size_t omega, SplitMix& gen) {
    if (omega == 0) throw std::invalid_argument("sample_commuting_shifts: omega >= 1");
    std::uint64_t n = std::uint64_t{1} << ell;
    ShiftFamilySample s;
    s.x.resize(omega);
    s.y.resize(omega);
    auto draw = [&] { return static_cast<std::uint32_t>(bounded(gen, n)); };
    if (omega <= 2) {  // every choice commutes
        for (auto& v : s.x) v = draw();
        for (auto& v : s.y) v = draw();
        return s;
    }
    std::uint64_t families = (omega % 2 == 0) ? 4 : 3;
    switch (bounded(gen, families)) {
        case 0:  // y = x
            for (auto& v : s.x) v = draw();
            s.y = s.x;
            break;
        case 1: {  // constant x
            std::uint32_t c = draw();
            std::fill(s.x.begin(), s.x.end(), c);
            for (auto& v : s.y) v = draw();
            break;
        }
        case 2: {  // constant y
            for (auto& v : s.x) v = draw();
            std::uint32_t c = draw();
            std::fill(s.y.begin(), s.y.end(), c);
            break;
        }
        default:  // even omega: y = x rotated by omega/2 (needs cyclic sigma = tau)
            for (auto& v : s.x) v = draw();
            for (std::size_t k = 0; k < omega; ++k) s.y[k] = s.x[(k + omega / 2) % omega];
            break;
    }
    return s;
}

std::vector<std::vector<std::uint32_t>> order_omega_permutations(std::size_t omega) {
    if (omega == 0 || omega > 8)
        throw std::invalid_argument("order_omega_permutations: omega must be in 1..8");
    std::vector<std::uint32_t> p(omega);
    std::iota(p.begin(), p.end(), 0u);
    std::vector<std::vector<std::uint32_t>> out;
    do {
        if (permutation_order(p) == omega) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

MainOptimizeResult optimize_construction_main(unsigned ell, std::size_t omega, std::size_t rows,
                                              std::uint64_t seed, long long commuting_samples,
                                              long long max_tries) {
    if (ell > 16) throw std::invalid_argument("optimize_construction_main: ell must be <= 16");
    if (rows == 0 || rows > omega)
        throw std::invalid_argument("optimize_construction_main: rows must be in 1..omega");
    if (commuting_samples < 1)
        throw std::invalid_argument("optimize_construction_main: commuting_samples >= 1");
    auto perms = order_omega_permutations(omega);
    if (max_tries <= 0) max_tries = commuting_samples * 4096;
    std::uint64_t n = std::uint64_t{1} << ell;
    SplitMix gen(splitmix64(seed ^ 0x6d61696eULL));

    // Leading rows x rows blocks of H_X H_Z^T vanish iff for each (i, j) the
    // labels {x[si(k)] ^ y[tj(k)]} u {y[si(k)] ^ x[tj(k)]} pair off.
    std::vector<std::uint32_t> labels(2 * omega);
    auto block_cancels = [&](const std::vector<std::uint32_t>& x,
                             const std::vector<std::uint32_t>& y,
                             const std::vector<std::uint32_t>& si,
                             const std::vector<std::uint32_t>& tj) {
        for (std::size_t k = 0; k < omega; ++k) {
            labels[2 * k] = x[si[k]] ^ y[tj[k]];
            labels[2 * k + 1] = y[si[k]] ^ x[tj[k]];
        }
        std::sort(labels.begin(), labels.end());
        for (std::size_t k = 0; k < labels.size(); k += 2)
            if (labels[k] != labels[k + 1]) return false;
        return true;
    };
    auto power_rows = [&](const std::vector<std::uint32_t>& p) {
        std::vector<std::vector<std::uint32_t>> pw(rows, std::vector<std::uint32_t>(omega));
        std::iota(pw[0].begin(), pw[0].end(), 0u);
        for (std::size_t i = 1; i < rows; ++i)
            for (std::size_t j = 0; j < omega; ++j) pw[i][j] = p[pw[i - 1][j]];
        return pw;
    };

    MainOptimizeResult best;
    bool have = false;
    std::vector<std::uint32_t> x(omega), y(omega);
    while (best.tries < max_tries && best.commuting_found < commuting_samples) {
        ++best.tries;
        for (auto& v : x) v = static_cast<std::uint32_t>(bounded(gen, n));
        for (auto& v : y) v = static_cast<std::uint32_t>(bounded(gen, n));
        const auto& sigma = perms[bounded(gen, perms.size())];
        const auto& tau = perms[bounded(gen, perms.size())];
        auto sp = power_rows(sigma), tp = power_rows(tau);
        bool ok = true;
        for (std::size_t i = 0; i < rows && ok; ++i)
            for (std::size_t j = 0; j < rows && ok; ++j) ok = block_cancels(x, y, sp[i], tp[j]);
        if (!ok) continue;
        ++best.commuting_found;
        auto built = construction_main_rows(ell, x, y, sigma, tau, rows);
        auto cx = cycle_census(built.pair.hx);
        auto cz = cycle_census(built.pair.hz);
        int g = std::min(cx.girth, cz.girth);
        long long mass;
        if (g >= 8) mass = cx.n8.value_or(0) + cz.n8.value_or(0);
        else if (g == 6) mass = cx.n6.value_or(0) + cz.n6.value_or(0);
        else mass = cx.n4.value_or(0) + cz.n4.value_or(0);
        if (!have || g > best.girth || (g == best.girth && mass < best.shortest_cycle_count)) {
            best.x = x;
            best.y = y;
            best.sigma = sigma;
            best.tau = tau;
            best.built = std::move(built);
            best.girth = g;
            best.shortest_cycle_count = mass;
            have = true;
        }
    }
    if (!have)
        throw std::runtime_error(
            "optimize_construction_main: no commuting candidate within the try budget");
    return best;
}

// ---------------------------------------------------------------------------

CssPair construction_bbs(unsigned ell, std::uint32_t base, const std::vector<std::uint32_t>& xs,
                         std::size_t rows) {
    std::size_t v = xs.size();
    if (v < 1) throw std::invalid_argument("construction_bbs: need at least one shift");
    if (rows < 1 || rows > 4) throw std::invalid_argument("construction_bbs: rows in 1..4");
    std::uint32_t mask = (ell >= 32) ? ~0u : ((1u << ell) - 1);
    if (base > mask) throw std::invalid_argument("construction_bbs: base shift out of range");
    for (std::uint32_t s : xs)
        if (s > mask) throw std::invalid_argument("construction_bbs: shift out of range");

    Layout full(ell, 4, 2 * v, Cell::unset());
    for (std::size_t t = 0; t < v; ++t) {
        full.set_cell(0, 2 * t, Cell::singleton(base));
        full.set_cell(0, 2 * t + 1, Cell::singleton(xs[t]));
        full.set_cell(1, 2 * t, Cell::singleton(xs[(t + v - 1) % v]));
        full.set_cell(1, 2 * t + 1, Cell::singleton(base));
        full.set_cell(2, 2 * t, Cell::singleton(base));
        full.set_cell(2, 2 * t + 1, Cell::singleton(xs[v - 1 - t]));
        full.set_cell(3, 2 * t, Cell::singleton(xs[(v - t) % v]));
        full.set_cell(3, 2 * t + 1, Cell::singleton(base));
    }
    Layout h(ell, rows, 2 * v, Cell::unset());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < 2 * v; ++j) h.set_cell(i, j, full.cell(i, j));
    return make_verified(h, h, "construction_bbs");
}

BbsSearchResult optimize_bbs(unsigned ell, std::size_t v, std::size_t rows, std::uint64_t seed,
                             int restarts) {
    if (restarts < 1) throw std::invalid_argument("optimize_bbs: restarts >= 1");
    std::uint64_t n = std::uint64_t{1} << ell;
    SplitMix gen(splitmix64(seed ^ 0x626273ULL));
    auto objective = [&](std::uint32_t base, const std::vector<std::uint32_t>& xs) {
        return count4_quasi(construction_bbs(ell, base, xs, rows).hx);
    };
    BbsSearchResult best;
    best.n4 = -1;
    for (int r = 0; r < restarts; ++r) {
        std::uint32_t base = static_cast<std::uint32_t>(bounded(gen, n));
        std::vector<std::uint32_t> xs(v);
        for (auto& s : xs) s = static_cast<std::uint32_t>(bounded(gen, n));
        long long cur = objective(base, xs);
        // coordinate descent over the v+1 shift slots
        bool improved = true;
        while (improved && cur > 0) {
            improved = false;
            for (std::size_t slot = 0; slot <= v; ++slot) {
                std::uint32_t orig = (slot == 0) ? base : xs[slot - 1];
                std::uint32_t pick = orig;
                long long pick_n4 = cur;
                for (std::uint32_t cand = 0; cand < n; ++cand) {
                    if (cand == orig) continue;
                    if (slot == 0)
                        base = cand;
                    else
                        xs[slot - 1] = cand;
                    long long c = objective(base, xs);
                    if (c < pick_n4) {
                        pick_n4 = c;
                        pick = cand;
                    }
                }
                if (slot == 0)
                    base = pick;
                else
                    xs[slot - 1] = pick;
                if (pick_n4 < cur) {
                    cur = pick_n4;
                    improved = true;
                }
            }
        }
        if (best.n4 < 0 || cur < best.n4 ||
            (cur == best.n4 && std::tie(base, xs) < std::tie(best.base, best.xs))) {
            best = BbsSearchResult{base, xs, cur};
        }
    }
    return best;
}

// ---------------------------------------------------------------------------

CssPair bicycle(const DyadicMatrix& d1, const DyadicMatrix& d2) {
    if (d1.ell() != d2.ell()) throw std::invalid_argument("bicycle: mismatched lifts");
    Layout h1(d1.ell(), 1, 2, Cell::unset());
    h1.set_cell(0, 0, cell_from_dyadic(d1));
    h1.set_cell(0, 1, cell_from_dyadic(d2));
    Layout h2(d1.ell(), 1, 2, Cell::unset());
    h2.set_cell(0, 0, cell_from_dyadic(d2));
    h2.set_cell(0, 1, cell_from_dyadic(d1));
    return make_verified(h1, h2, "bicycle");
}

Layout grid_transpose(const Layout& l) {
    Layout t(l.ell(), l.n_v(), l.n_c(), Cell::unset());
    for (std::size_t i = 0; i < l.n_c(); ++i)
        for (std::size_t j = 0; j < l.n_v(); ++j) t.set_cell(j, i, l.cell(i, j));
    return t;
}

CssPair hypergraph_product(const Layout& a, const Layout& b) {
    if (a.ell() != b.ell()) throw std::invalid_argument("hypergraph_product: mismatched lifts");
    require_all_assigned(a, "hypergraph_product");
    require_all_assigned(b, "hypergraph_product");
    unsigned ell = a.ell();
    std::size_t ma = a.n_c(), na = a.n_v(), mb = b.n_c(), nb = b.n_v();
    std::size_t cols = na * mb + ma * nb;

    Layout h1(ell, ma * mb, cols, Cell::zero());
    for (std::size_t i = 0; i < ma; ++i)
        for (std::size_t k = 0; k < mb; ++k) {
            for (std::size_t j = 0; j < na; ++j)  // A (x) I_mB
                h1.set_cell(i * mb + k, j * mb + k, a.cell(i, j));
            for (std::size_t l = 0; l < nb; ++l)  // I_mA (x) B
                h1.set_cell(i * mb + k, na * mb + i * nb + l, b.cell(k, l));
        }

    Layout h2(ell, na * nb, cols, Cell::zero());
    for (std::size_t j = 0; j < na; ++j)
        for (std::size_t l = 0; l < nb; ++l) {
            for (std::size_t k = 0; k < mb; ++k)  // I_nA (x) B^T
                h2.set_cell(j * nb + l, j * mb + k, b.cell(k, l));
            for (std::size_t i = 0; i < ma; ++i)  // A^T (x) I_nB
                h2.set_cell(j * nb + l, na * mb + i * nb + l, a.cell(i, j));
        }
    return make_verified(h1, h2, "hypergraph_product");
}

CssPair symmetric_css(const DyadicMatrix& d) {
    if (d.weight() % 2 != 0)
        throw std::invalid_argument("symmetric_css: signature weight must be even");
    return make_verified(single_block_layout(d), single_block_layout(d), "symmetric_css");
}

CssPair cross_pair(const DyadicMatrix& dx, const DyadicMatrix& dz) {
    if (dx.ell() != dz.ell()) throw std::invalid_argument("cross_pair: mismatched lifts");
    if (!(dx * dz).is_zero())
        throw std::invalid_argument("cross_pair: product D_x D_z is nonzero");
    return make_verified(single_block_layout(dx), single_block_layout(dz), "cross_pair");
}

// ---------------------------------------------------------------------------

std::optional<int> logical_min_weight_bounded(const BitMatrix& h, const BitMatrix& stabilizer,
                                              int w_max) {
    std::size_t m = h.rows(), n = h.cols();
    if (m > 64 || n > 64)
        throw std::invalid_argument("logical_min_weight_bounded: supports up to 64 rows/cols");
    if (stabilizer.cols() != n)
        throw std::invalid_argument("logical_min_weight_bounded: column mismatch");
    if (w_max < 1) return std::nullopt;

    // Column syndromes packed into 64-bit words.
    std::vector<std::uint64_t> col(n, 0);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (h.get(r, c)) col[c] |= std::uint64_t{1} << r;

    RowEchelon stab(n);
    for (std::size_t r = 0; r < stabilizer.rows(); ++r) stab.absorb(stabilizer.row(r));
    auto is_logical = [&](std::uint64_t mask) {
        BitVector v(n);
        for (std::size_t c = 0; c < n; ++c)
            if (mask >> c & 1) v.set(c, true);
        return !stab.contains(v);
    };

    // Any kernel vector of weight w <= w_max splits its support into two
    // parts of size <= ceil(w_max / 2) with equal partial syndromes; so
    // enumerate all column subsets up to that size once and match syndromes.
    int half = (w_max + 1) / 2;
    struct Entry {
        std::uint64_t syndrome;
        std::uint64_t mask;
    };
    std::vector<Entry> entries;
    std::vector<std::size_t> idx;
    std::vector<std::uint64_t> syn;
    // iterative subsets of size 0..half
    std::function<void(std::size_t, int)> rec = [&](std::size_t start, int depth) {
        std::uint64_t cur_syn = syn.empty() ? 0 : syn.back();
        std::uint64_t cur_mask = 0;
        for (std::size_t i : idx) cur_mask |= std::uint64_t{1} << i;
        entries.push_back({cur_syn, cur_mask});
        if (depth == half) return;
        for (std::size_t c = start; c < n; ++c) {
            idx.push_back(c);
            syn.push_back(cur_syn ^ col[c]);
            rec(c + 1, depth + 1);
            idx.pop_back();
            syn.pop_back();
        }
    };
    rec(0, 0);

    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.syndrome < b.syndrome;
    });

    int best = w_max + 1;
    std::unordered_set<std::uint64_t> seen;
    for (std::size_t lo = 0; lo < entries.size();) {
        std::size_t hi = lo;
        while (hi < entries.size() && entries[hi].syndrome == entries[lo].syndrome) ++hi;
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = i + 1; j < hi; ++j) {
                std::uint64_t mask = entries[i].mask ^ entries[j].mask;
                if (mask == 0) continue;
                int w = std::popcount(mask);
                if (w > w_max || w >= best) continue;
                if (!seen.insert(mask).second) continue;
                if (is_logical(mask)) best = w;
            }
        lo = hi;
    }
    if (best > w_max) return std::nullopt;
    return best;
}

QdPairSearch search_qd_pair(unsigned ell, std::size_t rows, std::size_t cols, int target_k,
                            int target_d, std::uint64_t seed, int budget) {
    if (ell > 5) throw std::invalid_argument("search_qd_pair: lift too large for the search");
    std::size_t N = std::size_t{1} << ell;
    std::size_t n = cols * N;
    if (target_k <= 0 || static_cast<std::size_t>(target_k) >= n ||
        (n - static_cast<std::size_t>(target_k)) % 2 != 0)
        throw std::invalid_argument("search_qd_pair: need 0 < target_k < n with n - k even");
    std::size_t target_rank = (n - static_cast<std::size_t>(target_k)) / 2;
    SplitMix gen(splitmix64(seed ^ 0x716470ULL));
    QdPairSearch out;

    // Grow a self-orthogonal quasi-dyadic H row by row: the first block row
    // uses even-weight cells (so it is orthogonal to itself), each later row
    // is a random solution of the orthogonality system against all previous
    // rows, kept only when its total weight is even. H serves as both H_X and
    // H_Z, so k = n - 2*rank(H).
    for (out.attempts = 1; out.attempts <= budget; ++out.attempts) {
        std::vector<BitVector> zrows;  // concatenated block signatures, cols*N bits
        BitVector first(cols * N);
        for (std::size_t j = 0; j < cols; ++j) {
            std::size_t w = (bounded(gen, 4) == 0 && N >= 4) ? 4 : 2;
            BitVector s(N);
            while (s.weight() < w) s.set(bounded(gen, N), true);
            for (std::size_t t = 0; t < N; ++t)
                if (s.get(t)) first.set(j * N + t, true);
        }
        zrows.push_back(first);
        bool ok = true;
        while (zrows.size() < rows && ok) {
            BitMatrix con(zrows.size() * N, cols * N);
            for (std::size_t p = 0; p < zrows.size(); ++p)
                for (std::size_t j = 0; j < cols; ++j)
                    for (std::size_t r = 0; r < N; ++r)
                        for (std::size_t s = 0; s < N; ++s)
                            if (zrows[p].get(j * N + (r ^ s))) con.set(p * N + r, j * N + s, true);
            auto basis = kernel_basis(con);
            if (basis.empty()) {
                ok = false;
                break;
            }
            BitVector z(cols * N);
            for (const auto& b : basis)
                if (bounded(gen, 2)) z ^= b;
            if (z.is_zero() || z.weight() % 2 != 0) {
                ok = false;
                break;
            }
            zrows.push_back(z);
        }
        if (!ok) continue;

        Layout h(ell, rows, cols, Cell::unset());
        std::vector<char> col_zero(cols, 1);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                std::vector<std::uint32_t> supp;
                for (std::size_t t = 0; t < N; ++t)
                    if (zrows[i].get(j * N + t)) supp.push_back(static_cast<std::uint32_t>(t));
                if (!supp.empty()) col_zero[j] = 0;
                h.set_cell(i, j, supp.empty() ? Cell::zero() : Cell::shifts(supp));
            }
        if (std::find(col_zero.begin(), col_zero.end(), 1) != col_zero.end()) continue;

        BitMatrix hm = h.expand();
        if (!mat_mul(hm, hm.transposed()).is_zero())
            throw std::logic_error("search_qd_pair: grown matrix is not self-orthogonal");
        if (rank(hm) != target_rank) continue;
        CssParams p = css_params(hm, hm);
        if (p.k == target_k && p.d && *p.d == target_d) {
            out.found = true;
            out.pair = CssPair{h, h, true};
            out.params = p;
            return out;
        }
    }
    out.attempts = budget;
    return out;
}

BicycleSearch search_bicycle(unsigned ell, int target_k, int target_d, std::uint64_t seed,
                             int budget) {
    std::size_t N = std::size_t{1} << ell;
    if (N > 32) throw std::invalid_argument("search_bicycle: lift too large for the search");
    SplitMix gen(splitmix64(seed ^ 0x626379ULL));
    BicycleSearch out;

    auto random_even_signature = [&] {
        BitVector s(N);
        std::size_t w = 0;
        for (std::size_t t = 0; t < N; ++t)
            if (bounded(gen, 2)) {
                s.set(t, true);
                ++w;
            }
        if (w % 2) s.flip(0);
        return s;
    };

    for (out.attempts = 1; out.attempts <= budget; ++out.attempts) {
        DyadicMatrix d1(ell, random_even_signature());
        DyadicMatrix d2(ell, random_even_signature());
        if (d1.is_zero() || d2.is_zero()) continue;
        // k depends only on the kernel intersection:
        // k = 2*dim(ker d1 ∩ ker d2) = 2*(N - rank([D1; D2]))
        BitMatrix stacked = BitMatrix::vconcat(d1.expand(), d2.expand());
        std::size_t inter = N - rank(stacked);
        if (2 * inter != static_cast<std::size_t>(target_k)) continue;

        CssPair pair = bicycle(d1, d2);
        BitMatrix hx = pair.hx.expand(), hz = pair.hz.expand();
        // d = min over both logical sides; a side returning nullopt has no
        // logical word within the bound (so it cannot lower the minimum).
        auto dx = logical_min_weight_bounded(hx, hz, target_d);
        if (dx && *dx < target_d) continue;
        auto dz = logical_min_weight_bounded(hz, hx, target_d);
        if (dz && *dz < target_d) continue;
        int d_found = std::min(dx.value_or(target_d + 1), dz.value_or(target_d + 1));
        if (d_found != target_d) continue;
        out.found = true;
        out.sig1 = d1.support();
        out.sig2 = d2.support();
        out.k = target_k;
        out.d = target_d;
        return out;
    }
    out.attempts = budget;
    return out;
}

}  // namespace qdl
