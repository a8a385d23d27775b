#include "qdl/cyclecount.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "qdl/oracle.hpp"

namespace qdl {

namespace {

void validate_support(const std::vector<std::uint32_t>& supp, unsigned ell) {
    if (ell >= 31) throw std::invalid_argument("cycle counts: ell out of range");
    const std::uint32_t n = std::uint32_t{1} << ell;
    auto s = supp;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("cycle counts: repeated shift in support");
    for (auto x : s)
        if (x >= n) throw std::invalid_argument("cycle counts: shift >= 2^ell");
}

long long divide_exact(long long numerator, long long q, const char* what) {
    if (numerator % q != 0) throw std::logic_error(what);
    return numerator / q;
}

// Shift of a singleton cell; empty for zero/unset cells. Multi-shift cells
// have no permutation-block reading, so they are rejected.
std::optional<std::uint32_t> singleton_shift(const Layout& l, std::size_t i, std::size_t j) {
    const Cell& c = l.cell(i, j);
    if (!c.is_assigned()) return std::nullopt;
    if (c.shift_set().size() != 1)
        throw std::invalid_argument("cycle counts: cell holds more than one shift");
    return c.shift_set()[0];
}

struct MsetElem {
    int u, v;
    std::uint32_t alpha;
};

// {(u, v, a_u ^ b_u ^ b_v ^ c_v) : u != v}, restricted to columns where the
// cells the walk crosses are all present.
std::vector<MsetElem> walk_mset(const Layout& l, std::size_t a, std::size_t b, std::size_t c) {
    const int nv = static_cast<int>(l.n_v());
    std::vector<std::optional<std::uint32_t>> au(nv), bu(nv), cu(nv);
    for (int u = 0; u < nv; ++u) {
        au[u] = singleton_shift(l, a, u);
        bu[u] = singleton_shift(l, b, u);
        cu[u] = singleton_shift(l, c, u);
    }
    std::vector<MsetElem> out;
    for (int u = 0; u < nv; ++u) {
        if (!au[u] || !bu[u]) continue;
        const std::uint32_t head = *au[u] ^ *bu[u];
        for (int v = 0; v < nv; ++v) {
            if (v == u || !bu[v] || !cu[v]) continue;
            out.push_back({u, v, head ^ *bu[v] ^ *cu[v]});
        }
    }
    return out;
}

using AlphaGroups = std::unordered_map<std::uint32_t, std::vector<std::pair<int, int>>>;

AlphaGroups group_by_alpha(const std::vector<MsetElem>& m) {
    AlphaGroups g;
    for (const auto& e : m) g[e.alpha].push_back({e.u, e.v});
    return g;
}

struct MatchCounts {
    long long total = 0;  // ordered (e1, e2) with equal alpha, u != u', v != v'
    long long c = 0;      // the subset with u = v' and v = u'
};

MatchCounts count_matches(const std::vector<MsetElem>& m1, const std::vector<MsetElem>& m2) {
    MatchCounts mc;
    auto g1 = group_by_alpha(m1), g2 = group_by_alpha(m2);
    for (const auto& [alpha, side1] : g1) {
        auto it = g2.find(alpha);
        if (it == g2.end()) continue;
        for (const auto& [u, v] : side1)
            for (const auto& [u2, v2] : it->second) {
                if (u == u2 || v == v2) continue;
                ++mc.total;
                if (u == v2 && v == u2) ++mc.c;
            }
    }
    return mc;
}

}  // namespace

FourCycleSingleReport count4_single_report(const std::vector<std::uint32_t>& supp, unsigned ell) {
    validate_support(supp, ell);
    const int w = static_cast<int>(supp.size());
    std::vector<MsetElem> mset;
    for (int u = 0; u < w; ++u)
        for (int v = 0; v < w; ++v)
            if (u != v) mset.push_back({u, v, supp[u] ^ supp[v]});
    MatchCounts mc = count_matches(mset, mset);
    FourCycleSingleReport rep;
    rep.rc = mc.c;
    rep.rnc = mc.total - mc.c;
    rep.n4 = divide_exact((1LL << ell) * mc.total, 4, "count4_single: total not divisible by 4");
    return rep;
}

long long count4_single(const std::vector<std::uint32_t>& supp, unsigned ell) {
    return count4_single_report(supp, ell).n4;
}

SixCycleSingleReport count6_single_report(const std::vector<std::uint32_t>& supp, unsigned ell) {
    validate_support(supp, ell);
    const int w = static_cast<int>(supp.size());
    struct Elem {
        int u, v, x;  // x plays the role of w in the walk
        std::uint32_t alpha;
    };
    std::vector<Elem> mset;
    for (int u = 0; u < w; ++u)
        for (int v = 0; v < w; ++v) {
            if (v == u) continue;
            for (int x = 0; x < w; ++x)
                if (x != v) mset.push_back({u, v, x, supp[u] ^ supp[v] ^ supp[x]});
        }
    std::unordered_map<std::uint32_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < mset.size(); ++i) groups[mset[i].alpha].push_back(i);

    SixCycleSingleReport rep;
    long long total = 0;
    for (const auto& [alpha, idx] : groups)
        for (std::size_t i1 : idx)
            for (std::size_t i2 : idx) {
                const Elem& e = mset[i1];
                const Elem& f = mset[i2];  // (u', v', w') of the match
                if (e.u == f.u || e.x == f.x) continue;
                ++total;
                const bool c1 = (e.u == f.x && e.v == f.v && e.x == f.u);
                const bool c2 = (e.v == f.u && e.x == f.v);
                const bool c3 = (e.u == e.x && f.x == f.u);
                const bool c4 = (e.u == f.v && e.v == f.x);
                rep.rc1 += c1;
                rep.rc2 += c2;
                rep.rc3 += c3;
                rep.rc4 += c4;
                rep.rnc += !(c1 || c2 || c3 || c4);
            }
    if (rep.rc1 + rep.rc2 + rep.rc3 + rep.rc4 + rep.rnc != total)
        throw std::logic_error("count6_single: conditions overlap on a valid match");
    rep.n6 = divide_exact((1LL << ell) * total, 6, "count6_single: total not divisible by 6");
    return rep;
}

long long count6_single(const std::vector<std::uint32_t>& supp, unsigned ell) {
    return count6_single_report(supp, ell).n6;
}

namespace {

// The quasi counters scan row tuples, so a multi-shift cell in a layout with
// too few rows would otherwise escape the lazy per-cell check and miscount
// the 4-cycles internal to its dyadic block. Reject such cells up front.
void require_permutation_cells(const Layout& l) {
    for (std::size_t i = 0; i < l.n_c(); ++i)
        for (std::size_t j = 0; j < l.n_v(); ++j)
            if (l.cell(i, j).is_assigned() && l.cell(i, j).shift_set().size() != 1)
                throw std::invalid_argument("cycle counts: cell holds more than one shift");
}

}  // namespace

long long count4_quasi(const Layout& l) {
    require_permutation_cells(l);
    long long pairs = 0;
    for (std::size_t h = 0; h < l.n_c(); ++h)
        for (std::size_t i = h + 1; i < l.n_c(); ++i) {
            std::unordered_map<std::uint32_t, long long> rho;
            for (std::size_t u = 0; u < l.n_v(); ++u) {
                auto a = singleton_shift(l, h, u);
                auto b = singleton_shift(l, i, u);
                if (a && b) ++rho[*a ^ *b];
            }
            for (const auto& [alpha, r] : rho) pairs += r * (r - 1) / 2;
        }
    return (1LL << l.ell()) * pairs;
}

bool has_girth_gt4(const Layout& l) { return count4_quasi(l) == 0; }

long long count6_quasi(const Layout& l) {
    require_permutation_cells(l);
    const std::size_t nc = l.n_c(), nv = l.n_v();
    long long reps = 0;
    for (std::size_t h = 0; h < nc; ++h)
        for (std::size_t i = h + 1; i < nc; ++i)
            for (std::size_t j = i + 1; j < nc; ++j)
                for (std::size_t m = 0; m < nv; ++m) {
                    auto im = singleton_shift(l, i, m);
                    auto jm = singleton_shift(l, j, m);
                    if (!im || !jm) continue;
                    // alpha -> columns u contributing h_u ^ i_u ^ i_m
                    std::unordered_map<std::uint32_t, std::vector<std::size_t>> a1;
                    for (std::size_t u = 0; u < nv; ++u) {
                        if (u == m) continue;
                        auto hu = singleton_shift(l, h, u);
                        auto iu = singleton_shift(l, i, u);
                        if (hu && iu) a1[*hu ^ *iu ^ *im].push_back(u);
                    }
                    for (std::size_t u2 = 0; u2 < nv; ++u2) {
                        if (u2 == m) continue;
                        auto hu = singleton_shift(l, h, u2);
                        auto ju = singleton_shift(l, j, u2);
                        if (!hu || !ju) continue;
                        auto it = a1.find(*hu ^ *ju ^ *jm);
                        if (it == a1.end()) continue;
                        for (std::size_t u : it->second)
                            if (u != u2) ++reps;
                    }
                }
    return (1LL << l.ell()) * reps;
}

// alpha(u,v) = rows[a]_u ^ rows[b]_u ^ rows[b]_v ^ rows[c]_v per mset; the
// classes encode how many equivalent traversals produce the same match.
const std::array<EightCyclePattern, 21> kEightCyclePatterns = {{
    {1, {0, 1, 0}, {0, 1, 0}, EightCyclePattern::Class::starred},
    {2, {0, 1, 0}, {0, 2, 0}, EightCyclePattern::Class::half},
    {3, {0, 1, 0}, {0, 3, 0}, EightCyclePattern::Class::half},
    {4, {0, 2, 0}, {0, 2, 0}, EightCyclePattern::Class::starred},
    {5, {0, 2, 0}, {0, 3, 0}, EightCyclePattern::Class::half},
    {6, {0, 3, 0}, {0, 3, 0}, EightCyclePattern::Class::starred},
    {7, {0, 2, 1}, {0, 2, 1}, EightCyclePattern::Class::half},
    {8, {0, 2, 1}, {0, 3, 1}, EightCyclePattern::Class::full},
    {9, {0, 3, 1}, {0, 3, 1}, EightCyclePattern::Class::half},
    {10, {0, 1, 2}, {0, 1, 2}, EightCyclePattern::Class::half},
    {11, {0, 1, 2}, {0, 3, 2}, EightCyclePattern::Class::full},
    {12, {0, 3, 2}, {0, 3, 2}, EightCyclePattern::Class::half},
    {13, {0, 1, 3}, {0, 1, 3}, EightCyclePattern::Class::half},
    {14, {0, 1, 3}, {0, 2, 3}, EightCyclePattern::Class::full},
    {15, {0, 2, 3}, {0, 2, 3}, EightCyclePattern::Class::half},
    {16, {1, 2, 1}, {1, 2, 1}, EightCyclePattern::Class::starred},
    {17, {1, 2, 1}, {1, 3, 1}, EightCyclePattern::Class::half},
    {18, {1, 3, 1}, {1, 3, 1}, EightCyclePattern::Class::starred},
    {19, {1, 3, 2}, {1, 3, 2}, EightCyclePattern::Class::half},
    {20, {1, 2, 3}, {1, 2, 3}, EightCyclePattern::Class::half},
    {21, {2, 3, 2}, {2, 3, 2}, EightCyclePattern::Class::starred},
}};

namespace {

const EightCyclePattern& pattern_by_id(int id) {
    return kEightCyclePatterns[static_cast<std::size_t>(id - 1)];
}

// Evaluates one pattern on a concrete row tuple, appending its term and the
// 4x-scaled contribution (scaling clears the fractional starred weights).
void apply_pattern(const Layout& l, const EightCyclePattern& pat,
                   const std::vector<std::size_t>& rows, Count8Report& rep,
                   long long& numerator4x) {
    auto row_of = [&](int role) { return rows[static_cast<std::size_t>(role)]; };
    auto m1 = walk_mset(l, row_of(pat.roles1[0]), row_of(pat.roles1[1]), row_of(pat.roles1[2]));
    auto m2 = walk_mset(l, row_of(pat.roles2[0]), row_of(pat.roles2[1]), row_of(pat.roles2[2]));
    MatchCounts mc = count_matches(m1, m2);
    EightCycleTerm term;
    term.pattern_id = pat.id;
    term.rows = rows;
    const long long lift = 1LL << l.ell();
    switch (pat.cls) {
        case EightCyclePattern::Class::starred:
            term.rc = mc.c;
            term.rnc = mc.total - mc.c;
            numerator4x += lift * mc.total;
            break;
        case EightCyclePattern::Class::half:
            term.r = mc.total;
            numerator4x += 2 * lift * mc.total;
            break;
        case EightCyclePattern::Class::full:
            term.r = mc.total;
            numerator4x += 4 * lift * mc.total;
            break;
    }
    if (mc.total != 0) rep.terms.push_back(std::move(term));
}

}  // namespace

Count8Report count8_quasi_report(const Layout& l) {
    require_permutation_cells(l);
    const std::size_t nc = l.n_c();
    Count8Report rep;
    long long numerator4x = 0;
    for (std::size_t a = 0; a < nc; ++a)
        for (std::size_t b = a + 1; b < nc; ++b)
            apply_pattern(l, pattern_by_id(1), {a, b}, rep, numerator4x);
    for (std::size_t a = 0; a < nc; ++a)
        for (std::size_t b = a + 1; b < nc; ++b)
            for (std::size_t c = b + 1; c < nc; ++c)
                for (int id : {2, 7, 10})
                    apply_pattern(l, pattern_by_id(id), {a, b, c}, rep, numerator4x);
    for (std::size_t a = 0; a < nc; ++a)
        for (std::size_t b = a + 1; b < nc; ++b)
            for (std::size_t c = b + 1; c < nc; ++c)
                for (std::size_t d = c + 1; d < nc; ++d)
                    for (int id : {8, 11, 14})
                        apply_pattern(l, pattern_by_id(id), {a, b, c, d}, rep, numerator4x);
    rep.n8 = divide_exact(numerator4x, 4, "count8_quasi: contributions not divisible by 4");
    return rep;
}

long long count8_quasi(const Layout& l) { return count8_quasi_report(l).n8; }

long long count8_quasi_by_quadruples(const Layout& l) {
    require_permutation_cells(l);
    const std::size_t nc = l.n_c();
    Count8Report rep;
    long long numerator4x = 0;
    for (std::size_t a = 0; a < nc; ++a)
        for (std::size_t b = a + 1; b < nc; ++b)
            for (std::size_t c = b + 1; c < nc; ++c)
                for (std::size_t d = c + 1; d < nc; ++d)
                    for (const auto& pat : kEightCyclePatterns)
                        apply_pattern(l, pat, {a, b, c, d}, rep, numerator4x);
    return divide_exact(numerator4x, 4, "count8 quadruple sum: not divisible by 4");
}

CycleCensus cycle_census(const Layout& l) {
    if (!l.all_assigned())
        throw std::invalid_argument("cycle_census: layout has unset cells");
    CycleCensus cen;
    if (l.n_c() == 1 && l.n_v() == 1 && !l.cell(0, 0).is_zero() &&
        l.cell(0, 0).shift_set().size() > 1) {
        // single dyadic block of weight >= 2: girth 4, no 8-cycle closed form
        const auto& supp = l.cell(0, 0).shift_set();
        cen.n4 = count4_single(supp, l.ell());
        cen.n6 = count6_single(supp, l.ell());
        cen.girth = 4;
        return cen;
    }
    cen.n4 = count4_quasi(l);
    cen.n6 = count6_quasi(l);
    if (*cen.n4 == 0) cen.n8 = count8_quasi(l);
    if (*cen.n4 > 0)
        cen.girth = 4;
    else if (*cen.n6 > 0)
        cen.girth = 6;
    else if (cen.n8 && *cen.n8 > 0)
        cen.girth = 8;
    else
        cen.girth = girth_of(l);  // >= 10 or acyclic
    return cen;
}

int girth_of(const Layout& l) { return girth_bfs(tanner_graph(l.expand())); }

int girth_bound_lift(const Protograph& p) {
    const int g = p.girth();
    if (g < 0) throw std::invalid_argument("girth_bound_lift: protograph is acyclic");
    return 2 * g;
}

}  // namespace qdl
