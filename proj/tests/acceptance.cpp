// Acceptance gate: twelve end-to-end checks, one PASS/FAIL line each.
// Every closed-form value is cross-checked against the brute-force oracles;
// statistical checks report their measured intervals. Exit 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qdl/absorbing.hpp"
#include "qdl/bits.hpp"
#include "qdl/bpsim.hpp"
#include "qdl/css.hpp"
#include "qdl/cyclecount.hpp"
#include "qdl/dyadic.hpp"
#include "qdl/layout.hpp"
#include "qdl/oracle.hpp"
#include "qdl/peg.hpp"
#include "qdl/rng.hpp"

using namespace qdl;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

int g_passed = 0, g_total = 0;

void report(int id, bool ok, const std::string& label, const std::string& detail, double secs,
            double limit = 0.0) {
    ++g_total;
    if (ok) ++g_passed;
    std::string time_note;
    {
        char buf[64];
        if (limit > 0.0)
            std::snprintf(buf, sizeof buf, " (%.2fs < %.0fs)", secs, limit);
        else
            std::snprintf(buf, sizeof buf, " (%.2fs)", secs);
        time_note = buf;
    }
    std::printf("%s %2d  %s: %s%s\n", ok ? "PASS" : "FAIL", id, label.c_str(), detail.c_str(),
                time_note.c_str());
    std::fflush(stdout);
}

Layout random_singleton_layout(unsigned ell, std::size_t n_c, std::size_t n_v, SplitMix& gen) {
    Layout l(ell, n_c, n_v);
    for (std::size_t i = 0; i < n_c; ++i)
        for (std::size_t j = 0; j < n_v; ++j)
            l.set_cell(i, j,
                       Cell::singleton(static_cast<std::uint32_t>(
                           bounded(gen, std::uint64_t{1} << ell))));
    return l;
}

int sim_threads() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// --- 1: closed-form 4-cycle count on the worked single-block instance ------
void criterion1() {
    Timer t;
    std::vector<std::uint32_t> supp{0, 1, 2, 3};
    auto rep = count4_single_report(supp, 3);
    auto h = DyadicMatrix::from_support(3, supp).expand();
    auto inv = enumerate_cycles(tanner_graph(h), 4);
    bool ok = rep.rc == 12 && rep.rnc == 24 && rep.n4 == 72 && inv[4] == 72;
    double secs = t.secs();
    std::ostringstream d;
    d << "support {0,1,2,3} l=3: Rc=" << rep.rc << " (want 12), Rnc=" << rep.rnc
      << " (want 24), N4=" << rep.n4 << " (want 72), oracle N4=" << inv[4];
    report(1, ok && secs < 1.0, "single-block 4-cycle census", d.str(), secs, 1.0);
}

// --- 2: 3x5 l=4 layout census vs oracle ------------------------------------
void criterion2() {
    Timer t;
    auto l = Layout::from_shift_rows(
        4, {{0, 0, 0, 0, 0}, {0, 1, 2, 3, 4}, {0, 2, 4, 6, 8}});
    auto cen = cycle_census(l);
    auto g = tanner_graph(l.expand());
    auto inv = enumerate_cycles(g, 8);
    int girth = girth_bfs(g);
    bool ok = cen.n4 && *cen.n4 == 0 && cen.n6 && *cen.n6 == 96 && cen.n8 && *cen.n8 == 944 &&
              cen.girth == 6 && inv[4] == 0 && inv[6] == 96 && inv[8] == 944 && girth == 6;
    double secs = t.secs();
    std::ostringstream d;
    d << "3x5 l=4 rows {0,0,0,0,0}/{0,1,2,3,4}/{0,2,4,6,8}: N4=" << (cen.n4 ? *cen.n4 : -1)
      << " N6=" << (cen.n6 ? *cen.n6 : -1) << " N8=" << (cen.n8 ? *cen.n8 : -1)
      << " girth=" << cen.girth << "; oracle " << inv[4] << "/" << inv[6] << "/" << inv[8]
      << " girth=" << girth << " (want 0/96/944, girth 6)";
    report(2, ok && secs < 10.0, "quasi-dyadic census", d.str(), secs, 10.0);
}

// --- 3: 6-cycle adjudication on the worked single-block instance -----------
void criterion3() {
    Timer t;
    std::vector<std::uint32_t> supp{0, 1, 2, 3};
    long long closed = count6_single(supp, 3);
    auto h = DyadicMatrix::from_support(3, supp).expand();
    auto inv = enumerate_cycles(tanner_graph(h), 6);
    long long oracle = inv[6];
    bool ok = closed == oracle && oracle == 192;
    double secs = t.secs();
    std::ostringstream d;
    d << "support {0,1,2,3} l=3: closed form N6=" << closed << ", oracle N6=" << oracle
      << "; golden value pinned at 192 -- candidate figure 192 CONFIRMED, candidate figure 768 "
         "REFUTED (768 matches a 2^5 prefactor where the instance calls for 2^3)";
    report(3, ok && secs < 5.0, "6-cycle adjudication", d.str(), secs, 5.0);
}

// --- 4: rank census over all l=3 signatures --------------------------------
void criterion4() {
    Timer t;
    auto census = rank_census(3);
    std::map<std::size_t, std::uint64_t> want{{0, 1}, {1, 1}, {2, 14}, {4, 112}, {8, 128}};
    bool ok = census == want;

    // weight breakdown recomputed from scratch
    std::uint64_t rank4_w26 = 0, rank4_w4 = 0, rank2_w4 = 0, rank8 = 0, rank1_w8 = 0, rank0 = 0;
    for (std::uint32_t sig = 0; sig < 256; ++sig) {
        std::vector<std::uint32_t> supp;
        for (std::uint32_t b = 0; b < 8; ++b)
            if (sig >> b & 1) supp.push_back(b);
        auto m = DyadicMatrix::from_support(3, supp);
        std::size_t r = dyadic_rank(m);
        std::size_t w = supp.size();
        if (r == 4 && (w == 2 || w == 6)) ++rank4_w26;
        if (r == 4 && w == 4) ++rank4_w4;
        if (r == 2 && w == 4) ++rank2_w4;
        if (r == 8) ++rank8;
        if (r == 1 && w == 8) ++rank1_w8;
        if (r == 0) ++rank0;
    }
    ok = ok && rank4_w26 == 56 && rank4_w4 == 56 && rank2_w4 == 14 && rank8 == 128 &&
         rank1_w8 == 1 && rank0 == 1;
    double secs = t.secs();
    std::ostringstream d;
    d << "l=3: rank8=" << rank8 << " (want 128), rank4 from weights 2+6=" << rank4_w26
      << " (want 56), rank4 at weight 4=" << rank4_w4 << " (want 56), rank2=" << rank2_w4
      << " (want 14), rank1=" << rank1_w8 << ", rank0=" << rank0;
    report(4, ok && secs < 1.0, "rank census", d.str(), secs, 1.0);
}

// --- 5: closed forms vs oracle over >= 500 random layouts ------------------
void criterion5() {
    Timer t;
    SplitMix gen(2024);
    int layouts = 0, n8_checked = 0, mismatches = 0;
    for (int it = 0; it < 520; ++it) {
        unsigned ell = 1 + static_cast<unsigned>(bounded(gen, 4));  // 1..4
        std::size_t nc = 1 + bounded(gen, 4);                       // 1..4
        std::size_t nv = 1 + bounded(gen, 6);                       // 1..6
        auto l = random_singleton_layout(ell, nc, nv, gen);
        auto cen = cycle_census(l);
        auto inv = enumerate_cycles(tanner_graph(l.expand()), 8);
        if (!cen.n4 || *cen.n4 != inv[4]) ++mismatches;
        if (!cen.n6 || *cen.n6 != inv[6]) ++mismatches;
        if (inv[4] == 0) {  // 8 < 2*girth: the 8-cycle closed form applies
            ++n8_checked;
            if (!cen.n8 || *cen.n8 != inv[8]) ++mismatches;
        }
        ++layouts;
    }
    double secs = t.secs();
    std::ostringstream d;
    d << layouts << " random singleton layouts (n_c<=4, n_v<=6, l<=4): N4/N6 checked on all, "
      << "N8 on the " << n8_checked << " girth>=6 instances; mismatches=" << mismatches
      << " (want 0)";
    report(5, layouts >= 500 && mismatches == 0, "closed form == oracle sweep", d.str(), secs);
}

// --- 6: lift girth bound and girth-aware construction ----------------------
void criterion6() {
    Timer t;
    Protograph proto{2, 4, {{1, 1, 1, 1}, {1, 1, 1, 1}}};
    int bound = girth_bound_lift(proto);
    bool bound_ok = (proto.girth() == 4) && (bound == 8);

    SplitMix gen(3131);
    int lifts = 0, within = 0, at_bound = 0;
    for (int i = 0; i < 100; ++i) {
        unsigned ell = (i % 2 == 0) ? 3u : 4u;
        auto l = random_singleton_layout(ell, 2, 4, gen);
        int g = girth_bfs(tanner_graph(l.expand()));
        ++lifts;
        if (g >= 4 && g <= bound) ++within;
        if (g == bound) ++at_bound;
    }

    // girth-target-6 greedy construction: whenever every step admitted at
    // least one value, the result must be free of 4- and 6-cycles
    struct Cfg {
        std::size_t nc, nv;
        unsigned ell;
        std::uint64_t seed;
    };
    std::vector<Cfg> cfgs{{3, 5, 4, 42}, {3, 6, 4, 7}, {2, 4, 3, 1}, {3, 5, 4, 9}, {2, 5, 3, 5}};
    int clean_runs = 0, replays = 0;
    bool peg_ok = true;
    for (auto& c : cfgs) {
        PegConfig cfg;
        cfg.n_c = c.nc;
        cfg.n_v = c.nv;
        cfg.ell = c.ell;
        cfg.seed = c.seed;
        auto built = peg_construct(cfg);
        // replay the visit order and test each step's admissible set
        Layout partial(c.ell, c.nc, c.nv, Cell::unset());
        bool all_nonempty = true;
        for (auto [r, col] : peg_ordering(cfg)) {
            if (forbidden_complement(partial, r, col, 6).empty()) all_nonempty = false;
            partial.set_cell(r, col, built.cell(r, col));
        }
        ++replays;
        if (all_nonempty) {
            ++clean_runs;
            auto cen = cycle_census(built);
            if (!cen.n4 || *cen.n4 != 0 || !cen.n6 || *cen.n6 != 0) peg_ok = false;
        }
    }
    double secs = t.secs();
    std::ostringstream d;
    d << "all-ones 2x4 base: girth bound " << bound << " (= 2 x base girth " << proto.girth()
      << "); " << within << "/" << lifts << " random lifts at l in {3,4} have girth <= " << bound
      << " (" << at_bound << " meet it); girth-6 greedy runs with every step admissible: "
      << clean_runs << "/" << replays << ", all N4=N6=0: " << (peg_ok ? "yes" : "NO");
    report(6, bound_ok && within == lifts && clean_runs >= 1 && peg_ok, "lift girth bound",
           d.str(), secs);
}

// --- 7: forbidden-set soundness against the oracle -------------------------
void criterion7() {
    Timer t;
    SplitMix gen(909);
    long long candidates = 0, exceptions = 0;
    int layouts = 0;
    while (layouts < 160) {
        unsigned ell = 1 + static_cast<unsigned>(bounded(gen, 3));  // 1..3
        std::size_t nc = 2 + bounded(gen, 3);                       // 2..4
        std::size_t nv = 2 + bounded(gen, 3);                       // 2..4
        Layout l(ell, nc, nv, Cell::unset());
        std::vector<std::pair<std::size_t, std::size_t>> unset;
        for (std::size_t i = 0; i < nc; ++i)
            for (std::size_t j = 0; j < nv; ++j) {
                if (bounded(gen, 5) < 2) {
                    unset.push_back({i, j});
                } else {
                    l.set_cell(i, j,
                               Cell::singleton(static_cast<std::uint32_t>(
                                   bounded(gen, std::uint64_t{1} << ell))));
                }
            }
        if (unset.empty()) continue;
        auto [r, c] = unset[bounded(gen, unset.size())];

        // zero out the other unset cells: cycles can then only pass through
        // assigned cells, matching the forbidden-set convention
        Layout base = l;
        for (auto [i, j] : unset) base.set_cell(i, j, Cell::zero());
        for (int g : {4, 6}) {
            auto fs = forbidden_set(l, r, c, g);
            auto before = enumerate_cycles(tanner_graph(base.expand()), g);
            long long before_cnt = 0;
            for (auto& [k, v] : before) before_cnt += v;
            for (std::uint32_t s = 0; s < (1u << ell); ++s) {
                Layout trial = base;
                trial.set_cell(r, c, Cell::singleton(s));
                auto after = enumerate_cycles(tanner_graph(trial.expand()), g);
                long long after_cnt = 0;
                for (auto& [k, v] : after) after_cnt += v;
                bool creates = after_cnt > before_cnt;
                bool forbidden = std::binary_search(fs.values.begin(), fs.values.end(), s);
                if (creates != forbidden) ++exceptions;
                ++candidates;
            }
        }
        ++layouts;
    }
    double secs = t.secs();
    std::ostringstream d;
    d << layouts << " random partial layouts (n_c,n_v<=4, l<=3), g in {4,6}: " << candidates
      << " candidate values oracle-checked, exceptions=" << exceptions << " (want 0)";
    report(7, exceptions == 0, "forbidden-set soundness", d.str(), secs);
}

// --- 8: absorbing-set closed forms vs brute force ---------------------------
void criterion8() {
    Timer t;
    bool ok = true;
    std::ostringstream d;

    // single-row layout, n = 3, l = 2: total 2^l (2^{n-1} - 1) = 12
    auto p1 = absorbing_count_1xn(2, 3);
    Layout l1(2, 1, 3, Cell::singleton(0));
    auto b1 = absorbing_profile_bruteforce(tanner_graph(l1.expand()), 3, true);
    ok = ok && p1.total() == 12 && p1.counts == b1.counts;
    d << "1x3 l=2 total=" << p1.total() << " (want 12, oracle "
      << (p1.counts == b1.counts ? "agrees" : "DISAGREES") << ")";

    // all-ones block: totals 2^{2^l - 1} - 1 = 1, 7, 127
    long long want_tot[4] = {0, 1, 7, 127};
    for (unsigned ell = 1; ell <= 3; ++ell) {
        auto pa = absorbing_count_allones(ell);
        std::vector<std::uint32_t> full(std::size_t{1} << ell);
        for (std::uint32_t s = 0; s < full.size(); ++s) full[s] = s;
        Layout la(ell, 1, 1, Cell::shifts(full));
        auto ba = absorbing_profile_bruteforce(tanner_graph(la.expand()),
                                               static_cast<int>(full.size()), true);
        ok = ok && pa.total() == want_tot[ell] && pa.counts == ba.counts;
        d << "; all-ones l=" << ell << " total=" << pa.total() << " (want " << want_tot[ell]
          << ", oracle " << (pa.counts == ba.counts ? "agrees" : "DISAGREES") << ")";
    }

    // two complete-bipartite components of width 2^k = 4: per-a counts 2 C(4,a)
    auto pb = absorbing_count_block_diagonal(3, 2);
    Layout lb(3, 1, 1, Cell::shifts({0, 1, 2, 3}));
    auto bb = absorbing_profile_bruteforce(tanner_graph(lb.expand()), 4, true);
    bool per_a_ok = true;
    for (auto& [ab, cnt] : pb.counts) {
        (void)cnt;
        if (pb.count_for_a(ab.first) != 2 * binomial(4, ab.first)) per_a_ok = false;
    }
    ok = ok && per_a_ok && pb.total() == 14 && pb.counts == bb.counts;
    d << "; block-diagonal l=3 k=2 total=" << pb.total() << " (want 14, per-a 2*C(4,a) "
      << (per_a_ok ? "holds" : "FAILS") << ", oracle "
      << (pb.counts == bb.counts ? "agrees" : "DISAGREES") << ")";

    // identical blocks: 2^l components beat the competing multiplier n
    auto ib = absorbing_count_identical_blocks(2, 2, 2);
    Layout li(2, 2, 2, Cell::singleton(0));
    auto bi = absorbing_profile_bruteforce(tanner_graph(li.expand()), 2, true);
    ok = ok && ib.multiplier_components == 4 && ib.multiplier_alt == 2 &&
         ib.resolved.counts == bi.counts;
    d << "; identical 2x2 blocks l=2: multiplier " << ib.multiplier_components
      << " (component count) " << (ib.resolved.counts == bi.counts ? "matches" : "DOES NOT match")
      << " the oracle, competing multiplier " << ib.multiplier_alt << " rejected";

    double secs = t.secs();
    report(8, ok && secs < 30.0, "absorbing-set closed forms", d.str(), secs, 30.0);
}

// --- 9: the annihilating-pair quantum code [[16, 4, 4]] --------------------
void criterion9() {
    Timer t;
    auto dx = DyadicMatrix::from_support(4, {0, 4, 5, 6, 10, 13});
    auto dz = DyadicMatrix::from_support(4, {3, 4, 5, 7, 9, 12});
    std::size_t rx = dyadic_rank(dx), rz = dyadic_rank(dz);
    auto pair = cross_pair(dx, dz);
    auto p = css_pair_params(pair);
    bool ok = rx == 6 && rz == 6 && pair.commute_verified && p.n == 16 && p.k == 4 &&
              p.d.has_value() && *p.d == 4;
    double secs = t.secs();
    std::ostringstream d;
    d << "supports {0,4,5,6,10,13} / {3,4,5,7,9,12} at l=4: ranks " << rx << "/" << rz
      << " (want 6/6), commuting pair " << (pair.commute_verified ? "verified" : "FAILED")
      << ", [[" << p.n << ", " << p.k << ", " << (p.d ? *p.d : -1) << "]] (want [[16, 4, 4]])";
    report(9, ok && secs < 10.0, "annihilating-pair golden code", d.str(), secs, 10.0);
}

// --- 10: orthogonality of both constructions, grid girth -------------------
void criterion10() {
    Timer t;
    SplitMix gen(404);
    int c1_ok = 0;
    for (int i = 0; i < 200; ++i) {
        unsigned ell = 2 + static_cast<unsigned>(bounded(gen, 3));  // 2..4
        std::size_t omega = 1 + bounded(gen, 5);                    // 1..5
        auto s = sample_commuting_shifts(ell, omega, gen);
        auto cyc = cyclic_permutation(omega);
        auto r = construction_main(ell, s.x, s.y, cyc, cyc);
        bool pass = r.terms.ok && r.pair.commute_verified;
        if (pass) {
            auto prod = mat_mul(r.pair.hx.expand(), r.pair.hz.expand().transposed());
            pass = prod.is_zero();
        }
        if (pass) ++c1_ok;
    }
    int c2_ok = 0, c2_girth4 = 0;
    for (int i = 0; i < 200; ++i) {
        unsigned ell = 2 + static_cast<unsigned>(bounded(gen, 3));
        std::size_t v = 2 + bounded(gen, 4);  // 2..5
        std::uint32_t base =
            static_cast<std::uint32_t>(bounded(gen, std::uint64_t{1} << ell));
        std::vector<std::uint32_t> xs(v);
        for (auto& x : xs) x = static_cast<std::uint32_t>(bounded(gen, std::uint64_t{1} << ell));
        auto pair = construction_bbs(ell, base, xs);
        auto h = pair.hx.expand();
        if (pair.commute_verified && mat_mul(h, h.transposed()).is_zero()) ++c2_ok;
        if (girth_of(pair.hx) == 4) ++c2_girth4;
    }
    double secs = t.secs();
    std::ostringstream d;
    d << "permutation-pair instances (cyclic sigma = tau): " << c1_ok
      << "/200 satisfy Hx Hz^T = 0; self-dual grids: " << c2_ok << "/200 satisfy H H^T = 0, "
      << c2_girth4 << "/200 have girth exactly 4";
    report(10, c1_ok == 200 && c2_ok == 200 && c2_girth4 == 200, "construction checks", d.str(),
           secs);
}

// --- 11: decoding-gain orderings with non-overlapping intervals ------------
void criterion11() {
    Timer t;
    int threads = sim_threads();

    // (a) classical: 4-cycle-minimized grid vs a median random grid, l=3,
    //     v=4, first 3 block rows, BSC p=0.03
    auto best = optimize_bbs(3, 4, 3, 7, 30);
    SplitMix gen_a(77);
    std::vector<std::pair<long long, std::pair<std::uint32_t, std::vector<std::uint32_t>>>> draws;
    for (int i = 0; i < 11; ++i) {
        std::uint32_t base = static_cast<std::uint32_t>(bounded(gen_a, 8));
        std::vector<std::uint32_t> xs(4);
        for (auto& s : xs) s = static_cast<std::uint32_t>(bounded(gen_a, 8));
        draws.push_back({count4_quasi(construction_bbs(3, base, xs, 3).hx), {base, xs}});
    }
    std::sort(draws.begin(), draws.end());
    auto& med = draws[5];
    auto h_opt = construction_bbs(3, best.base, best.xs, 3).hx.expand();
    auto h_rnd = construction_bbs(3, med.second.first, med.second.second, 3).hx.expand();
    auto ra = simulate_classical(h_opt, ChannelModel{0.03}, 10000, 11, threads);
    auto rb = simulate_classical(h_rnd, ChannelModel{0.03}, 10000, 11, threads);
    bool sep_a = ra.ci_hi < rb.ci_lo;

    // (b) quantum: girth-8 optimized permutation pair vs a median random
    //     self-dual grid, both 2 block rows at l=4 (n=128), p=0.005
    auto opt = optimize_construction_main(4, 4, 2, 7, 100);
    SplitMix gen_b(77);
    std::vector<std::pair<long long, std::pair<std::uint32_t, std::vector<std::uint32_t>>>> draws_b;
    for (int i = 0; i < 11; ++i) {
        std::uint32_t base = static_cast<std::uint32_t>(bounded(gen_b, 16));
        std::vector<std::uint32_t> xs(4);
        for (auto& s : xs) s = static_cast<std::uint32_t>(bounded(gen_b, 16));
        draws_b.push_back({count4_quasi(construction_bbs(4, base, xs, 2).hx), {base, xs}});
    }
    std::sort(draws_b.begin(), draws_b.end());
    auto& med_b = draws_b[5];
    auto bbs = construction_bbs(4, med_b.second.first, med_b.second.second, 2);
    auto rc = simulate_css(opt.built.pair, ChannelModel{0.005}, 10000, 11, threads);
    auto rd = simulate_css(bbs, ChannelModel{0.005}, 10000, 11, threads);
    bool sep_b = rc.ci_hi < rd.ci_lo;

    double secs = t.secs();
    std::ostringstream d;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "(a) p=0.03 1e4 trials: optimized FER %.4f [%.4f, %.4f] vs random %.4f "
                  "[%.4f, %.4f], intervals %s",
                  ra.fer, ra.ci_lo, ra.ci_hi, rb.fer, rb.ci_lo, rb.ci_hi,
                  sep_a ? "disjoint" : "OVERLAP");
    d << buf;
    std::snprintf(buf, sizeof buf,
                  "; (b) p=0.005 1e4 trials: girth-%d pair FER %.4f [%.4f, %.4f] vs grid %.4f "
                  "[%.4f, %.4f], intervals %s",
                  opt.girth, rc.fer, rc.ci_lo, rc.ci_hi, rd.fer, rd.ci_lo, rd.ci_hi,
                  sep_b ? "disjoint" : "OVERLAP");
    d << buf;
    report(11, sep_a && sep_b && secs < 600.0, "decoding-gain ordering", d.str(), secs, 600.0);
}

// --- 12: existence searches (absence is logged, not failed) ----------------
void criterion12() {
    Timer t;
    bool ok = true;
    std::ostringstream d;

    auto s1 = search_qd_pair(2, 3, 4, 6, 4, 1, 3000);
    if (s1.found) {
        auto p = css_pair_params(s1.pair);
        bool good = p.n == 16 && p.k == 6 && p.d.has_value() && *p.d == 4;
        ok = ok && good;
        d << "[[16, 6, 4]] (3x4 grid, l=2): FOUND at attempt " << s1.attempts << ", re-derived [["
          << p.n << ", " << p.k << ", " << (p.d ? *p.d : -1) << "]]"
          << (good ? "" : " MISMATCH");
    } else {
        d << "[[16, 6, 4]] (3x4 grid, l=2): not found in " << s1.attempts
          << " attempts (absence logged, not a failure)";
    }

    auto s2 = search_bicycle(5, 16, 8, 1, 200);
    if (s2.found) {
        auto pair = bicycle(DyadicMatrix::from_support(5, s2.sig1),
                            DyadicMatrix::from_support(5, s2.sig2));
        auto p = css_pair_params(pair, 0);  // n, k only; the kernel is too
                                            // large for exhaustive distance
        auto hx = pair.hx.expand(), hz = pair.hz.expand();
        // no nontrivial logical of weight <= 7 on either side, and one of
        // weight exactly 8 exists => d = 8
        bool no_low = !logical_min_weight_bounded(hz, hx, 7).has_value() &&
                      !logical_min_weight_bounded(hx, hz, 7).has_value();
        auto w8 = logical_min_weight_bounded(hz, hx, 8);
        auto w8b = logical_min_weight_bounded(hx, hz, 8);
        int dcert = (no_low && ((w8 && *w8 == 8) || (w8b && *w8b == 8))) ? 8 : -1;
        bool good = p.n == 64 && p.k == 16 && dcert == 8;
        ok = ok && good;
        d << "; [[64, 16, 8]] bicycle (l=5): FOUND at attempt " << s2.attempts
          << ", re-derived [[" << p.n << ", " << p.k << ", " << dcert
          << "]] (distance certified by bounded logical-weight search)"
          << (good ? "" : " MISMATCH");
    } else {
        d << "; [[64, 16, 8]] bicycle (l=5): not found in " << s2.attempts
          << " attempts (absence logged, not a failure)";
    }

    report(12, ok, "existence searches", d.str(), t.secs());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    std::printf("ACCEPTANCE: %d/%d criteria passed\n", g_passed, g_total);
    return g_passed == g_total ? 0 : 1;
}
