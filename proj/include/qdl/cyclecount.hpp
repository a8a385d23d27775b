#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qdl/layout.hpp"

// Closed-form 4-, 6- and 8-cycle counts for dyadic parity-check matrices and
// permutation-cell (quasi-dyadic) layouts, plus girth utilities. The counts
// work on the shift grid alone, never expanding the matrix. Each count is
// exact whenever k < 2·girth: a k-cycle in the lifted graph then corresponds
// to a repeated column-XOR pattern among the shifts, and the routines simply
// count those repetitions. 4- and 6-counts are always exact here (any lifted
// graph is simple and bipartite, so girth >= 4); the 8-count requires
// girth >= 6, which holds iff the 4-count is zero.
//
// Repetition-counting convention used throughout: ordered pairs of mset
// elements (e, e') with equal XOR value and index constraints u != u',
// v != v' (resp. w != w' for 6-cycles in a single block). When an mset is
// paired with itself this automatically excludes e = e'.

namespace qdl {

// --- single dyadic block (1x1 layout, signature weight omega) ---

struct FourCycleSingleReport {
    long long rc = 0;   // matches with u = v' and v = u' (walk retraced)
    long long rnc = 0;  // all other matches
    long long n4 = 0;   // 2^ell * (rc + rnc) / 4
};

struct SixCycleSingleReport {
    // matches split by the index coincidence they exhibit; a valid match
    // (u != u', w != w') satisfies at most one of the four conditions
    long long rc1 = 0;  // u = w', v = v', w = u'
    long long rc2 = 0;  // v = u', w = v'
    long long rc3 = 0;  // u = w, w' = u'
    long long rc4 = 0;  // u = v', v = w'
    long long rnc = 0;
    long long n6 = 0;  // 2^ell * (rc1 + rc2 + rc3 + rc4 + rnc) / 6
};

FourCycleSingleReport count4_single_report(const std::vector<std::uint32_t>& supp, unsigned ell);
SixCycleSingleReport count6_single_report(const std::vector<std::uint32_t>& supp, unsigned ell);
long long count4_single(const std::vector<std::uint32_t>& supp, unsigned ell);
long long count6_single(const std::vector<std::uint32_t>& supp, unsigned ell);

// --- permutation-cell layouts ---
// Cells must be singleton, zero, or unset; zero/unset cells contribute no
// walks. A cell with two or more shifts throws (the closed forms assume
// permutation blocks; use the exhaustive routines for those layouts).

long long count4_quasi(const Layout& l);
long long count6_quasi(const Layout& l);
long long count8_quasi(const Layout& l);
bool has_girth_gt4(const Layout& l);  // all column-difference msets repetition-free

// The 8-cycle walk shapes. alpha(u, v) = a_u ^ b_u ^ b_v ^ c_v where a, b, c
// index rows of a sorted row tuple; an 8-cycle corresponds to alpha values
// matching between the two msets of a pattern. Class fixes the multiplicity
// of equivalent walks: starred patterns pair an mset with itself and split
// matches into retraced (u = v', v = u') and plain ones, weighted
// 2^ell/2 * 1/2 resp. 2^ell * 1/4; half patterns weigh 2^ell/2; full ones 2^ell.
struct EightCyclePattern {
    int id;                    // position in the 21-entry catalogue (1-based)
    std::array<int, 3> roles1;  // (a, b, c) of the first mset
    std::array<int, 3> roles2;  // (a, b, c) of the second mset
    enum class Class { starred, half, full } cls;
};
extern const std::array<EightCyclePattern, 21> kEightCyclePatterns;

struct EightCycleTerm {
    int pattern_id = 0;
    std::vector<std::size_t> rows;  // rows the pattern was instantiated on
    long long r = 0;                // match count (half/full patterns)
    long long rc = 0, rnc = 0;      // starred split (starred patterns)
};

struct Count8Report {
    std::vector<EightCycleTerm> terms;
    long long n8 = 0;
};

// Per-row-subset evaluation: pattern 1 on every row pair, patterns {2, 7, 10}
// on every row triple, patterns {8, 11, 14} on every row quadruple. This is
// the inclusion-correct generalization of the quadruple catalogue to any n_c.
Count8Report count8_quasi_report(const Layout& l);

// Literal sum of all 21 patterns over sorted row quadruples. Agrees with
// count8_quasi when n_c == 4; kept as an audit hook (n_c < 4 gives no
// quadruples, n_c > 4 multiply counts pair and triple shapes).
long long count8_quasi_by_quadruples(const Layout& l);

// --- census and girth ---

struct CycleCensus {
    std::optional<long long> n4, n6, n8;  // unset = closed form not applicable
    int girth = -1;                       // -1 = acyclic
};

// Closed-form counts plus exact girth for a fully set permutation-cell
// layout. n8 is reported only when girth >= 6. The girth is read off the
// counts when one of them is positive, otherwise measured on the expansion.
CycleCensus cycle_census(const Layout& l);

int girth_of(const Layout& l);  // exact girth of the expansion; -1 = acyclic

// Upper bound for the girth of any lift of p: twice the girth of p.
// Throws for acyclic protographs.
int girth_bound_lift(const Protograph& p);

}  // namespace qdl
