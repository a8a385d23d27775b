#include "qdl/absorbing.hpp"

#include "qdl/oracle.hpp"

#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace qdl {

long long AbsorbingProfile::total() const {
    long long t = 0;
    for (const auto& [ab, c] : counts) t += c;
    return t;
}

long long AbsorbingProfile::count_for_a(int a) const {
    long long t = 0;
    for (const auto& [ab, c] : counts)
        if (ab.first == a) t += c;
    return t;
}

long long binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned long long r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        unsigned long long num = n - k + i;
        // r * num / i is always integral at this point; divide first where
        // possible to delay overflow, then check the multiply.
        unsigned long long g = std::gcd(r, i);
        unsigned long long r2 = r / g, i2 = i / g;
        if (num % i2 != 0) throw std::logic_error("binomial: non-integral step");
        num /= i2;
        if (num != 0 && r2 > std::numeric_limits<long long>::max() / num)
            throw std::overflow_error("binomial: value exceeds long long");
        r = r2 * num;
    }
    return static_cast<long long>(r);
}

namespace {

long long checked_shift(unsigned bits, const char* what) {
    if (bits >= 63) throw std::overflow_error(std::string(what) + ": exceeds long long");
    return 1LL << bits;
}

}  // namespace

AbsorbingProfile absorbing_count_1xn(unsigned ell, std::size_t n) {
    if (n < 1) throw std::invalid_argument("absorbing_count_1xn: n must be >= 1");
    AbsorbingProfile p;
    p.connected_only = true;
    p.descriptor = "1xn(ell=" + std::to_string(ell) + ",n=" + std::to_string(n) + ")";
    long long blocks = checked_shift(ell, "absorbing_count_1xn");
    for (std::size_t a = 2; a <= n; a += 2)
        p.counts[{static_cast<int>(a), 0}] = blocks * binomial(n, a);
    return p;
}

AbsorbingProfile absorbing_count_allones(unsigned ell) {
    AbsorbingProfile p;
    p.connected_only = true;
    p.descriptor = "allones(ell=" + std::to_string(ell) + ")";
    if (ell >= 6)
        throw std::overflow_error("absorbing_count_allones: counts exceed long long");
    std::size_t n = static_cast<std::size_t>(1) << ell;
    for (std::size_t a = 2; a <= n; a += 2)
        p.counts[{static_cast<int>(a), 0}] = binomial(n, a);
    return p;
}

AbsorbingProfile absorbing_count_block_diagonal(unsigned ell, unsigned k) {
    if (k > ell)
        throw std::invalid_argument("absorbing_count_block_diagonal: k must be <= ell");
    AbsorbingProfile p;
    p.connected_only = true;
    p.descriptor =
        "block_diagonal(ell=" + std::to_string(ell) + ",k=" + std::to_string(k) + ")";
    if (k >= 6)
        throw std::overflow_error("absorbing_count_block_diagonal: counts exceed long long");
    long long comps = checked_shift(ell - k, "absorbing_count_block_diagonal");
    std::size_t n = static_cast<std::size_t>(1) << k;
    for (std::size_t a = 2; a <= n; a += 2)
        p.counts[{static_cast<int>(a), 0}] = comps * binomial(n, a);
    return p;
}

IdenticalBlocksCount absorbing_count_identical_blocks(unsigned ell, std::size_t m,
                                                      std::size_t n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("absorbing_count_identical_blocks: m, n must be >= 1");
    IdenticalBlocksCount out;
    out.multiplier_components = checked_shift(ell, "absorbing_count_identical_blocks");
    out.multiplier_alt = static_cast<long long>(n);
    out.resolved.connected_only = true;
    out.resolved.descriptor = "identical_blocks(ell=" + std::to_string(ell) +
                              ",m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")";
    for (std::size_t a = 2; a <= n; a += 2) {
        long long c = binomial(n, a);
        out.resolved.counts[{static_cast<int>(a), 0}] = out.multiplier_components * c;
        out.per_a_alt[static_cast<int>(a)] = out.multiplier_alt * c;
    }
    return out;
}

BipartiteStructure complete_bipartite_decomposition(const TannerGraph& g) {
    BipartiteStructure out;
    std::size_t total = g.m + g.n;
    std::vector<int> comp(total, -1);
    out.all_complete_bipartite = true;
    // Unified node ids: checks 0..m-1, variables m..m+n-1.
    for (std::size_t start = 0; start < total; ++start) {
        if (comp[start] >= 0) continue;
        int id = static_cast<int>(out.component_count++);
        std::vector<std::size_t> checks, vars;
        std::queue<std::size_t> q;
        comp[start] = id;
        q.push(start);
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            bool is_check = u < g.m;
            (is_check ? checks : vars).push_back(u);
            const auto& adj = is_check ? g.check_adj[u] : g.var_adj[u - g.m];
            for (std::uint32_t w : adj) {
                std::size_t v = is_check ? g.m + w : w;
                if (comp[v] < 0) {
                    comp[v] = id;
                    q.push(v);
                }
            }
        }
        out.shapes.emplace_back(checks.size(), vars.size());
        // Complete bipartite iff every check in the component touches every
        // variable in it; variable degrees then follow from edge counting.
        for (std::size_t c : checks)
            if (g.check_adj[c].size() != vars.size()) {
                out.all_complete_bipartite = false;
                break;
            }
        if (checks.empty() || vars.empty()) out.all_complete_bipartite = false;
    }
    out.uniform_shape = !out.shapes.empty();
    for (const auto& s : out.shapes)
        if (s != out.shapes.front()) {
            out.uniform_shape = false;
            break;
        }
    if (out.uniform_shape) {
        out.shape_checks = out.shapes.front().first;
        out.shape_vars = out.shapes.front().second;
    }
    return out;
}

BipartiteStructure complete_bipartite_decomposition(const Layout& l) {
    return complete_bipartite_decomposition(tanner_graph(l.expand()));
}

AbsorbingCheck is_absorbing(const TannerGraph& g, const std::vector<std::uint32_t>& vars) {
    if (vars.empty()) throw std::invalid_argument("is_absorbing: empty variable set");
    std::vector<char> in_set(g.n, 0);
    for (std::uint32_t v : vars) {
        if (v >= g.n) throw std::out_of_range("is_absorbing: variable index out of range");
        in_set[v] = 1;
    }
    // Degree of each check into the set.
    std::vector<int> deg(g.m, 0);
    for (std::uint32_t v : vars)
        for (std::uint32_t c : g.var_adj[v]) ++deg[c];
    AbsorbingCheck out;
    for (std::size_t c = 0; c < g.m; ++c)
        if (deg[c] % 2 == 1) ++out.b;
    out.absorbing = true;
    for (std::uint32_t v : vars) {
        int even = 0, odd = 0;
        for (std::uint32_t c : g.var_adj[v]) (deg[c] % 2 == 0 ? even : odd)++;
        if (even <= odd) {
            out.absorbing = false;
            break;
        }
    }
    return out;
}

AbsorbingProfile absorbing_profile_bruteforce(const TannerGraph& g, int a_max,
                                              bool connected_only,
                                              long long step_budget) {
    AbsorbingProfile p;
    p.connected_only = connected_only;
    p.descriptor = "bruteforce(a_max=" + std::to_string(a_max) + ")";
    for (const auto& s : absorbing_bruteforce(g, a_max, connected_only, step_budget))
        ++p.counts[{static_cast<int>(s.vars.size()), s.b}];
    return p;
}

}  // namespace qdl
