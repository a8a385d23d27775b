#include "qdl/oracle.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <queue>
#include <stdexcept>

namespace qdl {

namespace {

// Unified adjacency: checks are 0..m-1, variables m..m+n-1.
std::vector<std::vector<int>> unified_adjacency(const TannerGraph& g) {
    std::vector<std::vector<int>> adj(g.m + g.n);
    for (std::size_t c = 0; c < g.m; ++c)
        for (std::uint32_t v : g.check_adj[c]) {
            adj[c].push_back(static_cast<int>(g.m + v));
            adj[g.m + v].push_back(static_cast<int>(c));
        }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

struct CycleDfs {
    const std::vector<std::vector<int>>& adj;
    int k_max;
    long long budget;
    long long steps = 0;
    int base = 0;
    std::vector<char> on_path;
    std::vector<long long> twice;  // twice[k] = 2 * (#k-cycles whose min vertex is base)

    CycleDfs(const std::vector<std::vector<int>>& a, int k)
        : adj(a), k_max(k), budget(0), on_path(a.size(), 0),
          twice(static_cast<std::size_t>(k) + 1, 0) {}

    void run(int v, int depth) {  // depth = edges walked from base
        for (int w : adj[v]) {
            if (++steps > budget)
                throw std::runtime_error("enumerate_cycles: step budget exceeded");
            if (w == base) {
                if (depth >= 3) twice[depth + 1]++;
            } else if (w > base && !on_path[w] && depth + 1 < k_max) {
                on_path[w] = 1;
                run(w, depth + 1);
                on_path[w] = 0;
            }
        }
    }
};

// b = number of check nodes of odd degree towards A; returns whether every
// variable of A sees strictly more even- than odd-degree check neighbors.
bool absorbing_condition(const TannerGraph& g, const std::vector<std::uint32_t>& a,
                         const std::vector<int>& deg, int* b_out) {
    int b = 0;
    for (std::size_t c = 0; c < g.m; ++c)
        if (deg[c] & 1) ++b;
    for (std::uint32_t v : a) {
        int even = 0, odd = 0;
        for (std::uint32_t c : g.var_adj[v]) {
            if (deg[c] & 1)
                ++odd;
            else
                ++even;  // deg[c] >= 1 since c is adjacent to v in A
        }
        if (even <= odd) return false;
    }
    *b_out = b;
    return true;
}

bool induced_connected(const TannerGraph& g, const std::vector<std::uint32_t>& a) {
    if (a.empty()) return true;
    std::vector<char> in_a(g.n, 0);
    for (std::uint32_t v : a) in_a[v] = 1;
    // BFS over variables of A and checks with deg >= 1
    std::vector<char> seen_v(g.n, 0), seen_c(g.m, 0);
    std::queue<std::uint32_t> q;  // variables only; checks expanded inline
    q.push(a[0]);
    seen_v[a[0]] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        std::uint32_t v = q.front();
        q.pop();
        for (std::uint32_t c : g.var_adj[v]) {
            if (seen_c[c]) continue;
            seen_c[c] = 1;
            for (std::uint32_t w : g.check_adj[c])
                if (in_a[w] && !seen_v[w]) {
                    seen_v[w] = 1;
                    ++reached;
                    q.push(w);
                }
        }
    }
    if (reached != a.size()) return false;
    // every check of the induced subgraph touches A, hence was reached
    return true;
}

}  // namespace

CycleInventory enumerate_cycles(const TannerGraph& g, int k_max,
                                long long step_budget) {
    if (k_max < 4 || k_max > 10)
        throw std::invalid_argument("enumerate_cycles: k_max must be in [4, 10]");
    auto adj = unified_adjacency(g);
    CycleDfs dfs(adj, k_max);
    dfs.budget = step_budget;
    for (int b = 0; b < static_cast<int>(adj.size()); ++b) {
        dfs.base = b;
        dfs.on_path[b] = 1;
        dfs.run(b, 0);
        dfs.on_path[b] = 0;
    }
    CycleInventory inv;
    for (int k = 4; k <= k_max; k += 2) {
        long long t = dfs.twice[k];
        if (t % 2 != 0)
            throw std::logic_error("enumerate_cycles: direction pairing broken");
        inv[k] = t / 2;
    }
    return inv;
}

int girth_bfs(const TannerGraph& g) {
    auto adj = unified_adjacency(g);
    const int nv = static_cast<int>(adj.size());
    int best = INT_MAX;
    std::vector<int> dist(nv), par(nv);
    for (int s = 0; s < nv; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(par.begin(), par.end(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (2 * dist[u] >= best) continue;  // cannot improve from here
            for (int w : adj[u]) {
                if (w == par[u]) continue;  // tree edge; the graph is simple
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    par[w] = u;
                    q.push(w);
                } else {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best == INT_MAX ? -1 : best;
}

std::vector<AbsorbingSet> absorbing_bruteforce(const TannerGraph& g, int a_max,
                                               bool connected_only,
                                               long long step_budget) {
    if (a_max < 1) return {};
    std::vector<AbsorbingSet> out;
    std::vector<int> deg(g.m);
    long long steps = 0;
    const int n = static_cast<int>(g.n);
    for (int a = 1; a <= std::min(a_max, n); ++a) {
        std::vector<std::uint32_t> idx(a);
        for (int i = 0; i < a; ++i) idx[i] = static_cast<std::uint32_t>(i);
        while (true) {
            steps += a;
            if (steps > step_budget)
                throw std::runtime_error("absorbing_bruteforce: step budget exceeded");
            std::fill(deg.begin(), deg.end(), 0);
            for (std::uint32_t v : idx)
                for (std::uint32_t c : g.var_adj[v]) ++deg[c];
            int b = 0;
            if (absorbing_condition(g, idx, deg, &b) &&
                (!connected_only || induced_connected(g, idx)))
                out.push_back({idx, b});
            // next combination
            int i = a - 1;
            while (i >= 0 && idx[i] == static_cast<std::uint32_t>(n - a + i)) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < a; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

namespace {

// Minimum weight over (all nonzero combinations of basis) minus vectors of
// `skip` (when given); Gray-code walk so each step is one XOR.
std::optional<int> min_weight_walk(const std::vector<BitVector>& basis,
                                   std::size_t n, const RowEchelon* skip) {
    const int k = static_cast<int>(basis.size());
    if (k == 0) return std::nullopt;
    BitVector cur(n);
    std::optional<int> best;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        // Gray code: the bit flipped between g(i-1) and g(i) is the lowest
        // set bit of i, so the walk touches every combination with one XOR each.
        int bit = std::countr_zero(i);
        cur ^= basis[static_cast<std::size_t>(bit)];
        int w = static_cast<int>(cur.weight());
        if (best && w >= *best) continue;
        if (skip && skip->contains(cur)) continue;
        best = w;
    }
    return best;
}

}  // namespace

std::optional<int> min_distance(const BitMatrix& h, int max_kernel_dim) {
    auto basis = kernel_basis(h);
    if (basis.empty()) return std::nullopt;
    if (static_cast<int>(basis.size()) > max_kernel_dim)
        throw std::runtime_error("min_distance: kernel dimension over budget");
    return min_weight_walk(basis, h.cols(), nullptr);
}

CssParams css_params(const BitMatrix& hx, const BitMatrix& hz,
                     int max_kernel_dim) {
    if (hx.cols() != hz.cols())
        throw std::invalid_argument("css_params: column counts differ");
    if (!mat_mul(hz, hx.transposed()).is_zero())
        throw std::invalid_argument("css_params: Hz · Hxᵀ is nonzero");
    const int n = static_cast<int>(hx.cols());
    const int k = n - static_cast<int>(rank(hx)) - static_cast<int>(rank(hz));
    CssParams out;
    out.n = n;
    out.k = k;
    if (k <= 0) return out;

    auto kx = kernel_basis(hx);
    auto kz = kernel_basis(hz);
    if (static_cast<int>(kx.size()) > max_kernel_dim ||
        static_cast<int>(kz.size()) > max_kernel_dim)
        return out;  // k known, d over budget

    RowEchelon rs_z(hz.cols()), rs_x(hx.cols());
    for (std::size_t r = 0; r < hz.rows(); ++r) rs_z.absorb(hz.row(r));
    for (std::size_t r = 0; r < hx.rows(); ++r) rs_x.absorb(hx.row(r));

    auto dx = min_weight_walk(kx, hx.cols(), &rs_z);  // X-type logicals
    auto dz = min_weight_walk(kz, hz.cols(), &rs_x);  // Z-type logicals
    if (dx && dz)
        out.d = std::min(*dx, *dz);
    else if (dx)
        out.d = dx;
    else
        out.d = dz;
    return out;
}

}  // namespace qdl
