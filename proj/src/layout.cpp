#include "qdl/layout.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "json.hpp"

namespace qdl {

namespace {

// Girth of a bipartite multigraph given by integer biadjacency: any b_ij >= 2
// is a pair of parallel edges, i.e. a 2-cycle.
int base_girth(const std::vector<std::vector<int>>& b, std::size_t n_c, std::size_t n_v) {
    for (std::size_t i = 0; i < n_c; ++i)
        for (std::size_t j = 0; j < n_v; ++j)
            if (b[i][j] >= 2) return 2;
    // simple bipartite graph: BFS shortest cycle through each vertex
    std::size_t v_total = n_c + n_v;
    std::vector<std::vector<std::uint32_t>> adj(v_total);
    for (std::size_t i = 0; i < n_c; ++i)
        for (std::size_t j = 0; j < n_v; ++j)
            if (b[i][j] == 1) {
                adj[i].push_back(static_cast<std::uint32_t>(n_c + j));
                adj[n_c + j].push_back(static_cast<std::uint32_t>(i));
            }
    int best = -1;
    std::vector<int> dist(v_total);
    std::vector<int> parent(v_total);
    for (std::size_t s = 0; s < v_total; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<std::uint32_t> q;
        dist[s] = 0;
        parent[s] = -1;
        q.push(static_cast<std::uint32_t>(s));
        while (!q.empty()) {
            std::uint32_t u = q.front();
            q.pop();
            for (std::uint32_t w : adj[u]) {
                if (static_cast<int>(w) == parent[u]) continue;  // tree edge; graph is simple here
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = static_cast<int>(u);
                    q.push(w);
                } else {
                    int len = dist[u] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

}  // namespace

int Protograph::girth() const { return base_girth(base, n_c, n_v); }

Cell Cell::shifts(std::vector<std::uint32_t> s) {
    Cell c;
    c.state_ = State::assigned;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("cell shifts must be distinct");
    if (s.empty()) throw std::invalid_argument("assigned cell needs at least one shift; use zero()");
    c.shifts_ = std::move(s);
    return c;
}

std::uint32_t Cell::single_shift() const {
    if (!is_singleton()) throw std::logic_error("cell is not a singleton");
    return shifts_.front();
}

Layout::Layout(unsigned ell, std::size_t n_c, std::size_t n_v, Cell fill)
    : ell_(ell), n_c_(n_c), n_v_(n_v), cells_(n_c * n_v, fill) {
    if (n_c == 0 || n_v == 0) throw std::invalid_argument("layout dimensions must be positive");
}

Layout Layout::from_shift_rows(unsigned ell, const std::vector<std::vector<std::uint32_t>>& rows) {
    if (rows.empty() || rows.front().empty()) throw std::invalid_argument("empty shift grid");
    Layout l(ell, rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != l.n_v_) throw std::invalid_argument("ragged shift grid");
        for (std::size_t j = 0; j < rows[i].size(); ++j) l.set_cell(i, j, Cell::singleton(rows[i][j]));
    }
    return l;
}

void Layout::set_cell(std::size_t i, std::size_t j, Cell c) {
    for (std::uint32_t s : c.shift_set())
        if (s >= n()) throw std::out_of_range("shift exceeds lifting factor");
    cells_[i * n_v_ + j] = std::move(c);
}

bool Layout::all_assigned() const {
    return std::none_of(cells_.begin(), cells_.end(), [](const Cell& c) { return c.is_unset(); });
}

bool Layout::all_singleton() const {
    return std::all_of(cells_.begin(), cells_.end(), [](const Cell& c) { return c.is_singleton(); });
}

std::uint32_t Layout::shift_at(std::size_t i, std::size_t j) const { return cell(i, j).single_shift(); }

Protograph Layout::protograph() const {
    Protograph p;
    p.n_c = n_c_;
    p.n_v = n_v_;
    p.base.assign(n_c_, std::vector<int>(n_v_, 0));
    for (std::size_t i = 0; i < n_c_; ++i)
        for (std::size_t j = 0; j < n_v_; ++j)
            p.base[i][j] = static_cast<int>(cell(i, j).shift_set().size());
    return p;
}

BitMatrix Layout::expand() const {
    std::size_t nn = n();
    BitMatrix h(n_c_ * nn, n_v_ * nn);
    for (std::size_t i = 0; i < n_c_; ++i)
        for (std::size_t j = 0; j < n_v_; ++j) {
            const Cell& c = cell(i, j);
            if (c.is_unset()) throw std::logic_error("expand: layout has unset cells");
            for (std::uint32_t s : c.shift_set())
                for (std::size_t z = 0; z < nn; ++z) h.set(i * nn + z, j * nn + (z ^ s), true);
        }
    return h;
}

std::string Layout::to_json() const {
    nlohmann::json j;
    j["ell"] = ell_;
    j["n_c"] = n_c_;
    j["n_v"] = n_v_;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < n_c_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t jj = 0; jj < n_v_; ++jj) {
            const Cell& c = cell(i, jj);
            if (c.is_unset())
                row.push_back("unset");
            else if (c.is_zero())
                row.push_back(nullptr);
            else
                row.push_back(c.shift_set());
        }
        rows.push_back(std::move(row));
    }
    j["cells"] = std::move(rows);
    return j.dump(2);
}

Layout Layout::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    unsigned ell = j.at("ell").get<unsigned>();
    std::size_t n_c = j.at("n_c").get<std::size_t>();
    std::size_t n_v = j.at("n_v").get<std::size_t>();
    const auto& rows = j.at("cells");
    if (rows.size() != n_c) throw std::invalid_argument("layout json: row count mismatch");
    Layout l(ell, n_c, n_v);
    for (std::size_t i = 0; i < n_c; ++i) {
        const auto& row = rows[i];
        if (row.size() != n_v) throw std::invalid_argument("layout json: column count mismatch");
        for (std::size_t jj = 0; jj < n_v; ++jj) {
            const auto& c = row[jj];
            if (c.is_null())
                l.set_cell(i, jj, Cell::zero());
            else if (c.is_string() && c.get<std::string>() == "unset")
                l.set_cell(i, jj, Cell::unset());
            else
                l.set_cell(i, jj, Cell::shifts(c.get<std::vector<std::uint32_t>>()));
        }
    }
    return l;
}

std::size_t TannerGraph::edges() const {
    std::size_t e = 0;
    for (const auto& a : check_adj) e += a.size();
    return e;
}

TannerGraph tanner_graph(const BitMatrix& h) {
    TannerGraph g;
    g.m = h.rows();
    g.n = h.cols();
    g.check_adj.resize(g.m);
    g.var_adj.resize(g.n);
    for (std::size_t i = 0; i < g.m; ++i)
        for (std::size_t j : h.row(i).support()) {
            g.check_adj[i].push_back(static_cast<std::uint32_t>(j));
            g.var_adj[j].push_back(static_cast<std::uint32_t>(i));
        }
    return g;
}

BitMatrix adjacency_of(const BitMatrix& h) {
    std::size_t m = h.rows(), n = h.cols();
    BitMatrix a(m + n, m + n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j : h.row(i).support()) {
            a.set(i, m + j, true);
            a.set(m + j, i, true);
        }
    return a;
}

std::string to_alist(const BitMatrix& h) {
    // standard alist: dimensions n m, max degrees, per-node degrees, then
    // 1-based neighbor lists (variables first, then checks)
    TannerGraph g = tanner_graph(h);
    std::size_t max_vd = 0, max_cd = 0;
    for (const auto& a : g.var_adj) max_vd = std::max(max_vd, a.size());
    for (const auto& a : g.check_adj) max_cd = std::max(max_cd, a.size());
    std::ostringstream os;
    os << g.n << " " << g.m << "\n" << max_vd << " " << max_cd << "\n";
    for (std::size_t j = 0; j < g.n; ++j) os << g.var_adj[j].size() << (j + 1 < g.n ? " " : "\n");
    for (std::size_t i = 0; i < g.m; ++i) os << g.check_adj[i].size() << (i + 1 < g.m ? " " : "\n");
    for (std::size_t j = 0; j < g.n; ++j) {
        for (std::size_t t = 0; t < g.var_adj[j].size(); ++t)
            os << g.var_adj[j][t] + 1 << (t + 1 < g.var_adj[j].size() ? " " : "");
        os << "\n";
    }
    for (std::size_t i = 0; i < g.m; ++i) {
        for (std::size_t t = 0; t < g.check_adj[i].size(); ++t)
            os << g.check_adj[i][t] + 1 << (t + 1 < g.check_adj[i].size() ? " " : "");
        os << "\n";
    }
    return os.str();
}

BitMatrix from_alist(const std::string& text) {
    std::istringstream is(text);
    std::size_t n, m, max_vd, max_cd;
    if (!(is >> n >> m >> max_vd >> max_cd)) throw std::invalid_argument("alist: bad header");
    std::vector<std::size_t> vd(n), cd(m);
    for (auto& d : vd) is >> d;
    for (auto& d : cd) is >> d;
    if (!is) throw std::invalid_argument("alist: bad degree lists");
    BitMatrix h(m, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t t = 0; t < vd[j]; ++t) {
            std::size_t i;
            if (!(is >> i) || i < 1 || i > m) throw std::invalid_argument("alist: bad variable neighbor");
            h.set(i - 1, j, true);
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t t = 0; t < cd[i]; ++t) {
            std::size_t j;
            if (!(is >> j) || j < 1 || j > n) throw std::invalid_argument("alist: bad check neighbor");
            if (!h.get(i, j - 1)) throw std::invalid_argument("alist: inconsistent neighbor lists");
        }
    return h;
}

}  // namespace qdl
