// qdl: command-line front end for the dyadic/quasi-dyadic LDPC toolkit.
//
// Subcommands: dyadic, layout, cycles, girth, peg, absorbing, css, oracle,
// sim. Exit codes: 0 success, 1 domain error (bad input data, infeasible
// request), 2 usage error (unknown flag, missing argument).
//
// Environment: QDL_SEED overrides the default --seed, QDL_THREADS the default
// --threads. Every command that takes --seed is bit-reproducible across runs
// and thread counts. Commands that write an artifact also write a
// "<artifact>.manifest.json" reproducibility sidecar.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qdl/absorbing.hpp"
#include "qdl/bpsim.hpp"
#include "qdl/css.hpp"
#include "qdl/cyclecount.hpp"
#include "qdl/dyadic.hpp"
#include "qdl/layout.hpp"
#include "qdl/manifest.hpp"
#include "qdl/oracle.hpp"
#include "qdl/peg.hpp"

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::vector<std::uint32_t> parse_u32_list(const std::string& csv, bool one_based) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        unsigned long v = std::stoul(item, &pos);
        if (pos != item.size()) throw std::runtime_error("bad integer in list: '" + item + "'");
        if (one_based) {
            if (v == 0) throw std::runtime_error("one-based list entries must be >= 1");
            --v;
        }
        out.push_back(static_cast<std::uint32_t>(v));
    }
    if (out.empty()) throw std::runtime_error("empty integer list");
    return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw std::runtime_error("empty probability list");
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

qdl::Layout load_layout(const std::string& path) { return qdl::Layout::from_json(read_file(path)); }

qdl::CssPair load_pair(const std::string& path) {
    return qdl::css_pair_from_json(read_file(path));
}

json census_json(const qdl::CycleCensus& c) {
    json j;
    j["girth"] = c.girth;
    j["valid"] = {{"n4", c.n4.has_value()}, {"n6", c.n6.has_value()}, {"n8", c.n8.has_value()}};
    if (c.n4) j["n4"] = *c.n4;
    if (c.n6) j["n6"] = *c.n6;
    if (c.n8) j["n8"] = *c.n8;
    return j;
}

json profile_json(const qdl::AbsorbingProfile& p) {
    json counts = json::array();
    for (const auto& [ab, count] : p.counts)
        counts.push_back({{"a", ab.first}, {"b", ab.second}, {"count", count}});
    return json{{"descriptor", p.descriptor},
                {"connected_only", p.connected_only},
                {"counts", counts},
                {"total", p.total()}};
}

json params_json(const qdl::CssParams& p) {
    json j{{"n", p.n}, {"k", p.k}};
    if (p.d) j["d"] = *p.d;
    else j["d"] = nullptr;
    return j;
}

json linear_params_json(const qdl::LinearCodeParams& p) {
    json j{{"n", p.n}, {"k", p.k}};
    if (p.d) j["d"] = *p.d;
    else j["d"] = nullptr;
    return j;
}

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct GlobalOpts {
    unsigned threads = 0;
    bool one_based = false;
    std::optional<std::uint64_t> seed_env;
    std::vector<std::string> argv;
};

qdl::RunManifest make_manifest(const GlobalOpts& g, std::optional<std::uint64_t> seed,
                               const std::vector<std::string>& inputs) {
    qdl::RunManifest m;
    m.argv = g.argv;
    m.threads = g.threads;
    if (seed) {
        m.has_seed = true;
        m.seed = *seed;
    }
    for (const auto& path : inputs) m.add_input(path);
    return m;
}

void finish_artifact(qdl::RunManifest m, const std::string& artifact) {
    m.add_output(artifact);
    qdl::write_manifest(m, artifact);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "dyadic/quasi-dyadic LDPC toolkit: cycle censuses, girth-aware "
        "construction, absorbing sets, CSS pairs, BP simulation.\n"
        "Environment: QDL_SEED sets the default --seed, QDL_THREADS the "
        "default --threads."};
    app.require_subcommand(1);
    app.fallthrough();  // let --threads / --one-based appear after subcommands
    app.set_version_flag("--version", std::string("qdl ") + qdl::kToolVersion);

    GlobalOpts g;
    for (int i = 0; i < argc; ++i) g.argv.emplace_back(argv[i]);
    unsigned hw = std::thread::hardware_concurrency();
    g.threads = hw ? hw : 1;
    if (const char* t = std::getenv("QDL_THREADS")) g.threads = std::stoul(t);
    std::uint64_t default_seed = 0;
    if (const char* s = std::getenv("QDL_SEED")) default_seed = std::stoull(s);
    app.add_option("--threads", g.threads, "Worker threads (results do not depend on this)")
        ->capture_default_str();
    app.add_flag("--one-based", g.one_based,
                 "Treat all support/shift lists as 1-based indices");

    // ---------------------------------------------------------------- dyadic
    auto* dyadic = app.add_subcommand("dyadic", "Single dyadic matrices");
    dyadic->require_subcommand(1);
    std::string dy_supp;
    unsigned dy_ell = 0;
    std::string dy_out;
    auto add_dyadic_common = [&](CLI::App* c) {
        c->add_option("--supp", dy_supp, "Signature support, comma-separated")->required();
        c->add_option("--ell", dy_ell, "Lift exponent: matrices are 2^ell x 2^ell")->required();
    };
    auto* dy_info = dyadic->add_subcommand("info", "Rank, structure and code parameters");
    add_dyadic_common(dy_info);
    auto* dy_rank = dyadic->add_subcommand("rank", "GF(2) rank");
    add_dyadic_common(dy_rank);
    auto* dy_expand = dyadic->add_subcommand("expand", "Expansion in alist format");
    add_dyadic_common(dy_expand);
    dy_expand->add_option("-o,--output", dy_out, "Write alist here (else stdout)");
    unsigned dy_census_ell = 0;
    auto* dy_census = dyadic->add_subcommand("census", "Rank histogram over all signatures");
    dy_census->add_option("--ell", dy_census_ell, "Lift exponent (<= 4)")->required();

    // ---------------------------------------------------------------- layout
    auto* layout = app.add_subcommand("layout", "Quasi-dyadic block layouts");
    layout->require_subcommand(1);
    std::string lo_file, lo_out, lo_alist_in;
    auto* lo_validate = layout->add_subcommand("validate", "of a layout JSON file");
    lo_validate->add_option("--layout", lo_file, "Layout JSON file")->required();
    auto* lo_expand = layout->add_subcommand("expand", "Expanded binary matrix as JSON");
    lo_expand->add_option("--layout", lo_file, "Layout JSON file")->required();
    lo_expand->add_option("-o,--output", lo_out, "Write matrix JSON here (else stdout)");
    auto* lo_alist = layout->add_subcommand("alist", "Export expansion to alist / import alist");
    lo_alist->add_option("--layout", lo_file, "Layout JSON file (export mode)");
    lo_alist->add_option("--import", lo_alist_in, "alist file to import (report mode)");
    lo_alist->add_option("-o,--output", lo_out, "Write alist (export) or matrix JSON (import)");

    // ---------------------------------------------------------------- cycles
    auto* cycles = app.add_subcommand("cycles", "Closed-form short-cycle censuses");
    cycles->require_subcommand(1);
    std::string cy_file, cy_k = "all";
    bool cy_oracle = false;
    auto* cy_count = cycles->add_subcommand("count", "4/6/8-cycle counts of a layout");
    cy_count->add_option("--layout", cy_file, "Layout JSON file")->required();
    cy_count->add_option("--k", cy_k, "4, 6, 8 or all")
        ->check(CLI::IsMember({"4", "6", "8", "all"}));
    cy_count->add_flag("--oracle-check", cy_oracle, "Also enumerate on the expansion and compare");

    // ----------------------------------------------------------------- girth
    auto* girth = app.add_subcommand("girth", "Exact girth of a layout's expansion");
    std::string gi_file;
    bool gi_oracle = false;
    girth->add_option("--layout", gi_file, "Layout JSON file")->required();
    girth->add_flag("--oracle", gi_oracle, "Cross-check with BFS on the expansion");

    // ------------------------------------------------------------------- peg
    auto* peg = app.add_subcommand("peg", "Progressive layout construction");
    peg->require_subcommand(1);
    std::size_t peg_nc = 0, peg_nv = 0;
    unsigned peg_ell = 0;
    std::string peg_order = "col", peg_strategy = "uniform", peg_out;
    std::uint64_t peg_seed = default_seed;
    bool peg_literal = false;
    auto* peg_build = peg->add_subcommand("build", "Construct a girth-aware layout");
    peg_build->add_option("--nc", peg_nc, "Block rows")->required();
    peg_build->add_option("--nv", peg_nv, "Block columns")->required();
    peg_build->add_option("--ell", peg_ell, "Lift exponent")->required();
    peg_build->add_option("--order", peg_order, "Cell visit order")
        ->check(CLI::IsMember({"col", "row", "random"}))
        ->capture_default_str();
    peg_build->add_option("--strategy", peg_strategy, "Candidate choice within the admissible set")
        ->check(CLI::IsMember({"uniform", "min", "max", "avg"}))
        ->capture_default_str();
    peg_build->add_option("--seed", peg_seed, "Draw seed")->capture_default_str();
    peg_build->add_flag("--literal-else", peg_literal,
                        "Fallback branch draws from the whole shift space "
                        "instead of the scored band");
    peg_build->add_option("-o,--output", peg_out, "Layout JSON artifact")->required();

    // ------------------------------------------------------------- absorbing
    auto* absorbing = app.add_subcommand("absorbing", "(a, b <= 1) absorbing-set counting");
    absorbing->require_subcommand(1);
    std::string ab_file, ab_shape;
    int ab_amax = 4;
    bool ab_connected = false, ab_oracle = false;
    unsigned ab_ell = 0, ab_k = 0;
    std::size_t ab_n = 0, ab_m = 0;
    auto* ab_count = absorbing->add_subcommand("count", "Enumerate on a layout's expansion");
    ab_count->add_option("--layout", ab_file, "Layout JSON file")->required();
    ab_count->add_option("--a-max", ab_amax, "Largest variable-set size")->required();
    ab_count->add_flag("--connected-only", ab_connected, "Count connected sets only");
    ab_count->add_flag("--oracle", ab_oracle, "Cross-check with the independent enumerator");
    auto* ab_closed = absorbing->add_subcommand("closed-form", "Boundary-case closed forms");
    ab_closed->add_option("--shape", ab_shape, "Which boundary case")
        ->check(CLI::IsMember({"1xn", "all-ones", "block-diagonal", "identical-blocks"}))
        ->required();
    ab_closed->add_option("--ell", ab_ell, "Lift exponent")->required();
    ab_closed->add_option("--n", ab_n, "Block columns (1xn, identical-blocks)");
    ab_closed->add_option("--m", ab_m, "Block rows (identical-blocks)");
    ab_closed->add_option("--k", ab_k, "Sub-block exponent (block-diagonal)");
    ab_closed->add_flag("--oracle", ab_oracle, "Verify against brute force on the expansion");

    // ------------------------------------------------------------------- css
    auto* css = app.add_subcommand("css", "Commuting check-matrix pairs");
    css->require_subcommand(1);
    std::string css_kind, css_out, css_pair_file;
    unsigned css_ell = 0;
    std::string css_x, css_y, css_sigma, css_tau, css_xs, css_supp1, css_supp2, css_la, css_lb;
    std::uint32_t css_base = 0;
    std::size_t css_rows_opt = 0;
    int css_maxkdim = 24;
    auto* css_build = css->add_subcommand("build", "Construct a pair and write pair JSON");
    css_build->add_option("--kind", css_kind, "main, bbs, bicycle, hgp, symmetric or cross")
        ->check(CLI::IsMember({"main", "bbs", "bicycle", "hgp", "symmetric", "cross"}))
        ->required();
    css_build->add_option("--ell", css_ell, "Lift exponent (all kinds except hgp)");
    css_build->add_option("--x", css_x, "main: x shifts / cross: H_X support");
    css_build->add_option("--y", css_y, "main: y shifts / cross: H_Z support");
    css_build->add_option("--sigma", css_sigma, "main: row permutation (default cyclic)");
    css_build->add_option("--tau", css_tau, "main: row permutation (default cyclic)");
    css_build->add_option("--rows", css_rows_opt, "main/bbs: keep only the first block rows");
    css_build->add_option("--base", css_base, "bbs: shift of the fixed permutation");
    css_build->add_option("--xs", css_xs, "bbs: the v variable shifts");
    css_build->add_option("--supp1", css_supp1, "bicycle: first signature support / symmetric");
    css_build->add_option("--supp2", css_supp2, "bicycle: second signature support");
    css_build->add_option("--layout-a", css_la, "hgp: left factor layout JSON");
    css_build->add_option("--layout-b", css_lb, "hgp: right factor layout JSON");
    css_build->add_option("-o,--output", css_out, "Pair JSON artifact")->required();
    auto* css_check = css->add_subcommand("check", "Verify H_X H_Z^T = 0 for a pair file");
    css_check->add_option("--pair", css_pair_file, "Pair JSON file")->required();
    auto* css_params_cmd = css->add_subcommand("params", "[[n, k, d]] of a pair file");
    css_params_cmd->add_option("--pair", css_pair_file, "Pair JSON file")->required();
    css_params_cmd->add_option("--max-kernel-dim", css_maxkdim,
                               "Exact-distance budget: skip d when a kernel exceeds this")
        ->capture_default_str();
    std::string cs_kind;
    std::size_t cs_rows = 0, cs_cols = 0, cs_omega = 0;
    unsigned cs_ell = 0;
    int cs_k = 0, cs_d = 0, cs_budget = 100000;
    long long cs_samples = 2000;
    std::uint64_t cs_seed = default_seed;
    auto* css_search = css->add_subcommand("search", "Randomized existence/optimization searches");
    css_search->add_option("--kind", cs_kind, "grid (self-dual block grid), bicycle, or main")
        ->check(CLI::IsMember({"grid", "bicycle", "main"}))
        ->required();
    css_search->add_option("--ell", cs_ell, "Lift exponent")->required();
    css_search->add_option("--rows", cs_rows, "grid/main: block rows");
    css_search->add_option("--cols", cs_cols, "grid: block columns");
    css_search->add_option("--omega", cs_omega, "main: permutation length");
    css_search->add_option("--k", cs_k, "target code dimension (grid, bicycle)");
    css_search->add_option("--d", cs_d, "target distance (grid, bicycle)");
    css_search->add_option("--budget", cs_budget, "attempt budget (grid, bicycle)")
        ->capture_default_str();
    css_search->add_option("--samples", cs_samples, "main: commuting candidates to score")
        ->capture_default_str();
    css_search->add_option("--seed", cs_seed, "Draw seed")->capture_default_str();
    css_search->add_option("-o,--output", css_out, "Write the found pair JSON here");

    // ---------------------------------------------------------------- oracle
    auto* oracle = app.add_subcommand("oracle", "Brute-force reference computations");
    oracle->require_subcommand(1);
    std::string or_layout, or_alist, or_pair;
    int or_kmax = 8, or_amax = 4, or_maxkdim = 24;
    bool or_connected = false;
    auto add_matrix_inputs = [&](CLI::App* c) {
        c->add_option("--layout", or_layout, "Layout JSON file (expanded first)");
        c->add_option("--alist", or_alist, "alist matrix file");
    };
    auto* or_cycles = oracle->add_subcommand("cycles", "Exact cycle inventory by length");
    add_matrix_inputs(or_cycles);
    or_cycles->add_option("--k-max", or_kmax, "Largest cycle length (<= 10)")
        ->capture_default_str();
    auto* or_girth = oracle->add_subcommand("girth", "Exact girth by BFS");
    add_matrix_inputs(or_girth);
    auto* or_absorbing = oracle->add_subcommand("absorbing", "Exhaustive absorbing-set census");
    add_matrix_inputs(or_absorbing);
    or_absorbing->add_option("--a-max", or_amax, "Largest variable-set size")->required();
    or_absorbing->add_flag("--connected-only", or_connected, "Count connected sets only");
    auto* or_distance = oracle->add_subcommand("distance", "Exact minimum distance");
    add_matrix_inputs(or_distance);
    or_distance->add_option("--max-kernel-dim", or_maxkdim, "Kernel enumeration budget")
        ->capture_default_str();
    auto* or_css = oracle->add_subcommand("css-params", "Exact [[n, k, d]] of a pair");
    or_css->add_option("--pair", or_pair, "Pair JSON file")->required();
    or_css->add_option("--max-kernel-dim", or_maxkdim, "Kernel enumeration budget")
        ->capture_default_str();

    // ------------------------------------------------------------------- sim
    auto* sim = app.add_subcommand("sim", "Belief-propagation Monte Carlo");
    sim->require_subcommand(1);
    std::string sm_pair, sm_layout, sm_p, sm_out;
    long long sm_trials = 10000;
    std::uint64_t sm_seed = default_seed;
    int sm_max_iters = 100;
    auto* sm_run = sim->add_subcommand("run", "FER sweep over a probability grid");
    sm_run->add_option("--pair", sm_pair, "Pair JSON file (logical-error criterion)");
    sm_run->add_option("--layout", sm_layout, "Layout JSON file (classical block-error)");
    sm_run->add_option("--p", sm_p, "Flip probabilities, comma-separated")->required();
    sm_run->add_option("--trials", sm_trials, "Monte Carlo trials per point")
        ->capture_default_str();
    sm_run->add_option("--seed", sm_seed, "Trial-stream seed")->capture_default_str();
    sm_run->add_option("--max-iters", sm_max_iters, "Decoder iteration cap")
        ->capture_default_str();
    sm_run->add_option("-o,--output", sm_out, "Results CSV artifact")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        // ------------------------------------------------------------ dyadic
        if (dy_info->parsed() || dy_rank->parsed() || dy_expand->parsed()) {
            auto supp = parse_u32_list(dy_supp, g.one_based);
            auto d = qdl::DyadicMatrix::from_support(dy_ell, supp);
            if (dy_rank->parsed()) {
                emit(json{{"rank", qdl::dyadic_rank(d)}});
            } else if (dy_info->parsed()) {
                bool coset = qdl::is_subspace_or_coset(d.support());
                json out{{"ell", dy_ell},
                         {"n", d.dim()},
                         {"support", d.support()},
                         {"weight", d.weight()},
                         {"rank", qdl::dyadic_rank(d)},
                         {"subspace_or_coset", coset},
                         {"self_orthogonal", qdl::self_orthogonality_check(d)}};
                if (coset) {
                    auto params = qdl::dyadic_code_params(d);
                    out["rowspace_code"] = linear_params_json(params.rowspace);
                    out["dual_code"] = linear_params_json(params.dual);
                }
                emit(out);
            } else {
                std::string alist = qdl::to_alist(d.expand());
                if (dy_out.empty()) {
                    std::cout << alist;
                } else {
                    write_file(dy_out, alist);
                    finish_artifact(make_manifest(g, std::nullopt, {}), dy_out);
                    emit(json{{"output", dy_out}});
                }
            }
        } else if (dy_census->parsed()) {
            json hist;
            for (const auto& [rank, count] : qdl::rank_census(dy_census_ell))
                hist[std::to_string(rank)] = count;
            emit(json{{"ell", dy_census_ell}, {"rank_census", hist}});
        }
        // ------------------------------------------------------------ layout
        else if (lo_validate->parsed()) {
            auto l = load_layout(lo_file);
            emit(json{{"ok", true},
                      {"ell", l.ell()},
                      {"n_c", l.n_c()},
                      {"n_v", l.n_v()},
                      {"rows", l.n_c() << l.ell()},
                      {"cols", l.n_v() << l.ell()},
                      {"all_assigned", l.all_assigned()},
                      {"all_singleton", l.all_singleton()}});
        } else if (lo_expand->parsed()) {
            auto h = load_layout(lo_file).expand();
            json rows = json::array();
            for (std::size_t i = 0; i < h.rows(); ++i) {
                std::string r(h.cols(), '0');
                for (std::size_t j = 0; j < h.cols(); ++j)
                    if (h.get(i, j)) r[j] = '1';
                rows.push_back(r);
            }
            json out{{"m", h.rows()}, {"n", h.cols()}, {"rows", rows}};
            if (lo_out.empty()) {
                emit(out);
            } else {
                write_file(lo_out, out.dump(2) + "\n");
                finish_artifact(make_manifest(g, std::nullopt, {lo_file}), lo_out);
                emit(json{{"output", lo_out}});
            }
        } else if (lo_alist->parsed()) {
            if (lo_file.empty() == lo_alist_in.empty())
                throw std::runtime_error("layout alist: give exactly one of --layout / --import");
            if (!lo_file.empty()) {
                std::string alist = qdl::to_alist(load_layout(lo_file).expand());
                if (lo_out.empty()) {
                    std::cout << alist;
                } else {
                    write_file(lo_out, alist);
                    finish_artifact(make_manifest(g, std::nullopt, {lo_file}), lo_out);
                    emit(json{{"output", lo_out}});
                }
            } else {
                auto h = qdl::from_alist(read_file(lo_alist_in));
                auto t = qdl::tanner_graph(h);
                json out{{"m", h.rows()}, {"n", h.cols()}, {"edges", t.edges()}};
                if (!lo_out.empty()) {
                    json rows = json::array();
                    for (std::size_t i = 0; i < h.rows(); ++i) {
                        std::string r(h.cols(), '0');
                        for (std::size_t j = 0; j < h.cols(); ++j)
                            if (h.get(i, j)) r[j] = '1';
                        rows.push_back(r);
                    }
                    write_file(lo_out,
                               json{{"m", h.rows()}, {"n", h.cols()}, {"rows", rows}}.dump(2) +
                                   "\n");
                    finish_artifact(make_manifest(g, std::nullopt, {lo_alist_in}), lo_out);
                    out["output"] = lo_out;
                }
                emit(out);
            }
        }
        // ------------------------------------------------------------ cycles
        else if (cy_count->parsed()) {
            auto l = load_layout(cy_file);
            auto c = qdl::cycle_census(l);
            json out = census_json(c);
            if (cy_k != "all") {
                json filtered{{"girth", out["girth"]}, {"valid", out["valid"]}};
                std::string key = "n" + cy_k;
                if (out.contains(key)) filtered[key] = out[key];
                out = filtered;
            }
            if (cy_oracle) {
                auto inv = qdl::enumerate_cycles(qdl::tanner_graph(l.expand()), 8);
                bool agrees = (!c.n4 || *c.n4 == inv[4]) && (!c.n6 || *c.n6 == inv[6]) &&
                              (!c.n8 || *c.n8 == inv[8]);
                out["oracle"] = {{"n4", inv[4]}, {"n6", inv[6]}, {"n8", inv[8]}, {"agrees", agrees}};
            }
            emit(out);
        }
        // ------------------------------------------------------------- girth
        else if (girth->parsed()) {
            auto l = load_layout(gi_file);
            int gv = qdl::girth_of(l);
            json out{{"girth", gv}};
            if (gi_oracle) {
                int ov = qdl::girth_bfs(qdl::tanner_graph(l.expand()));
                out["oracle_girth"] = ov;
                out["agrees"] = (gv == ov);
            }
            emit(out);
        }
        // --------------------------------------------------------------- peg
        else if (peg_build->parsed()) {
            qdl::PegConfig cfg;
            cfg.n_c = peg_nc;
            cfg.n_v = peg_nv;
            cfg.ell = peg_ell;
            cfg.ordering = peg_order == "col"   ? qdl::PegOrdering::column_major
                           : peg_order == "row" ? qdl::PegOrdering::row_major
                                                : qdl::PegOrdering::random_order;
            cfg.strategy = peg_strategy == "uniform" ? qdl::PegStrategy::uniform
                           : peg_strategy == "min"   ? qdl::PegStrategy::min_cycles
                           : peg_strategy == "max"   ? qdl::PegStrategy::max_cycles
                                                     : qdl::PegStrategy::avg_cycles;
            cfg.seed = peg_seed;
            cfg.literal_fallback = peg_literal;
            qdl::Layout l = (cfg.strategy == qdl::PegStrategy::uniform)
                                ? qdl::peg_construct(cfg)
                                : qdl::peg_construct_min_cycles(cfg);
            write_file(peg_out, l.to_json());
            finish_artifact(make_manifest(g, peg_seed, {}), peg_out);
            json out{{"output", peg_out}, {"census", census_json(qdl::cycle_census(l))}};
            emit(out);
        }
        // --------------------------------------------------------- absorbing
        else if (ab_count->parsed()) {
            auto l = load_layout(ab_file);
            auto t = qdl::tanner_graph(l.expand());
            auto prof = qdl::absorbing_profile_bruteforce(t, ab_amax, ab_connected);
            json out = profile_json(prof);
            if (ab_oracle) {
                auto sets = qdl::absorbing_bruteforce(t, ab_amax, ab_connected);
                std::map<std::pair<int, int>, long long> agg;
                for (const auto& s : sets) ++agg[{static_cast<int>(s.vars.size()), s.b}];
                out["oracle"] = {{"total", static_cast<long long>(sets.size())},
                                 {"agrees", agg == prof.counts}};
            }
            emit(out);
        } else if (ab_closed->parsed()) {
            json out;
            qdl::AbsorbingProfile closed;
            qdl::Layout check_layout(0, 1, 1, qdl::Cell::zero());
            int check_amax = 0;
            if (ab_shape == "1xn") {
                if (ab_n == 0) throw std::runtime_error("closed-form 1xn needs --n");
                closed = qdl::absorbing_count_1xn(ab_ell, ab_n);
                out = profile_json(closed);
                check_layout = qdl::Layout(ab_ell, 1, ab_n, qdl::Cell::singleton(0));
                check_amax = static_cast<int>(ab_n);
            } else if (ab_shape == "all-ones") {
                closed = qdl::absorbing_count_allones(ab_ell);
                out = profile_json(closed);
                std::vector<std::uint32_t> full(std::size_t{1} << ab_ell);
                for (std::size_t v = 0; v < full.size(); ++v)
                    full[v] = static_cast<std::uint32_t>(v);
                check_layout = qdl::Layout(ab_ell, 1, 1, qdl::Cell::shifts(full));
                check_amax = static_cast<int>(full.size());
            } else if (ab_shape == "block-diagonal") {
                closed = qdl::absorbing_count_block_diagonal(ab_ell, ab_k);
                out = profile_json(closed);
                std::vector<std::uint32_t> sub(std::size_t{1} << ab_k);
                for (std::size_t v = 0; v < sub.size(); ++v)
                    sub[v] = static_cast<std::uint32_t>(v);
                check_layout = qdl::Layout(ab_ell, 1, 1, qdl::Cell::shifts(sub));
                check_amax = static_cast<int>(sub.size());
            } else {  // identical-blocks
                if (ab_m == 0 || ab_n == 0)
                    throw std::runtime_error("closed-form identical-blocks needs --m and --n");
                auto ib = qdl::absorbing_count_identical_blocks(ab_ell, ab_m, ab_n);
                closed = ib.resolved;
                out = profile_json(closed);
                out["multiplier_components"] = ib.multiplier_components;
                out["multiplier_alt"] = ib.multiplier_alt;
                json alt;
                for (const auto& [a, c] : ib.per_a_alt) alt[std::to_string(a)] = c;
                out["per_a_alt"] = alt;
                check_layout = qdl::Layout(ab_ell, ab_m, ab_n, qdl::Cell::singleton(0));
                check_amax = static_cast<int>(ab_n);
            }
            if (ab_oracle) {
                auto t = qdl::tanner_graph(check_layout.expand());
                auto prof = qdl::absorbing_profile_bruteforce(t, check_amax, true);
                out["oracle"] = {{"total", prof.total()},
                                 {"agrees", prof.counts == closed.counts}};
            }
            emit(out);
        }
        // --------------------------------------------------------------- css
        else if (css_build->parsed()) {
            qdl::CssPair pair;
            json extra = json::object();
            if (css_kind == "main") {
                auto x = parse_u32_list(css_x, g.one_based);
                auto y = parse_u32_list(css_y, g.one_based);
                auto sigma = css_sigma.empty() ? qdl::cyclic_permutation(x.size())
                                               : parse_u32_list(css_sigma, g.one_based);
                auto tau = css_tau.empty() ? qdl::cyclic_permutation(x.size())
                                           : parse_u32_list(css_tau, g.one_based);
                std::size_t rows = css_rows_opt ? css_rows_opt : x.size();
                auto r = qdl::construction_main_rows(css_ell, x, y, sigma, tau, rows);
                pair = r.pair;
                if (!r.terms.ok)
                    extra["first_failing_block"] = {
                        {"i", r.terms.i}, {"j", r.terms.j}, {"unmatched", r.terms.unmatched}};
            } else if (css_kind == "bbs") {
                auto xs = parse_u32_list(css_xs, g.one_based);
                std::size_t rows = css_rows_opt ? css_rows_opt : 4;
                pair = qdl::construction_bbs(css_ell, css_base, xs, rows);
            } else if (css_kind == "bicycle") {
                pair = qdl::bicycle(
                    qdl::DyadicMatrix::from_support(css_ell, parse_u32_list(css_supp1, g.one_based)),
                    qdl::DyadicMatrix::from_support(css_ell,
                                                    parse_u32_list(css_supp2, g.one_based)));
            } else if (css_kind == "hgp") {
                pair = qdl::hypergraph_product(load_layout(css_la), load_layout(css_lb));
            } else if (css_kind == "symmetric") {
                pair = qdl::symmetric_css(
                    qdl::DyadicMatrix::from_support(css_ell, parse_u32_list(css_supp1, g.one_based)));
            } else {  // cross
                pair = qdl::cross_pair(
                    qdl::DyadicMatrix::from_support(css_ell, parse_u32_list(css_x, g.one_based)),
                    qdl::DyadicMatrix::from_support(css_ell, parse_u32_list(css_y, g.one_based)));
            }
            write_file(css_out, qdl::css_pair_to_json(pair));
            std::vector<std::string> inputs;
            if (css_kind == "hgp") inputs = {css_la, css_lb};
            finish_artifact(make_manifest(g, std::nullopt, inputs), css_out);
            json out{{"output", css_out},
                     {"n", pair.n()},
                     {"commutes", pair.commute_verified}};
            out.update(extra);
            emit(out);
        } else if (css_check->parsed()) {
            auto pair = load_pair(css_pair_file);
            bool ok = qdl::css_commutes(pair.hx, pair.hz);
            emit(json{{"commutes", ok}, {"n", pair.n()}});
        } else if (css_params_cmd->parsed()) {
            auto pair = load_pair(css_pair_file);
            emit(params_json(qdl::css_pair_params(pair, css_maxkdim)));
        } else if (css_search->parsed()) {
            json out;
            std::optional<qdl::CssPair> found_pair;
            if (cs_kind == "grid") {
                if (!cs_rows || !cs_cols || !cs_k || !cs_d)
                    throw std::runtime_error("css search --kind grid needs --rows --cols --k --d");
                auto r = qdl::search_qd_pair(cs_ell, cs_rows, cs_cols, cs_k, cs_d, cs_seed,
                                             cs_budget);
                out = {{"found", r.found}, {"attempts", r.attempts}};
                if (r.found) {
                    out["params"] = params_json(r.params);
                    found_pair = r.pair;
                }
            } else if (cs_kind == "bicycle") {
                if (!cs_k || !cs_d)
                    throw std::runtime_error("css search --kind bicycle needs --k --d");
                auto r = qdl::search_bicycle(cs_ell, cs_k, cs_d, cs_seed, cs_budget);
                out = {{"found", r.found}, {"attempts", r.attempts}};
                if (r.found) {
                    out["supp1"] = r.sig1;
                    out["supp2"] = r.sig2;
                    out["k"] = r.k;
                    out["d"] = r.d ? json(*r.d) : json(nullptr);
                    found_pair = qdl::bicycle(qdl::DyadicMatrix::from_support(cs_ell, r.sig1),
                                              qdl::DyadicMatrix::from_support(cs_ell, r.sig2));
                }
            } else {  // main
                if (!cs_omega) throw std::runtime_error("css search --kind main needs --omega");
                std::size_t rows = cs_rows ? cs_rows : cs_omega;
                auto r = qdl::optimize_construction_main(cs_ell, cs_omega, rows, cs_seed,
                                                         cs_samples);
                out = {{"found", true},
                       {"girth", r.girth},
                       {"shortest_cycle_count", r.shortest_cycle_count},
                       {"commuting_found", r.commuting_found},
                       {"tries", r.tries},
                       {"x", r.x},
                       {"y", r.y},
                       {"sigma", r.sigma},
                       {"tau", r.tau}};
                found_pair = r.built.pair;
            }
            if (!css_out.empty() && found_pair) {
                write_file(css_out, qdl::css_pair_to_json(*found_pair));
                finish_artifact(make_manifest(g, cs_seed, {}), css_out);
                out["output"] = css_out;
            }
            emit(out);
        }
        // ------------------------------------------------------------ oracle
        else if (or_cycles->parsed() || or_girth->parsed() || or_absorbing->parsed() ||
                 or_distance->parsed()) {
            if (or_layout.empty() == or_alist.empty())
                throw std::runtime_error("oracle: give exactly one of --layout / --alist");
            qdl::BitMatrix h = or_layout.empty() ? qdl::from_alist(read_file(or_alist))
                                                 : load_layout(or_layout).expand();
            if (or_cycles->parsed()) {
                auto inv = qdl::enumerate_cycles(qdl::tanner_graph(h), or_kmax);
                json out;
                for (const auto& [k, c] : inv) out[std::to_string(k)] = c;
                emit(json{{"cycles", out}});
            } else if (or_girth->parsed()) {
                emit(json{{"girth", qdl::girth_bfs(qdl::tanner_graph(h))}});
            } else if (or_absorbing->parsed()) {
                auto sets = qdl::absorbing_bruteforce(qdl::tanner_graph(h), or_amax, or_connected);
                std::map<std::pair<int, int>, long long> agg;
                for (const auto& s : sets) ++agg[{static_cast<int>(s.vars.size()), s.b}];
                json counts = json::array();
                for (const auto& [ab, c] : agg)
                    counts.push_back({{"a", ab.first}, {"b", ab.second}, {"count", c}});
                emit(json{{"connected_only", or_connected},
                          {"counts", counts},
                          {"total", static_cast<long long>(sets.size())}});
            } else {
                auto d = qdl::min_distance(h, or_maxkdim);
                emit(json{{"d", d ? json(*d) : json(nullptr)}});
            }
        } else if (or_css->parsed()) {
            auto pair = load_pair(or_pair);
            auto params =
                qdl::css_params(pair.hx.expand(), pair.hz.expand(), or_maxkdim);
            emit(params_json(params));
        }
        // --------------------------------------------------------------- sim
        else if (sm_run->parsed()) {
            if (sm_pair.empty() == sm_layout.empty())
                throw std::runtime_error("sim run: give exactly one of --pair / --layout");
            auto ps = parse_double_list(sm_p);
            std::ostringstream csv;
            csv << "p,trials,failures,fer,ci_lo,ci_hi\n";
            json lines = json::array();
            if (!sm_pair.empty()) {
                auto pair = load_pair(sm_pair);
                if (!pair.commute_verified)
                    throw std::runtime_error("sim run: pair does not commute");
                for (double p : ps) {
                    auto r = qdl::simulate_css(pair, qdl::ChannelModel{p}, sm_trials, sm_seed,
                                               static_cast<int>(g.threads), sm_max_iters);
                    csv << fmt6(p) << "," << r.trials << "," << r.failures << "," << fmt6(r.fer)
                        << "," << fmt6(r.ci_lo) << "," << fmt6(r.ci_hi) << "\n";
                    lines.push_back({{"p", p},
                                     {"trials", r.trials},
                                     {"failures", r.failures},
                                     {"fer", fmt6(r.fer)},
                                     {"ci_lo", fmt6(r.ci_lo)},
                                     {"ci_hi", fmt6(r.ci_hi)}});
                }
            } else {
                auto h = load_layout(sm_layout).expand();
                for (double p : ps) {
                    auto r = qdl::simulate_classical(h, qdl::ChannelModel{p}, sm_trials, sm_seed,
                                                     static_cast<int>(g.threads), sm_max_iters);
                    csv << fmt6(p) << "," << r.trials << "," << r.failures << "," << fmt6(r.fer)
                        << "," << fmt6(r.ci_lo) << "," << fmt6(r.ci_hi) << "\n";
                    lines.push_back({{"p", p},
                                     {"trials", r.trials},
                                     {"failures", r.failures},
                                     {"fer", fmt6(r.fer)},
                                     {"ci_lo", fmt6(r.ci_lo)},
                                     {"ci_hi", fmt6(r.ci_hi)}});
                }
            }
            write_file(sm_out, csv.str());
            auto m = make_manifest(g, sm_seed, {sm_pair.empty() ? sm_layout : sm_pair});
            finish_artifact(std::move(m), sm_out);
            emit(json{{"output", sm_out}, {"results", lines}});
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
