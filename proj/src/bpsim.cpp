#include "qdl/bpsim.hpp"

#include "qdl/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace qdl {

namespace {

void check_channel(const ChannelModel& c) {
    if (!(c.p >= 0.0 && c.p <= 0.5))
        throw std::invalid_argument("channel crossover must lie in [0, 0.5]");
}

// Stream for one (seed, trial) pair; identical regardless of which thread
// runs the trial.
SplitMix trial_stream(std::uint64_t seed, long long trial) {
    return SplitMix(splitmix64(splitmix64(seed) ^
                               (static_cast<std::uint64_t>(trial) * 0x9e3779b97f4a7c15ULL)));
}

double uniform01(SplitMix& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

BitVector sample_error(SplitMix& gen, std::size_t n, double p) {
    BitVector e(n);
    for (std::size_t i = 0; i < n; ++i)
        if (uniform01(gen) < p) e.set(i, true);
    return e;
}

BitVector syndrome_of(const TannerGraph& g, const BitVector& e) {
    BitVector s(g.m);
    for (std::size_t c = 0; c < g.m; ++c) {
        bool bit = false;
        for (std::uint32_t v : g.check_adj[c]) bit ^= e.get(v);
        s.set(c, bit);
    }
    return s;
}

// Run trials [lo, hi) and return the failure count.
template <typename TrialFn>
long long run_range(long long lo, long long hi, const TrialFn& fn) {
    long long fails = 0;
    for (long long t = lo; t < hi; ++t) fails += fn(t) ? 1 : 0;
    return fails;
}

template <typename TrialFn>
SimResult run_sim(long long trials, std::uint64_t seed, int threads, double p, int max_iters,
                  const TrialFn& fn) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    threads = std::max(1, threads);
    long long failures = 0;
    if (threads == 1 || trials < 2 * threads) {
        failures = run_range(0, trials, fn);
    } else {
        std::vector<long long> partial(static_cast<std::size_t>(threads), 0);
        std::vector<std::thread> pool;
        long long chunk = (trials + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
            long long lo = w * chunk, hi = std::min(trials, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(
                [&partial, w, lo, hi, &fn] { partial[static_cast<std::size_t>(w)] = run_range(lo, hi, fn); });
        }
        for (auto& th : pool) th.join();
        for (long long f : partial) failures += f;
    }
    SimResult r;
    r.trials = trials;
    r.failures = failures;
    r.fer = static_cast<double>(failures) / static_cast<double>(trials);
    std::tie(r.ci_lo, r.ci_hi) = wilson_interval(failures, trials);
    r.seed = seed;
    r.p = p;
    r.max_iters = max_iters;
    return r;
}

}  // namespace

BpResult bp_decode(const BitMatrix& h, const BitVector& syndrome, double p, int max_iters,
                   double llr_clip) {
    if (syndrome.size() != h.rows())
        throw std::invalid_argument("bp_decode: syndrome length must equal the row count");
    if (!(p > 0.0 && p < 0.5))
        throw std::invalid_argument("bp_decode: channel prior needs 0 < p < 0.5");
    TannerGraph g = tanner_graph(h);
    const double prior = std::log((1.0 - p) / p);
    auto clip = [llr_clip](double x) { return std::clamp(x, -llr_clip, llr_clip); };

    // Edge storage: per check, one slot per incident variable; a parallel
    // index gives each variable its slots.
    std::vector<std::vector<double>> v2c(g.m), c2v(g.m);
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> var_slots(g.n);
    for (std::size_t c = 0; c < g.m; ++c) {
        v2c[c].assign(g.check_adj[c].size(), prior);
        c2v[c].assign(g.check_adj[c].size(), 0.0);
        for (std::size_t e = 0; e < g.check_adj[c].size(); ++e)
            var_slots[g.check_adj[c][e]].emplace_back(static_cast<std::uint32_t>(c),
                                                      static_cast<std::uint32_t>(e));
    }

    BpResult out;
    out.estimate = BitVector(g.n);  // hard decision; prior > 0 => all zeros
    auto matches = [&] { return syndrome_of(g, out.estimate) == syndrome; };
    if (matches()) {
        out.converged = true;
        return out;
    }

    std::vector<double> posterior(g.n, prior);
    for (int it = 1; it <= max_iters; ++it) {
        // Check update: leave-one-out products of tanh(m/2) with the
        // syndrome bit as an overall sign.
        for (std::size_t c = 0; c < g.m; ++c) {
            std::size_t deg = v2c[c].size();
            if (deg == 0) continue;
            static thread_local std::vector<double> th, suffix;
            th.resize(deg);
            suffix.resize(deg + 1);
            for (std::size_t e = 0; e < deg; ++e) th[e] = std::tanh(v2c[c][e] / 2.0);
            suffix[deg] = 1.0;
            for (std::size_t e = deg; e-- > 0;) suffix[e] = suffix[e + 1] * th[e];
            double prefix = 1.0;
            double sign = syndrome.get(c) ? -1.0 : 1.0;
            for (std::size_t e = 0; e < deg; ++e) {
                double prod = sign * prefix * suffix[e + 1];
                prod = std::clamp(prod, -(1.0 - 1e-12), 1.0 - 1e-12);
                c2v[c][e] = clip(2.0 * std::atanh(prod));
                prefix *= th[e];
            }
        }
        // Variable update and hard decision.
        for (std::size_t v = 0; v < g.n; ++v) {
            double sum = prior;
            for (auto [c, e] : var_slots[v]) sum += c2v[c][e];
            posterior[v] = clip(sum);
            out.estimate.set(v, posterior[v] < 0.0);
            for (auto [c, e] : var_slots[v]) v2c[c][e] = clip(sum - c2v[c][e]);
        }
        out.iterations = it;
        if (matches()) {
            out.converged = true;
            return out;
        }
    }
    return out;
}

std::pair<double, double> wilson_interval(long long failures, long long trials) {
    if (trials < 1) throw std::invalid_argument("wilson_interval: trials must be >= 1");
    const double z = 1.959963984540054;  // 97.5th normal percentile
    double n = static_cast<double>(trials);
    double f = static_cast<double>(failures) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (f + z2 / (2.0 * n)) / denom;
    double half = z * std::sqrt(f * (1.0 - f) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

SimResult simulate_classical(const BitMatrix& h, ChannelModel channel, long long trials,
                             std::uint64_t seed, int threads, int max_iters) {
    check_channel(channel);
    TannerGraph g = tanner_graph(h);
    auto trial = [&](long long t) {
        SplitMix gen = trial_stream(seed, t);
        BitVector e = sample_error(gen, g.n, channel.p);
        if (e.is_zero()) return false;  // zero syndrome decodes to zero
        BpResult r = bp_decode(h, syndrome_of(g, e), channel.p, max_iters);
        return !(r.estimate == e);
    };
    return run_sim(trials, seed, threads, channel.p, max_iters, trial);
}

SimResult simulate_css(const CssPair& pair, ChannelModel channel, long long trials,
                       std::uint64_t seed, int threads, int max_iters) {
    check_channel(channel);
    if (!pair.commute_verified)
        throw std::invalid_argument("simulate_css: pair is not verified to commute");
    BitMatrix hx = pair.hx.expand(), hz = pair.hz.expand();
    TannerGraph gx = tanner_graph(hx), gz = tanner_graph(hz);
    RowEchelon rs_hx(hx.cols()), rs_hz(hz.cols());
    for (std::size_t r = 0; r < hx.rows(); ++r) rs_hx.absorb(hx.row(r));
    for (std::size_t r = 0; r < hz.rows(); ++r) rs_hz.absorb(hz.row(r));

    // One side: decode the error with the opposite matrix, harmless iff the
    // residual is a stabilizer (in the decoder-complementary row space).
    auto side_fails = [&](SplitMix& gen, const BitMatrix& dec, const TannerGraph& gdec,
                          const RowEchelon& stab) {
        BitVector e = sample_error(gen, gdec.n, channel.p);
        if (e.is_zero()) return false;
        BpResult r = bp_decode(dec, syndrome_of(gdec, e), channel.p, max_iters);
        BitVector residual = e;
        residual ^= r.estimate;
        if (residual.is_zero()) return false;
        return !stab.contains(residual);
    };
    auto trial = [&](long long t) {
        SplitMix gen = trial_stream(seed, t);
        bool x_fail = side_fails(gen, hz, gz, rs_hx);  // X errors, Z checks
        bool z_fail = side_fails(gen, hx, gx, rs_hz);  // Z errors, X checks
        return x_fail || z_fail;
    };
    return run_sim(trials, seed, threads, channel.p, max_iters, trial);
}

}  // namespace qdl
