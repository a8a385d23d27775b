#pragma once

#include "qdl/bits.hpp"
#include "qdl/css.hpp"
#include "qdl/layout.hpp"

#include <cstdint>
#include <utility>

namespace qdl {

// Independent bit-flip channel: each bit (per error type, for CSS) flips with
// probability p.
struct ChannelModel {
    double p = 0.0;  // 0 <= p <= 0.5
};

struct BpResult {
    BitVector estimate;
    bool converged = false;
    int iterations = 0;  // iterations actually run before convergence/stop
};

// Flooding-schedule sum-product decoding in the log-likelihood domain against
// a target syndrome. Channel prior log((1-p)/p); message magnitudes clipped;
// stops as soon as the hard decision reproduces the syndrome (checked before
// the first iteration, so a zero syndrome converges in 0 iterations).
// Deterministic in all arguments. Non-convergence is a result, not an error.
BpResult bp_decode(const BitMatrix& h, const BitVector& syndrome, double p,
                   int max_iters = 100, double llr_clip = 30.0);

struct SimResult {
    long long trials = 0;
    long long failures = 0;
    double fer = 0.0;
    double ci_lo = 0.0, ci_hi = 0.0;  // 95% Wilson interval
    std::uint64_t seed = 0;
    double p = 0.0;
    int max_iters = 0;
};

// 95% Wilson score interval for failures/trials.
std::pair<double, double> wilson_interval(long long failures, long long trials);

// Block-error Monte Carlo: sample error, decode its syndrome, fail unless the
// estimate equals the error exactly. Per-trial randomness is keyed by
// (seed, trial index), so results are independent of thread count.
SimResult simulate_classical(const BitMatrix& h, ChannelModel channel, long long trials,
                             std::uint64_t seed, int threads = 1, int max_iters = 100);

// Logical-error Monte Carlo for a verified CSS pair: X errors are decoded
// with H_Z and fail when the residual error lies outside the row space of
// H_X; Z errors symmetrically. A trial fails when either side fails.
SimResult simulate_css(const CssPair& pair, ChannelModel channel, long long trials,
                       std::uint64_t seed, int threads = 1, int max_iters = 100);

}  // namespace qdl
