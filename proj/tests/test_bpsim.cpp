#include <doctest.h>

#include <cmath>

#include "qdl/bpsim.hpp"
#include "qdl/css.hpp"
#include "qdl/layout.hpp"

using namespace qdl;

TEST_CASE("wilson interval") {
    auto [lo0, hi0] = wilson_interval(0, 100);
    CHECK(lo0 == doctest::Approx(0.0));
    CHECK(hi0 > 0.0);
    CHECK(hi0 < 0.05);

    auto [lof, hif] = wilson_interval(100, 100);
    CHECK(hif == doctest::Approx(1.0));
    CHECK(lof < 1.0);
    CHECK(lof > 0.95);

    // z = 1.96: center (p + z^2/2n)/(1 + z^2/n), half-width by the score bound
    auto [lo, hi] = wilson_interval(10, 100);
    CHECK(lo == doctest::Approx(0.0552285).epsilon(1e-4));
    CHECK(hi == doctest::Approx(0.1743673).epsilon(1e-4));
    CHECK(lo < 0.1);
    CHECK(hi > 0.1);

    // more trials tighten the interval around the same rate
    auto [lo2, hi2] = wilson_interval(100, 1000);
    CHECK(hi2 - lo2 < hi - lo);
}

TEST_CASE("decoder handles the zero syndrome without iterating") {
    auto h = DyadicMatrix::from_support(3, {0, 1, 2, 3}).expand();
    auto r = bp_decode(h, BitVector(8), 0.02);
    CHECK(r.converged);
    CHECK(r.iterations == 0);
    CHECK(r.estimate.is_zero());
}

TEST_CASE("decoder recovers every single error on a girth-6 code") {
    auto l = Layout::from_shift_rows(
        4, {{0, 0, 0, 0, 0}, {0, 1, 2, 3, 4}, {0, 2, 4, 6, 8}});
    auto h = l.expand();
    int recovered = 0;
    for (std::size_t j = 0; j < h.cols(); ++j) {
        BitVector e(h.cols());
        e.set(j, true);
        auto r = bp_decode(h, mat_vec(h, e), 0.01);
        if (r.converged && r.estimate == e) ++recovered;
    }
    CHECK(recovered == 80);
}

TEST_CASE("decoder is deterministic") {
    auto l = Layout::from_shift_rows(3, {{0, 1, 2}, {3, 0, 5}});
    auto h = l.expand();
    BitVector e(h.cols());
    e.set(3, true);
    e.set(17, true);
    auto a = bp_decode(h, mat_vec(h, e), 0.03);
    auto b = bp_decode(h, mat_vec(h, e), 0.03);
    CHECK(a.converged == b.converged);
    CHECK(a.estimate == b.estimate);
    CHECK(a.iterations == b.iterations);
}

TEST_CASE("classical simulation: p = 0 never fails, determinism, threads") {
    auto h = Layout::from_shift_rows(3, {{0, 1, 2}, {3, 0, 5}}).expand();
    auto zero = simulate_classical(h, ChannelModel{0.0}, 200, 5);
    CHECK(zero.failures == 0);
    CHECK(zero.fer == doctest::Approx(0.0));

    auto a = simulate_classical(h, ChannelModel{0.08}, 600, 5, 1);
    auto b = simulate_classical(h, ChannelModel{0.08}, 600, 5, 3);
    CHECK(a.failures == b.failures);  // thread count cannot move results
    CHECK(a.fer == doctest::Approx(static_cast<double>(a.failures) / 600.0));
    CHECK(a.ci_lo <= a.fer);
    CHECK(a.fer <= a.ci_hi);
    CHECK(a.trials == 600);
    CHECK(a.seed == 5);
    CHECK(a.p == doctest::Approx(0.08));

    auto c = simulate_classical(h, ChannelModel{0.08}, 600, 6, 2);
    CHECK(c.failures != a.failures);  // different seed, different stream
}

TEST_CASE("css simulation flags logical errors only") {
    auto dx = DyadicMatrix::from_support(4, {0, 4, 5, 6, 10, 13});
    auto dz = DyadicMatrix::from_support(4, {3, 4, 5, 7, 9, 12});
    auto pair = cross_pair(dx, dz);

    auto zero = simulate_css(pair, ChannelModel{0.0}, 100, 3);
    CHECK(zero.failures == 0);

    auto a = simulate_css(pair, ChannelModel{0.04}, 400, 3, 1);
    auto b = simulate_css(pair, ChannelModel{0.04}, 400, 3, 2);
    CHECK(a.failures == b.failures);
    CHECK(a.fer < 1.0);

    // weight-1 errors never produce a logical failure on a distance-4 code:
    // decode each one explicitly
    auto hz = pair.hz.expand();
    auto hx = pair.hx.expand();
    int safe = 0;
    for (std::size_t j = 0; j < 16; ++j) {
        BitVector e(16);
        e.set(j, true);
        auto r = bp_decode(hz, mat_vec(hz, e), 0.01);
        auto residual = r.estimate ^ e;
        if (mat_vec(hz, residual).is_zero() && rowspace_contains(hx, residual)) ++safe;
    }
    CHECK(safe == 16);
}

TEST_CASE("simulation rejects an unverified pair") {
    CssPair fake;
    fake.hx = Layout::from_shift_rows(2, {{0, 1}});
    fake.hz = Layout::from_shift_rows(2, {{0, 0}});
    fake.commute_verified = false;
    CHECK_THROWS(simulate_css(fake, ChannelModel{0.01}, 10, 1));
}

TEST_CASE("channel validation") {
    auto h = Layout::from_shift_rows(2, {{0, 1}}).expand();
    CHECK_THROWS(simulate_classical(h, ChannelModel{0.9}, 10, 1));
    CHECK_THROWS(simulate_classical(h, ChannelModel{-0.1}, 10, 1));
    CHECK_THROWS(simulate_classical(h, ChannelModel{0.1}, 0, 1));
}
