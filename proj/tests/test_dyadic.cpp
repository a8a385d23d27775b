#include <doctest.h>

#include <map>

#include "qdl/dyadic.hpp"
#include "qdl/oracle.hpp"
#include "qdl/rng.hpp"

using namespace qdl;

TEST_CASE("entry rule: (x, y) reads signature[x xor y]") {
    auto d = DyadicMatrix::from_support(3, {1, 4, 6});
    auto h = d.expand();
    REQUIRE(h.rows() == 8);
    for (std::size_t x = 0; x < 8; ++x)
        for (std::size_t y = 0; y < 8; ++y)
            CHECK(h.get(x, y) == d.signature().get(x ^ y));
    // expansion is symmetric because x xor y = y xor x
    CHECK(h == h.transposed());
    for (std::size_t x = 0; x < 8; ++x) CHECK(d.expanded_row(x) == h.row(x));
}

TEST_CASE("ring structure on signatures") {
    SplitMix gen(5);
    for (int rep = 0; rep < 30; ++rep) {
        unsigned ell = 1 + static_cast<unsigned>(bounded(gen, 3));
        std::size_t n = std::size_t{1} << ell;
        auto rand_mat = [&] {
            BitVector sig(n);
            for (std::size_t i = 0; i < n; ++i) sig.set(i, bounded(gen, 2));
            return DyadicMatrix(ell, sig);
        };
        auto a = rand_mat(), b = rand_mat(), c = rand_mat();
        // sums and products stay dyadic and match the expansions
        BitMatrix sum_expected = a.expand();
        for (std::size_t i = 0; i < n; ++i) sum_expected.row(i) ^= b.expand().row(i);
        CHECK((a + b).expand() == sum_expected);
        CHECK((a * b).expand() == mat_mul(a.expand(), b.expand()));
        CHECK(a * b == b * a);                  // commutative
        CHECK((a * b) * c == a * (b * c));      // associative
        CHECK(a * (b + c) == a * b + a * c);    // distributive
        CHECK(a * DyadicMatrix::identity(ell) == a);
        CHECK((a * DyadicMatrix::zero(ell)).is_zero());
    }
}

TEST_CASE("permutation blocks compose by xor of shifts") {
    for (unsigned ell = 1; ell <= 3; ++ell) {
        std::size_t n = std::size_t{1} << ell;
        for (std::uint32_t x = 0; x < n; ++x)
            for (std::uint32_t y = 0; y < n; ++y) {
                DyadicPermutation px(ell, x), py(ell, y);
                CHECK(perm_mul(px, py).shift == (x ^ y));
                CHECK(px.to_dyadic() * py.to_dyadic() ==
                      DyadicPermutation(ell, x ^ y).to_dyadic());
            }
    }
}

TEST_CASE("square vanishes exactly for even weight") {
    for (unsigned ell = 1; ell <= 3; ++ell) {
        std::size_t n = std::size_t{1} << ell;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            BitVector sig(n);
            for (std::size_t i = 0; i < n; ++i) sig.set(i, (mask >> i) & 1);
            DyadicMatrix d(ell, sig);
            bool even = d.weight() % 2 == 0;
            CHECK(self_orthogonality_check(d) == even);
            CHECK((d * d).is_zero() == even);
            CHECK(mat_mul(d.expand(), d.expand()).is_zero() == even);
        }
    }
}

TEST_CASE("subspace/coset detection") {
    CHECK(is_subspace_or_coset({0}));
    CHECK(is_subspace_or_coset({5}));           // single point = coset of {0}
    CHECK(is_subspace_or_coset({0, 1, 2, 3}));  // subspace spanned by 1, 2
    CHECK(is_subspace_or_coset({4, 5, 6, 7}));  // its coset by 4
    CHECK_FALSE(is_subspace_or_coset({0, 1, 2}));     // not a power-of-two size
    CHECK_FALSE(is_subspace_or_coset({0, 1, 2, 4}));  // 1 xor 2 = 3 missing
    CHECK_FALSE(is_subspace_or_coset({0, 4, 5, 6, 10, 13}));  // worked-example support
}

TEST_CASE("rank: structural fast path equals expansion rank exhaustively") {
    for (unsigned ell = 1; ell <= 3; ++ell) {
        std::size_t n = std::size_t{1} << ell;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            BitVector sig(n);
            for (std::size_t i = 0; i < n; ++i) sig.set(i, (mask >> i) & 1);
            DyadicMatrix d(ell, sig);
            CHECK(dyadic_rank(d) == rank(d.expand()));
        }
    }
}

TEST_CASE("coset-supported rank is N / support size") {
    // support a coset of size 2^k => rank 2^(ell-k)
    CHECK(dyadic_rank(DyadicMatrix::from_support(3, {0, 1, 2, 3})) == 2);
    CHECK(dyadic_rank(DyadicMatrix::from_support(3, {4, 5, 6, 7})) == 2);
    CHECK(dyadic_rank(DyadicMatrix::from_support(3, {2, 3})) == 4);
    CHECK(dyadic_rank(DyadicMatrix::all_ones(3)) == 1);
    CHECK(dyadic_rank(DyadicMatrix::identity(4)) == 16);
    CHECK(dyadic_rank(DyadicMatrix::zero(2)) == 0);
}

TEST_CASE("rank census at ell = 3") {
    std::map<std::size_t, std::uint64_t> expected{{0, 1}, {1, 1}, {2, 14}, {4, 112}, {8, 128}};
    CHECK(rank_census(3) == expected);
}

TEST_CASE("rank census totals and symmetry at small ell") {
    for (unsigned ell = 1; ell <= 3; ++ell) {
        auto census = rank_census(ell);
        std::uint64_t total = 0;
        for (auto& [r, c] : census) total += c;
        CHECK(total == (std::uint64_t{1} << (std::size_t{1} << ell)));  // 2^(2^ell) signatures
        CHECK(census.at(0) == 1);  // only the zero signature
        // full rank = invertible dyadic matrices = odd-weight... at least identity
        CHECK(census.at(std::size_t{1} << ell) >= 1);
    }
}

TEST_CASE("worked-example signatures have rank 6") {
    auto dx = DyadicMatrix::from_support(4, {0, 4, 5, 6, 10, 13});
    auto dz = DyadicMatrix::from_support(4, {3, 4, 5, 7, 9, 12});
    CHECK(dyadic_rank(dx) == 6);
    CHECK(dyadic_rank(dz) == 6);
    CHECK(self_orthogonality_check(dx));
    CHECK(self_orthogonality_check(dz));
    CHECK((dx * dz).is_zero());  // the pair annihilates
}

TEST_CASE("code parameters of a coset-supported block") {
    // supp {0,1,2,3} at ell 3: rs(D) = [8, 2, 4], dual = [8, 6, 2]
    auto d = DyadicMatrix::from_support(3, {0, 1, 2, 3});
    auto p = dyadic_code_params(d);
    CHECK(p.rowspace.n == 8);
    CHECK(p.rowspace.k == 2);
    REQUIRE(p.rowspace.d.has_value());
    CHECK(*p.rowspace.d == 4);
    CHECK(p.dual.n == 8);
    CHECK(p.dual.k == 6);
    REQUIRE(p.dual.d.has_value());
    CHECK(*p.dual.d == 2);

    // independent check of the dual distance via the exhaustive searcher
    auto dmin = min_distance(d.expand());
    REQUIRE(dmin.has_value());
    CHECK(*dmin == 2);

    CHECK_THROWS(dyadic_code_params(DyadicMatrix::from_support(3, {0, 1, 2})));
}

TEST_CASE("one-based worked-example translation") {
    // 1-based {1,5,6,7,11,14} and {4,5,6,8,10,13} shift down by one
    std::vector<std::uint32_t> a1{1, 5, 6, 7, 11, 14}, b1{4, 5, 6, 8, 10, 13};
    std::vector<std::uint32_t> a0, b0;
    for (auto v : a1) a0.push_back(v - 1);
    for (auto v : b1) b0.push_back(v - 1);
    CHECK(a0 == std::vector<std::uint32_t>{0, 4, 5, 6, 10, 13});
    CHECK(b0 == std::vector<std::uint32_t>{3, 4, 5, 7, 9, 12});
}
