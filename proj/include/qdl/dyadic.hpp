#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qdl/bits.hpp"

// The commutative ring D_ell of 2^ell x 2^ell dyadic matrices over GF(2).
// A dyadic matrix is determined by its signature (first row): entry (x,y) is
// signature[x XOR y]. Indices are 0-based integers whose binary expansion is
// the underlying length-ell bit vector, so XOR is the vector group law.

namespace qdl {

class DyadicMatrix {
public:
    DyadicMatrix() = default;
    DyadicMatrix(unsigned ell, BitVector signature);

    static DyadicMatrix zero(unsigned ell);
    static DyadicMatrix identity(unsigned ell);
    static DyadicMatrix all_ones(unsigned ell);
    static DyadicMatrix from_support(unsigned ell, const std::vector<std::uint32_t>& supp);

    unsigned ell() const { return ell_; }
    std::size_t dim() const { return std::size_t{1} << ell_; }
    const BitVector& signature() const { return sig_; }
    std::vector<std::uint32_t> support() const;
    std::size_t weight() const { return sig_.weight(); }
    bool is_zero() const { return sig_.is_zero(); }

    BitMatrix expand() const;
    // row x of the expansion without materializing the matrix
    BitVector expanded_row(std::size_t x) const;

    friend DyadicMatrix operator+(const DyadicMatrix& a, const DyadicMatrix& b);
    friend DyadicMatrix operator*(const DyadicMatrix& a, const DyadicMatrix& b);
    bool operator==(const DyadicMatrix& o) const { return ell_ == o.ell_ && sig_ == o.sig_; }

private:
    unsigned ell_ = 0;
    BitVector sig_;  // length 2^ell
};

struct DyadicPermutation {
    unsigned ell = 0;
    std::uint32_t shift = 0;  // in [0, 2^ell)

    DyadicPermutation() = default;
    DyadicPermutation(unsigned l, std::uint32_t s);
    DyadicMatrix to_dyadic() const;
};

DyadicPermutation perm_mul(const DyadicPermutation& a, const DyadicPermutation& b);

// true iff supp is a coset x0 + V of a linear subspace V of F_2^ell
// (subspaces are the cosets containing 0)
bool is_subspace_or_coset(const std::vector<std::uint32_t>& supp);

// structural fast path (support a subspace/coset of size 2^k -> rank N/2^k),
// otherwise rank of the expansion
std::size_t dyadic_rank(const DyadicMatrix& d);

// histogram of dyadic_rank over all 2^N signatures; ell <= 4
std::map<std::size_t, std::uint64_t> rank_census(unsigned ell);

struct LinearCodeParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::size_t> d;  // absent for the zero code
};

struct DyadicCodeParams {
    LinearCodeParams rowspace;
    LinearCodeParams dual;  // parameters of ker(D) = rs(D)^perp
};

// requires supp(signature) to be a subspace or coset of size 2^k; returns
// rs(D) = [N, 2^(ell-k), 2^k] and dual [N, N - 2^(ell-k), 2]
DyadicCodeParams dyadic_code_params(const DyadicMatrix& d);

// true iff D*D = 0, equivalently rs(D) is self-orthogonal, equivalently
// wt(signature) even
bool self_orthogonality_check(const DyadicMatrix& d);

}  // namespace qdl
