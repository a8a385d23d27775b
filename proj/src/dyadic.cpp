#include "qdl/dyadic.hpp"

#include <algorithm>

namespace qdl {

DyadicMatrix::DyadicMatrix(unsigned ell, BitVector signature) : ell_(ell), sig_(std::move(signature)) {
    if (sig_.size() != (std::size_t{1} << ell_))
        throw std::invalid_argument("signature length must be 2^ell");
}

DyadicMatrix DyadicMatrix::zero(unsigned ell) { return DyadicMatrix(ell, BitVector(std::size_t{1} << ell)); }

DyadicMatrix DyadicMatrix::identity(unsigned ell) {
    BitVector s(std::size_t{1} << ell);
    s.set(0, true);
    return DyadicMatrix(ell, std::move(s));
}

DyadicMatrix DyadicMatrix::all_ones(unsigned ell) {
    BitVector s(std::size_t{1} << ell);
    for (std::size_t i = 0; i < s.size(); ++i) s.set(i, true);
    return DyadicMatrix(ell, std::move(s));
}

DyadicMatrix DyadicMatrix::from_support(unsigned ell, const std::vector<std::uint32_t>& supp) {
    BitVector s(std::size_t{1} << ell);
    for (std::uint32_t i : supp) {
        if (i >= s.size()) throw std::out_of_range("support index exceeds 2^ell");
        s.set(i, true);
    }
    return DyadicMatrix(ell, std::move(s));
}

std::vector<std::uint32_t> DyadicMatrix::support() const {
    std::vector<std::uint32_t> out;
    for (std::size_t i : sig_.support()) out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

BitVector DyadicMatrix::expanded_row(std::size_t x) const {
    BitVector row(dim());
    for (std::size_t s : sig_.support()) row.set(x ^ s, true);
    return row;
}

BitMatrix DyadicMatrix::expand() const {
    BitMatrix m(dim(), dim());
    for (std::size_t x = 0; x < dim(); ++x) m.row(x) = expanded_row(x);
    return m;
}

DyadicMatrix operator+(const DyadicMatrix& a, const DyadicMatrix& b) {
    if (a.ell_ != b.ell_) throw std::invalid_argument("dyadic add: ell mismatch");
    return DyadicMatrix(a.ell_, a.sig_ ^ b.sig_);
}

DyadicMatrix operator*(const DyadicMatrix& a, const DyadicMatrix& b) {
    if (a.ell_ != b.ell_) throw std::invalid_argument("dyadic mul: ell mismatch");
    // signature of the product is a's signature times b's expansion:
    // XOR of b's signature translated by each support element of a
    BitVector out(a.dim());
    for (std::size_t s : a.sig_.support()) out ^= b.expanded_row(s);
    return DyadicMatrix(a.ell_, std::move(out));
}

DyadicPermutation::DyadicPermutation(unsigned l, std::uint32_t s) : ell(l), shift(s) {
    if (shift >= (std::uint32_t{1} << ell)) throw std::out_of_range("shift exceeds 2^ell");
}

DyadicMatrix DyadicPermutation::to_dyadic() const { return DyadicMatrix::from_support(ell, {shift}); }

DyadicPermutation perm_mul(const DyadicPermutation& a, const DyadicPermutation& b) {
    if (a.ell != b.ell) throw std::invalid_argument("perm_mul: ell mismatch");
    return DyadicPermutation(a.ell, a.shift ^ b.shift);
}

bool is_subspace_or_coset(const std::vector<std::uint32_t>& supp) {
    if (supp.empty()) throw std::invalid_argument("is_subspace_or_coset: empty support");
    // power-of-two size and XOR-closure of the translate through any element
    if (supp.size() & (supp.size() - 1)) return false;
    std::uint32_t s0 = supp.front();
    std::vector<std::uint32_t> v;
    v.reserve(supp.size());
    for (std::uint32_t s : supp) v.push_back(s ^ s0);
    std::sort(v.begin(), v.end());
    for (std::uint32_t a : v)
        for (std::uint32_t b : v)
            if (!std::binary_search(v.begin(), v.end(), a ^ b)) return false;
    return true;
}

std::size_t dyadic_rank(const DyadicMatrix& d) {
    auto supp = d.support();
    if (supp.empty()) return 0;
    if (is_subspace_or_coset(supp)) return d.dim() / supp.size();
    RowEchelon e(d.dim());
    for (std::size_t x = 0; x < d.dim(); ++x) e.absorb(d.expanded_row(x));
    return e.rank();
}

std::map<std::size_t, std::uint64_t> rank_census(unsigned ell) {
    if (ell > 4) throw std::invalid_argument("rank_census: ell capped at 4");
    std::size_t n = std::size_t{1} << ell;
    std::map<std::size_t, std::uint64_t> hist;
    for (std::uint64_t sig = 0; sig < (std::uint64_t{1} << n); ++sig) {
        BitVector s(n);
        for (std::size_t i = 0; i < n; ++i)
            if ((sig >> i) & 1) s.set(i, true);
        ++hist[dyadic_rank(DyadicMatrix(ell, std::move(s)))];
    }
    return hist;
}

DyadicCodeParams dyadic_code_params(const DyadicMatrix& d) {
    auto supp = d.support();
    if (supp.empty() || !is_subspace_or_coset(supp))
        throw std::invalid_argument("dyadic_code_params: support must be a nonempty subspace or coset");
    std::size_t n = d.dim();
    std::size_t size = supp.size();  // 2^k
    DyadicCodeParams p;
    p.rowspace.n = n;
    p.rowspace.k = n / size;  // 2^(ell-k)
    p.rowspace.d = size;      // 2^k
    p.dual.n = n;
    p.dual.k = n - n / size;
    if (p.dual.k == 0)
        p.dual.d = std::nullopt;
    else
        p.dual.d = 2;
    return p;
}

bool self_orthogonality_check(const DyadicMatrix& d) { return (d * d).is_zero(); }

}  // namespace qdl
