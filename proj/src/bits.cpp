#include "qdl/bits.hpp"

#include <bit>

namespace qdl {

BitVector BitVector::from_support(std::size_t n, const std::vector<std::size_t>& supp) {
    BitVector v(n);
    for (std::size_t i : supp) {
        if (i >= n) throw std::out_of_range("support index out of range");
        v.set(i, true);
    }
    return v;
}

BitVector BitVector::from_bits(const std::vector<int>& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i] != 0);
    return v;
}

std::size_t BitVector::weight() const {
    std::size_t w = 0;
    for (std::uint64_t x : w_) w += static_cast<std::size_t>(std::popcount(x));
    return w;
}

bool BitVector::any() const {
    for (std::uint64_t x : w_)
        if (x) return true;
    return false;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (n_ != o.n_) throw std::invalid_argument("BitVector length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool BitVector::dot(const BitVector& o) const {
    if (n_ != o.n_) throw std::invalid_argument("BitVector length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1;
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> s;
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
        std::uint64_t x = w_[wi];
        while (x) {
            s.push_back(wi * 64 + static_cast<std::size_t>(std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return s;
}

std::size_t BitVector::lowest_set() const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi)
        if (w_[wi]) return wi * 64 + static_cast<std::size_t>(std::countr_zero(w_[wi]));
    return n_;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows) {
    BitMatrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
        if (r.size() != m.cols_) throw std::invalid_argument("ragged rows");
    m.data_ = std::move(rows);
    return m;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c : data_[r].support()) t.set(c, r, true);
    return t;
}

bool BitMatrix::is_zero() const {
    for (const auto& r : data_)
        if (r.any()) return false;
    return true;
}

BitMatrix BitMatrix::hconcat(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hconcat row mismatch");
    BitMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c : a.row(r).support()) m.set(r, c, true);
        for (std::size_t c : b.row(r).support()) m.set(r, a.cols() + c, true);
    }
    return m;
}

BitMatrix BitMatrix::vconcat(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vconcat col mismatch");
    BitMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) m.row(r) = a.row(r);
    for (std::size_t r = 0; r < b.rows(); ++r) m.row(a.rows() + r) = b.row(r);
    return m;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul dimension mismatch");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        BitVector acc(b.cols());
        for (std::size_t k : a.row(r).support()) acc ^= b.row(k);
        out.row(r) = std::move(acc);
    }
    return out;
}

BitVector mat_vec(const BitMatrix& a, const BitVector& x) {
    if (a.cols() != x.size()) throw std::invalid_argument("mat_vec dimension mismatch");
    BitVector out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) out.set(r, a.row(r).dot(x));
    return out;
}

bool RowEchelon::absorb(BitVector row) {
    if (row.size() != cols_) throw std::invalid_argument("RowEchelon width mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (row.get(pivots_[i])) row ^= rows_[i];
    std::size_t p = row.lowest_set();
    if (p == row.size()) return false;
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
}

bool RowEchelon::contains(BitVector row) const {
    if (row.size() != cols_) throw std::invalid_argument("RowEchelon width mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (row.get(pivots_[i])) row ^= rows_[i];
    return row.is_zero();
}

std::size_t rank(const BitMatrix& m) {
    RowEchelon e(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) e.absorb(m.row(r));
    return e.rank();
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    // RREF of m, then one basis vector per free column.
    std::size_t nc = m.cols();
    std::vector<BitVector> rr;
    std::vector<std::size_t> piv;
    {
        RowEchelon e(nc);
        for (std::size_t r = 0; r < m.rows(); ++r) e.absorb(m.row(r));
        rr = e.basis();
        for (const auto& row : rr) piv.push_back(row.lowest_set());
        // back-substitute to reduced form
        for (std::size_t i = rr.size(); i-- > 0;)
            for (std::size_t j = 0; j < i; ++j)
                if (rr[j].get(piv[i])) rr[j] ^= rr[i];
    }
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t p : piv) is_pivot[p] = true;

    std::vector<BitVector> basis;
    for (std::size_t c = 0; c < nc; ++c) {
        if (is_pivot[c]) continue;
        BitVector v(nc);
        v.set(c, true);
        for (std::size_t i = 0; i < rr.size(); ++i)
            if (rr[i].get(c)) v.set(piv[i], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool rowspace_contains(const BitMatrix& m, const BitVector& x) {
    if (x.size() != m.cols()) throw std::invalid_argument("rowspace_contains length mismatch");
    RowEchelon e(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) e.absorb(m.row(r));
    return e.contains(x);
}

}  // namespace qdl
