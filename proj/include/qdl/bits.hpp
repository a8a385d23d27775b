#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

// Bit-packed linear algebra over GF(2). Values are immutable in spirit:
// operations return new objects, mutating members are only used during
// construction. Rows are the packing unit; elimination is XOR of word rows.

namespace qdl {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVector from_support(std::size_t n, const std::vector<std::size_t>& supp);
    static BitVector from_bits(const std::vector<int>& bits);

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        if (v)
            w_[i >> 6] |= (std::uint64_t{1} << (i & 63));
        else
            w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void flip(std::size_t i) { w_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }

    std::size_t weight() const;
    bool any() const;
    bool is_zero() const { return !any(); }

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    bool operator==(const BitVector& o) const { return n_ == o.n_ && w_ == o.w_; }

    // dot product over GF(2)
    bool dot(const BitVector& o) const;

    std::vector<std::size_t> support() const;

    // index of lowest set bit, or size() if zero
    std::size_t lowest_set() const;

    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::vector<BitVector> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { data_[r].set(c, v); }

    const BitVector& row(std::size_t r) const { return data_[r]; }
    BitVector& row(std::size_t r) { return data_[r]; }

    BitMatrix transposed() const;
    bool is_zero() const;
    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    // [A | B]
    static BitMatrix hconcat(const BitMatrix& a, const BitMatrix& b);
    // [A ; B]
    static BitMatrix vconcat(const BitMatrix& a, const BitMatrix& b);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVector> data_;
};

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
BitVector mat_vec(const BitMatrix& a, const BitVector& x);  // a · xᵀ, result length = rows

// Streaming row-echelon accumulator: absorbs rows one at a time so that big
// matrices (e.g. dyadic expansions) never need a second full copy. Stores only
// the reduced pivot rows.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t cols) : cols_(cols) {}

    // returns true if the row increased the rank
    bool absorb(BitVector row);
    // true iff row lies in the span of the absorbed rows
    bool contains(BitVector row) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<BitVector>& basis() const { return rows_; }

private:
    std::size_t cols_;
    std::vector<BitVector> rows_;    // each with a unique pivot column
    std::vector<std::size_t> pivots_;  // pivot column of rows_[i]
};

std::size_t rank(const BitMatrix& m);
std::vector<BitVector> kernel_basis(const BitMatrix& m);
bool rowspace_contains(const BitMatrix& m, const BitVector& x);

}  // namespace qdl
