#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdl/bits.hpp"
#include "qdl/dyadic.hpp"

// Protographs, quasi-dyadic layouts, and their expansion into scalar
// parity-check matrices and Tanner graphs. A layout cell holds a set of
// distinct shifts (the signature support of its dyadic block); a cell may
// also be an explicit zero block, or "unset" while a construction algorithm
// is still filling the grid. Expansion rejects unset cells.

namespace qdl {

struct Protograph {
    std::size_t n_c = 0, n_v = 0;
    std::vector<std::vector<int>> base;  // b_ij >= 0

    int girth() const;  // girth of the base multigraph; -1 = acyclic
};

class Cell {
public:
    enum class State { unset, zero, assigned };

    Cell() : state_(State::zero) {}
    static Cell unset() {
        Cell c;
        c.state_ = State::unset;
        return c;
    }
    static Cell zero() { return Cell(); }
    static Cell shifts(std::vector<std::uint32_t> s);
    static Cell singleton(std::uint32_t s) { return shifts({s}); }

    State state() const { return state_; }
    bool is_unset() const { return state_ == State::unset; }
    bool is_zero() const { return state_ == State::zero; }
    bool is_assigned() const { return state_ == State::assigned; }
    bool is_singleton() const { return is_assigned() && shifts_.size() == 1; }

    // sorted distinct shifts; empty unless assigned
    const std::vector<std::uint32_t>& shift_set() const { return shifts_; }
    std::uint32_t single_shift() const;

    bool operator==(const Cell& o) const { return state_ == o.state_ && shifts_ == o.shifts_; }

private:
    State state_;
    std::vector<std::uint32_t> shifts_;
};

class Layout {
public:
    Layout() = default;
    Layout(unsigned ell, std::size_t n_c, std::size_t n_v, Cell fill = Cell::zero());

    // n_c x n_v grid of single shifts (row-major)
    static Layout from_shift_rows(unsigned ell, const std::vector<std::vector<std::uint32_t>>& rows);

    unsigned ell() const { return ell_; }
    std::size_t n() const { return std::size_t{1} << ell_; }  // lifting factor
    std::size_t n_c() const { return n_c_; }
    std::size_t n_v() const { return n_v_; }

    const Cell& cell(std::size_t i, std::size_t j) const { return cells_[i * n_v_ + j]; }
    void set_cell(std::size_t i, std::size_t j, Cell c);

    bool all_assigned() const;
    bool all_singleton() const;
    std::uint32_t shift_at(std::size_t i, std::size_t j) const;  // singleton cells only

    Protograph protograph() const;  // b_ij = |cell(i,j)|; unset counts as 0
    BitMatrix expand() const;       // throws if any cell is unset

    std::string to_json() const;
    static Layout from_json(const std::string& text);

    bool operator==(const Layout& o) const {
        return ell_ == o.ell_ && n_c_ == o.n_c_ && n_v_ == o.n_v_ && cells_ == o.cells_;
    }

private:
    unsigned ell_ = 0;
    std::size_t n_c_ = 0, n_v_ = 0;
    std::vector<Cell> cells_;  // row-major
};

struct TannerGraph {
    std::size_t m = 0;  // check nodes
    std::size_t n = 0;  // variable nodes
    std::vector<std::vector<std::uint32_t>> check_adj;  // sorted variable neighbors
    std::vector<std::vector<std::uint32_t>> var_adj;    // sorted check neighbors

    std::size_t edges() const;
};

TannerGraph tanner_graph(const BitMatrix& h);
BitMatrix adjacency_of(const BitMatrix& h);  // [[0, H], [H^T, 0]]

std::string to_alist(const BitMatrix& h);
BitMatrix from_alist(const std::string& text);

}  // namespace qdl
