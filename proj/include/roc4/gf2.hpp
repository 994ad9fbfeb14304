#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace roc4 {

// Dense bit vector over GF(2), packed into 64-bit words.
class GF2Vector {
public:
    GF2Vector() = default;
    explicit GF2Vector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }
    void xor_with(const GF2Vector& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    }
    bool is_zero() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }
    // Index of first set bit, -1 if zero.
    int first_set() const;
    std::size_t popcount() const;

    bool operator==(const GF2Vector& o) const = default;

    const std::vector<uint64_t>& words() const { return w_; }
    std::string str() const;

private:
    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

// Dense bit matrix over GF(2), row-major packed rows.
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols)
        : r_(rows), c_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0) {}

    static GF2Matrix identity(std::size_t n);
    static GF2Matrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }

    bool get(std::size_t i, std::size_t j) const {
        return (w_[i * wpr_ + (j >> 6)] >> (j & 63)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool v) {
        uint64_t m = uint64_t(1) << (j & 63);
        if (v)
            w_[i * wpr_ + (j >> 6)] |= m;
        else
            w_[i * wpr_ + (j >> 6)] &= ~m;
    }
    void flip(std::size_t i, std::size_t j) { w_[i * wpr_ + (j >> 6)] ^= uint64_t(1) << (j & 63); }

    void xor_row_into(std::size_t src, std::size_t dst) {
        uint64_t* d = &w_[dst * wpr_];
        const uint64_t* s = &w_[src * wpr_];
        for (std::size_t k = 0; k < wpr_; ++k) d[k] ^= s[k];
    }
    void swap_rows(std::size_t i, std::size_t j);

    GF2Vector row(std::size_t i) const;
    GF2Vector col(std::size_t j) const;
    void set_row(std::size_t i, const GF2Vector& v);
    void set_col(std::size_t j, const GF2Vector& v);

    GF2Matrix transposed() const;
    GF2Matrix operator*(const GF2Matrix& o) const;
    GF2Matrix operator+(const GF2Matrix& o) const;
    GF2Vector apply(const GF2Vector& v) const;  // M * v

    bool operator==(const GF2Matrix& o) const = default;
    bool is_zero() const;
    bool is_identity() const;

    std::string str() const;

private:
    std::size_t r_ = 0, c_ = 0, wpr_ = 0;
    std::vector<uint64_t> w_;
};

std::size_t rank(const GF2Matrix& m);

// Basis of {v : Mv = 0}; size = cols - rank. Deterministic (free columns left to right).
std::vector<GF2Vector> kernel_basis(const GF2Matrix& m);

// Basis of the column space: the pivot columns of m, left to right.
std::vector<GF2Vector> image_basis(const GF2Matrix& m);

// Any x with Mx = b, or nullopt. Free variables are set to zero.
std::optional<GF2Vector> solve(const GF2Matrix& m, const GF2Vector& b);

// Solve MX = B columnwise; nullopt if any column is inconsistent.
std::optional<GF2Matrix> solve_all(const GF2Matrix& m, const GF2Matrix& b);

struct QuotientMap {
    GF2Matrix projection;  // quotient_dim x |V_basis|, acts on V-coordinates
    std::size_t quotient_dim = 0;
    std::vector<std::size_t> rep_indices;  // indices into V_basis giving coset representatives
};

// Projection V -> V/W given spanning sets of V and W in a common ambient space.
// Throws std::invalid_argument if span(W) is not contained in span(V).
QuotientMap quotient_map(const std::vector<GF2Vector>& v_basis,
                         const std::vector<GF2Vector>& w_basis);

// Incremental rank/representation tool: a row space with remembered pivots.
class GF2Rref {
public:
    explicit GF2Rref(std::size_t ambient) : n_(ambient) {}
    // Returns true if v was independent (and absorbed), false if already in span.
    bool add(const GF2Vector& v);
    bool contains(const GF2Vector& v) const;
    // Express v in terms of the vectors added so far (in insertion order);
    // nullopt if v is not in the span.
    std::optional<GF2Vector> coords(const GF2Vector& v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t ambient() const { return n_; }

private:
    std::size_t n_;
    std::vector<GF2Vector> rows_;    // reduced vectors, one pivot each
    std::vector<int> pivots_;        // pivot column of rows_[i]
    std::vector<GF2Vector> combos_;  // combos_[i]: expression of rows_[i] in inserted vectors
    std::size_t inserted_ = 0;
};

}  // namespace roc4
