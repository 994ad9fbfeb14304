#include "roc4/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace roc4 {

int GF2Vector::first_set() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return int(k * 64 + std::countr_zero(w_[k]));
    return -1;
}

std::size_t GF2Vector::popcount() const {
    std::size_t c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
}

std::string GF2Vector::str() const {
    std::string s;
    s.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) s += get(i) ? '1' : '0';
    return s;
}

GF2Matrix GF2Matrix::identity(std::size_t n) {
    GF2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

GF2Matrix GF2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    GF2Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j] & 1);
    }
    return m;
}

void GF2Matrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < wpr_; ++k) std::swap(w_[i * wpr_ + k], w_[j * wpr_ + k]);
}

GF2Vector GF2Matrix::row(std::size_t i) const {
    GF2Vector v(c_);
    for (std::size_t j = 0; j < c_; ++j)
        if (get(i, j)) v.set(j, true);
    return v;
}

GF2Vector GF2Matrix::col(std::size_t j) const {
    GF2Vector v(r_);
    for (std::size_t i = 0; i < r_; ++i)
        if (get(i, j)) v.set(i, true);
    return v;
}

void GF2Matrix::set_row(std::size_t i, const GF2Vector& v) {
    for (std::size_t j = 0; j < c_; ++j) set(i, j, v.get(j));
}

void GF2Matrix::set_col(std::size_t j, const GF2Vector& v) {
    for (std::size_t i = 0; i < r_; ++i) set(i, j, v.get(i));
}

GF2Matrix GF2Matrix::transposed() const {
    GF2Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < wpr_; ++k) {
            uint64_t w = w_[i * wpr_ + k];
            while (w) {
                int b = std::countr_zero(w);
                w &= w - 1;
                t.set(k * 64 + b, i, true);
            }
        }
    return t;
}

GF2Matrix GF2Matrix::operator*(const GF2Matrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("gf2 mul shape mismatch");
    GF2Matrix out(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < wpr_; ++k) {
            uint64_t w = w_[i * wpr_ + k];
            while (w) {
                int b = std::countr_zero(w);
                w &= w - 1;
                std::size_t j = k * 64 + b;
                for (std::size_t t = 0; t < out.wpr_; ++t)
                    out.w_[i * out.wpr_ + t] ^= o.w_[j * o.wpr_ + t];
            }
        }
    return out;
}

GF2Matrix GF2Matrix::operator+(const GF2Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("gf2 add shape mismatch");
    GF2Matrix out = *this;
    for (std::size_t k = 0; k < w_.size(); ++k) out.w_[k] ^= o.w_[k];
    return out;
}

GF2Vector GF2Matrix::apply(const GF2Vector& v) const {
    if (v.size() != c_) throw std::invalid_argument("gf2 apply shape mismatch");
    GF2Vector out(r_);
    for (std::size_t i = 0; i < r_; ++i) {
        uint64_t acc = 0;
        const uint64_t* rw = &w_[i * wpr_];
        const auto& vw = v.words();
        for (std::size_t k = 0; k < wpr_; ++k) acc ^= rw[k] & vw[k];
        if (std::popcount(acc) & 1) out.set(i, true);
    }
    return out;
}

bool GF2Matrix::is_zero() const {
    for (uint64_t w : w_)
        if (w) return false;
    return true;
}

bool GF2Matrix::is_identity() const {
    if (r_ != c_) return false;
    return *this == identity(r_);
}

std::string GF2Matrix::str() const {
    std::string s;
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = 0; j < c_; ++j) s += get(i, j) ? '1' : '0';
        s += '\n';
    }
    return s;
}

namespace {

// Row echelon with deterministic leftmost pivots. Returns pivot columns.
std::vector<int> echelon(GF2Matrix& m) {
    std::vector<int> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && !m.get(p, col)) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, row);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != row && m.get(i, col)) m.xor_row_into(row, i);
        pivots.push_back(int(col));
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const GF2Matrix& m) {
    GF2Matrix t = m;
    return echelon(t).size();
}

std::vector<GF2Vector> kernel_basis(const GF2Matrix& m) {
    GF2Matrix t = m;
    std::vector<int> pivots = echelon(t);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<GF2Vector> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        GF2Vector v(m.cols());
        v.set(f, true);
        // Pivot row i has pivot column pivots[i]; back-substitute.
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (t.get(i, f)) v.set(pivots[i], true);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<GF2Vector> image_basis(const GF2Matrix& m) {
    GF2Matrix t = m;
    std::vector<int> pivots = echelon(t);
    std::vector<GF2Vector> out;
    out.reserve(pivots.size());
    for (int p : pivots) out.push_back(m.col(p));
    return out;
}

std::optional<GF2Vector> solve(const GF2Matrix& m, const GF2Vector& b) {
    GF2Matrix bm(m.rows(), 1);
    bm.set_col(0, b);
    auto x = solve_all(m, bm);
    if (!x) return std::nullopt;
    return x->col(0);
}

std::optional<GF2Matrix> solve_all(const GF2Matrix& m, const GF2Matrix& b) {
    if (m.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
    // Augmented elimination.
    GF2Matrix aug(m.rows(), m.cols() + b.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m.get(i, j));
        for (std::size_t j = 0; j < b.cols(); ++j) aug.set(i, m.cols() + j, b.get(i, j));
    }
    std::vector<int> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && !aug.get(p, col)) ++p;
        if (p == m.rows()) continue;
        aug.swap_rows(p, row);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != row && aug.get(i, col)) aug.xor_row_into(row, i);
        pivots.push_back(int(col));
        ++row;
    }
    // Consistency: rows past the pivot rows must be zero in the m-part and the b-part.
    for (std::size_t i = row; i < m.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (aug.get(i, m.cols() + j)) return std::nullopt;
    GF2Matrix x(m.cols(), b.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (aug.get(i, m.cols() + j)) x.set(pivots[i], j, true);
    return x;
}

bool GF2Rref::add(const GF2Vector& v) {
    GF2Vector red = v;
    GF2Vector combo(inserted_ + 1);
    combo.set(inserted_, true);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (pivots_[i] >= 0 && red.get(pivots_[i])) {
            red.xor_with(rows_[i]);
            for (std::size_t k = 0; k < combos_[i].size(); ++k)
                if (combos_[i].get(k)) combo.flip(k);
        }
    }
    ++inserted_;
    int p = red.first_set();
    if (p < 0) return false;
    // Reduce earlier rows against the new pivot.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].get(p)) {
            rows_[i].xor_with(red);
            GF2Vector widened(inserted_);
            for (std::size_t k = 0; k < combos_[i].size(); ++k)
                if (combos_[i].get(k)) widened.set(k, true);
            for (std::size_t k = 0; k < combo.size(); ++k)
                if (combo.get(k)) widened.flip(k);
            combos_[i] = widened;
        }
    }
    rows_.push_back(red);
    pivots_.push_back(p);
    combos_.push_back(combo);
    return true;
}

bool GF2Rref::contains(const GF2Vector& v) const {
    GF2Vector red = v;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (pivots_[i] >= 0 && red.get(pivots_[i])) red.xor_with(rows_[i]);
    return red.is_zero();
}

std::optional<GF2Vector> GF2Rref::coords(const GF2Vector& v) const {
    GF2Vector red = v;
    GF2Vector combo(inserted_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (pivots_[i] >= 0 && red.get(pivots_[i])) {
            red.xor_with(rows_[i]);
            for (std::size_t k = 0; k < combos_[i].size(); ++k)
                if (combos_[i].get(k)) combo.flip(k);
        }
    }
    if (!red.is_zero()) return std::nullopt;
    return combo;
}

QuotientMap quotient_map(const std::vector<GF2Vector>& v_basis,
                         const std::vector<GF2Vector>& w_basis) {
    std::size_t ambient = !v_basis.empty() ? v_basis[0].size()
                         : !w_basis.empty() ? w_basis[0].size()
                                            : 0;
    GF2Rref vspan(ambient);
    for (const auto& v : v_basis) vspan.add(v);
    for (const auto& w : w_basis)
        if (!vspan.contains(w)) throw std::invalid_argument("quotient_map: W not contained in V");

    GF2Rref span(ambient);
    for (const auto& w : w_basis) span.add(w);
    std::size_t wdim = span.rank();
    QuotientMap out;
    for (std::size_t i = 0; i < v_basis.size(); ++i)
        if (span.add(v_basis[i])) out.rep_indices.push_back(i);
    out.quotient_dim = span.rank() - wdim;

    // Express each V-vector in [W-vectors..., reps...]; keep the rep part.
    GF2Rref expr(ambient);
    for (const auto& w : w_basis) expr.add(w);
    for (std::size_t r : out.rep_indices) expr.add(v_basis[r]);
    out.projection = GF2Matrix(out.quotient_dim, v_basis.size());
    for (std::size_t i = 0; i < v_basis.size(); ++i) {
        auto c = expr.coords(v_basis[i]);
        if (!c) throw std::logic_error("quotient_map: internal span error");
        for (std::size_t q = 0; q < out.quotient_dim; ++q)
            if (c->get(w_basis.size() + q)) out.projection.set(q, i, true);
    }
    return out;
}

}  // namespace roc4
