#include "roc4/classifying.hpp"

#include <algorithm>
#include <stdexcept>

namespace roc4 {

std::vector<FiltrationCell> cell_spec(int fmax) {
    std::vector<FiltrationCell> out;
    for (int s = 0; s <= fmax; ++s) {
        int j = s / 4;
        RODegree jrho{j, j, j};
        switch (s % 4) {
            case 0: out.push_back({s, Orbit::C4, jrho}); break;
            case 1: out.push_back({s, Orbit::C4, jrho + kSigma}); break;
            case 2: out.push_back({s, Orbit::C2, jrho + kLambda}); break;
            case 3: out.push_back({s, Orbit::C2, jrho + RODegree{1, 0, 1}}); break;
        }
    }
    return out;
}

namespace {

// Augmented chain complex of the double cover sphere, carrying the rotation
// action g and the antipodal deck action h. Degrees start at -1 (the
// augmentation cell).
struct CoverComplex {
    int lo = -1;
    std::vector<std::vector<int>> g, h;
    std::vector<GF2Matrix> bnd;

    int hi() const { return lo + int(g.size()) - 1; }
    std::size_t dim(int d) const {
        return d < lo || d > hi() ? 0 : g[std::size_t(d - lo)].size();
    }
};

CoverComplex tower_trivial() {
    CoverComplex c;
    c.g = {{0}, {0, 1}};
    c.h = {{0}, {1, 0}};
    c.bnd = {GF2Matrix(0, 1), GF2Matrix::from_rows({{1, 1}})};
    return c;
}

CoverComplex tower_sigma() {
    CoverComplex c;
    c.g = {{0}, {1, 0}};
    c.h = {{0}, {1, 0}};
    c.bnd = {GF2Matrix(0, 1), GF2Matrix::from_rows({{1, 1}})};
    return c;
}

CoverComplex tower_lambda(bool full) {
    CoverComplex c;
    std::vector<int> rot = {1, 2, 3, 0};
    std::vector<int> rot2 = {2, 3, 0, 1};
    c.g = {{0}, rot};
    c.h = {{0}, rot2};
    c.bnd = {GF2Matrix(0, 1), GF2Matrix::from_rows({{1, 1, 1, 1}})};
    if (full) {
        c.g.push_back(rot);
        c.h.push_back(rot2);
        GF2Matrix b(4, 4);  // sector boundaries: d s_j = r_j + r_{j+1}
        for (int j = 0; j < 4; ++j) {
            b.set(std::size_t(j), std::size_t(j), true);
            b.set(std::size_t((j + 1) % 4), std::size_t(j), true);
        }
        c.bnd.push_back(b);
    }
    return c;
}

// Join: degrees add plus one; both actions act diagonally.
CoverComplex join(const CoverComplex& a, const CoverComplex& b) {
    CoverComplex c;
    c.lo = a.lo + b.lo + 1;
    int hi = a.hi() + b.hi() + 1;
    struct Block {
        int p;
        std::size_t start;
    };
    std::vector<std::vector<Block>> blocks(std::size_t(hi - c.lo + 1));
    for (int d = c.lo; d <= hi; ++d) {
        std::size_t dim = 0;
        std::vector<int> pg, ph;
        for (int p = a.lo; p <= a.hi(); ++p) {
            int q = d - 1 - p;
            if (q < b.lo || q > b.hi()) continue;
            std::size_t da = a.dim(p), db = b.dim(q);
            if (!da || !db) continue;
            blocks[std::size_t(d - c.lo)].push_back({p, dim});
            const auto& ga = a.g[std::size_t(p - a.lo)];
            const auto& gb = b.g[std::size_t(q - b.lo)];
            const auto& ha = a.h[std::size_t(p - a.lo)];
            const auto& hb = b.h[std::size_t(q - b.lo)];
            for (std::size_t i = 0; i < da; ++i)
                for (std::size_t j = 0; j < db; ++j) {
                    pg.push_back(int(dim + std::size_t(ga[i]) * db + std::size_t(gb[j])));
                    ph.push_back(int(dim + std::size_t(ha[i]) * db + std::size_t(hb[j])));
                }
            dim += da * db;
        }
        c.g.push_back(std::move(pg));
        c.h.push_back(std::move(ph));
    }
    c.bnd.resize(c.g.size());
    c.bnd[0] = GF2Matrix(0, c.g[0].size());
    auto block_start = [&](int d, int p) -> long {
        if (d < c.lo || d > hi) return -1;
        for (const auto& blk : blocks[std::size_t(d - c.lo)])
            if (blk.p == p) return long(blk.start);
        return -1;
    };
    for (int d = c.lo + 1; d <= hi; ++d) {
        GF2Matrix m(c.g[std::size_t(d - 1 - c.lo)].size(), c.g[std::size_t(d - c.lo)].size());
        for (const auto& blk : blocks[std::size_t(d - c.lo)]) {
            int p = blk.p, q = d - 1 - p;
            std::size_t da = a.dim(p), db = b.dim(q);
            long t1 = block_start(d - 1, p - 1);
            if (t1 >= 0 && p - 1 >= a.lo) {
                const GF2Matrix& ba = a.bnd[std::size_t(p - a.lo)];
                for (std::size_t i = 0; i < da; ++i)
                    for (std::size_t j = 0; j < db; ++j)
                        for (std::size_t r = 0; r < ba.rows(); ++r)
                            if (ba.get(r, i))
                                m.flip(std::size_t(t1) + r * db + j, blk.start + i * db + j);
            }
            long t2 = block_start(d - 1, p);
            if (t2 >= 0 && q - 1 >= b.lo) {
                const GF2Matrix& bb = b.bnd[std::size_t(q - b.lo)];
                for (std::size_t i = 0; i < da; ++i)
                    for (std::size_t j = 0; j < db; ++j)
                        for (std::size_t r = 0; r < bb.rows(); ++r)
                            if (bb.get(r, j))
                                m.flip(std::size_t(t2) + i * bb.rows() + r,
                                       blk.start + i * db + j);
            }
        }
        c.bnd[std::size_t(d - c.lo)] = std::move(m);
    }
    return c;
}

void reduce_cover(CoverComplex& c) {
    std::vector<std::vector<std::vector<int>>> perms = {c.g, c.h};
    morse_reduce_multi(c.lo, perms, c.bnd, 0);
    c.g = perms[0];
    c.h = perms[1];
}

// Identify basis elements along the free deck action; drop the augmentation.
MackeyChainComplex quotient_by_deck(const CoverComplex& e) {
    MackeyChainComplex out;
    out.lo = 0;
    for (int d = 0; d <= e.hi(); ++d) {
        std::size_t di = std::size_t(d - e.lo);
        const auto& h = e.h[di];
        const auto& g = e.g[di];
        std::size_t n = h.size();
        std::vector<int> cls(n, -1);
        std::vector<int> rep;
        for (std::size_t i = 0; i < n; ++i) {
            if (cls[i] >= 0) continue;
            if (h[i] == int(i)) throw std::logic_error("deck action not free on a cell");
            cls[i] = int(rep.size());
            cls[std::size_t(h[i])] = int(rep.size());
            rep.push_back(int(i));
        }
        std::vector<int> perm(rep.size());
        for (std::size_t k = 0; k < rep.size(); ++k)
            perm[k] = cls[std::size_t(g[std::size_t(rep[k])])];
        out.gperm.push_back(std::move(perm));
        // boundary columns: induced
        if (d == 0) {
            out.bnd.push_back(GF2Matrix(0, rep.size()));
        } else {
            std::size_t dim_prev = std::size_t(e.h[di - 1].size());
            const auto& hprev = e.h[di - 1];
            std::vector<int> cls_prev(dim_prev, -1);
            std::vector<int> rep_prev;
            for (std::size_t i = 0; i < dim_prev; ++i) {
                if (cls_prev[i] >= 0) continue;
                cls_prev[i] = int(rep_prev.size());
                cls_prev[std::size_t(hprev[i])] = int(rep_prev.size());
                rep_prev.push_back(int(i));
            }
            const GF2Matrix& bm = e.bnd[di];
            GF2Matrix q(rep_prev.size(), rep.size());
            for (std::size_t j = 0; j < rep.size(); ++j)
                for (std::size_t t = 0; t < rep_prev.size(); ++t) {
                    bool v = bm.get(std::size_t(rep_prev[t]), std::size_t(rep[j])) ^
                             bm.get(std::size_t(hprev[std::size_t(rep_prev[t])]),
                                    std::size_t(rep[j]));
                    q.set(t, j, v);
                }
            out.bnd.push_back(std::move(q));
        }
    }
    return out;
}

}  // namespace

ClassifyingSpace::ClassifyingSpace(int fmax) : fmax_(fmax) {
    if (fmax < 1) throw std::invalid_argument("ClassifyingSpace: fmax must be >= 1");
    skeletons_.resize(std::size_t(fmax + 1));
    auto finish = [&](int f, const CoverComplex& cur) {
        MackeyChainComplex b = quotient_by_deck(cur);
        morse_reduce(b);
        b.validate();
        skeletons_[std::size_t(f)] = std::move(b);
    };
    CoverComplex cur = tower_trivial();
    finish(0, cur);
    cur = join(cur, tower_sigma());
    reduce_cover(cur);
    if (fmax >= 1) finish(1, cur);
    for (int s = 2; s <= fmax; ++s) {
        switch (s % 4) {
            case 2: {
                CoverComplex side = join(cur, tower_lambda(false));
                reduce_cover(side);
                finish(s, side);
                break;
            }
            case 3:
                cur = join(cur, tower_lambda(true));
                reduce_cover(cur);
                finish(s, cur);
                break;
            case 0:
                cur = join(cur, tower_trivial());
                reduce_cover(cur);
                finish(s, cur);
                break;
            case 1:
                cur = join(cur, tower_sigma());
                reduce_cover(cur);
                finish(s, cur);
                break;
        }
    }
}

const MackeyChainComplex& ClassifyingSpace::skeleton(int f) const {
    if (f < 0 || f > fmax_) throw std::out_of_range("skeleton: filtration out of range");
    return skeletons_[std::size_t(f)];
}

const MackeyChainComplex& ClassifyingSpace::dual(int f) {
    auto it = duals_.find(f);
    if (it == duals_.end()) it = duals_.emplace(f, dualize(skeleton(f))).first;
    return it->second;
}

const MackeyChainComplex& ClassifyingSpace::sphere(int n, int m) {
    auto key = std::make_pair(n, m);
    auto it = spheres_.find(key);
    if (it == spheres_.end()) {
        MackeyChainComplex s = sphere_complex(RODegree{0, n, m});
        morse_reduce(s);
        it = spheres_.emplace(key, std::move(s)).first;
    }
    return it->second;
}

MackeyF2 ClassifyingSpace::compute(RODegree star, int f) {
    // k^star(B_f) = H_{-a}( D(B_f) smash S^{n sigma + m lambda} )
    const MackeyChainComplex& d = dual(f);
    const MackeyChainComplex& s = sphere(star.n, star.m);
    MackeyChainComplex c = smash_window(d, s, -star.a - 1, -star.a + 1);
    return homology(c, -star.a);
}

CohomologyResult ClassifyingSpace::cohomology_at(RODegree star, int f) {
    if (f > fmax_) throw std::out_of_range("cohomology_at: f exceeds built skeletons");
    CohomologyResult out;
    out.h = compute(star, f);
    if (f - 4 >= 1) {
        MackeyF2 prev = compute(star, f - 4);
        out.stable = prev.top_dim == out.h.top_dim && prev.mid_dim == out.h.mid_dim &&
                     prev.bot_dim == out.h.bot_dim;
    }
    return out;
}

int ClassifyingSpace::guard_fmax(RODegree star) {
    int m = std::max({std::abs(star.a), std::abs(star.n), 2 * std::abs(star.m)});
    return 4 * (m + 4);
}

MackeyChainComplex build_complex(int fmax) {
    ClassifyingSpace b(fmax);
    return b.skeleton(fmax);
}

}  // namespace roc4
