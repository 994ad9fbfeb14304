#include "roc4/chains.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace roc4 {

std::string orbit_name(Orbit o) {
    switch (o) {
        case Orbit::e: return "C4/e";
        case Orbit::C2: return "C4/C2";
        case Orbit::C4: return "C4/C4";
    }
    return "?";
}

std::size_t orbit_size(Orbit o) {
    switch (o) {
        case Orbit::e: return 4;
        case Orbit::C2: return 2;
        case Orbit::C4: return 1;
    }
    return 0;
}

std::vector<Orbit> orbit_product(Orbit h, Orbit k) {
    if (h == Orbit::C4) return {k};
    if (k == Orbit::C4) return {h};
    if (h == Orbit::C2 && k == Orbit::C2) return {Orbit::C2, Orbit::C2};
    if (h == Orbit::e && k == Orbit::e) return {Orbit::e, Orbit::e, Orbit::e, Orbit::e};
    return {Orbit::e, Orbit::e};  // C2 x e either order
}

MackeyF2 free_module(Orbit o) {
    switch (o) {
        case Orbit::C4: {
            MackeyF2 m = MackeyF2::make(1, 1, 1);
            m.res42 = GF2Matrix::from_rows({{1}});
            m.res21 = GF2Matrix::from_rows({{1}});
            return m;
        }
        case Orbit::C2: {
            MackeyF2 m = MackeyF2::make(1, 2, 2);
            m.res42 = GF2Matrix::from_rows({{1}, {1}});
            m.tr24 = GF2Matrix::from_rows({{1, 1}});
            m.res21 = GF2Matrix::identity(2);
            m.tr12 = GF2Matrix(2, 2);
            m.weyl_mid = GF2Matrix::from_rows({{0, 1}, {1, 0}});
            m.weyl_bot = m.weyl_mid;
            return m;
        }
        case Orbit::e: {
            MackeyF2 m = MackeyF2::make(1, 2, 4);
            m.res42 = GF2Matrix::from_rows({{1}, {1}});
            m.tr24 = GF2Matrix::from_rows({{1, 1}});
            m.res21 = GF2Matrix::from_rows({{1, 0}, {0, 1}, {1, 0}, {0, 1}});
            m.tr12 = GF2Matrix::from_rows({{1, 0, 1, 0}, {0, 1, 0, 1}});
            m.weyl_mid = GF2Matrix::from_rows({{0, 1}, {1, 0}});
            // g: b_j -> b_{j+1}
            m.weyl_bot = GF2Matrix(4, 4);
            for (int j = 0; j < 4; ++j) m.weyl_bot.set((j + 1) % 4, j, true);
            return m;
        }
    }
    throw std::logic_error("free_module: bad orbit");
}

MackeyF2 FreeMackeyModule::realize() const {
    MackeyF2 m = MackeyF2::zero();
    for (Orbit o : cells) m = direct_sum(m, free_module(o));
    return m;
}

std::vector<std::vector<int>> MackeyChainComplex::basis_orbits(int d) const {
    std::vector<std::vector<int>> out;
    if (d < lo || d > hi()) return out;
    const auto& p = gperm[std::size_t(d - lo)];
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> orb;
        int j = int(i);
        while (!seen[std::size_t(j)]) {
            seen[std::size_t(j)] = true;
            orb.push_back(j);
            j = p[std::size_t(j)];
        }
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
    }
    return out;
}

namespace {

GF2Matrix perm_matrix(const std::vector<int>& p) {
    GF2Matrix m(p.size(), p.size());
    for (std::size_t j = 0; j < p.size(); ++j) m.set(std::size_t(p[j]), j, true);
    return m;
}

}  // namespace

void MackeyChainComplex::validate() const {
    for (std::size_t i = 0; i < gperm.size(); ++i) {
        const auto& p = gperm[i];
        std::vector<int> seen(p.size(), 0);
        for (int v : p) {
            if (v < 0 || std::size_t(v) >= p.size() || seen[std::size_t(v)]++)
                throw std::logic_error("chain complex: bad permutation");
        }
        // order divides 4
        for (std::size_t j = 0; j < p.size(); ++j) {
            int v = int(j);
            for (int t = 0; t < 4; ++t) v = p[std::size_t(v)];
            if (v != int(j)) throw std::logic_error("chain complex: g^4 != 1");
        }
    }
    for (std::size_t i = 1; i < bnd.size(); ++i) {
        if (bnd[i].rows() != dim(lo + int(i) - 1) || bnd[i].cols() != dim(lo + int(i)))
            throw std::logic_error("chain complex: boundary shape");
        GF2Matrix ps = perm_matrix(gperm[i]);
        GF2Matrix pt = perm_matrix(gperm[i - 1]);
        if (!(bnd[i] * ps == pt * bnd[i]))
            throw std::logic_error("chain complex: boundary not equivariant");
        if (i >= 2 && !(bnd[i - 1] * bnd[i]).is_zero())
            throw std::logic_error("chain complex: dd != 0");
    }
}

namespace {

MackeyChainComplex point_complex(int degree) {
    MackeyChainComplex c;
    c.lo = degree;
    c.gperm = {{0}};
    c.bnd = {GF2Matrix(0, 1)};
    c.offset = RODegree{degree, 0, 0};
    return c;
}

MackeyChainComplex sign_tower(int b) {
    // S^{b sigma}: one fixed cell in degree 0, one C4/C2 cell in each degree 1..b.
    MackeyChainComplex c;
    c.lo = 0;
    c.offset = RODegree{0, b, 0};
    c.gperm.push_back({0});
    c.bnd.push_back(GF2Matrix(0, 1));
    for (int d = 1; d <= b; ++d) {
        c.gperm.push_back({1, 0});
        if (d == 1) {
            c.bnd.push_back(GF2Matrix::from_rows({{1, 1}}));
        } else {
            c.bnd.push_back(GF2Matrix::from_rows({{1, 1}, {1, 1}}));
        }
    }
    return c;
}

MackeyChainComplex rot_tower(int m) {
    // S^{m lambda}: one fixed cell in degree 0, one free cell in each degree 1..2m,
    // boundaries alternating between the augmentation, 1+g and the norm.
    MackeyChainComplex c;
    c.lo = 0;
    c.offset = RODegree{0, 0, m};
    c.gperm.push_back({0});
    c.bnd.push_back(GF2Matrix(0, 1));
    for (int d = 1; d <= 2 * m; ++d) {
        c.gperm.push_back({1, 2, 3, 0});
        if (d == 1) {
            c.bnd.push_back(GF2Matrix::from_rows({{1, 1, 1, 1}}));
        } else if (d % 2 == 0) {
            GF2Matrix b(4, 4);  // 1 + g
            for (int j = 0; j < 4; ++j) {
                b.set(std::size_t(j), std::size_t(j), true);
                b.set(std::size_t((j + 1) % 4), std::size_t(j), true);
            }
            c.bnd.push_back(b);
        } else {
            GF2Matrix b(4, 4);  // norm
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) b.set(std::size_t(i), std::size_t(j), true);
            c.bnd.push_back(b);
        }
    }
    return c;
}

}  // namespace

MackeyChainComplex smash_window(const MackeyChainComplex& a, const MackeyChainComplex& b,
                                int dmin, int dmax) {
    MackeyChainComplex c;
    c.offset = a.offset + b.offset;
    int lo = std::max(a.lo + b.lo, dmin);
    int hi = std::min(a.hi() + b.hi(), dmax);
    if (lo > hi) {
        c.lo = 0;
        return c;
    }
    c.lo = lo;
    // index maps: per total degree, blocks (p, q) with p+q = d, p ascending
    struct Block {
        int p;
        std::size_t start;
    };
    std::vector<std::vector<Block>> blocks(std::size_t(hi - lo + 1));
    for (int d = lo; d <= hi; ++d) {
        std::size_t dim = 0;
        std::vector<int> perm;
        for (int p = std::max(a.lo, d - b.hi()); p <= std::min(a.hi(), d - b.lo); ++p) {
            int q = d - p;
            if (q < b.lo || q > b.hi()) continue;
            std::size_t da = a.dim(p), db = b.dim(q);
            if (da == 0 || db == 0) continue;
            blocks[std::size_t(d - lo)].push_back({p, dim});
            const auto& pa = a.gperm[std::size_t(p - a.lo)];
            const auto& pb = b.gperm[std::size_t(q - b.lo)];
            for (std::size_t i = 0; i < da; ++i)
                for (std::size_t j = 0; j < db; ++j)
                    perm.push_back(int(dim + std::size_t(pa[i]) * db + std::size_t(pb[j])));
            dim += da * db;
        }
        c.gperm.push_back(std::move(perm));
    }
    c.bnd.resize(c.gperm.size());
    c.bnd[0] = GF2Matrix(0, c.gperm[0].size());
    auto block_start = [&](int d, int p) -> long {
        for (const auto& blk : blocks[std::size_t(d - lo)])
            if (blk.p == p) return long(blk.start);
        return -1;
    };
    for (int d = lo + 1; d <= hi; ++d) {
        GF2Matrix m(c.gperm[std::size_t(d - 1 - lo)].size(), c.gperm[std::size_t(d - lo)].size());
        for (const auto& blk : blocks[std::size_t(d - lo)]) {
            int p = blk.p, q = d - p;
            std::size_t da = a.dim(p), db = b.dim(q);
            // d(a x b) = da x b + a x db
            long t1 = p - 1 >= a.lo ? block_start(d - 1, p - 1) : -1;
            if (t1 >= 0) {
                const GF2Matrix& ba = a.bnd[std::size_t(p - a.lo)];
                for (std::size_t i = 0; i < da; ++i)
                    for (std::size_t j = 0; j < db; ++j)
                        for (std::size_t r = 0; r < ba.rows(); ++r)
                            if (ba.get(r, i))
                                m.flip(std::size_t(t1) + r * db + j, blk.start + i * db + j);
            }
            long t2 = q - 1 >= b.lo ? block_start(d - 1, p) : -1;
            if (t2 >= 0) {
                const GF2Matrix& bb = b.bnd[std::size_t(q - b.lo)];
                for (std::size_t i = 0; i < da; ++i)
                    for (std::size_t j = 0; j < db; ++j)
                        for (std::size_t r = 0; r < bb.rows(); ++r)
                            if (bb.get(r, j))
                                m.flip(std::size_t(t2) + i * bb.rows() + r, blk.start + i * db + j);
            }
        }
        c.bnd[std::size_t(d - lo)] = std::move(m);
    }
    return c;
}

MackeyChainComplex smash(const MackeyChainComplex& a, const MackeyChainComplex& b) {
    return smash_window(a, b, a.lo + b.lo, a.hi() + b.hi());
}

MackeyChainComplex dualize(const MackeyChainComplex& c) {
    MackeyChainComplex d;
    d.offset = -c.offset;
    d.lo = -c.hi();
    std::size_t n = c.gperm.size();
    d.gperm.resize(n);
    d.bnd.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        // degree -c.hi()+i of the dual is degree c.hi()-i of c
        d.gperm[i] = c.gperm[n - 1 - i];
    }
    d.bnd[0] = GF2Matrix(0, d.gperm.empty() ? 0 : d.gperm[0].size());
    for (std::size_t i = 1; i < n; ++i) {
        // dual boundary at degree (-c.hi()+i) is the transpose of c.bnd at (c.hi()-i+1)
        d.bnd[i] = c.bnd[n - i].transposed();
    }
    return d;
}

MackeyChainComplex truncate(const MackeyChainComplex& c, int dmin, int dmax) {
    int lo = std::max(c.lo, dmin - 1);
    int hi = std::min(c.hi(), dmax + 1);
    MackeyChainComplex out;
    out.offset = c.offset;
    out.lo = lo;
    if (lo > hi) return out;
    for (int d = lo; d <= hi; ++d) {
        out.gperm.push_back(c.gperm[std::size_t(d - c.lo)]);
        if (d == lo)
            out.bnd.push_back(GF2Matrix(0, out.gperm.back().size()));
        else
            out.bnd.push_back(c.bnd[std::size_t(d - c.lo)]);
    }
    return out;
}

MackeyChainComplex sphere_complex(RODegree v) {
    MackeyChainComplex c = point_complex(v.a);
    c.offset = v;
    if (v.n > 0) c = smash(c, sign_tower(v.n));
    if (v.n < 0) c = smash(c, dualize(sign_tower(-v.n)));
    if (v.m > 0) c = smash(c, rot_tower(v.m));
    if (v.m < 0) c = smash(c, dualize(rot_tower(-v.m)));
    c.offset = v;
    return c;
}

std::size_t total_dim(const MackeyChainComplex& c) {
    std::size_t n = 0;
    for (const auto& p : c.gperm) n += p.size();
    return n;
}

// ------------------------------ homology ------------------------------

namespace {

// Orbit bookkeeping for a fixed-point level of a permutation basis.
struct LevelStruct {
    std::vector<std::vector<int>> orbs;  // orbit -> sorted basis indices
    std::vector<int> orb_of;             // basis index -> orbit

    std::size_t dim() const { return orbs.size(); }

    GF2Vector expand(const GF2Vector& lv, std::size_t bottom_dim) const {
        GF2Vector v(bottom_dim);
        for (std::size_t k = 0; k < orbs.size(); ++k)
            if (lv.get(k))
                for (int i : orbs[k]) v.flip(std::size_t(i));
        return v;
    }

    // Assumes v is constant on orbits.
    GF2Vector project(const GF2Vector& v) const {
        GF2Vector out(orbs.size());
        for (std::size_t k = 0; k < orbs.size(); ++k)
            if (v.get(std::size_t(orbs[k][0]))) out.set(k, true);
        return out;
    }
};

LevelStruct orbits_of(const std::vector<int>& perm) {
    LevelStruct ls;
    ls.orb_of.assign(perm.size(), -1);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (ls.orb_of[i] >= 0) continue;
        std::vector<int> orb;
        int j = int(i);
        while (ls.orb_of[std::size_t(j)] < 0) {
            ls.orb_of[std::size_t(j)] = int(ls.orbs.size());
            orb.push_back(j);
            j = perm[std::size_t(j)];
        }
        std::sort(orb.begin(), orb.end());
        ls.orbs.push_back(std::move(orb));
    }
    return ls;
}

std::vector<int> perm_squared(const std::vector<int>& p) {
    std::vector<int> q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[std::size_t(p[i])];
    return q;
}

std::vector<int> identity_perm(std::size_t n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// Subquotient ker/im with chosen representatives and coordinates.
struct SubQuotient {
    std::vector<GF2Vector> reps;  // representatives, in level coordinates
    GF2Rref expr;                 // spans [image..., reps...]
    std::size_t image_rank = 0;

    SubQuotient() : expr(0) {}

    GF2Vector reduce(const GF2Vector& v) const {
        auto c = expr.coords(v);
        if (!c) throw std::logic_error("homology: vector not in cycle space");
        GF2Vector out(reps.size());
        for (std::size_t k = 0; k < reps.size(); ++k)
            if (c->get(image_rank + k)) out.set(k, true);
        return out;
    }
};

SubQuotient subquotient(const std::vector<GF2Vector>& kernel, const GF2Matrix& image_of) {
    std::size_t ambient = kernel.empty() ? image_of.rows() : kernel[0].size();
    SubQuotient sq;
    sq.expr = GF2Rref(ambient);
    GF2Rref imspan(ambient);
    for (std::size_t j = 0; j < image_of.cols(); ++j) {
        GF2Vector col = image_of.col(j);
        if (imspan.add(col)) sq.expr.add(col);
    }
    sq.image_rank = imspan.rank();
    for (const auto& k : kernel) {
        GF2Vector v = k;
        if (imspan.add(v)) {
            sq.expr.add(v);
            sq.reps.push_back(v);
        }
    }
    return sq;
}

}  // namespace

MackeyF2 homology(const MackeyChainComplex& c, int d) {
    std::size_t nd = c.dim(d);
    std::size_t ndm = c.dim(d - 1);
    std::size_t ndp = c.dim(d + 1);
    std::vector<int> pd = d >= c.lo && d <= c.hi() ? c.gperm[std::size_t(d - c.lo)]
                                                   : std::vector<int>{};
    std::vector<int> pdm = d - 1 >= c.lo && d - 1 <= c.hi() ? c.gperm[std::size_t(d - 1 - c.lo)]
                                                            : std::vector<int>{};
    std::vector<int> pdp = d + 1 >= c.lo && d + 1 <= c.hi() ? c.gperm[std::size_t(d + 1 - c.lo)]
                                                            : std::vector<int>{};
    GF2Matrix out_bnd = (d > c.lo && d <= c.hi()) ? c.bnd[std::size_t(d - c.lo)]
                                                  : GF2Matrix(ndm, nd);
    GF2Matrix in_bnd = (d + 1 > c.lo && d + 1 <= c.hi()) ? c.bnd[std::size_t(d + 1 - c.lo)]
                                                         : GF2Matrix(nd, ndp);

    // level structures at the three degrees: bot = identity orbits, mid = g^2, top = g
    LevelStruct bot_d = orbits_of(identity_perm(nd));
    LevelStruct mid_d = orbits_of(perm_squared(pd));
    LevelStruct top_d = orbits_of(pd);
    LevelStruct bot_dm = orbits_of(identity_perm(ndm));
    LevelStruct mid_dm = orbits_of(perm_squared(pdm));
    LevelStruct top_dm = orbits_of(pdm);
    LevelStruct bot_dp = orbits_of(identity_perm(ndp));
    LevelStruct mid_dp = orbits_of(perm_squared(pdp));
    LevelStruct top_dp = orbits_of(pdp);

    auto level_matrix = [&](const GF2Matrix& bmat, const LevelStruct& src,
                            const LevelStruct& tgt) {
        GF2Matrix m(tgt.dim(), src.dim());
        for (std::size_t j = 0; j < src.dim(); ++j) {
            GF2Vector unit(src.dim());
            unit.set(j, true);
            GF2Vector bv = bmat.apply(src.expand(unit, bmat.cols()));
            m.set_col(j, tgt.project(bv));
        }
        return m;
    };

    GF2Matrix out_bot = level_matrix(out_bnd, bot_d, bot_dm);
    GF2Matrix out_mid = level_matrix(out_bnd, mid_d, mid_dm);
    GF2Matrix out_top = level_matrix(out_bnd, top_d, top_dm);
    GF2Matrix in_bot = level_matrix(in_bnd, bot_dp, bot_d);
    GF2Matrix in_mid = level_matrix(in_bnd, mid_dp, mid_d);
    GF2Matrix in_top = level_matrix(in_bnd, top_dp, top_d);

    SubQuotient h_bot = subquotient(kernel_basis(out_bot), in_bot);
    SubQuotient h_mid = subquotient(kernel_basis(out_mid), in_mid);
    SubQuotient h_top = subquotient(kernel_basis(out_top), in_top);

    MackeyF2 h = MackeyF2::make(h_top.reps.size(), h_mid.reps.size(), h_bot.reps.size());

    auto apply_perm = [&](const GF2Vector& v, const std::vector<int>& p) {
        GF2Vector out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v.get(i)) out.flip(std::size_t(p[i]));
        return out;
    };

    for (std::size_t j = 0; j < h_top.reps.size(); ++j) {
        GF2Vector bottom = top_d.expand(h_top.reps[j], nd);
        h.res42.set_col(j, h_mid.reduce(mid_d.project(bottom)));
    }
    for (std::size_t j = 0; j < h_mid.reps.size(); ++j) {
        GF2Vector bottom = mid_d.expand(h_mid.reps[j], nd);
        GF2Vector tr = bottom;
        tr.xor_with(apply_perm(bottom, pd));
        h.tr24.set_col(j, h_top.reduce(top_d.project(tr)));
        h.res21.set_col(j, h_bot.reduce(bottom));
        h.weyl_mid.set_col(j, h_mid.reduce(mid_d.project(apply_perm(bottom, pd))));
    }
    std::vector<int> pd2 = perm_squared(pd);
    for (std::size_t j = 0; j < h_bot.reps.size(); ++j) {
        const GF2Vector& bottom = h_bot.reps[j];
        GF2Vector tr = bottom;
        tr.xor_with(apply_perm(bottom, pd2));
        h.tr12.set_col(j, h_mid.reduce(mid_d.project(tr)));
        h.weyl_bot.set_col(j, h_bot.reduce(apply_perm(bottom, pd)));
    }

    auto rep = validate(h);
    if (!rep.ok()) throw std::logic_error("homology produced an invalid Mackey functor");
    return h;
}

// --------------------------- morse reduction ---------------------------

namespace {

// Invert a small F2 matrix; nullopt if singular.
std::optional<GF2Matrix> invert(const GF2Matrix& m) {
    std::size_t n = m.rows();
    if (m.cols() != n) return std::nullopt;
    GF2Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m.get(i, j));
        aug.set(i, n + i, true);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && !aug.get(p, col)) ++p;
        if (p == n) return std::nullopt;
        aug.swap_rows(p, col);
        for (std::size_t i = 0; i < n; ++i)
            if (i != col && aug.get(i, col)) aug.xor_row_into(col, i);
    }
    GF2Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.set(i, j, aug.get(i, n + j));
    return inv;
}

}  // namespace

void morse_reduce_multi(int lo, std::vector<std::vector<std::vector<int>>>& perms,
                        std::vector<GF2Matrix>& bnd, int min_degree) {
    std::size_t ngen = perms.size();
    std::size_t ndeg = ngen ? perms[0].size() : 0;
    auto joint_orbits = [&](std::size_t di) {
        std::size_t n = perms[0][di].size();
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[std::size_t(x)] != x) {
                parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
                x = parent[std::size_t(x)];
            }
            return x;
        };
        for (std::size_t g = 0; g < ngen; ++g)
            for (std::size_t i = 0; i < n; ++i) {
                int a = find(int(i)), b = find(perms[g][di][i]);
                if (a != b) parent[std::size_t(a)] = b;
            }
        std::vector<std::vector<int>> orbs;
        std::vector<int> id(n, -1);
        for (std::size_t i = 0; i < n; ++i) {
            int r = find(int(i));
            if (id[std::size_t(r)] < 0) {
                id[std::size_t(r)] = int(orbs.size());
                orbs.emplace_back();
            }
            orbs[std::size_t(id[std::size_t(r)])].push_back(int(i));
        }
        return orbs;
    };

    auto delete_indices = [&](std::size_t di, const std::vector<int>& kill) {
        std::size_t n = perms[0][di].size();
        std::vector<bool> dead(n, false);
        for (int k : kill) dead[std::size_t(k)] = true;
        std::vector<int> newidx(n, -1);
        int next = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (!dead[i]) newidx[i] = next++;
        for (std::size_t g = 0; g < ngen; ++g) {
            std::vector<int> np;
            np.reserve(std::size_t(next));
            for (std::size_t i = 0; i < n; ++i)
                if (!dead[i]) np.push_back(newidx[std::size_t(perms[g][di][i])]);
            perms[g][di] = std::move(np);
        }
        return newidx;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t di = 1; di < ndeg; ++di) {
            int deg = lo + int(di);
            if (deg - 1 < min_degree) continue;
            auto src_orbs = joint_orbits(di);
            auto tgt_orbs = joint_orbits(di - 1);
            GF2Matrix& m = bnd[di];
            bool cancelled = false;
            for (std::size_t so = 0; so < src_orbs.size() && !cancelled; ++so) {
                for (std::size_t to = 0; to < tgt_orbs.size() && !cancelled; ++to) {
                    const auto& sc = src_orbs[so];
                    const auto& tc = tgt_orbs[to];
                    if (sc.size() != tc.size()) continue;
                    GF2Matrix block(tc.size(), sc.size());
                    for (std::size_t i = 0; i < tc.size(); ++i)
                        for (std::size_t j = 0; j < sc.size(); ++j)
                            block.set(i, j, m.get(std::size_t(tc[i]), std::size_t(sc[j])));
                    auto ainv = invert(block);
                    if (!ainv) continue;
                    // Schur update on the remaining boundary block.
                    std::size_t nsrc = perms[0][di].size();
                    std::size_t ntgt = perms[0][di - 1].size();
                    std::vector<bool> skill(nsrc, false), tkill(ntgt, false);
                    for (int k : sc) skill[std::size_t(k)] = true;
                    for (int k : tc) tkill[std::size_t(k)] = true;
                    // B: tc rows x rest cols ; C: rest rows x sc cols
                    std::vector<int> rest_src, rest_tgt;
                    for (std::size_t j = 0; j < nsrc; ++j)
                        if (!skill[j]) rest_src.push_back(int(j));
                    for (std::size_t i = 0; i < ntgt; ++i)
                        if (!tkill[i]) rest_tgt.push_back(int(i));
                    GF2Matrix B(tc.size(), rest_src.size());
                    for (std::size_t i = 0; i < tc.size(); ++i)
                        for (std::size_t j = 0; j < rest_src.size(); ++j)
                            B.set(i, j, m.get(std::size_t(tc[i]), std::size_t(rest_src[j])));
                    GF2Matrix C(rest_tgt.size(), sc.size());
                    for (std::size_t i = 0; i < rest_tgt.size(); ++i)
                        for (std::size_t j = 0; j < sc.size(); ++j)
                            C.set(i, j, m.get(std::size_t(rest_tgt[i]), std::size_t(sc[j])));
                    GF2Matrix corr = C * (*ainv) * B;
                    GF2Matrix nm(rest_tgt.size(), rest_src.size());
                    for (std::size_t i = 0; i < rest_tgt.size(); ++i)
                        for (std::size_t j = 0; j < rest_src.size(); ++j) {
                            bool v = m.get(std::size_t(rest_tgt[i]), std::size_t(rest_src[j])) ^
                                     corr.get(i, j);
                            nm.set(i, j, v);
                        }
                    // drop rows/cols in the adjacent boundaries
                    std::vector<int> src_new = delete_indices(di, sc);
                    std::vector<int> tgt_new = delete_indices(di - 1, tc);
                    bnd[di] = std::move(nm);
                    if (di + 1 < ndeg) {
                        GF2Matrix& up = bnd[di + 1];
                        GF2Matrix nup(rest_src.size(), up.cols());
                        for (std::size_t i = 0; i < rest_src.size(); ++i)
                            for (std::size_t j = 0; j < up.cols(); ++j)
                                nup.set(i, j, up.get(std::size_t(rest_src[i]), j));
                        up = std::move(nup);
                    }
                    {
                        GF2Matrix& down = bnd[di - 1];
                        GF2Matrix ndown(down.rows(), rest_tgt.size());
                        for (std::size_t i = 0; i < down.rows(); ++i)
                            for (std::size_t j = 0; j < rest_tgt.size(); ++j)
                                ndown.set(i, j, down.get(i, std::size_t(rest_tgt[j])));
                        down = std::move(ndown);
                    }
                    (void)src_new;
                    (void)tgt_new;
                    cancelled = true;
                    changed = true;
                }
            }
            if (cancelled) --di;  // retry this degree
        }
    }
}

void morse_reduce(MackeyChainComplex& c) {
    std::vector<std::vector<std::vector<int>>> perms = {c.gperm};
    morse_reduce_multi(c.lo, perms, c.bnd, c.lo);
    c.gperm = perms[0];
}

}  // namespace roc4
