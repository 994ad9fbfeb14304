#include "roc4/pointcat.hpp"

#include <algorithm>
#include <stdexcept>

namespace roc4 {

namespace {

std::string top_label(int as, int us, int al, int ul, bool theta) {
    auto p = TopMono::make(as, us, al, ul, theta);
    if (!p) throw std::logic_error("point table produced an invalid top monomial");
    return p->str();
}

std::string mid_label(int bus, int bal, int bul, int sq, bool v) {
    auto p = MidMono::make(bus, bal, bul, sq, v);
    if (!p || p->sq != sq) throw std::logic_error("point table produced an invalid mid monomial");
    return p->str();
}

std::string bot_label(int bbs, int bbl) { return BotMono{bbs, bbl}.str(); }

struct Builder {
    int at;  // requested homological degree
    std::vector<PointPiece> pieces;

    void piece(int deg, NamedMF tag, std::string top, std::string mid, std::string bot) {
        if (deg != at) return;
        pieces.push_back(PointPiece{tag, std::move(top), std::move(mid), std::move(bot)});
    }
};

// k_*(S^{n sigma + m lambda}), n, m >= 0.
void table_positive(int n, int m, Builder& b) {
    b.piece(n + 2 * m, NamedMF::k, top_label(0, n, 0, m, false), mid_label(n, 0, m, 0, false),
            bot_label(n, m));
    for (int i = 0; i < m; ++i)
        b.piece(n + 2 * i, NamedMF::Q_sharp, top_label(0, n, m - i, i, false),
                mid_label(n, m - i, i, 0, false), "0");
    if (n > 0) {
        for (int i = 1; i <= m; ++i)
            b.piece(n + 2 * i - 1, NamedMF::Q, top_label(1, n - 1, m - i, i, false),
                    mid_label(n, m - i, i - 1, 1, false), "0");
    } else {
        for (int i = 1; i <= m; ++i)
            b.piece(2 * i - 1, NamedMF::Q, top_label(1, -1, m - i, i, false),
                    mid_label(0, m - i, i - 1, 1, false), "0");
    }
    for (int i = 0; i < n; ++i)
        b.piece(i, NamedMF::box_k, top_label(n - i, i, m, 0, false), "0", "0");
}

// k_*(S^{-n sigma - m lambda}), n, m >= 0, not both zero.
void table_negative(int n, int m, Builder& b) {
    if (m != 0)
        b.piece(-n - 2 * m, NamedMF::L, top_label(2, -n, -1, -(m - 1), true),
                mid_label(-n, 0, -(m - 1), 0, true), bot_label(-n, -m));
    if (m == 0 && n >= 2)
        b.piece(-n, NamedMF::pstar_L, top_label(0, -(n - 2), 0, 0, true),
                mid_label(-n, 0, 0, 0, false), bot_label(-n, 0));
    if (m == 0 && n == 1)
        b.piece(-1, NamedMF::k_minus, "0", mid_label(-1, 0, 0, 0, false), bot_label(-1, 0));
    for (int i = 2; i <= m; ++i)
        b.piece(-n - 2 * m + 2 * i - 3, NamedMF::Q_sharp,
                top_label(1, 1 - n, -(i - 1), -(m - i + 1), true),
                mid_label(-n, -(i - 2), -(m - i), -1, true), "0");
    for (int i = 1; i < m; ++i)
        b.piece(-n - 2 * i, NamedMF::Q, top_label(2, -n, -1 - (m - i), -(i - 1), true),
                mid_label(-n, -(m - i), -(i - 1), 0, true), "0");
    if (m != 0)
        for (int i = 0; i <= n - 1; ++i)
            b.piece(-i - 2, NamedMF::box_k, top_label(2 - n + i, -i, -m, 0, true), "0", "0");
    if (m == 0)
        for (int i = 2; i < n; ++i)
            b.piece(-i, NamedMF::box_k, top_label(-(n - i), -(n - 2), 0, 0, true), "0", "0");
}

// k_*(S^{m lambda - n sigma}), n, m > 0.
void table_lambda_minus_sigma(int n, int m, Builder& b) {
    b.piece(2 * m - n, NamedMF::k, top_label(0, -n, 0, m, false), mid_label(-n, 0, m, 0, false),
            bot_label(-n, m));
    for (int i = 1; i < m; ++i)
        b.piece(2 * m - n - 2 * i, NamedMF::Q_sharp, top_label(0, -n, i, m - i, false),
                mid_label(-n, i, m - i, 0, false), "0");
    for (int i = 0; i < m; ++i)
        b.piece(2 * m - n - 2 * i - 1, NamedMF::Q, top_label(1, -(n + 1), i, m - i, false),
                mid_label(-n, i, m - i - 1, 1, false), "0");
    for (int i = 2; i < n; ++i)
        b.piece(-i, NamedMF::box_k, top_label(-(n - i), -(i - 2), m, 0, true), "0", "0");
    if (n >= 2)
        b.piece(-n, NamedMF::Q, top_label(0, -(n - 2), m, 0, true), mid_label(-n, m, 0, 0, false),
                "0");
    if (n == 1) b.piece(-1, NamedMF::bar_box_k, "0", mid_label(-1, m, 0, 0, false), "0");
}

// k_*(S^{n sigma - m lambda}), n, m > 0.
void table_sigma_minus_lambda(int n, int m, Builder& b) {
    if (n >= 2 && m >= 2)
        b.piece(n - 2, NamedMF::Q_sharp, top_label(2, n - 2, -m, 0, false),
                mid_label(n, -(m - 1), 0, 0, true), "0");
    if (n == 1 && m >= 2)
        b.piece(-1, NamedMF::bar_box_k, "0", mid_label(1, -(m - 1), 0, 0, true), "0");
    for (int i = 2; i <= m - 1; ++i)
        b.piece(n - 2 * m + 2 * i - 2, NamedMF::Q, top_label(2, n, -i, -(m - i), true),
                mid_label(n, -(i - 1), -(m - i), 0, true), "0");
    for (int i = 2; i <= m; ++i)
        b.piece(n - 2 * m + 2 * i - 3, NamedMF::Q_sharp,
                top_label(1, n + 1, -(i - 1), -(m - i + 1), true),
                mid_label(n, -(i - 2), -(m - i), -1, true), "0");
    if (m >= 2)
        b.piece(n - 2 * m, NamedMF::L, top_label(2, n, -1, -(m - 1), true),
                mid_label(n, 0, -(m - 1), 0, true), bot_label(n, -m));
    if (n > 1 && m == 1)
        b.piece(n - 2, NamedMF::L_sharp, top_label(2, n - 2, -1, 0, false),
                mid_label(n, 0, 0, 0, true), bot_label(n, -1));
    if (n == 1 && m == 1)
        b.piece(-1, NamedMF::k_minus_flat, "0", mid_label(1, 0, 0, 0, true), bot_label(1, -1));
    for (int i = 3; i <= n; ++i)
        b.piece(n - i, NamedMF::box_k, top_label(i, n - i, -m, 0, false), "0", "0");
}

}  // namespace

PointAnswer expected_point(RODegree star) {
    // k_{a + n sigma + m lambda}(S^0) = k_a(S^{-n sigma - m lambda})
    int N = -star.n, M = -star.m;
    Builder b{star.a, {}};
    if (N >= 0 && M >= 0)
        table_positive(N, M, b);
    else if (N <= 0 && M <= 0)
        table_negative(-N, -M, b);
    else if (N < 0)
        table_lambda_minus_sigma(-N, M, b);
    else
        table_sigma_minus_lambda(N, -M, b);
    return PointAnswer{std::move(b.pieces)};
}

std::vector<NamedMF> PointAnswer::tags() const {
    std::vector<NamedMF> out;
    out.reserve(pieces.size());
    for (const auto& p : pieces) out.push_back(p.tag);
    std::sort(out.begin(), out.end(), [](NamedMF a, NamedMF b) {
        const auto& order = catalog_tags();
        auto ia = std::find(order.begin(), order.end(), a);
        auto ib = std::find(order.begin(), order.end(), b);
        return ia < ib;
    });
    return out;
}

std::array<std::size_t, 3> PointAnswer::dims() const {
    std::array<std::size_t, 3> d{0, 0, 0};
    for (const auto& p : pieces) {
        MackeyF2 mf = catalog(p.tag);
        d[0] += mf.top_dim;
        d[1] += mf.mid_dim;
        d[2] += mf.bot_dim;
    }
    return d;
}

bool PointAnswer::operator==(const PointAnswer& o) const { return tags() == o.tags(); }

C2PointAnswer expected_point_c2(C2Degree star2) {
    auto monos = c2_monomials(star2);
    C2PointAnswer out;
    out.dim = monos.size();
    if (!monos.empty()) out.label = monos[0].str();
    if (monos.size() > 1) throw std::logic_error("C2 point ring is at most one-dimensional");
    return out;
}

}  // namespace roc4
