#include "roc4/green.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace roc4 {

std::string level_name(Level l) {
    switch (l) {
        case Level::top: return "top";
        case Level::mid: return "mid";
        case Level::bot: return "bot";
    }
    return "?";
}

bool TopMono::valid(int as, int us, int al, int ul, bool theta) {
    if (!theta) {
        if (us >= 0 && al >= 0 && ul >= 0 && as >= 0) return !(as >= 2 && ul >= 1);
        if (us < 0) return ul >= 1 && (as == 0 || as == 1) && al >= 0;
        if (al < 0) return as >= 2 && us >= 0 && ul == 0;
        return false;
    }
    if (ul == 0) {
        if (as <= 0 && us <= 0) return true;            // theta tower
        return (as == 1 || as == 2) && us <= 0 && al <= -1;  // x_{n,1} quotients
    }
    if (ul <= -1) return (as == 1 || as == 2) && al <= -1;  // x_{n,m>=2} / s quotients
    return false;  // theta * u_lambda^{>0} is not in the ring
}

std::optional<TopMono> TopMono::make(int as, int us, int al, int ul, bool theta) {
    if (!valid(as, us, al, ul, theta)) return std::nullopt;
    return TopMono{as, us, al, ul, theta};
}

RODegree TopMono::degree() const {
    // a_sigma: -sigma; u_sigma: 1-sigma; a_lambda: -lambda; u_lambda: 2-lambda;
    // theta = Tr(u_sigma-bar^-2): 2*sigma - 2.
    int th = theta ? 1 : 0;
    return RODegree{us + 2 * ul - 2 * th, -as - us + 2 * th, -al - ul};
}

std::optional<MidMono> MidMono::make(int bus, int bal, int bul, int sq, bool v) {
    // Reduce sqrt exponent into the canonical window using sq^2 = bal*bul.
    int hi = v ? 0 : 1;
    int lo = v ? -1 : 0;
    while (sq > hi) {
        sq -= 2;
        bal += 1;
        bul += 1;
    }
    while (sq < lo) {
        sq += 2;
        bal -= 1;
        bul -= 1;
    }
    if (!v) {
        if (bal < 0 || bul < 0) return std::nullopt;
    } else {
        if (bal > 0 || bul > 0) return std::nullopt;
    }
    return MidMono{bus, bal, bul, sq, v};
}

RODegree MidMono::degree() const {
    // bus: 1-sigma; bal: -lambda; bul: 2-lambda; sq: 1-lambda; v: lambda-2.
    int vv = v ? 1 : 0;
    return RODegree{bus + 2 * bul + sq - 2 * vv, -bus, -bal - bul - sq + vv};
}

RODegree BotMono::degree() const { return RODegree{bbs + 2 * bbl, -bbs, -bbl}; }

GreenElement GreenElement::zero(Level l) {
    GreenElement e;
    e.level = l;
    return e;
}

GreenElement GreenElement::unit(Level l) {
    GreenElement e;
    e.level = l;
    switch (l) {
        case Level::top: e.t.push_back(TopMono{}); break;
        case Level::mid: e.m.push_back(MidMono{}); break;
        case Level::bot: e.b.push_back(BotMono{}); break;
    }
    return e;
}

GreenElement GreenElement::of(const TopMono& x) {
    GreenElement e;
    e.level = Level::top;
    e.t.push_back(x);
    return e;
}
GreenElement GreenElement::of(const MidMono& x) {
    GreenElement e;
    e.level = Level::mid;
    e.m.push_back(x);
    return e;
}
GreenElement GreenElement::of(const BotMono& x) {
    GreenElement e;
    e.level = Level::bot;
    e.b.push_back(x);
    return e;
}

namespace {

template <class Mono>
void f2_insert(std::vector<Mono>& terms, const Mono& x) {
    auto it = std::lower_bound(terms.begin(), terms.end(), x);
    if (it != terms.end() && *it == x)
        terms.erase(it);
    else
        terms.insert(it, x);
}

std::optional<TopMono> mul_mono(const TopMono& x, const TopMono& y) {
    if (x.theta && y.theta) return std::nullopt;  // products of two theta classes vanish
    return TopMono::make(x.as + y.as, x.us + y.us, x.al + y.al, x.ul + y.ul, x.theta || y.theta);
}

std::optional<MidMono> mul_mono(const MidMono& x, const MidMono& y) {
    if (x.v && y.v) return std::nullopt;
    return MidMono::make(x.bus + y.bus, x.bal + y.bal, x.bul + y.bul, x.sq + y.sq, x.v || y.v);
}

std::optional<BotMono> mul_mono(const BotMono& x, const BotMono& y) {
    return BotMono{x.bbs + y.bbs, x.bbl + y.bbl};
}

template <class Mono>
std::vector<Mono> mul_sets(const std::vector<Mono>& xs, const std::vector<Mono>& ys) {
    std::vector<Mono> out;
    for (const auto& x : xs)
        for (const auto& y : ys)
            if (auto p = mul_mono(x, y)) f2_insert(out, *p);
    return out;
}

}  // namespace

GreenElement add(const GreenElement& x, const GreenElement& y) {
    if (x.level != y.level) throw GreenError("add: level mismatch");
    GreenElement out = x;
    for (const auto& z : y.t) f2_insert(out.t, z);
    for (const auto& z : y.m) f2_insert(out.m, z);
    for (const auto& z : y.b) f2_insert(out.b, z);
    return out;
}

GreenElement mul(const GreenElement& x, const GreenElement& y) {
    if (x.level != y.level) throw GreenError("mul: level mismatch");
    GreenElement out = GreenElement::zero(x.level);
    switch (x.level) {
        case Level::top: out.t = mul_sets(x.t, y.t); break;
        case Level::mid: out.m = mul_sets(x.m, y.m); break;
        case Level::bot: out.b = mul_sets(x.b, y.b); break;
    }
    return out;
}

namespace {

std::optional<MidMono> res_mono(const TopMono& x) {
    if (x.theta) {
        // Only the s-shaped quotients (single a_sigma, m >= 2 tail) restrict nontrivially:
        // res(s * u^k / (al^i ul^j)) = v * bus^k / (bal^i bul^j sq).
        if (x.ul <= -1 && x.as == 1)
            return MidMono::make(x.us - 1, x.al + 1, x.ul + 1, -1, true);
        return std::nullopt;
    }
    if (x.as == 0) return MidMono::make(x.us, x.al, x.ul, 0, false);
    if (x.as == 2 && x.al < 0)  // res(as^2 us^q / al^i) = v * bus^{q+2} / bal^{i-1}
        return MidMono::make(x.us + 2, x.al + 1, 0, 0, true);
    return std::nullopt;
}

std::optional<BotMono> res_mono(const MidMono& x) {
    if (x.v || x.sq != 0 || x.bal >= 1) return std::nullopt;
    return BotMono{x.bus, x.bul};
}

std::optional<TopMono> tr_mono(const MidMono& x) {
    if (x.v) {
        if (x.sq == -1) return std::nullopt;  // transfers of the s-bar family vanish
        return TopMono::make(2, x.bus, x.bal - 1, x.bul, true);
    }
    if (x.sq == 1)  // Tr(sq * poly) via Tr(sq) = as*ul/us and Frobenius
        return TopMono::make(1, x.bus - 1, x.bal, x.bul + 1, false);
    return TopMono::make(0, x.bus + 2, x.bal, x.bul, true);
}

std::optional<MidMono> tr_mono(const BotMono& x) {
    if (x.bbl >= 0) return std::nullopt;
    return MidMono::make(x.bbs, 0, x.bbl + 1, 0, true);
}

}  // namespace

GreenElement res(const GreenElement& x) {
    if (x.level == Level::bot) throw GreenError("res: bottom level has no restriction");
    GreenElement out = GreenElement::zero(x.level == Level::top ? Level::mid : Level::bot);
    if (x.level == Level::top) {
        for (const auto& z : x.t)
            if (auto r = res_mono(z)) f2_insert(out.m, *r);
    } else {
        for (const auto& z : x.m)
            if (auto r = res_mono(z)) f2_insert(out.b, *r);
    }
    return out;
}

GreenElement tr(const GreenElement& x) {
    if (x.level == Level::top) throw GreenError("tr: top level has no transfer");
    GreenElement out = GreenElement::zero(x.level == Level::mid ? Level::top : Level::mid);
    if (x.level == Level::mid) {
        for (const auto& z : x.m)
            if (auto r = tr_mono(z)) f2_insert(out.t, *r);
    } else {
        for (const auto& z : x.b)
            if (auto r = tr_mono(z)) f2_insert(out.m, *r);
    }
    return out;
}

std::optional<RODegree> degree_of(const GreenElement& x) {
    std::optional<RODegree> d;
    auto note = [&](RODegree dd) {
        if (!d)
            d = dd;
        else if (*d != dd)
            throw GreenError("degree_of: mixed-degree element");
    };
    for (const auto& z : x.t) note(z.degree());
    for (const auto& z : x.m) note(z.degree());
    for (const auto& z : x.b) note(z.degree());
    return d;
}

GreenElement bockstein(const GreenElement& x) {
    if (x.level != Level::top) throw GreenError("bockstein: top level only");
    GreenElement out = GreenElement::zero(Level::top);
    for (const auto& z : x.t) {
        if (z.theta) throw GreenError("bockstein: unsupported family (theta)");
        if (z.us & 1)
            if (auto p = TopMono::make(z.as + 1, z.us - 1, z.al, z.ul, false))
                f2_insert(out.t, *p);
    }
    return out;
}

namespace {

bool corner_valid(const TopMono& x, TateCorner c) {
    switch (c) {
        case TateCorner::tilde:
            if (x.theta) return x.ul == 0 && x.as <= 0 && x.us <= 0;  // theta tower persists
            if (x.us >= 0) return x.as >= 0 && x.ul >= 0 && !(x.as >= 2 && x.ul >= 1);
            return x.ul >= 1 && (x.as == 0 || x.as == 1);
        case TateCorner::h:
            return !x.theta && x.as <= 1 && x.as >= 0 && x.al >= 0;
        case TateCorner::t:
            return !x.theta && x.as <= 1 && x.as >= 0;
    }
    return false;
}

}  // namespace

CornerElement localize(const GreenElement& x, TateCorner corner) {
    if (x.level != Level::top) throw GreenError("localize: top level only");
    CornerElement out;
    out.corner = corner;
    for (const auto& z : x.t)
        if (corner_valid(z, corner)) {
            auto it = std::lower_bound(out.terms.begin(), out.terms.end(), z);
            if (it != out.terms.end() && *it == z)
                out.terms.erase(it);
            else
                out.terms.insert(it, z);
        }
    return out;
}

std::vector<TopMono> top_monomials(RODegree d) {
    std::vector<TopMono> out;
    int bound = std::abs(d.a) + std::abs(d.n) + std::abs(d.m) + 4;
    for (int th = 0; th <= 1; ++th)
        for (int ul = -bound; ul <= bound; ++ul) {
            int us = d.a - 2 * ul + 2 * th;
            int as = 2 * ul - d.n - d.a;
            int al = -d.m - ul;
            if (auto p = TopMono::make(as, us, al, ul, th)) out.push_back(*p);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MidMono> mid_monomials(RODegree d) {
    std::vector<MidMono> out;
    int bus = -d.n;
    for (int v = 0; v <= 1; ++v) {
        int lo = v ? -1 : 0, hi = v ? 0 : 1;
        for (int sq = lo; sq <= hi; ++sq) {
            int num = d.a - bus - sq + 2 * v;
            if (num & 1) continue;
            int bul = num / 2;
            int bal = -d.m - bul - sq + v;
            if (auto p = MidMono::make(bus, bal, bul, sq, v != 0))
                if (p->sq == sq)  // already canonical; make() must not have shifted
                    out.push_back(*p);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<BotMono> bot_monomials(RODegree d) {
    std::vector<BotMono> out;
    if (-d.n + 2 * -d.m == d.a) out.push_back(BotMono{-d.n, -d.m});
    return out;
}

// ---- C2 point ring ----

std::string C2Degree::str() const {
    std::ostringstream os;
    os << a;
    if (s) os << (s > 0 ? "+" : "") << s << "sigma2";
    return os.str();
}

std::optional<C2Mono> C2Mono::make(int a2, int u2, bool theta) {
    if (!theta) {
        if (a2 < 0 || u2 < 0) return std::nullopt;
    } else {
        if (a2 > 0 || u2 > 0) return std::nullopt;
    }
    return C2Mono{a2, u2, theta};
}

C2Degree C2Mono::degree() const {
    int th = theta ? 1 : 0;
    return C2Degree{u2 - 2 * th, -a2 - u2 + 2 * th};
}

C2Element C2Element::zero(Level l) {
    C2Element e;
    e.level = l;
    return e;
}
C2Element C2Element::of(const C2Mono& x) {
    C2Element e;
    e.level = Level::top;
    e.t.push_back(x);
    return e;
}
C2Element C2Element::of(const C2BotMono& x) {
    C2Element e;
    e.level = Level::bot;
    e.b.push_back(x);
    return e;
}

C2Element c2_mul(const C2Element& x, const C2Element& y) {
    if (x.level != y.level) throw GreenError("c2_mul: level mismatch");
    C2Element out = C2Element::zero(x.level);
    if (x.level == Level::top) {
        for (const auto& p : x.t)
            for (const auto& q : y.t) {
                if (p.theta && q.theta) continue;
                if (auto r = C2Mono::make(p.a2 + q.a2, p.u2 + q.u2, p.theta || q.theta))
                    f2_insert(out.t, *r);
            }
    } else {
        for (const auto& p : x.b)
            for (const auto& q : y.b) f2_insert(out.b, C2BotMono{p.e + q.e});
    }
    return out;
}

C2Element c2_res(const C2Element& x) {
    if (x.level != Level::top) throw GreenError("c2_res: top level only");
    C2Element out = C2Element::zero(Level::bot);
    for (const auto& p : x.t) {
        if (p.theta || p.a2 >= 1) continue;
        f2_insert(out.b, C2BotMono{p.u2});
    }
    return out;
}

C2Element c2_tr(const C2Element& x) {
    if (x.level != Level::bot) throw GreenError("c2_tr: bottom level only");
    C2Element out = C2Element::zero(Level::top);
    for (const auto& p : x.b) {
        if (p.e >= -1) continue;
        if (auto r = C2Mono::make(0, p.e + 2, true)) f2_insert(out.t, *r);
    }
    return out;
}

std::vector<C2Mono> c2_monomials(C2Degree d) {
    std::vector<C2Mono> out;
    // polynomial part: u2 = d.a, a2 = -d.s - d.a
    if (auto p = C2Mono::make(-d.s - d.a, d.a, false)) out.push_back(*p);
    // theta part: u2 = d.a + 2, a2 = -d.s - d.a - 2 + 2 ... derive from degree formula
    if (auto p = C2Mono::make(-(d.a + d.s), d.a + 2, true)) out.push_back(*p);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MidToC2 mid_to_c2(const MidMono& x) {
    MidToC2 out;
    auto c = C2Mono::make(2 * x.bal + x.sq, 2 * x.bul + x.sq, x.v);
    if (!c) throw GreenError("mid_to_c2: not translatable");
    out.c2 = *c;
    out.bus_power = x.bus;
    return out;
}

}  // namespace roc4
