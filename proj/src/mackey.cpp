#include "roc4/mackey.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace roc4 {

std::string RODegree::str() const {
    std::ostringstream os;
    bool first = true;
    auto term = [&](int c, const char* unit) {
        if (!c) return;
        if (!first && c > 0) os << "+";
        if (c == -1 && *unit)
            os << "-";
        else if (c != 1 || !*unit)
            os << c;
        os << unit;
        first = false;
    };
    term(a, "");
    term(n, "sigma");
    term(m, "lambda");
    if (first) os << "0";
    return os.str();
}

RODegree parse_degree(const std::string& text) {
    RODegree d;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    bool any = false;
    while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (any) {
            throw std::invalid_argument("degree: expected '+' or '-' at position " +
                                        std::to_string(i));
        }
        bool have_num = false;
        long val = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            val = 0;
            have_num = true;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                val = val * 10 + (text[i++] - '0');
        }
        skip_ws();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip_ws();
        }
        std::string unit;
        while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])))
            unit += text[i++];
        int coef = sign * int(val);
        if (unit.empty()) {
            if (!have_num) throw std::invalid_argument("degree: dangling sign");
            d.a += coef;
        } else if (unit == "sigma" || unit == "s") {
            d.n += coef;
        } else if (unit == "lambda" || unit == "l") {
            d.m += coef;
        } else if (unit == "rho") {
            d.a += coef;
            d.n += coef;
            d.m += coef;
        } else {
            throw std::invalid_argument("degree: unknown unit '" + unit + "'");
        }
        any = true;
        skip_ws();
    }
    if (!any) throw std::invalid_argument("degree: empty");
    return d;
}

MackeyF2 MackeyF2::make(std::size_t t, std::size_t m, std::size_t b) {
    MackeyF2 out;
    out.top_dim = t;
    out.mid_dim = m;
    out.bot_dim = b;
    out.res42 = GF2Matrix(m, t);
    out.res21 = GF2Matrix(b, m);
    out.tr24 = GF2Matrix(t, m);
    out.tr12 = GF2Matrix(m, b);
    out.weyl_mid = GF2Matrix::identity(m);
    out.weyl_bot = GF2Matrix::identity(b);
    return out;
}

ValidationReport validate(const MackeyF2& m) {
    ValidationReport rep;
    auto shape = [&](const GF2Matrix& mat, std::size_t r, std::size_t c, const char* name) {
        if (mat.rows() != r || mat.cols() != c) {
            rep.shape_ok = false;
            rep.violations.push_back(std::string("shape of ") + name);
        }
    };
    shape(m.res42, m.mid_dim, m.top_dim, "res42");
    shape(m.res21, m.bot_dim, m.mid_dim, "res21");
    shape(m.tr24, m.top_dim, m.mid_dim, "tr24");
    shape(m.tr12, m.mid_dim, m.bot_dim, "tr12");
    shape(m.weyl_mid, m.mid_dim, m.mid_dim, "weyl_mid");
    shape(m.weyl_bot, m.bot_dim, m.bot_dim, "weyl_bot");
    if (!rep.shape_ok) return rep;

    GF2Matrix im = GF2Matrix::identity(m.mid_dim);
    GF2Matrix ib = GF2Matrix::identity(m.bot_dim);
    if (!(m.weyl_mid * m.weyl_mid == im)) rep.violations.push_back("weyl_mid^2 != id");
    GF2Matrix w2 = m.weyl_bot * m.weyl_bot;
    if (!(w2 * w2 == ib)) rep.violations.push_back("weyl_bot^4 != id");
    if (!(m.res42 * m.tr24 == im + m.weyl_mid))
        rep.violations.push_back("res42*tr24 != 1 + weyl_mid");
    if (!(m.res21 * m.tr12 == ib + w2)) rep.violations.push_back("res21*tr12 != 1 + weyl_bot^2");
    if (!(m.res21 * m.weyl_mid == m.weyl_bot * m.res21))
        rep.violations.push_back("res21*weyl_mid != weyl_bot*res21");
    if (!(m.tr12 * m.weyl_bot == m.weyl_mid * m.tr12))
        rep.violations.push_back("tr12*weyl_bot != weyl_mid*tr12");
    if (!(m.weyl_mid * m.res42 == m.res42)) rep.violations.push_back("weyl_mid does not fix im res42");
    if (!(m.tr24 * m.weyl_mid == m.tr24)) rep.violations.push_back("tr24*weyl_mid != tr24");
    return rep;
}

ValidationReport validate(const C2MackeyF2& m) {
    ValidationReport rep;
    auto shape = [&](const GF2Matrix& mat, std::size_t r, std::size_t c, const char* name) {
        if (mat.rows() != r || mat.cols() != c) {
            rep.shape_ok = false;
            rep.violations.push_back(std::string("shape of ") + name);
        }
    };
    shape(m.res, m.bot_dim, m.top_dim, "res");
    shape(m.tr, m.top_dim, m.bot_dim, "tr");
    shape(m.weyl_bot, m.bot_dim, m.bot_dim, "weyl_bot");
    if (!rep.shape_ok) return rep;
    GF2Matrix ib = GF2Matrix::identity(m.bot_dim);
    if (!(m.weyl_bot * m.weyl_bot == ib)) rep.violations.push_back("weyl_bot^2 != id");
    if (!(m.res * m.tr == ib + m.weyl_bot)) rep.violations.push_back("res*tr != 1 + weyl");
    return rep;
}

const std::vector<NamedMF>& catalog_tags() {
    static const std::vector<NamedMF> tags = {
        NamedMF::k,      NamedMF::k_minus, NamedMF::box_k,   NamedMF::bar_box_k,
        NamedMF::L,      NamedMF::pstar_L, NamedMF::Q,       NamedMF::Q_sharp,
        NamedMF::L_sharp, NamedMF::k_minus_flat};
    return tags;
}

std::string tag_name(NamedMF tag) {
    switch (tag) {
        case NamedMF::k: return "k";
        case NamedMF::k_minus: return "k-";
        case NamedMF::box_k: return "<k>";
        case NamedMF::bar_box_k: return "<k>bar";
        case NamedMF::L: return "L";
        case NamedMF::pstar_L: return "p*L";
        case NamedMF::Q: return "Q";
        case NamedMF::Q_sharp: return "Q#";
        case NamedMF::L_sharp: return "L#";
        case NamedMF::k_minus_flat: return "k-flat";
    }
    return "?";
}

NamedMF tag_from_name(const std::string& name) {
    for (NamedMF t : catalog_tags())
        if (tag_name(t) == name) return t;
    throw std::invalid_argument("unknown Mackey functor tag: " + name);
}

MackeyF2 catalog(NamedMF tag) {
    auto one = [](int v) { return GF2Matrix::from_rows({{v}}); };
    MackeyF2 m;
    switch (tag) {
        case NamedMF::k:
            m = MackeyF2::make(1, 1, 1);
            m.res42 = one(1);
            m.res21 = one(1);
            break;
        case NamedMF::k_minus:
            m = MackeyF2::make(0, 1, 1);
            m.res21 = one(1);
            break;
        case NamedMF::box_k:
            m = MackeyF2::make(1, 0, 0);
            break;
        case NamedMF::bar_box_k:
            m = MackeyF2::make(0, 1, 0);
            break;
        case NamedMF::L:
            m = MackeyF2::make(1, 1, 1);
            m.tr24 = one(1);
            m.tr12 = one(1);
            break;
        case NamedMF::pstar_L:
            m = MackeyF2::make(1, 1, 1);
            m.tr24 = one(1);
            m.res21 = one(1);
            break;
        case NamedMF::Q:
            m = MackeyF2::make(1, 1, 0);
            m.tr24 = one(1);
            break;
        case NamedMF::Q_sharp:
            m = MackeyF2::make(1, 1, 0);
            m.res42 = one(1);
            break;
        case NamedMF::L_sharp:
            m = MackeyF2::make(1, 1, 1);
            m.res42 = one(1);
            m.tr12 = one(1);
            break;
        case NamedMF::k_minus_flat:
            m = MackeyF2::make(0, 1, 1);
            m.tr12 = one(1);
            break;
    }
    return m;
}

namespace {

GF2Matrix block_diag(const GF2Matrix& a, const GF2Matrix& b) {
    GF2Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.get(i, j)) out.set(i, j, true);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b.get(i, j)) out.set(a.rows() + i, a.cols() + j, true);
    return out;
}

}  // namespace

MackeyF2 direct_sum(const MackeyF2& a, const MackeyF2& b) {
    MackeyF2 out;
    out.top_dim = a.top_dim + b.top_dim;
    out.mid_dim = a.mid_dim + b.mid_dim;
    out.bot_dim = a.bot_dim + b.bot_dim;
    out.res42 = block_diag(a.res42, b.res42);
    out.res21 = block_diag(a.res21, b.res21);
    out.tr24 = block_diag(a.tr24, b.tr24);
    out.tr12 = block_diag(a.tr12, b.tr12);
    out.weyl_mid = block_diag(a.weyl_mid, b.weyl_mid);
    out.weyl_bot = block_diag(a.weyl_bot, b.weyl_bot);
    return out;
}

C2MackeyF2 restrict_to_C2(const MackeyF2& m) {
    C2MackeyF2 out;
    out.top_dim = m.mid_dim;
    out.bot_dim = m.bot_dim;
    out.res = m.res21;
    out.tr = m.tr12;
    out.weyl_bot = m.weyl_bot * m.weyl_bot;
    return out;
}

namespace {

std::size_t dim_fixed(const GF2Matrix& w) {
    return kernel_basis(w + GF2Matrix::identity(w.rows())).size();
}

std::size_t dim_intersection(const std::vector<GF2Vector>& a, const std::vector<GF2Vector>& b) {
    // dim(A) + dim(B) - dim(A+B)
    std::size_t ambient = !a.empty() ? a[0].size() : (!b.empty() ? b[0].size() : 0);
    GF2Rref ra(ambient), rb(ambient), rab(ambient);
    for (const auto& v : a) {
        ra.add(v);
        rab.add(v);
    }
    for (const auto& v : b) {
        rb.add(v);
        rab.add(v);
    }
    return ra.rank() + rb.rank() - rab.rank();
}

GF2Matrix cols_matrix(const std::vector<GF2Vector>& cols, std::size_t rows) {
    GF2Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

}  // namespace

Fingerprint fingerprint(const MackeyF2& m) {
    Fingerprint f;
    f.top = m.top_dim;
    f.mid = m.mid_dim;
    f.bot = m.bot_dim;
    f.r42 = rank(m.res42);
    f.r21 = rank(m.res21);
    f.t24 = rank(m.tr24);
    f.t12 = rank(m.tr12);
    f.wfix_mid = dim_fixed(m.weyl_mid);
    f.wfix_bot = dim_fixed(m.weyl_bot);
    f.r21r42 = rank(m.res21 * m.res42);
    f.t24t12 = rank(m.tr24 * m.tr12);
    f.im42_cap_im12 = dim_intersection(image_basis(m.res42), image_basis(m.tr12));
    auto ker21 = kernel_basis(m.res21);
    f.t24_on_ker21 = rank(m.tr24 * cols_matrix(ker21, m.mid_dim));
    // ker res21 ∩ ker tr24: kernel of the stacked map
    GF2Matrix stacked(m.bot_dim + m.top_dim, m.mid_dim);
    for (std::size_t i = 0; i < m.bot_dim; ++i)
        for (std::size_t j = 0; j < m.mid_dim; ++j)
            if (m.res21.get(i, j)) stacked.set(i, j, true);
    for (std::size_t i = 0; i < m.top_dim; ++i)
        for (std::size_t j = 0; j < m.mid_dim; ++j)
            if (m.tr24.get(i, j)) stacked.set(m.bot_dim + i, j, true);
    f.ker21_cap_ker24 = kernel_basis(stacked).size();
    f.ker12_lift = dim_intersection(kernel_basis(m.tr12), image_basis(m.res21.transposed()));
    return f;
}

std::string Fingerprint::str() const {
    std::ostringstream os;
    os << "(" << top << "," << mid << "," << bot << ";" << r42 << "," << r21 << "," << t24 << ","
       << t12 << ";" << wfix_mid << "," << wfix_bot << ";" << r21r42 << "," << t24t12 << ","
       << im42_cap_im12 << "," << t24_on_ker21 << "," << ker21_cap_ker24 << "," << ker12_lift
       << ")";
    return os.str();
}

std::map<NamedMF, std::size_t> Decomposition::counts() const {
    std::map<NamedMF, std::size_t> c;
    for (NamedMF t : pieces) c[t]++;
    return c;
}

std::string Decomposition::str() const {
    if (!identified) return "unidentified(" + reason + ")";
    if (pieces.empty()) return "0";
    std::ostringstream os;
    auto c = counts();
    bool first = true;
    for (NamedMF t : catalog_tags()) {
        auto it = c.find(t);
        if (it == c.end()) continue;
        if (!first) os << " + ";
        if (it->second > 1) os << it->second << "*";
        os << tag_name(t);
        first = false;
    }
    return os.str();
}

Decomposition decompose(const MackeyF2& m) {
    Decomposition out;
    auto rep = validate(m);
    if (!rep.ok()) {
        out.reason = "invalid functor";
        return out;
    }
    if (!m.weyl_mid.is_identity() || !m.weyl_bot.is_identity()) {
        out.reason = "nontrivial Weyl action";
        return out;
    }
    if (!(m.tr24 * m.res42).is_zero() || !(m.tr12 * m.res21).is_zero()) {
        out.reason = "tr after res nonzero";
        return out;
    }
    Fingerprint f = fingerprint(m);
    long n_k = long(f.r21r42);
    long n_L = long(f.t24t12);
    long n_Lsharp = long(f.im42_cap_im12);
    long n_Q = long(f.t24_on_ker21) - n_L;
    long n_pstarL = long(f.t24) - n_L - n_Q;
    long n_kminus = long(f.r21) - n_k - n_pstarL;
    long n_Qsharp = long(f.r42) - n_k - n_Lsharp;
    long n_kmf = long(f.t12) - n_L - n_Lsharp;
    long n_box = long(f.top) - n_k - n_L - n_pstarL - n_Q - n_Qsharp - n_Lsharp;
    long n_bar =
        long(f.mid) - (n_k + n_kminus + n_L + n_pstarL + n_Q + n_Qsharp + n_Lsharp + n_kmf);
    long counts[10] = {n_k,  n_kminus, n_box,    n_bar,    n_L,
                       n_pstarL, n_Q,      n_Qsharp, n_Lsharp, n_kmf};
    for (long c : counts)
        if (c < 0) {
            out.reason = "no catalog solution (negative count)";
            return out;
        }
    if (long(f.bot) != n_k + n_kminus + n_L + n_pstarL + n_Lsharp + n_kmf) {
        out.reason = "no catalog solution (bottom dimension)";
        return out;
    }
    std::vector<NamedMF> pieces;
    const auto& tags = catalog_tags();
    for (std::size_t i = 0; i < tags.size(); ++i)
        for (long c = 0; c < counts[i]; ++c) pieces.push_back(tags[i]);
    MackeyF2 sum = MackeyF2::zero();
    for (NamedMF t : pieces) sum = direct_sum(sum, catalog(t));
    if (!(fingerprint(sum) == f)) {
        out.reason = "candidate sum fingerprint mismatch";
        return out;
    }
    out.identified = true;
    out.pieces = std::move(pieces);
    return out;
}

namespace {

const std::vector<GF2Matrix>& invertibles(std::size_t n) {
    static std::vector<std::vector<GF2Matrix>> cache(4);
    if (n > 3) throw std::logic_error("invertibles: dimension too large");
    auto& v = cache[n];
    if (v.empty()) {
        std::size_t bits = n * n;
        for (std::size_t mask = 0; mask < (std::size_t(1) << bits); ++mask) {
            GF2Matrix m(n, n);
            for (std::size_t b = 0; b < bits; ++b)
                if ((mask >> b) & 1) m.set(b / n, b % n, true);
            if (rank(m) == n) v.push_back(m);
        }
        if (n == 0) v.push_back(GF2Matrix(0, 0));
    }
    return v;
}

bool iso_small(const MackeyF2& a, const MackeyF2& b) {
    for (const auto& at : invertibles(a.top_dim))
        for (const auto& am : invertibles(a.mid_dim)) {
            if (!(am * a.res42 == b.res42 * at)) continue;
            if (!(at * a.tr24 == b.tr24 * am)) continue;
            if (!(am * a.weyl_mid == b.weyl_mid * am)) continue;
            for (const auto& ab : invertibles(a.bot_dim)) {
                if (!(ab * a.res21 == b.res21 * am)) continue;
                if (!(am * a.tr12 == b.tr12 * ab)) continue;
                if (!(ab * a.weyl_bot == b.weyl_bot * ab)) continue;
                return true;
            }
        }
    return false;
}

}  // namespace

bool is_isomorphic(const MackeyF2& a, const MackeyF2& b) {
    if (!validate(a).ok() || !validate(b).ok())
        throw std::invalid_argument("is_isomorphic: invalid input");
    if (a.top_dim != b.top_dim || a.mid_dim != b.mid_dim || a.bot_dim != b.bot_dim) return false;
    if (!(fingerprint(a) == fingerprint(b))) return false;
    if (a.top_dim <= 3 && a.mid_dim <= 3 && a.bot_dim <= 3) return iso_small(a, b);
    auto da = decompose(a);
    auto db = decompose(b);
    if (da.identified && db.identified) return da.pieces == db.pieces;
    // Fingerprints agree; accept only when both peelings succeed.
    return false;
}

namespace {

nlohmann::json matrix_json(const GF2Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.get(i, j) ? 1 : 0);
        rows.push_back(row);
    }
    return rows;
}

GF2Matrix matrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols) {
    GF2Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c)
            if (j.at(i).at(c).get<int>() & 1) m.set(i, c, true);
    return m;
}

}  // namespace

nlohmann::json to_json(const MackeyF2& m) {
    nlohmann::json j;
    j["top_dim"] = m.top_dim;
    j["mid_dim"] = m.mid_dim;
    j["bot_dim"] = m.bot_dim;
    j["res42"] = matrix_json(m.res42);
    j["res21"] = matrix_json(m.res21);
    j["tr24"] = matrix_json(m.tr24);
    j["tr12"] = matrix_json(m.tr12);
    j["weyl_mid"] = matrix_json(m.weyl_mid);
    j["weyl_bot"] = matrix_json(m.weyl_bot);
    return j;
}

nlohmann::json to_json(const MackeyF2& m, const Decomposition& dec) {
    nlohmann::json j = to_json(m);
    if (dec.identified) {
        nlohmann::json tags = nlohmann::json::array();
        for (NamedMF t : dec.pieces) tags.push_back(tag_name(t));
        j["tags"] = tags;
    } else {
        j["tags"] = nullptr;
    }
    return j;
}

MackeyF2 mackey_from_json(const nlohmann::json& j) {
    MackeyF2 m;
    m.top_dim = j.at("top_dim").get<std::size_t>();
    m.mid_dim = j.at("mid_dim").get<std::size_t>();
    m.bot_dim = j.at("bot_dim").get<std::size_t>();
    m.res42 = matrix_from_json(j.at("res42"), m.mid_dim, m.top_dim);
    m.res21 = matrix_from_json(j.at("res21"), m.bot_dim, m.mid_dim);
    m.tr24 = matrix_from_json(j.at("tr24"), m.top_dim, m.mid_dim);
    m.tr12 = matrix_from_json(j.at("tr12"), m.mid_dim, m.bot_dim);
    m.weyl_mid = matrix_from_json(j.at("weyl_mid"), m.mid_dim, m.mid_dim);
    m.weyl_bot = matrix_from_json(j.at("weyl_bot"), m.bot_dim, m.bot_dim);
    return m;
}

}  // namespace roc4
