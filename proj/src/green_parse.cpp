#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>

#include "roc4/green.hpp"

namespace roc4 {

namespace {

std::string exp_str(const std::string& tok, int e) {
    if (e == 1) return tok;
    return tok + "^" + std::to_string(e);
}

std::string join_factors(const std::vector<std::string>& num,
                         const std::vector<std::string>& den) {
    std::string n;
    if (num.empty())
        n = "1";
    else
        for (std::size_t i = 0; i < num.size(); ++i) n += (i ? "*" : "") + num[i];
    if (den.empty()) return n;
    std::string d;
    for (std::size_t i = 0; i < den.size(); ++i) d += (i ? "*" : "") + den[i];
    if (den.size() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

void push_pow(std::vector<std::string>& num, std::vector<std::string>& den, const std::string& tok,
              int e) {
    if (e > 0) num.push_back(exp_str(tok, e));
    if (e < 0) den.push_back(exp_str(tok, -e));
}

std::string tex_pow(const std::string& tok, int e) {
    if (e == 1) return tok;
    return tok + "^{" + std::to_string(e) + "}";
}

std::string tex_frac(const std::vector<std::string>& num, const std::vector<std::string>& den) {
    std::string n;
    if (num.empty())
        n = "1";
    else
        for (const auto& s : num) n += s;
    if (den.empty()) return n;
    std::string d;
    for (const auto& s : den) d += s;
    return "\\frac{" + n + "}{" + d + "}";
}

}  // namespace

std::string TopMono::str() const {
    std::vector<std::string> num, den;
    if (!theta) {
        push_pow(num, den, "as", as);
        push_pow(num, den, "us", us);
        push_pow(num, den, "al", al);
        push_pow(num, den, "ul", ul);
        return join_factors(num, den);
    }
    if (ul == 0 && as <= 0 && us <= 0) {  // theta tower
        num.push_back("th");
        push_pow(num, den, "al", al);
        push_pow(num, den, "as", as);
        push_pow(num, den, "us", us);
        return join_factors(num, den);
    }
    // x-family: x[n,m] with n = -us, m = 1 - ul, over as^{2-as} al^{-al-1}
    num.push_back("x[" + std::to_string(-us) + "," + std::to_string(1 - ul) + "]");
    if (as == 1) den.push_back("as");
    if (al < -1) den.push_back(exp_str("al", -al - 1));
    return join_factors(num, den);
}

std::string TopMono::tex() const {
    std::vector<std::string> num, den;
    auto put = [&](const std::string& t, int e) {
        if (e > 0) num.push_back(tex_pow(t, e));
        if (e < 0) den.push_back(tex_pow(t, -e));
    };
    if (!theta) {
        put("a_\\sigma", as);
        put("u_\\sigma", us);
        put("a_\\lambda", al);
        put("u_\\lambda", ul);
        return tex_frac(num, den);
    }
    if (ul == 0 && as <= 0 && us <= 0) {
        num.push_back("\\theta");
        put("a_\\lambda", al);
        put("a_\\sigma", as);
        put("u_\\sigma", us);
        return tex_frac(num, den);
    }
    num.push_back("x_{" + std::to_string(-us) + "," + std::to_string(1 - ul) + "}");
    if (as == 1) den.push_back("a_\\sigma");
    if (al < -1) den.push_back(tex_pow("a_\\lambda", -al - 1));
    return tex_frac(num, den);
}

std::string MidMono::str() const {
    std::vector<std::string> num, den;
    if (v) num.push_back("v");
    push_pow(num, den, "bus", bus);
    push_pow(num, den, "bal", bal);
    push_pow(num, den, "bul", bul);
    push_pow(num, den, "sq", sq);
    return join_factors(num, den);
}

std::string MidMono::tex() const {
    std::vector<std::string> num, den;
    auto put = [&](const std::string& t, int e) {
        if (e > 0) num.push_back(tex_pow(t, e));
        if (e < 0) den.push_back(tex_pow(t, -e));
    };
    if (v) num.push_back("v");
    put("\\bar u_\\sigma", bus);
    put("\\bar a_\\lambda", bal);
    put("\\bar u_\\lambda", bul);
    put("\\sqrt{\\bar a_\\lambda\\bar u_\\lambda}", sq);
    return tex_frac(num, den);
}

std::string BotMono::str() const {
    std::vector<std::string> num, den;
    push_pow(num, den, "bbs", bbs);
    push_pow(num, den, "bbl", bbl);
    return join_factors(num, den);
}

std::string BotMono::tex() const {
    std::vector<std::string> num, den;
    auto put = [&](const std::string& t, int e) {
        if (e > 0) num.push_back(tex_pow(t, e));
        if (e < 0) den.push_back(tex_pow(t, -e));
    };
    put("\\bar{\\bar u}_\\sigma", bbs);
    put("\\bar{\\bar u}_\\lambda", bbl);
    return tex_frac(num, den);
}

std::string GreenElement::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& s) {
        if (!first) os << " + ";
        os << s;
        first = false;
    };
    for (const auto& z : t) emit(z.str());
    for (const auto& z : m) emit(z.str());
    for (const auto& z : b) emit(z.str());
    return os.str();
}

std::string to_string(const GreenElement& x) { return x.str(); }

std::string CornerElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i) os << (i ? " + " : "") << terms[i].str();
    return os.str();
}

std::string C2Mono::str() const {
    std::vector<std::string> num, den;
    if (theta) num.push_back("th2");
    push_pow(num, den, "a2", a2);
    push_pow(num, den, "u2", u2);
    return join_factors(num, den);
}

std::string C2BotMono::str() const {
    std::vector<std::string> num, den;
    push_pow(num, den, "bu2", e);
    return join_factors(num, den);
}

std::string C2Element::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& z : t) {
        os << (first ? "" : " + ") << z.str();
        first = false;
    }
    for (const auto& z : b) {
        os << (first ? "" : " + ") << z.str();
        first = false;
    }
    return os.str();
}

// ------------------------------ parsing ------------------------------

namespace {

struct RawMono {
    // raw exponents before classification; theta counts with multiplicity
    int as = 0, us = 0, al = 0, ul = 0, theta = 0;
};

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip();
        return pos >= s.size();
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw GreenError("parse error at position " + std::to_string(pos) + ": expected '" +
                             c + "'");
    }
    std::string ident() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos]))))
            ++pos;
        return s.substr(start, pos - start);
    }
    int integer() {
        skip();
        int sign = 1;
        if (accept('-')) sign = -1;
        skip();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw GreenError("parse error at position " + std::to_string(pos) +
                             ": expected integer");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return int(sign * v);
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw GreenError("parse error at position " + std::to_string(pos) + ": " + msg);
    }
};

std::optional<Level> token_level(const std::string& tok) {
    if (tok == "as" || tok == "us" || tok == "al" || tok == "ul" || tok == "th" || tok == "s" ||
        tok == "x")
        return Level::top;
    if (tok == "bal" || tok == "bul" || tok == "bus" || tok == "sq" || tok == "v")
        return Level::mid;
    if (tok == "bbs" || tok == "bbl") return Level::bot;
    return std::nullopt;
}

struct GreenParser {
    Lexer lex;
    Level level;

    GreenElement element_of(const TopMono& x) { return GreenElement::of(x); }

    GreenElement token_value(const std::string& tok) {
        auto tl = token_level(tok);
        if (!tl) lex.fail("unknown token '" + tok + "'");
        if (*tl != level) lex.fail("token '" + tok + "' does not live on the " +
                                   level_name(level) + " level");
        switch (level) {
            case Level::top: {
                if (tok == "as") return GreenElement::of(TopMono{1, 0, 0, 0, false});
                if (tok == "us") return GreenElement::of(TopMono{0, 1, 0, 0, false});
                if (tok == "al") return GreenElement::of(TopMono{0, 0, 1, 0, false});
                if (tok == "ul") return GreenElement::of(TopMono{0, 0, 0, 1, false});
                if (tok == "th") return GreenElement::of(TopMono{0, 0, 0, 0, true});
                if (tok == "s") return GreenElement::of(TopMono{1, 1, -1, -1, true});
                // x[n,m]
                lex.expect('[');
                int n = lex.integer();
                lex.expect(',');
                int m = lex.integer();
                lex.expect(']');
                auto p = TopMono::make(2, -n, -1, -(m - 1), true);
                if (!p)
                    lex.fail("x[" + std::to_string(n) + "," + std::to_string(m) +
                             "] is not in the ring");
                return GreenElement::of(*p);
            }
            case Level::mid: {
                if (tok == "bus") return GreenElement::of(MidMono{1, 0, 0, 0, false});
                if (tok == "bal") return GreenElement::of(MidMono{0, 1, 0, 0, false});
                if (tok == "bul") return GreenElement::of(MidMono{0, 0, 1, 0, false});
                if (tok == "sq") return GreenElement::of(MidMono{0, 0, 0, 1, false});
                return GreenElement::of(MidMono{0, 0, 0, 0, true});  // v
            }
            case Level::bot: {
                if (tok == "bbs") return GreenElement::of(BotMono{1, 0});
                return GreenElement::of(BotMono{0, 1});
            }
        }
        lex.fail("unreachable");
    }

    GreenElement primary() {
        if (lex.accept('(')) {
            GreenElement e = expr();
            lex.expect(')');
            return e;
        }
        char c = lex.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int v = lex.integer();
            if (v == 0) return GreenElement::zero(level);
            if (v == 1) return GreenElement::unit(level);
            lex.fail("numeric literals other than 0 and 1 are not ring elements");
        }
        std::string tok = lex.ident();
        if (tok.empty()) lex.fail("expected a monomial token");
        return token_value(tok);
    }

    // x / y for y a single monomial; any invalid quotient monomial is an error.
    GreenElement divide(const GreenElement& x, const GreenElement& y) {
        if (y.term_count() != 1) lex.fail("divisor must be a single monomial");
        GreenElement out = GreenElement::zero(level);
        switch (level) {
            case Level::top: {
                const TopMono& d = y.t[0];
                if (d.theta) lex.fail("cannot divide by a theta class");
                for (const auto& z : x.t) {
                    auto q = TopMono::make(z.as - d.as, z.us - d.us, z.al - d.al, z.ul - d.ul,
                                           z.theta);
                    if (!q) lex.fail("quotient " + z.str() + "/" + d.str() + " is not in the ring");
                    out = add(out, GreenElement::of(*q));
                }
                break;
            }
            case Level::mid: {
                const MidMono& d = y.m[0];
                if (d.v) lex.fail("cannot divide by a v class");
                for (const auto& z : x.m) {
                    auto q = MidMono::make(z.bus - d.bus, z.bal - d.bal, z.bul - d.bul,
                                           z.sq - d.sq, z.v);
                    if (!q) lex.fail("quotient " + z.str() + "/" + d.str() + " is not in the ring");
                    out = add(out, GreenElement::of(*q));
                }
                break;
            }
            case Level::bot: {
                const BotMono& d = y.b[0];
                for (const auto& z : x.b)
                    out = add(out, GreenElement::of(BotMono{z.bbs - d.bbs, z.bbl - d.bbl}));
                break;
            }
        }
        return out;
    }

    GreenElement power(const GreenElement& x, int e) {
        if (e == 0) return GreenElement::unit(level);
        GreenElement base = x;
        bool invert = e < 0;
        if (invert) e = -e;
        GreenElement acc = GreenElement::unit(level);
        for (int i = 0; i < e; ++i) acc = invert ? divide(acc, base) : mul(acc, base);
        return acc;
    }

    GreenElement factor() {
        GreenElement p = primary();
        if (lex.accept('^')) {
            int e = lex.integer();
            p = power(p, e);
        }
        return p;
    }

    GreenElement term() {
        GreenElement v = factor();
        for (;;) {
            if (lex.accept('*'))
                v = mul(v, factor());
            else if (lex.accept('/'))
                v = divide(v, factor());
            else
                return v;
        }
    }

    GreenElement expr() {
        GreenElement v = term();
        while (lex.accept('+')) v = add(v, term());
        return v;
    }
};

std::optional<Level> scan_level(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isalpha(static_cast<unsigned char>(text[i]))) {
            std::size_t start = i;
            while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
            if (auto l = token_level(text.substr(start, i - start))) return l;
        } else {
            ++i;
        }
    }
    return std::nullopt;
}

}  // namespace

GreenElement parse_green(const std::string& text, Level expect) {
    GreenParser p{Lexer{text}, expect};
    GreenElement e = p.expr();
    if (!p.lex.eof()) p.lex.fail("trailing input");
    return e;
}

GreenElement parse_green(const std::string& text) {
    Level l = scan_level(text).value_or(Level::top);
    return parse_green(text, l);
}

C2Element c2_parse(const std::string& text) {
    // Tiny grammar over a2, u2, th2 (point ring) and bu2 (bottom level).
    Lexer lex{text};
    bool bottom = text.find("bu2") != std::string::npos;
    Level lvl = bottom ? Level::bot : Level::top;

    struct P {
        Lexer& lex;
        Level lvl;

        C2Element primary() {
            if (lex.accept('(')) {
                C2Element e = expr();
                lex.expect(')');
                return e;
            }
            char c = lex.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                int v = lex.integer();
                if (v == 0) return C2Element::zero(lvl);
                if (v == 1)
                    return lvl == Level::top ? C2Element::of(C2Mono{})
                                             : C2Element::of(C2BotMono{});
                lex.fail("numeric literals other than 0 and 1 are not ring elements");
            }
            std::string tok = lex.ident();
            if (tok == "a2" && lvl == Level::top) return C2Element::of(C2Mono{1, 0, false});
            if (tok == "u2" && lvl == Level::top) return C2Element::of(C2Mono{0, 1, false});
            if (tok == "th2" && lvl == Level::top) return C2Element::of(C2Mono{0, 0, true});
            if (tok == "bu2" && lvl == Level::bot) return C2Element::of(C2BotMono{1});
            lex.fail("unknown token '" + tok + "'");
        }

        C2Element divide(const C2Element& x, const C2Element& y) {
            if (lvl == Level::bot) {
                if (y.b.size() != 1) lex.fail("divisor must be a single monomial");
                C2Element out = C2Element::zero(lvl);
                for (const auto& z : x.b) {
                    C2BotMono q{z.e - y.b[0].e};
                    auto it = std::lower_bound(out.b.begin(), out.b.end(), q);
                    if (it != out.b.end() && *it == q)
                        out.b.erase(it);
                    else
                        out.b.insert(it, q);
                }
                return out;
            }
            if (y.t.size() != 1 || y.t[0].theta) lex.fail("bad divisor");
            C2Element out = C2Element::zero(lvl);
            for (const auto& z : x.t) {
                auto q = C2Mono::make(z.a2 - y.t[0].a2, z.u2 - y.t[0].u2, z.theta);
                if (!q) lex.fail("quotient not in the ring");
                auto it = std::lower_bound(out.t.begin(), out.t.end(), *q);
                if (it != out.t.end() && *it == *q)
                    out.t.erase(it);
                else
                    out.t.insert(it, *q);
            }
            return out;
        }

        C2Element power(const C2Element& x, int e) {
            C2Element acc = lvl == Level::top ? C2Element::of(C2Mono{})
                                              : C2Element::of(C2BotMono{});
            bool inv = e < 0;
            if (inv) e = -e;
            for (int i = 0; i < e; ++i) acc = inv ? divide(acc, x) : c2_mul(acc, x);
            return acc;
        }

        C2Element factor() {
            C2Element p = primary();
            if (lex.accept('^')) p = power(p, lex.integer());
            return p;
        }

        C2Element term() {
            C2Element v = factor();
            for (;;) {
                if (lex.accept('*'))
                    v = c2_mul(v, factor());
                else if (lex.accept('/'))
                    v = divide(v, factor());
                else
                    return v;
            }
        }

        C2Element expr() {
            C2Element v = term();
            while (lex.accept('+')) {
                C2Element w = term();
                // F2 addition
                C2Element out = C2Element::zero(lvl);
                out.t = v.t;
                out.b = v.b;
                for (const auto& z : w.t) {
                    auto it = std::lower_bound(out.t.begin(), out.t.end(), z);
                    if (it != out.t.end() && *it == z)
                        out.t.erase(it);
                    else
                        out.t.insert(it, z);
                }
                for (const auto& z : w.b) {
                    auto it = std::lower_bound(out.b.begin(), out.b.end(), z);
                    if (it != out.b.end() && *it == z)
                        out.b.erase(it);
                    else
                        out.b.insert(it, z);
                }
                v = out;
            }
            return v;
        }
    };

    P p{lex, lvl};
    C2Element e = p.expr();
    if (!p.lex.eof()) p.lex.fail("trailing input");
    return e;
}

}  // namespace roc4
