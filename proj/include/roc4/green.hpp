#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "roc4/mackey.hpp"

namespace roc4 {

struct GreenError : std::runtime_error {
    explicit GreenError(const std::string& what) : std::runtime_error(what) {}
};

enum class Level { top, mid, bot };

std::string level_name(Level l);

// Canonical basis monomial of the top level. Exponents of a_sigma, u_sigma,
// a_lambda, u_lambda (negative = denominator) and an optional theta factor.
// Valid sign patterns:
//   theta = 0:  us,al,ul >= 0, as >= 0, not (as >= 2 and ul >= 1)        [polynomial]
//               us < 0:  ul >= 1, as in {0,1}, al >= 0                   [u_sigma quotients]
//               al < 0:  as >= 2, us >= 0, ul == 0                       [a_sigma^2/a_lambda tower]
//   theta = 1:  ul == 0, as <= 0, us <= 0, al free                       [theta tower]
//               ul == 0, as in {1,2}, us <= 0, al <= -1                  [x_{n,1} quotients]
//               ul <= -1, as in {1,2}, al <= -1, us free                 [x_{n,m>=2} / s quotients]
struct TopMono {
    int as = 0, us = 0, al = 0, ul = 0;
    bool theta = false;

    static bool valid(int as, int us, int al, int ul, bool theta);
    static std::optional<TopMono> make(int as, int us, int al, int ul, bool theta);
    RODegree degree() const;
    auto operator<=>(const TopMono&) const = default;
    std::string str() const;
    std::string tex() const;
};

// Middle level: exponents of u_sigma-bar (Laurent), a_lambda-bar, u_lambda-bar,
// sqrt(a_lambda-bar u_lambda-bar), and an optional v factor. After reduction of
// the square root by sq^2 = bal*bul, sq lies in {0,1} (v = 0) or {-1,0} (v = 1).
struct MidMono {
    int bus = 0, bal = 0, bul = 0, sq = 0;
    bool v = false;

    static std::optional<MidMono> make(int bus, int bal, int bul, int sq, bool v);
    RODegree degree() const;
    auto operator<=>(const MidMono&) const = default;
    std::string str() const;
    std::string tex() const;
};

// Bottom level: Laurent monomials in the restrictions of u_sigma, u_lambda.
struct BotMono {
    int bbs = 0, bbl = 0;

    RODegree degree() const;
    auto operator<=>(const BotMono&) const = default;
    std::string str() const;
    std::string tex() const;
};

// An F2 sum of canonical monomials of one level.
struct GreenElement {
    Level level = Level::top;
    std::vector<TopMono> t;  // sorted, unique
    std::vector<MidMono> m;
    std::vector<BotMono> b;

    static GreenElement zero(Level l);
    static GreenElement unit(Level l);
    static GreenElement of(const TopMono& x);
    static GreenElement of(const MidMono& x);
    static GreenElement of(const BotMono& x);

    bool is_zero() const { return t.empty() && m.empty() && b.empty(); }
    std::size_t term_count() const { return t.size() + m.size() + b.size(); }
    bool operator==(const GreenElement&) const = default;
    std::string str() const;
};

GreenElement add(const GreenElement& x, const GreenElement& y);
GreenElement mul(const GreenElement& x, const GreenElement& y);

// One level down (top->mid, mid->bot). Throws on bottom input.
GreenElement res(const GreenElement& x);
// One level up (mid->top, bot->mid). Throws on top input.
GreenElement tr(const GreenElement& x);

// Common degree of the monomials; nullopt for zero; throws on a mixed-degree set.
std::optional<RODegree> degree_of(const GreenElement& x);

// Derivation with beta(u_sigma) = a_sigma on theta-free monomials; throws on
// theta families.
GreenElement bockstein(const GreenElement& x);

enum class TateCorner { tilde, h, t };

struct CornerElement {
    TateCorner corner = TateCorner::h;
    std::vector<TopMono> terms;  // corner monomials; validity depends on the corner
    bool is_zero() const { return terms.empty(); }
    bool operator==(const CornerElement&) const = default;
    std::string str() const;
};

CornerElement localize(const GreenElement& x, TateCorner corner);

// Expression grammar over the fixed tokens (see README). Throws GreenError with
// a position on syntax errors and on sub-expressions not denoting ring elements.
GreenElement parse_green(const std::string& text);
GreenElement parse_green(const std::string& text, Level expect);
std::string to_string(const GreenElement& x);

// All canonical monomials in a homological RO(C4) degree.
std::vector<TopMono> top_monomials(RODegree d);
std::vector<MidMono> mid_monomials(RODegree d);
std::vector<BotMono> bot_monomials(RODegree d);

// ---- The C2 point ring k^{C2} in a_{sigma2}, u_{sigma2}, theta_{sigma2} ----

// Degree a + s*sigma_2 in RO(C2).
struct C2Degree {
    int a = 0, s = 0;
    bool operator==(const C2Degree&) const = default;
    auto operator<=>(const C2Degree&) const = default;
    std::string str() const;
};

struct C2Mono {
    int a2 = 0, u2 = 0;
    bool theta = false;
    static std::optional<C2Mono> make(int a2, int u2, bool theta);
    C2Degree degree() const;
    auto operator<=>(const C2Mono&) const = default;
    std::string str() const;
};

struct C2BotMono {
    int e = 0;  // bu2^e
    C2Degree degree() const { return {e, -e}; }
    auto operator<=>(const C2BotMono&) const = default;
    std::string str() const;
};

struct C2Element {
    Level level = Level::top;  // only top/bot are meaningful for C2
    std::vector<C2Mono> t;
    std::vector<C2BotMono> b;
    static C2Element zero(Level l);
    static C2Element of(const C2Mono& x);
    static C2Element of(const C2BotMono& x);
    bool is_zero() const { return t.empty() && b.empty(); }
    bool operator==(const C2Element&) const = default;
    std::string str() const;
};

C2Element c2_mul(const C2Element& x, const C2Element& y);
C2Element c2_res(const C2Element& x);
C2Element c2_tr(const C2Element& x);
C2Element c2_parse(const std::string& text);
std::vector<C2Mono> c2_monomials(C2Degree d);

// The C4 middle level is the C2 point ring with u_sigma-bar adjoined invertibly:
// every middle monomial factors as (C2 monomial) * bus^k.
struct MidToC2 {
    C2Mono c2;
    int bus_power = 0;
};
MidToC2 mid_to_c2(const MidMono& x);

}  // namespace roc4
