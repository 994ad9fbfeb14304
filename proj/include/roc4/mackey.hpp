#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "roc4/gf2.hpp"

#include <json.hpp>

namespace roc4 {

// A virtual real C4 representation a + n*sigma + m*lambda.
struct RODegree {
    int a = 0, n = 0, m = 0;

    friend RODegree operator+(RODegree x, RODegree y) { return {x.a + y.a, x.n + y.n, x.m + y.m}; }
    friend RODegree operator-(RODegree x, RODegree y) { return {x.a - y.a, x.n - y.n, x.m - y.m}; }
    RODegree operator-() const { return {-a, -n, -m}; }
    bool operator==(const RODegree&) const = default;
    auto operator<=>(const RODegree&) const = default;

    int topological_dim() const { return a + n + 2 * m; }
    std::string str() const;
};

inline constexpr RODegree kSigma{0, 1, 0};
inline constexpr RODegree kLambda{0, 0, 1};
inline constexpr RODegree kRho{1, 1, 1};

// "a+n*sigma+m*lambda" with sugar: sigma, lambda, rho, 2sigma, -lambda+3, ...
RODegree parse_degree(const std::string& text);

// Three-level C4 Mackey functor over F2.
//
// Matrix shapes (maps act on column vectors):
//   res42: mid x top     tr24: top x mid     weyl_mid: mid x mid
//   res21: bot x mid     tr12: mid x bot     weyl_bot: bot x bot
struct MackeyF2 {
    std::size_t top_dim = 0, mid_dim = 0, bot_dim = 0;
    GF2Matrix res42, res21, tr24, tr12, weyl_mid, weyl_bot;

    static MackeyF2 zero() { return make(0, 0, 0); }
    static MackeyF2 make(std::size_t t, std::size_t m, std::size_t b);
    bool operator==(const MackeyF2&) const = default;
};

struct C2MackeyF2 {
    std::size_t top_dim = 0, bot_dim = 0;
    GF2Matrix res, tr, weyl_bot;
    bool operator==(const C2MackeyF2&) const = default;
};

struct ValidationReport {
    bool shape_ok = true;
    std::vector<std::string> violations;
    bool ok() const { return shape_ok && violations.empty(); }
};

ValidationReport validate(const MackeyF2& m);
ValidationReport validate(const C2MackeyF2& m);

enum class NamedMF { k, k_minus, box_k, bar_box_k, L, pstar_L, Q, Q_sharp, L_sharp, k_minus_flat };

const std::vector<NamedMF>& catalog_tags();
MackeyF2 catalog(NamedMF tag);
std::string tag_name(NamedMF tag);
NamedMF tag_from_name(const std::string& name);

MackeyF2 direct_sum(const MackeyF2& a, const MackeyF2& b);
C2MackeyF2 restrict_to_C2(const MackeyF2& m);

// Linear-algebra invariants that separate all catalog direct sums.
struct Fingerprint {
    std::size_t top = 0, mid = 0, bot = 0;
    std::size_t r42 = 0, r21 = 0, t24 = 0, t12 = 0;
    std::size_t wfix_mid = 0, wfix_bot = 0;
    std::size_t r21r42 = 0, t24t12 = 0;
    std::size_t im42_cap_im12 = 0;   // dim(im res42 ∩ im tr12) in the middle level
    std::size_t t24_on_ker21 = 0;    // rank of tr24 restricted to ker res21
    std::size_t ker21_cap_ker24 = 0; // dim(ker res21 ∩ ker tr24)
    std::size_t ker12_lift = 0;      // dim of ker tr12 met by res21... see impl
    bool operator==(const Fingerprint&) const = default;
    std::string str() const;
};

Fingerprint fingerprint(const MackeyF2& m);

struct Decomposition {
    bool identified = false;
    std::vector<NamedMF> pieces;  // sorted by catalog order
    std::string reason;           // why unidentified, when applicable
    std::map<NamedMF, std::size_t> counts() const;
    std::string str() const;
    bool operator==(const Decomposition& o) const {
        return identified == o.identified && pieces == o.pieces;
    }
};

Decomposition decompose(const MackeyF2& m);

bool is_isomorphic(const MackeyF2& a, const MackeyF2& b);

nlohmann::json to_json(const MackeyF2& m);
nlohmann::json to_json(const MackeyF2& m, const Decomposition& dec);
MackeyF2 mackey_from_json(const nlohmann::json& j);

}  // namespace roc4
