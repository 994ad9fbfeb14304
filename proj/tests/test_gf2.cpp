#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "roc4/gf2.hpp"

using namespace roc4;

namespace {

// Independent row-reduction oracle, kept deliberately naive.
std::size_t rank_oracle(std::vector<std::vector<int>> rows) {
    std::size_t r = rows.size();
    if (!r) return 0;
    std::size_t c = rows[0].size();
    std::size_t rk = 0;
    for (std::size_t col = 0; col < c && rk < r; ++col) {
        std::size_t piv = rk;
        while (piv < r && !rows[piv][col]) ++piv;
        if (piv == r) continue;
        std::swap(rows[piv], rows[rk]);
        for (std::size_t i = 0; i < r; ++i)
            if (i != rk && rows[i][col])
                for (std::size_t j = 0; j < c; ++j) rows[i][j] ^= rows[rk][j];
        ++rk;
    }
    return rk;
}

GF2Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    GF2Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (rng() & 1) m.set(i, j, true);
    return m;
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(rank(GF2Matrix::identity(2)) == 2);
    GF2Matrix ones = GF2Matrix::from_rows({{1, 1}, {1, 1}});
    CHECK(rank(ones) == 1);
}

TEST_CASE("rank matches brute-force oracle on random 6x6 matrices") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::vector<int>> rows(6, std::vector<int>(6));
        GF2Matrix m(6, 6);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                int v = int(rng() & 1);
                rows[i][j] = v;
                m.set(i, j, v);
            }
        CHECK(rank(m) == rank_oracle(rows));
    }
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(GF2Matrix::identity(3)).empty());
    CHECK(kernel_basis(GF2Matrix(3, 3)).size() == 3);
    GF2Matrix m = GF2Matrix::from_rows({{1, 1}, {0, 0}});
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0].get(0));
    CHECK(k[0].get(1));
}

TEST_CASE("rank-nullity and Mv = 0 on random matrices") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
        GF2Matrix m = random_matrix(rng, r, c);
        auto k = kernel_basis(m);
        CHECK(rank(m) + k.size() == c);
        for (const auto& v : k) CHECK(m.apply(v).is_zero());
    }
}

TEST_CASE("image basis") {
    auto im = image_basis(GF2Matrix::identity(2));
    REQUIRE(im.size() == 2);
    CHECK(im[0].get(0));
    CHECK(im[1].get(1));
    CHECK(image_basis(GF2Matrix(3, 3)).empty());
    GF2Matrix ones = GF2Matrix::from_rows({{1, 1}, {1, 1}});
    auto im2 = image_basis(ones);
    REQUIRE(im2.size() == 1);
    CHECK(im2[0].get(0));
    CHECK(im2[0].get(1));
}

TEST_CASE("solve basics and round trip") {
    GF2Vector b(2);
    b.set(0, true);
    auto x = solve(GF2Matrix::identity(2), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    CHECK(!solve(GF2Matrix(2, 2), b).has_value());

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
        GF2Matrix m = random_matrix(rng, r, c);
        GF2Vector x0(c);
        for (std::size_t j = 0; j < c; ++j)
            if (rng() & 1) x0.set(j, true);
        GF2Vector rhs = m.apply(x0);
        auto sol = solve(m, rhs);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == rhs);
    }
}

TEST_CASE("quotient map") {
    // V = F2^2, W = 0
    std::vector<GF2Vector> v2;
    for (int i = 0; i < 2; ++i) {
        GF2Vector e(2);
        e.set(std::size_t(i), true);
        v2.push_back(e);
    }
    auto q = quotient_map(v2, {});
    CHECK(q.quotient_dim == 2);
    CHECK(q.projection.is_identity());

    auto q2 = quotient_map(v2, v2);
    CHECK(q2.quotient_dim == 0);

    // V = F2^3, W = span{(1,1,0)}
    std::vector<GF2Vector> v3;
    for (int i = 0; i < 3; ++i) {
        GF2Vector e(3);
        e.set(std::size_t(i), true);
        v3.push_back(e);
    }
    GF2Vector w(3);
    w.set(0, true);
    w.set(1, true);
    auto q3 = quotient_map(v3, {w});
    CHECK(q3.quotient_dim == 2);
    // (1,1,0) has V-coordinates e0+e1; its projection must vanish
    GF2Vector coords(3);
    coords.set(0, true);
    coords.set(1, true);
    CHECK(q3.projection.apply(coords).is_zero());

    GF2Vector outside(3);
    outside.set(2, true);
    CHECK_THROWS(quotient_map({v3[0]}, {outside}));
}

TEST_CASE("surjectivity of quotient projection") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 4 + rng() % 4;
        std::vector<GF2Vector> v;
        for (int i = 0; i < 6; ++i) {
            GF2Vector x(n);
            for (std::size_t j = 0; j < n; ++j)
                if (rng() & 1) x.set(j, true);
            v.push_back(x);
        }
        std::vector<GF2Vector> w = {v[0], v[1]};
        auto q = quotient_map(v, w);
        CHECK(rank(q.projection) == q.quotient_dim);
    }
}
