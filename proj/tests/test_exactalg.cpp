#include "doctest.h"

#include "superinv/errors.hpp"
#include "superinv/exactalg.hpp"

#include <random>

using namespace superinv;

namespace {

QMatrix mat(const std::vector<QVector>& rows) { return QMatrix::from_rows(rows, rows.empty() ? 0 : rows[0].size()); }

QMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> val(-3, 3), zero(0, 2);
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = zero(rng) == 0 ? 0 : val(rng);
    return m;
}

}  // namespace

TEST_CASE("parse_rational") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-0/7")) == "0");
    CHECK(parse_rational(" -12 ") == -12);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("exact arithmetic is canonical") {
    Rational a(1, 3), b(1, 6);
    Rational s1 = a + b;
    Rational s2 = Rational(a.get_num() * b.get_den() + b.get_num() * a.get_den(), a.get_den() * b.get_den());
    s2.canonicalize();
    CHECK(s1 == s2);
    CHECK(to_string(s1) == to_string(s2));
    CHECK(s1.get_den() == 2);
}

TEST_CASE("rref examples") {
    auto id = rref(QMatrix::identity(2));
    CHECK(id.m == QMatrix::identity(2));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1});

    auto r = rref(mat({{1, 2}, {2, 4}}));
    CHECK(r.m == mat({{1, 2}, {0, 0}}));
    CHECK(r.pivots == std::vector<std::size_t>{0});

    auto p = rref(mat({{0, 1}, {1, 0}}));
    CHECK(p.m == QMatrix::identity(2));
    CHECK(p.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("kernel examples") {
    auto k1 = kernel_basis(mat({{1, 1}}));
    REQUIRE(k1.size() == 1);
    CHECK(k1[0] == QVector{-1, 1});

    CHECK(kernel_basis(QMatrix::identity(3)).empty());

    auto k2 = kernel_basis(mat({{1, 2}, {2, 4}}));
    REQUIRE(k2.size() == 1);
    CHECK(k2[0][0] == -2 * k2[0][1]);
    CHECK(k2[0][1] == 1);
}

TEST_CASE("solve") {
    auto x = solve(mat({{1, 2}, {1, 8}}), {0, 6});
    REQUIRE(x);
    CHECK(*x == QVector{-2, 1});
    CHECK_FALSE(solve(mat({{1, 1}, {1, 1}}), {0, 1}));
}

TEST_CASE("subspace intersection examples") {
    Subspace l = Subspace::span(2, {{1, 1}});
    CHECK(subspace_intersection({l, l}) == l);
    CHECK(subspace_intersection({Subspace::span(2, {{1, 0}}), Subspace::span(2, {{0, 1}})}).dim() == 0);
    CHECK(subspace_intersection({Subspace::whole(2), l}) == l);
    CHECK(Subspace::span(2, {{1, 0}, {0, 1}}) == Subspace::whole(2));
}

TEST_CASE("property: rref idempotent, rank-nullity, kernel annihilated") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
        QMatrix m = random_matrix(rng, r, c);
        auto once = rref(m);
        auto twice = rref(once.m);
        CHECK(once.m == twice.m);
        CHECK(once.pivots == twice.pivots);
        for (std::size_t i = 1; i < once.pivots.size(); ++i) CHECK(once.pivots[i - 1] < once.pivots[i]);
        auto ker = kernel_basis(m);
        CHECK(rank(m) + ker.size() == c);
        for (const auto& v : ker) {
            for (const auto& x : m.apply(v)) CHECK(x == 0);
        }
    }
}

TEST_CASE("property: intersection commutative and associative") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        auto rnd = [&] {
            std::vector<QVector> vs;
            const std::size_t count = 1 + rng() % 3;
            for (std::size_t i = 0; i < count; ++i) vs.push_back(random_matrix(rng, 1, 4).row(0));
            return Subspace::span(4, vs);
        };
        Subspace a = rnd(), b = rnd(), c = rnd();
        CHECK(subspace_intersection({a, b}) == subspace_intersection({b, a}));
        CHECK(subspace_intersection({subspace_intersection({a, b}), c}) ==
              subspace_intersection({a, subspace_intersection({b, c})}));
        Subspace ab = subspace_intersection({a, b});
        CHECK(a.contains(ab));
        CHECK(b.contains(ab));
    }
}
