#include "doctest.h"

#include "superinv/errors.hpp"
#include "superinv/poly.hpp"

#include <random>

using namespace superinv;

namespace {

VarTablePtr ed() { return make_vartable({{"e1", Block::epsilon}, {"d1", Block::delta}}); }

VarTablePtr five() {
    return make_vartable({{"e1", Block::epsilon},
                          {"e2", Block::epsilon},
                          {"e3", Block::epsilon},
                          {"d1", Block::delta},
                          {"d2", Block::delta}});
}

Poly random_poly(std::mt19937& rng, VarTablePtr vt, int max_deg, bool homogeneous) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    const int deg = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    Poly p(vt);
    const int terms = 1 + static_cast<int>(rng() % 6);
    for (int t = 0; t < terms; ++t) {
        Monomial m(vt->size(), 0);
        const int d = homogeneous ? deg : static_cast<int>(rng() % static_cast<unsigned>(deg + 1));
        for (int k = 0; k < d; ++k) m[rng() % vt->size()] += 1;
        Rational c(num(rng), den(rng));
        c.canonicalize();
        p.add_term(m, c);
    }
    return p;
}

QVector random_vector(std::mt19937& rng, std::size_t n) {
    QVector v(n);
    for (auto& x : v) x = static_cast<int>(rng() % 7) - 3;
    return v;
}

}  // namespace

TEST_CASE("arith examples") {
    auto vt = ed();
    Poly e = Poly::variable(vt, 0), d = Poly::variable(vt, 1);
    CHECK((e - d) * (e + d) == e * e - d * d);
    CHECK(arith(e - d, e + d, ArithKind::mul) == parse_poly("e1^2 - d1^2", vt));
    CHECK(e + Poly(vt) == e);
    CHECK(scale(e * d, Rational(3, 2)) == parse_poly("3/2*e1*d1", vt));
    CHECK(arith(e * d, Poly::constant(vt, Rational(3, 2)), ArithKind::scale) == parse_poly("3/2*e1*d1", vt));
    auto other = make_vartable({{"x", Block::epsilon}});
    CHECK_THROWS_AS(e + Poly::variable(other, 0), UsageError);
}

TEST_CASE("no stored zero terms") {
    auto vt = ed();
    Poly e = Poly::variable(vt, 0);
    Poly z = e - e;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK((e * Rational(0)).terms().empty());
}

TEST_CASE("directional derivative examples") {
    auto vt = ed();
    CHECK(directional_derivative(parse_poly("e1*d1", vt), {1, 1}) == parse_poly("e1 + d1", vt));
    CHECK(directional_derivative(parse_poly("e1^2 - d1^2", vt), {1, 1}) == parse_poly("2*e1 - 2*d1", vt));
    CHECK(directional_derivative(Poly::constant(vt, 5), {1, 1}).is_zero());
}

TEST_CASE("linear division examples") {
    auto vt = ed();
    const LinearForm l{1, -1};
    auto a = linear_division(parse_poly("e1^2", vt), l, 2);
    CHECK(a.pivot == 0);
    REQUIRE(a.r.size() == 2);
    CHECK(a.r[0] == parse_poly("d1^2", vt));
    CHECK(a.r[1] == parse_poly("2*d1", vt));
    CHECK(a.tail == Poly::constant(vt, 1));

    auto b = linear_division(parse_poly("e1^2 - d1^2", vt), l, 1);
    CHECK(b.r[0].is_zero());
    CHECK(divisible(parse_poly("e1^2 - d1^2", vt), l, 1));

    auto c = linear_division(parse_poly("d1^3", vt), l, 1);
    CHECK(c.r[0] == parse_poly("d1^3", vt));
    CHECK_FALSE(divisible(parse_poly("d1^3", vt), l, 1));

    CHECK_THROWS_AS(linear_division(parse_poly("e1", vt), {0, 0}, 1), UsageError);
}

TEST_CASE("substitute examples") {
    auto vt = ed();
    auto tt = make_vartable({{"t", Block::epsilon}});
    Poly t = Poly::variable(tt, 0);
    CHECK(substitute(parse_poly("e1^2 - d1^2", vt), {{"e1", t}, {"d1", t}}, tt).is_zero());
    CHECK(substitute(parse_poly("e1*d1", vt), {{"e1", t}, {"d1", t}}, tt) == t * t);

    auto ee = make_vartable({{"e1", Block::epsilon}, {"e2", Block::epsilon}});
    CHECK(substitute(parse_poly("e1*e2", ee), {{"e2", -Poly::variable(ee, 0)}}) == parse_poly("-e1^2", ee));
}

TEST_CASE("parse and format examples") {
    auto vt = ed();
    Poly p = parse_poly("e1^2 - d1^2", vt);
    CHECK(p.coeff({2, 0}) == 1);
    CHECK(p.coeff({0, 2}) == -1);
    CHECK(format_poly(p) == "e1^2 - d1^2");
    CHECK(parse_poly("3/2*e1*d1", vt).coeff({1, 1}) == Rational(3, 2));
    CHECK(format_poly(parse_poly(" d1 +  e1 ", vt)) == "e1 + d1");
    CHECK(format_poly(Poly(vt)) == "0");
    CHECK_THROWS_AS(parse_poly("e1 + q", vt), ParseError);
    try {
        parse_poly("e1 + q", vt);
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
    }
    CHECK_THROWS_AS(parse_poly("e1 +", vt), ParseError);
    CHECK_THROWS_AS(parse_poly("e1^", vt), ParseError);
    CHECK_THROWS_AS(parse_poly("2/0*e1", vt), ParseError);
}

TEST_CASE("format order is graded lexicographic") {
    auto vt = five();
    CHECK(format_poly(parse_poly("d2 + e1^2 + e3*d1 + e1*e2", vt)) == "e1^2 + e1*e2 + e3*d1 + d2");
}

TEST_CASE("property: division reassembles and matches substitution") {
    std::mt19937 rng(11);
    auto vt = five();
    for (int trial = 0; trial < 80; ++trial) {
        Poly p = random_poly(rng, vt, 5, true);
        LinearForm l = random_vector(rng, vt->size());
        if (is_zero(l)) continue;
        const int k = 1 + static_cast<int>(rng() % 3);
        auto div = linear_division(p, l, k);
        Poly lp = Poly::linear(vt, l);
        Poly back = div.tail * pow(lp, k);
        for (int i = 0; i < k; ++i) {
            CHECK(div.r[static_cast<std::size_t>(i)].degree_in(div.pivot) <= 0);
            back += div.r[static_cast<std::size_t>(i)] * pow(lp, i);
        }
        CHECK(back == p);

        // p in (l) iff p vanishes on l = 0.
        std::vector<Poly> images;
        for (std::size_t i = 0; i < vt->size(); ++i) images.push_back(Poly::variable(vt, i));
        Poly rest = Poly::linear(vt, l) - Poly::variable(vt, div.pivot) * l[div.pivot];
        images[div.pivot] = rest * Rational(-1 / l[div.pivot]);
        CHECK(divisible(p, l, 1) == substitute(p, images).is_zero());
        CHECK(divisible(p * lp, l, 1));
    }
}

TEST_CASE("property: derivative is linear and Leibniz") {
    std::mt19937 rng(12);
    auto vt = five();
    for (int trial = 0; trial < 60; ++trial) {
        Poly p = random_poly(rng, vt, 4, false), q = random_poly(rng, vt, 4, false);
        QVector h = random_vector(rng, 5), g = random_vector(rng, 5);
        QVector hg(5);
        for (std::size_t i = 0; i < 5; ++i) hg[i] = h[i] + 2 * g[i];
        CHECK(directional_derivative(p + q, h) == directional_derivative(p, h) + directional_derivative(q, h));
        CHECK(directional_derivative(p, hg) == directional_derivative(p, h) + directional_derivative(p, g) * Rational(2));
        CHECK(directional_derivative(p * q, h) ==
              directional_derivative(p, h) * q + p * directional_derivative(q, h));
        Poly hom = random_poly(rng, vt, 5, true);
        if (hom.degree() > 0) {
            Poly dh = directional_derivative(hom, h);
            CHECK((dh.is_zero() || dh.degree() == hom.degree() - 1));
        }
    }
}

TEST_CASE("property: parse inverts format") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        auto vt = five();
        Poly p = random_poly(rng, vt, 6, false);
        CHECK(parse_poly(format_poly(p), vt) == p);
    }
}
