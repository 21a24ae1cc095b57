#include "doctest.h"

#include "superinv/chars.hpp"
#include "superinv/errors.hpp"
#include "superinv/membership.hpp"

#include <random>

using namespace superinv;

namespace {

Poly phi_pow(int k) { return pow(Poly::variable(phi_table(), 0), k); }

Rational factorial(int k) {
    Rational r(1);
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

}  // namespace

TEST_CASE("exp_weight examples") {
    auto vt = make_vartable({{"e1", Block::epsilon}, {"e2", Block::epsilon}});
    CHECK(exp_weight({0, 0}, vt, 4).body() == Poly::constant(vt, 1));
    CHECK(exp_weight({1, 0}, vt, 2).body() == parse_poly("1 + e1 + 1/2*e1^2", vt));
    auto one = exp_weight({2, -1}, vt, 6) * exp_weight({-2, 1}, vt, 6);
    CHECK(one.body() == Poly::constant(vt, 1));
    CHECK(one.cutoff() == 6);
}

TEST_CASE("truncation") {
    auto vt = phi_table();
    TruncSeries a(parse_poly("1 + p + p^2 + p^3", vt), 2);
    CHECK(a.body() == parse_poly("1 + p + p^2", vt));
    TruncSeries b(parse_poly("p", vt), 5);
    CHECK((a * b).cutoff() == 2);
    CHECK((a * b).body() == parse_poly("p + p^2", vt));
    CHECK(TruncSeries(parse_poly("p^2 + p^4", vt), 6).lowest() == parse_poly("p^2", vt));
}

TEST_CASE("solver examples") {
    CHECK(sinh_solver(1, {0, 1}) == QVector{-2, 1});
    CHECK(sinh_solver(1, {1, 3}) == QVector{Rational(-1, 4), Rational(1, 8)});
    CHECK(sinh_solver(0, {0}) == QVector{1});
    CHECK(cosh_solver(0, {0}) == QVector{1});
    CHECK(cosh_solver(1, {1, 2}) == QVector{Rational(-2, 3), Rational(2, 3)});
    CHECK_THROWS_AS(sinh_solver(1, {2, 2}), UsageError);
    CHECK_THROWS_AS(cosh_solver(1, {1, 1}), UsageError);
    CHECK_THROWS_AS(sinh_solver(2, {0, 1}), UsageError);
    CHECK_THROWS_AS(sinh_solver(1, {-1, 1}), UsageError);
}

TEST_CASE("sl2 characters") {
    auto vt = phi_table();
    CHECK(schur_char_sl2(1, 2).body() == parse_poly("2 + p^2", vt));
    CHECK(schur_char_sl2(0, 4).body() == Poly::constant(vt, 1));
    TruncSeries adj = exp_weight({2}, vt, 6) + exp_weight({0}, vt, 6) + exp_weight({-2}, vt, 6);
    CHECK(schur_char_sl2(2, 6) == adj);
}

TEST_CASE("gl characters") {
    auto vt = make_vartable({{"e1", Block::epsilon}, {"e2", Block::epsilon}, {"e3", Block::epsilon}});
    CHECK(schur_char_gl({1, 0}, vt, 5) == exp_weight({1, 0, 0}, vt, 5) + exp_weight({0, 1, 0}, vt, 5));
    // (1,1,0): the three weights e_i + e_j.
    CHECK(schur_char_gl({1, 1, 0}, vt, 4) ==
          exp_weight({1, 1, 0}, vt, 4) + exp_weight({1, 0, 1}, vt, 4) + exp_weight({0, 1, 1}, vt, 4));
    // (2,1,0) has dimension 8: the constant term counts weights with multiplicity.
    CHECK(schur_char_gl({2, 1, 0}, vt, 3).component(0) == Poly::constant(vt, 8));
    CHECK(schur_char_gl({2, 2, 1}, vt, 0).component(0) == Poly::constant(vt, 3));
}

TEST_CASE("character certificates for vect(0|2)") {
    RootDatum d = build("vect(0|2)");
    auto c1 = character_certificate(d, Poly::constant(d.vt, 1), 2);
    CHECK(c1.lowest == d.parse("e1*e2"));
    auto c2 = character_certificate(d, d.parse("e1 + e2"), 2);
    CHECK(c2.lowest == d.parse("e1^2*e2 + e1*e2^2"));
    CHECK_FALSE(c2.coefficients.empty());
    CHECK_THROWS_AS(character_certificate(d, d.parse("e1"), 2), ContractViolation);
    CHECK_THROWS_AS(character_certificate(d, d.parse("e1^2 + e2^2"), 1), ContractViolation);
    CHECK_THROWS_AS(character_certificate(build("gl(1|1)"), Poly::constant(build("gl(1|1)").vt, 1), 2),
                    ContractViolation);
    for (const char* f : {"1", "e1 + e2", "e1^2 + e2^2", "e1*e2"}) {
        CAPTURE(f);
        auto c = character_certificate(d, d.parse(f), 4);
        CHECK(in_I(c.lowest, d).ok);
    }
}

TEST_CASE("character certificates for vect(0|3)") {
    RootDatum d = build("vect(0|3)");
    auto c = character_certificate(d, d.parse("e1 + e2 + e3"), 2);
    CHECK(c.lowest == d.parse("e1*e2*e3") * d.parse("e1 + e2 + e3"));
    CHECK(in_I(c.lowest, d).ok);
}

TEST_CASE("property: solver combinations have the stated Taylor expansion") {
    const std::vector<std::vector<std::vector<long>>> lists = {{{0}, {1}, {4}},
                                                               {{0, 1}, {1, 3}, {2, 5}},
                                                               {{0, 1, 2}, {1, 2, 4}, {0, 3, 7}},
                                                               {{0, 1, 2, 3}, {1, 2, 3, 5}, {2, 4, 6, 8}}};
    for (int k = 0; k <= 3; ++k)
        for (const auto& n : lists[static_cast<std::size_t>(k)]) {
            CAPTURE(k);
            const int N = 2 * k + 3;
            std::vector<long> a;
            for (long x : n) a.push_back(x + 1);
            TruncSeries s = sinh_combination(sinh_solver(k, n), a, N);
            for (int j = 0; j < 2 * k + 1; ++j) CHECK(s.component(j).is_zero());
            CHECK(s.component(2 * k + 1) == phi_pow(2 * k + 1));

            TruncSeries c = cosh_combination(cosh_solver(k, n), n, N);
            for (int j = 0; j < 2 * k; ++j) CHECK(c.component(j).is_zero());
            CHECK(c.component(2 * k) == phi_pow(2 * k));
        }
    // the displayed normalization: sum c_i (n_i + 1)^{2k+1} = (2k+1)!
    QVector c = sinh_solver(2, {0, 2, 5});
    Rational lead = c[0] * 1 + c[1] * 243 + c[2] * 7776;
    CHECK(lead == factorial(5));
}

TEST_CASE("property: Weyl character identity and exp homomorphism") {
    auto vt = phi_table();
    for (int N = 1; N <= 8; ++N)
        for (int n = 0; n <= 5; ++n) {
            TruncSeries lhs = schur_char_sl2(n, N) * (exp_weight({1}, vt, N) - exp_weight({-1}, vt, N));
            TruncSeries rhs = exp_weight({n + 1}, vt, N) - exp_weight({-(n + 1)}, vt, N);
            CHECK(lhs == rhs);
        }
    std::mt19937 rng(9);
    auto three = make_vartable({{"e1", Block::epsilon}, {"e2", Block::epsilon}, {"d1", Block::delta}});
    for (int trial = 0; trial < 20; ++trial) {
        LinearForm l(3), m(3), lm(3);
        for (std::size_t i = 0; i < 3; ++i) {
            l[i] = Rational(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 2));
            l[i].canonicalize();
            m[i] = static_cast<int>(rng() % 5) - 2;
            lm[i] = l[i] + m[i];
        }
        CHECK(exp_weight(lm, three, 5) == exp_weight(l, three, 5) * exp_weight(m, three, 5));
    }
}
