#include "doctest.h"

#include "superinv/errors.hpp"
#include "superinv/weyl.hpp"

#include <random>
#include <set>

using namespace superinv;

namespace {

Poly random_poly(std::mt19937& rng, VarTablePtr vt, int deg) {
    Poly p(vt);
    const int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        Monomial m(vt->size(), 0);
        for (int k = 0; k < deg; ++k) m[rng() % vt->size()] += 1;
        p.add_term(m, Rational(static_cast<int>(rng() % 11) - 5));
    }
    return p;
}

}  // namespace

TEST_CASE("group orders") {
    CHECK(enumerate(build("gl(2|1)")).size() == 2);
    CHECK(enumerate(build("gl(2|2)")).size() == 4);
    CHECK(enumerate(build("osp_alpha(4|2,alpha=2)")).size() == 8);
    CHECK(enumerate(build("ag2")).size() == 24);
    CHECK(enumerate(build("ab3")).size() == 96);
    CHECK(enumerate(build("pe(3)")).size() == 6);
    CHECK(enumerate(build("vect(0|3)")).size() == 6);
    CHECK(enumerate(build("osp(5|4)")).size() == 8 * 8);
    for (const char* s : {"gl(3|2)", "osp(3|2)", "ag2", "ab3", "spe(4)", "svect(0|4)"}) {
        CAPTURE(s);
        RootDatum d = build(s);
        CHECK(enumerate(d).size() == d.weyl_order);
    }
    CHECK_THROWS_AS(enumerate(build("ab3"), 10), EnumerationError);
}

TEST_CASE("identity first, all distinct") {
    RootDatum d = build("ag2");
    auto g = enumerate(d);
    CHECK(g.front().matrix == IntMatrix::identity(d.dim()));
    std::set<IntMatrix> seen;
    for (const auto& w : g) seen.insert(w.matrix);
    CHECK(seen.size() == g.size());
}

TEST_CASE("act examples") {
    RootDatum d = build("gl(2|1)");
    const WeylElement s{d.weyl_gens[0]};
    CHECK(act(s, d.parse("e1")) == d.parse("e2"));
    CHECK(act(s, d.parse("e1^2*d1 + 3*e2")) == d.parse("e2^2*d1 + 3*e1"));
    CHECK(act(s, d.parse("e1 + e2")) == d.parse("e1 + e2"));
    CHECK(is_signed_permutation(s.matrix));
    CHECK(is_invariant(d, d.parse("e1*e2 + d1^2")));
    CHECK_FALSE(is_invariant(d, d.parse("e1")));

    RootDatum o = build("osp(5|4)");
    CHECK(is_invariant(o, o.parse("e1^2 + e2^2")));
    CHECK_FALSE(is_invariant(o, o.parse("e1 + e2")));
    for (const auto& g : o.weyl_gens) CHECK(is_signed_permutation(g));
}

TEST_CASE("invariant basis dimensions") {
    CHECK(invariant_basis(build("gl(2|1)"), 2).dim() == 4);
    for (int deg = 0; deg <= 5; ++deg) CHECK(invariant_basis(build("gl(1|1)"), deg).dim() == std::size_t(deg + 1));
    RootDatum v = build("vect(0|2)");
    auto b = invariant_basis(v, 2);
    CHECK(b.dim() == 2);
    CHECK(b.contains(v.parse("e1*e2")));
    CHECK(b.contains(v.parse("e1^2 + e2^2")));
    CHECK(invariant_basis(build("osp(3|2)"), 1).dim() == 0);
    CHECK(invariant_basis(build("osp(3|2)"), 2).dim() == 2);
}

TEST_CASE("property: action is a homomorphism and Reynolds projects") {
    std::mt19937 rng(5);
    for (const char* s : {"gl(2|2)", "osp_alpha(4|2,alpha=1/2)", "ag2", "ab3", "pe(3)", "svect(0|4)"}) {
        CAPTURE(s);
        RootDatum d = build(s);
        auto g = enumerate(d);
        for (int trial = 0; trial < 6; ++trial) {
            const WeylElement& a = g[rng() % g.size()];
            const WeylElement& b = g[rng() % g.size()];
            const WeylElement ab{a.matrix * b.matrix};
            Poly p = random_poly(rng, d.vt, 1 + static_cast<int>(rng() % 3));
            Poly q = random_poly(rng, d.vt, 2);
            CHECK(act(ab, p) == act(a, act(b, p)));
            CHECK(act(a, p * q) == act(a, p) * act(a, q));
            Poly r = reynolds(d, p);
            CHECK(is_invariant(d, r));
            CHECK(reynolds(d, r) == r);
            CHECK(invariant_basis(d, r.is_zero() ? 0 : r.degree()).contains(r));
        }
    }
}
