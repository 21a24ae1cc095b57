#include "doctest.h"

#include "superinv/errors.hpp"
#include "superinv/membership.hpp"
#include "superinv/oracle.hpp"

#include <algorithm>

using namespace superinv;

namespace {

const std::vector<std::string> kOracle = {"gl(1|1)", "gl(2|1)", "gl(2|2)", "sl(2|1)",
                                          "osp(1|2)", "osp(2|2)", "pe(2)",   "vect(0|2)"};

std::size_t index_of(const StructureConstants& sc, const std::string& label) {
    auto it = std::find(sc.labels.begin(), sc.labels.end(), label);
    REQUIRE(it != sc.labels.end());
    return static_cast<std::size_t>(it - sc.labels.begin());
}

}  // namespace

TEST_CASE("catalog and dimensions") {
    for (const auto& s : kOracle) CHECK(in_oracle_catalog(AlgebraSpec::parse(s)));
    CHECK_FALSE(in_oracle_catalog(AlgebraSpec::parse("ag2")));
    CHECK_THROWS_AS(build_sc(AlgebraSpec::parse("ag2")), CatalogError);

    auto dims = [](const char* s) {
        auto sc = build_sc(AlgebraSpec::parse(s));
        return std::pair{sc.dim_even, sc.dim_odd};
    };
    CHECK(dims("gl(1|1)") == std::pair<std::size_t, std::size_t>{2, 2});
    CHECK(dims("gl(2|1)") == std::pair<std::size_t, std::size_t>{5, 4});
    CHECK(dims("sl(2|1)") == std::pair<std::size_t, std::size_t>{4, 4});
    CHECK(dims("osp(1|2)") == std::pair<std::size_t, std::size_t>{3, 2});
    CHECK(dims("osp(2|2)") == std::pair<std::size_t, std::size_t>{4, 4});
    CHECK(dims("pe(2)") == std::pair<std::size_t, std::size_t>{4, 4});
    CHECK(dims("vect(0|2)") == std::pair<std::size_t, std::size_t>{4, 4});
}

TEST_CASE("gl(1|1) brackets") {
    auto sc = build_sc(AlgebraSpec::parse("gl(1|1)"));
    const std::size_t h1 = index_of(sc, "h_e1"), h2 = index_of(sc, "h_d1");
    const std::size_t up = index_of(sc, "E1_2"), down = index_of(sc, "E2_1");
    CHECK(sc.brackets[up][down] == SparseVector{{h1, Rational(1)}, {h2, Rational(1)}});
    CHECK(sc.brackets[down][up] == sc.brackets[up][down]);
    CHECK(sc.brackets[up][up].empty());
    CHECK(sc.brackets[h1][up] == SparseVector{{up, Rational(1)}});
    CHECK(sc.brackets[h2][up] == SparseVector{{up, Rational(-1)}});
    CHECK(sc.cartan == std::vector<std::size_t>{h1, h2});
}

TEST_CASE("super monomials") {
    auto sc = build_sc(AlgebraSpec::parse("gl(1|1)"));
    // S^a of 2 even tensor Lambda^b of 2 odd
    CHECK(super_dimension(sc, 0) == 1);
    CHECK(super_dimension(sc, 1) == 4);
    CHECK(super_dimension(sc, 2) == 3 + 2 * 2 + 1);
    for (const auto& w : super_monomials(sc, 3))
        for (std::size_t i = 0; i < sc.dim(); ++i)
            if (sc.parity[i]) CHECK(w[i] <= 1);
    CHECK(coadjoint_apply(sc, 0, Monomial(sc.dim(), 0)).empty());
}

TEST_CASE("invariants and restriction examples") {
    auto g11 = build_sc(AlgebraSpec::parse("gl(1|1)"));
    CHECK(coadjoint_invariants(g11, 0).dim() == 1);
    auto v1 = coadjoint_invariants(g11, 1);
    CHECK(v1.dim() == 1);
    auto r1 = restrict_to_cartan(g11, v1);
    CHECK(r1.injective);
    CHECK(r1.image == GradedSubspace::span(g11.vt, 1, {parse_poly("e1 - d1", g11.vt)}));
    CHECK(coadjoint_invariants(g11, 2).dim() == 2);

    auto g21 = build_sc(AlgebraSpec::parse("gl(2|1)"));
    auto r = restrict_to_cartan(g21, coadjoint_invariants(g21, 1));
    CHECK(r.image == GradedSubspace::span(g21.vt, 1, {parse_poly("e1 + e2 - d1", g21.vt)}));
    CHECK(restrict_to_cartan(g21, coadjoint_invariants(g21, 0)).image.dim() == 1);

    CHECK_THROWS_AS(coadjoint_invariants(g21, 3, 10), CapExceeded);
}

TEST_CASE("oracle_check examples") {
    for (int d = 0; d <= 3; ++d) {
        auto v = oracle_check(AlgebraSpec::parse("gl(1|1)"), d);
        CHECK(v.matches_membership);
        CHECK(v.dim_invariants == std::size_t(d == 0 ? 1 : d));
    }
    auto w = oracle_check(AlgebraSpec::parse("vect(0|2)"), 2);
    CHECK(w.matches_membership);
    CHECK(w.dim_restricted == 1);
    auto p = oracle_check(AlgebraSpec::parse("pe(2)"), 2);
    CHECK(p.matches_membership);
    CHECK(p.dim_restricted == 1);
}

TEST_CASE("property: structure constants are consistent") {
    for (const auto& s : kOracle) {
        CAPTURE(s);
        auto sc = build_sc(AlgebraSpec::parse(s));
        auto skew = check_super_skew(sc);
        CHECK_MESSAGE(skew.ok, skew.detail);
        auto jac = check_jacobi(sc);
        CHECK_MESSAGE(jac.ok, jac.detail);
        auto car = check_cartan(sc);
        CHECK_MESSAGE(car.ok, car.detail);
        for (int d = 1; d <= 2; ++d) {
            auto rep = check_representation(sc, d);
            CHECK_MESSAGE(rep.ok, rep.detail);
        }
    }
}

TEST_CASE("property: restriction is injective and matches membership, d <= 2") {
    for (const auto& s : kOracle) {
        CAPTURE(s);
        for (int d = 0; d <= 2; ++d) {
            CAPTURE(d);
            auto v = oracle_check(AlgebraSpec::parse(s), d);
            CHECK(v.injective);
            CHECK(v.dim_invariants == v.dim_restricted);
            CHECK(v.matches_membership);
        }
    }
}
