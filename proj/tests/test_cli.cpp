#include "doctest.h"

#include "superinv/cli.hpp"
#include "superinv/gens.hpp"
#include "superinv/superalg.hpp"

#include <json.hpp>

#include <sstream>

using namespace superinv;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dims") {
    auto r = call({"dims", "gl(1|1)", "--max-degree", "3", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == json::parse(R"({"dims":[1,1,2,3]})"));
    auto t = call({"dims", "osp(1|2)", "--max-degree", "2"});
    CHECK(t.out == "degree 0: 1\ndegree 1: 0\ndegree 2: 1\n");
}

TEST_CASE("member") {
    auto r = call({"member", "pe(2)", "--poly", "e1*e2"});
    CHECK(r.code == 1);
    CHECK(r.out.find("member: no") != std::string::npos);
    CHECK(r.out.find("for root e1 + e2") != std::string::npos);

    auto j = call({"member", "pe(2)", "--poly", "e1*e2", "--format", "json"});
    CHECK(j.code == 1);
    json v = json::parse(j.out);
    CHECK(v["ok"] == false);
    REQUIRE(v["failures"].size() == 1);
    CHECK(v["failures"][0]["root"] == "e1 + e2");
    CHECK(v["failures"][0]["condition"] == "D_h");

    auto ok = call({"member", "gl(2|1)", "--poly", "e1^2 + e2^2 - d1^2", "--format", "json"});
    CHECK(ok.code == 0);
    CHECK(json::parse(ok.out) == json::parse(R"({"ok":true,"failures":[]})"));

    auto w = call({"member", "gl(2|1)", "--poly", "e1", "--format", "json"});
    CHECK(w.code == 1);
    CHECK(json::parse(w.out)["failures"][0]["root"].is_null());
}

TEST_CASE("solvers") {
    auto r = call({"sinh-solve", "--k", "1", "--n", "0,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "coefficients [-2, 1]\n");
    auto c = call({"cosh-solve", "--k", "1", "--n", "1,2", "--format", "json"});
    CHECK(c.code == 0);
    CHECK(json::parse(c.out) == json::parse(R"({"coefficients":["-2/3","2/3"]})"));
    CHECK(call({"sinh-solve", "--k", "1", "--n", "2,2"}).code == 2);
}

TEST_CASE("check-theorem and oracle") {
    auto r = call({"check-theorem", "gl(1|1)", "--max-degree", "4", "--oracle", "--format", "json"});
    CHECK(r.code == 0);
    json rows = json::parse(r.out);
    REQUIRE(rows.size() == 5);
    for (const auto& row : rows) {
        CHECK(row["equal"] == true);
        CHECK(row["dim_intersection"] == row["dim_closed_form"]);
    }
    CHECK(rows[3]["dim_oracle"] == 3);
    CHECK_FALSE(rows[4].contains("dim_oracle"));

    auto o = call({"oracle", "vect(0|2)", "--degree", "2", "--format", "json"});
    CHECK(o.code == 0);
    CHECK(json::parse(o.out) == json::parse(R"({"dim_invariants":1,"dim_restricted":1,"matches_membership":true})"));
    CHECK(call({"oracle", "ag2", "--degree", "1"}).code == 2);
}

TEST_CASE("roots, gens and pq") {
    auto r = call({"roots", "gl(1|1)", "--format", "json"});
    CHECK(r.code == 0);
    json v = json::parse(r.out);
    CHECK(v["weyl_order"] == 1);
    CHECK(v["tilde"][0]["root"] == "e1 - d1");
    CHECK(v["tilde"][0]["nu"] == 1);

    auto p = call({"pq", "gl(1|1)", "--poly", "e1*d1", "--format", "json"});
    CHECK(p.code == 0);
    CHECK(json::parse(p.out)["P"] == "e1^2*d1 - e1*d1^2");
    CHECK(call({"pq", "gl(2|1)", "--poly", "e1"}).code == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"dims", "foo(1|1)"}).code == 2);
    CHECK(call({"dims", "gl(1|1)", "--format", "xml"}).code == 2);
    auto bad = call({"member", "gl(1|1)", "--poly", "e1 + q"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("position 5") != std::string::npos);
    CHECK(call({"member", "gl(1|1)"}).code == 2);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("property: JSON polynomials round-trip") {
    for (const char* s : {"gl(2|2)", "osp(3|2)", "ab3", "spe(4)", "svect(0|3)"}) {
        CAPTURE(s);
        RootDatum d = build(s);
        auto r = call({"gens", s, "--max-degree", "6", "--format", "json"});
        REQUIRE(r.code == 0);
        json items = json::parse(r.out);
        CHECK(items.size() == generators(d, 6).items.size());
        for (std::size_t i = 0; i < items.size(); ++i) {
            Poly p = parse_poly(items[i]["poly"].get<std::string>(), d.vt);
            CHECK(p == generators(d, 6).items[i].second);
            CHECK(items[i]["degree"] == p.degree());
        }
    }
    RootDatum p = build("pe(2)");
    auto m = call({"member", "pe(2)", "--poly", "e1*e2", "--format", "json"});
    for (const auto& f : json::parse(m.out)["failures"])
        CHECK_FALSE(parse_poly(f["remainder"].get<std::string>(), p.vt).is_zero());
}

TEST_CASE("property: identical invocations give identical output") {
    const std::vector<std::vector<std::string>> cmds = {
        {"roots", "ab3"},
        {"gens", "sl(2|2)", "--max-degree", "5", "--format", "json"},
        {"check-theorem", "pe(3)", "--max-degree", "5"},
        {"member", "spe(4)", "--poly", "e1*e2*e3", "--format", "json"},
        {"oracle", "gl(2|1)", "--degree", "2"}};
    for (const auto& c : cmds) {
        auto a = call(c), b = call(c);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}
