#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "qcy/errors.hpp"
#include "qcy/report.hpp"

using namespace qcy;

TEST_CASE("matrix text round trip") {
    std::string text = "0,0,0,3;3,0,0,0;0,3,0,0;0,0,3,0";
    Mat4 m = parse_matrix(text);
    CHECK(matrix_to_string(m) == text);
    CHECK(m[0][3] == 3);
    CHECK_THROWS_AS(parse_matrix("0,0;1"), parse_error);
    CHECK_THROWS_AS(parse_matrix("1,2,3,4;5,6,7,8;9,10,11,12;13,14,15"), parse_error);
    CHECK_THROWS_AS(parse_matrix("1,2,3,4;5,6,7,8;9,10,11,12;13,14,15,16,17"), parse_error);
    CHECK_THROWS_AS(parse_adjacency("0,0,0,-3;3,0,0,0;0,3,0,0;0,0,3,0"), parse_error);
    try {
        parse_matrix("1,x,3,4;5,6,7,8;9,10,11,12;13,14,15,16");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("permutation text round trip") {
    Mat4 p = parse_permutation("cycles:(1 2 3 4)");
    CHECK(p == class_reference_perm(PermClass::FourCycle));
    CHECK(perm_to_cycles(perm_of_matrix(p)) == "cycles:(1 2 3 4)");
    Mat4 tt = parse_permutation("cycles:(1 2)(3 4)");
    CHECK(tt == class_reference_perm(PermClass::TwoTwo));
    CHECK(perm_to_cycles(perm_of_matrix(tt)) == "cycles:(1 2)(3 4)");
    CHECK(parse_permutation("cycles:()") == identity4());
    CHECK(perm_to_cycles(perm_of_matrix(identity4())) == "cycles:()");
    // explicit matrix form is accepted too, and normalizes to cycles
    Mat4 q = parse_permutation("0,1,0,0;1,0,0,0;0,0,0,1;0,0,1,0");
    CHECK(q == tt);
    CHECK_THROWS_AS(parse_permutation("cycles:(1 2 5)"), parse_error);
    CHECK_THROWS_AS(parse_permutation("cycles:(1 2)(2 3)"), parse_error);
    CHECK_THROWS_AS(parse_permutation("1,1,0,0;0,0,1,0;0,0,0,1;0,0,0,0"), parse_error);
}

TEST_CASE("classification reports carry the same candidates in both formats") {
    for (int s : {3, 4}) {
        for (auto cls : {PermClass::FourCycle, PermClass::ThreeCycle, PermClass::TwoTwo}) {
            auto result = classify(cls, s);
            auto j = to_json(result);
            std::string table = to_table(result);
            std::set<std::string> json_set, table_set;
            for (const auto& cand : j["candidates"]) {
                Mat4 m = zero4();
                for (int i = 0; i < 4; ++i)
                    for (int k = 0; k < 4; ++k) m[i][k] = cand["M"][i][k].get<long long>();
                json_set.insert(matrix_to_string(m));
            }
            for (const auto& c : result.output()) {
                std::string text = matrix_to_string(c.type.M);
                table_set.insert(text);
                CHECK(table.find(text) != std::string::npos);
            }
            CHECK(json_set == table_set);
            // schema keys
            CHECK(j.contains("perm_class"));
            CHECK(j.contains("s"));
            CHECK(j.contains("stage"));
            for (const auto& cand : j["candidates"]) {
                CHECK(cand.contains("M"));
                CHECK(cand.contains("P"));
                CHECK(cand.contains("filters"));
                CHECK(cand.contains("realization"));
                CHECK(cand.contains("starred"));
            }
        }
    }
}

TEST_CASE("single-type report") {
    QuiverType t{parse_matrix("0,0,1,0;0,0,0,1;1,0,0,0;0,1,0,0"),
                 parse_permutation("cycles:(1 2)(3 4)"), 3};
    auto rep = check_type(t, 12);
    CHECK(rep.commutes);
    CHECK(!rep.connected);
    CHECK(rep.normal);
    REQUIRE(rep.spectral_ok);
    CHECK(!*rep.spectral_ok);
    auto j = to_json(rep);
    CHECK(j["strongly_connected"] == false);
    CHECK(j["spectral_radius_ok"] == false);
    std::string table = to_table(rep);
    CHECK(table.find("strongly connected:  no") != std::string::npos);
}

TEST_CASE("stage pre output") {
    ClassifyOptions pre;
    pre.stage_full = false;
    auto r = enumerate_two_two(3, pre);
    CHECK(r.output().size() == 13);
    auto j = to_json(r);
    CHECK(j["stage"] == "pre");
    CHECK(j["candidates"].size() == 13);
}
