// JSON formats: canonical rational strings, shape-carrying elements, maps
// with their re_matrix, and reports.  Round trips must be exact.

#include <cstdio>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include <octmod/octmod.hpp>

using namespace octmod;

namespace {
const ModuleShape kO{1, false};
const ModuleShape kO2{2, false};
}  // namespace

TEST_CASE("octonion JSON is an array of eight canonical rationals") {
    const Octonion x = parse_octonion("1+2e3-1/2e7");
    const nlohmann::json j = to_json(x);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 8);
    CHECK(j[0] == "1");
    CHECK(j[3] == "2");
    CHECK(j[7] == "-1/2");
    CHECK(octonion_from_json(j) == x);

    // Integer coefficients are accepted on input.
    CHECK(octonion_from_json(nlohmann::json::parse("[0,1,0,0,0,0,0,0]")) == Octonion::basis(1));
    CHECK_THROWS_AS(octonion_from_json(nlohmann::json::parse("[1,2,3]")), ParseError);
}

TEST_CASE("element JSON carries its shape") {
    Element x(kO2);
    x.coords[0] = parse_octonion("1+e4");
    x.coords[1] = parse_octonion("-3/4");
    const nlohmann::json j = to_json(x);
    CHECK(j["rank"] == 2);
    CHECK(j["conjugated"] == false);
    CHECK(element_from_json(j) == x);

    nlohmann::json bad = j;
    bad["coords"].erase(1);
    CHECK_THROWS_AS(element_from_json(bad), ParseError);
}

TEST_CASE("map JSON round-trips the canonical representation") {
    const ParaLinearMap f = right_mult_operator(Octonion::basis(1), kO);
    const nlohmann::json j = to_json(f);
    CHECK(j["chirality"] == "left");
    CHECK(j["dom"]["rank"] == 1);
    CHECK(j["re_matrix"].size() == 1);
    CHECK(j["re_matrix"][0][1] == "-1");
    CHECK(map_from_json(j) == f);

    const ParaLinearMap g = left_mult_operator(Octonion::basis(2), kO);
    CHECK(map_from_json(to_json(g)) == g);
    CHECK(to_json(map_from_json(to_json(g))).dump() == to_json(g).dump());

    nlohmann::json bad = j;
    bad["chirality"] = "up";
    CHECK_THROWS_AS(map_from_json(bad), ParseError);

    nlohmann::json wrong = j;
    wrong["re_matrix"] = nlohmann::json::parse("[[\"1\",\"0\"]]");
    CHECK_THROWS_AS(map_from_json(wrong), ShapeError);
}

TEST_CASE("matrix JSON rejects ragged rows") {
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse("[[\"1\",\"2\"],[\"3\"]]")), ParseError);
    const Matrix m = matrix_from_json(nlohmann::json::parse("[[\"1/2\",\"-2\"]]"));
    CHECK(m.at(0, 0) == Rational(1, 2));
    CHECK(m.at(0, 1) == Rational(-2));
}

TEST_CASE("report JSON carries status and counterexample") {
    const IdentityReport rep = run_check("octonion_alternative", 3, 7, 2, 5);
    const nlohmann::json j = to_json(rep);
    CHECK(j["name"] == "octonion_alternative");
    CHECK(j["trials"] == 3);
    CHECK(j["seed"] == 7);
    CHECK(j["status"] == "pass");
    CHECK(j["counterexample"].is_null());
}

TEST_CASE("json files round-trip through the filesystem") {
    const std::string path = "octmod_serialize_test.json";
    const ParaLinearMap f = right_mult_operator(parse_octonion("1/3+e6"), kO);
    write_json_file(path, to_json(f));
    CHECK(map_from_json(read_json_file(path)) == f);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_json_file("definitely_missing_octmod.json"), ParseError);
}
