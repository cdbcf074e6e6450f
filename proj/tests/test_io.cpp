#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "haken/canonical.hpp"
#include "haken/io.hpp"
#include "haken/shapes.hpp"

using namespace haken;
using nlohmann::json;

TEST_CASE("round trip through the file format") {
    for (const LabeledPolyhedron& lp : {shapes::lambert_cube(), shapes::tetrahedron_353(),
                                        shapes::coxeter_prism_233(3, 4, 3)}) {
        auto j = polyhedron_to_json(lp);
        LabeledPolyhedron back = parse_polyhedron_json(json::parse(j.dump()));
        CHECK(isomorphic(back, lp));
        CHECK(back.base.faces() == lp.base.faces());
        CHECK(back.labels == lp.labels);
    }
}

TEST_CASE("unlabeled edges default to pi/2") {
    LabeledPolyhedron lp = parse_polyhedron_json(json::parse(
        R"({"faces": [[1,2,3],[0,3,2],[0,1,3],[0,2,1]], "angles": [{"edge": [0,1], "pi_over": 3}]})"));
    CHECK(lp.label(0, 1) == Angle::pi_over(3));
    CHECK(lp.label(2, 3) == Angle::right());
}

TEST_CASE("parser-level failures raise ParseError") {
    auto parse = [](const char* text) { return parse_polyhedron_json(json::parse(text)); };
    CHECK_THROWS_AS(parse(R"([1,2,3])"), ParseError);                       // not an object
    CHECK_THROWS_AS(parse(R"({"angles": []})"), ParseError);                // no faces
    CHECK_THROWS_AS(parse(R"({"format": 2, "faces": [[0,1,2]]})"), ParseError);
    CHECK_THROWS_AS(parse(R"({"faces": [[0,1],[1,0],[0,1,2]]})"), ParseError);  // bigon
    CHECK_THROWS_AS(parse(R"({"faces": [[0,1,-2]]})"), ParseError);         // negative index
    // angle on a non-edge of a valid tetrahedron (0..3 are pairwise adjacent,
    // so use an out-of-range vertex)
    CHECK_THROWS_AS(
        parse(R"({"faces": [[1,2,3],[0,3,2],[0,1,3],[0,2,1]], "angles": [{"edge": [0,9], "pi_over": 3}]})"),
        ParseError);
    // malformed angle entries
    CHECK_THROWS_AS(parse(R"({"faces": [[1,2,3],[0,3,2],[0,1,3],[0,2,1]], "angles": [{"edge": [0,1]}]})"),
                    ParseError);
    // obtuse angle 2 pi / 3
    CHECK_THROWS_AS(
        parse(
            R"({"faces": [[1,2,3],[0,3,2],[0,1,3],[0,2,1]], "angles": [{"edge": [0,1], "num": 2, "den": 3}]})"),
        ParseError);
    // pi itself (pi_over 1)
    CHECK_THROWS_AS(
        parse(R"({"faces": [[1,2,3],[0,3,2],[0,1,3],[0,2,1]], "angles": [{"edge": [0,1], "pi_over": 1}]})"),
        ParseError);
}

TEST_CASE("structural failures surface as InvalidPolyhedron, not ParseError") {
    // duplicated face: well-formed JSON, bad complex
    CHECK_THROWS_AS(parse_polyhedron_json(json::parse(
                        R"({"faces": [[1,2,3],[0,3,2],[0,1,3],[0,2,1],[1,2,3]]})")),
                    InvalidPolyhedron);
}

TEST_CASE("missing files raise ParseError") {
    CHECK_THROWS_AS(load_polyhedron_file("/nonexistent/nowhere.json"), ParseError);
}
