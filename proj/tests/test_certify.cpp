#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "haken/andreev.hpp"
#include "haken/canonical.hpp"
#include "haken/certify.hpp"
#include "haken/shapes.hpp"

using namespace haken;

TEST_CASE("minimal cube enumeration") {
    auto classes = enumerate_min_cubes();
    REQUIRE(classes.size() == 4);

    int orbit_total = 0;
    for (const auto& c : classes) orbit_total += c.orbit_size;
    CHECK(orbit_total == 64);

    int lambert = 0;
    for (const auto& c : classes) {
        CHECK(check_andreev(c.cube).realizable);
        CHECK(c.sharp_edges.size() == 3);
        if (c.lambert_pattern) ++lambert;
    }
    CHECK(lambert == 1);
    CHECK(classes[0].lambert_pattern);
    CHECK(isomorphic(classes[0].cube, shapes::lambert_cube()));

    // pairwise non-isomorphic as labeled polyhedra
    for (size_t i = 0; i < classes.size(); ++i)
        for (size_t j = i + 1; j < classes.size(); ++j)
            CHECK_FALSE(isomorphic(classes[i].cube, classes[j].cube));

    // stable: a second run produces identical canonical output
    auto again = enumerate_min_cubes();
    REQUIRE(again.size() == 4);
    for (size_t i = 0; i < 4; ++i) {
        CHECK(canonical_form(again[i].cube) == canonical_form(classes[i].cube));
        CHECK(again[i].orbit_size == classes[i].orbit_size);
    }
}

TEST_CASE("right-angled exhaustive searches are empty where proven") {
    CHECK(search_right_angled(1, 6).empty());
    CHECK(search_right_angled(1, 4).empty());
    CHECK(search_right_angled(0, 8).empty());
    CHECK(search_right_angled(0, 4).empty());  // the all-right tetrahedron is out of scope (V = 4)
}

TEST_CASE("search respects the handshake parity") {
    for (int n4 = 0; n4 <= 2; ++n4)
        for (int n3 = 0; n3 <= 8; ++n3) {
            if ((3 * n3 + 4 * n4) % 2 == 1) {
                CHECK(search_right_angled(n4, n3).empty());
            }
        }
}

TEST_CASE("search scale guard") {
    CHECK_THROWS_AS(search_right_angled(13, 0), ScaleExceededError);
    CHECK_THROWS_AS(search_right_angled(0, 13), ScaleExceededError);
}

TEST_CASE("the seven-vertex trace passes and cross-checks") {
    Certificate c = lemma_4_2_trace();
    CHECK(c.passed());
    CHECK(c.validate());
    CHECK(c.steps.size() >= 6);
    bool found_cross_check = false;
    for (const auto& s : c.steps)
        if (s.id == "exhaustive-cross-check") {
            found_cross_check = true;
            CHECK(s.passed);
        }
    CHECK(found_cross_check);
}

TEST_CASE("graph-type case table") {
    Certificate c = graph_type_case_table();
    CHECK(c.passed());
    CHECK(c.validate());
    // the fallback value is pinned near the reference constant
    REQUIRE(c.constants.count("miyamoto_fallback_m1_2") == 1);
    CHECK(std::fabs(c.constants.at("miyamoto_fallback_m1_2").value - 0.406419) < 1e-5);
    CHECK(c.constants.at("vol_lambert_cube").provenance == "published");
}

TEST_CASE("full report") {
    Certificate c = theorem_1_1_report();
    CHECK(c.passed());
    CHECK(c.validate());
    // the externally computed volumes enter only as published constants
    for (const char* name : {"vol_lambert_cube", "vol_cube_class_2", "vol_cube_class_3",
                             "vol_cube_class_4", "vol_right_angled_dodecahedron", "vol_min_5_prism"}) {
        REQUIRE(c.constants.count(name) == 1);
        CHECK(c.constants.at(name).provenance == "published");
    }
    CHECK(c.constants.at("v8").provenance == "computed");

    auto j = c.to_json();
    CHECK(j["overall"] == "pass");
    CHECK(j["steps"].size() == c.steps.size());
}

TEST_CASE("certificates with unattributed constants fail validation") {
    Certificate c;
    c.name = "bad";
    c.steps.push_back({"s", "claim", true, {}});
    c.constants["mystery"] = {1.0, "", "no provenance"};
    CHECK(c.passed());
    CHECK_FALSE(c.validate());
    c.constants["mystery"].provenance = "guessed";
    CHECK_FALSE(c.validate());
    c.constants["mystery"].provenance = "published";
    CHECK(c.validate());
}
