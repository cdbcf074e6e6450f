#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef HAKENPOLY_BIN
#error "HAKENPOLY_BIN must be defined"
#endif
#ifndef FIXTURES_DIR
#error "FIXTURES_DIR must be defined"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string out_file = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                           "/hakenpoly_cli_out.txt";
    std::string cmd = std::string(HAKENPOLY_BIN) + " " + args + " > " + out_file + " 2>&1";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return {code, ss.str()};
}

std::string fixture(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

}  // namespace

TEST_CASE("every bundled fixture validates; the cube classes analyze as realizable Haken prisms") {
    for (const char* name : {"lambert_cube.json", "tetra_353.json", "all_right_cube.json",
                             "square_pyramid.json", "triangular_prism.json", "coxeter_prism_334.json",
                             "truncated_tet_prism.json", "glued_pentagonal_prisms.json",
                             "dodecahedron.json", "cube_c2.json", "cube_c3.json", "cube_c4.json"}) {
        CHECK(run("validate " + fixture(name)).exit_code == 0);
    }
    for (const char* name : {"cube_c2.json", "cube_c3.json", "cube_c4.json"}) {
        RunResult r = run("analyze " + fixture(name) + " --json");
        REQUIRE(r.exit_code == 0);
        auto j = nlohmann::json::parse(r.output);
        CHECK(j["andreev"]["realizable"] == true);
        CHECK(j["decomposition"]["overall"] == "haken");
        CHECK(j["prism"] == 4);
    }
}

TEST_CASE("validate: exit codes 0 / 2 / 3") {
    CHECK(run("validate " + fixture("lambert_cube.json")).exit_code == 0);
    CHECK(run("validate " + fixture("square_pyramid.json")).exit_code == 0);
    CHECK(run("validate " + fixture("bad_bigon.json")).exit_code == 3);
    CHECK(run("validate " + fixture("bad_nonmanifold.json")).exit_code == 2);
    CHECK(run("validate /nonexistent/file.json").exit_code == 3);
}

TEST_CASE("analyze the Lambert cube") {
    RunResult r = run("analyze " + fixture("lambert_cube.json") + " --json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["andreev"]["realizable"] == true);
    CHECK(j["prismatic_circuits"]["k3"].size() == 0);
    CHECK(j["prismatic_circuits"]["k4"].size() == 3);
    CHECK(j["decomposition"]["overall"] == "haken");
    CHECK(j["prism"] == 4);
}

TEST_CASE("analyze the 3-5-3 tetrahedron") {
    RunResult r = run("analyze " + fixture("tetra_353.json") + " --json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["andreev"]["too_few_vertices"] == true);
    CHECK(j["decomposition"]["overall"] == "small");
}

TEST_CASE("analyze the all-right cube: condition 5 kills it") {
    RunResult r = run("analyze " + fixture("all_right_cube.json") + " --json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["andreev"]["realizable"] == false);
    CHECK(j["andreev"]["violations"][4]["condition"] == 5);
    CHECK(j["andreev"]["violations"][4]["violations"].size() == 3);
}

TEST_CASE("analyze output re-ingests to the identical report") {
    for (const char* name : {"lambert_cube.json", "coxeter_prism_334.json", "glued_pentagonal_prisms.json"}) {
        RunResult first = run("analyze " + fixture(name) + " --json");
        REQUIRE(first.exit_code == 0);
        auto j = nlohmann::json::parse(first.output);
        std::string tmp = "/tmp/hakenpoly_roundtrip.json";
        {
            std::ofstream out(tmp);
            out << j["polyhedron"].dump();
        }
        RunResult second = run("analyze " + tmp + " --json");
        REQUIRE(second.exit_code == 0);
        CHECK(nlohmann::json::parse(second.output) == j);
    }
}

TEST_CASE("bounds by flags") {
    RunResult a = run("bounds --n3 0 --n4 3");
    CHECK(a.exit_code == 0);
    CHECK(a.output.find("0.457983") != std::string::npos);

    RunResult b = run("bounds --k 3 --x 1/6");
    CHECK(b.exit_code == 0);
    CHECK(b.output.find("0.406419") != std::string::npos);

    RunResult c = run("bounds --m1 2");
    CHECK(c.exit_code == 0);
    CHECK(c.output.find("0.305322") != std::string::npos);
    CHECK(c.output.find("note:") != std::string::npos);  // fallback note

    RunResult d = run("bounds --n3 1 --k 2 --x 1/6");
    CHECK(d.exit_code == 2);  // conflicting flag groups
}

TEST_CASE("bounds from a file") {
    RunResult r = run("bounds " + fixture("dodecahedron.json") + " --json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    REQUIRE(j["bounds"].size() >= 1);
    CHECK(j["bounds"][0]["name"] == "vertex_count");
    CHECK(j["bounds"][0]["value"] == "1.373948");  // (0 + 20 - 8)/32 * V8
}

TEST_CASE("certificates and cube listing") {
    CHECK(run("certify --lemma-4-2").exit_code == 0);
    RunResult cubes = run("enumerate-cubes");
    CHECK(cubes.exit_code == 0);
    CHECK(cubes.output.find("class 4") != std::string::npos);
    CHECK(cubes.output.find("Lambert pattern") != std::string::npos);

    RunResult graph = run("certify --graph-type --json");
    CHECK(graph.exit_code == 0);
    auto j = nlohmann::json::parse(graph.output);
    CHECK(j["overall"] == "pass");

    RunResult full = run("certify --all --json");
    CHECK(full.exit_code == 0);
    auto jf = nlohmann::json::parse(full.output);
    CHECK(jf["overall"] == "pass");
    CHECK(jf["constants"]["vol_lambert_cube"]["provenance"] == "published");

    CHECK(run("certify").exit_code == 2);  // no mode selected
}
