#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "haken/andreev.hpp"
#include "haken/circuits.hpp"
#include "haken/generate.hpp"
#include "haken/shapes.hpp"
#include "test_util.hpp"

using namespace haken;

TEST_CASE("prismatic circuit counts on the standard fixtures") {
    CHECK(find_prismatic_circuits(shapes::cube(), 4).size() == 3);
    CHECK(find_prismatic_circuits(shapes::cube(), 3).empty());
    CHECK(find_prismatic_circuits(shapes::prism(3), 3).size() == 1);
    CHECK(find_prismatic_circuits(shapes::tetrahedron(), 3).empty());
    CHECK(find_prismatic_circuits(shapes::tetrahedron(), 4).empty());
    CHECK(find_prismatic_circuits(shapes::dodecahedron(), 3).empty());
    CHECK(find_prismatic_circuits(shapes::dodecahedron(), 4).empty());
    CHECK(find_prismatic_circuits(shapes::prism(5), 3).empty());
    CHECK(find_prismatic_circuits(shapes::prism(5), 4).size() == 5);
}

TEST_CASE("circuit finder agrees with the brute-force enumerator (F <= 12)") {
    std::vector<Polyhedron> ps{shapes::tetrahedron(), shapes::cube(),    shapes::octahedron(),
                               shapes::prism(3),      shapes::prism(4),  shapes::prism(5),
                               shapes::prism(6),      shapes::pyramid(4), shapes::pyramid(5),
                               shapes::glued_pentagonal_prisms(), shapes::dodecahedron()};
    for (const Polyhedron& p : testutil::random_polyhedra(10, 5))
        if (p.face_count() <= 12) ps.push_back(p);
    for (const Polyhedron& p : ps) {
        for (int k : {3, 4}) {
            auto fast = find_prismatic_circuits(p, k);
            auto brute = testutil::brute_prismatic_circuits(p, k);
            CHECK(fast == brute);
        }
    }
}

TEST_CASE("circuit invariants") {
    for (const auto& c : find_prismatic_circuits(shapes::cube(), 4)) {
        CHECK(c.k == 4);
        CHECK(c.faces.size() == 4);
        CHECK(c.edges.size() == 4);
        // crossed edges pairwise vertex-disjoint
        std::set<int> verts;
        for (int e : c.edges) {
            verts.insert(shapes::cube().edge(e).first);
            verts.insert(shapes::cube().edge(e).second);
        }
        CHECK(verts.size() == 8);
    }
}

TEST_CASE("interleaving detection: the cube's equatorial circuits cross pairwise") {
    Polyhedron cube = shapes::cube();
    auto cs = find_prismatic_circuits(cube, 4);
    REQUIRE(cs.size() == 3);
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = 0; j < cs.size(); ++j)
            CHECK(circuits_cross(cube, cs[i], cs[j]) == (i != j));
}

TEST_CASE("Lambert cube passes every realizability condition") {
    AndreevReport r = check_andreev(shapes::lambert_cube());
    CHECK(r.realizable);
    CHECK(r.total_violations() == 0);
    CHECK_FALSE(r.too_few_vertices);
    CHECK(r.circuits3.empty());
    CHECK(r.circuits4.size() == 3);
    CHECK(r.ideal_vertices.empty());
    CHECK(r.finite_vertices.size() == 8);
}

TEST_CASE("all-right cube fails exactly on its three prismatic 4-circuits") {
    AndreevReport r = check_andreev(LabeledPolyhedron::all_right(shapes::cube()));
    CHECK_FALSE(r.realizable);
    CHECK(r.condition(5).size() == 3);
    for (int c : {1, 2, 3, 4, 6, 7}) CHECK(r.condition(c).empty());
    for (const auto& v : r.condition(5)) CHECK(v.sum == Rational(2));
}

TEST_CASE("all-right square pyramid is killed by the ideal-vertex condition") {
    AndreevReport r = check_andreev(LabeledPolyhedron::all_right(shapes::square_pyramid()));
    CHECK_FALSE(r.realizable);
    CHECK_FALSE(r.condition(7).empty());
    CHECK(r.condition(3).empty());  // the degree-4 apex sums to exactly 2 pi
    CHECK(r.ideal_vertices == std::vector<int>{4});
}

TEST_CASE("the three completion graphs of the seven-vertex case analysis") {
    // One class is not 3-connected; the other two embed as polyhedra and are
    // killed by the prismatic-3-circuit and ideal-vertex conditions.
    CHECK_FALSE(is_three_connected(testutil::lemma42_graph_a1()));
    CHECK(is_three_connected(testutil::lemma42_graph_a2()));
    CHECK(is_three_connected(testutil::lemma42_graph_b()));

    auto as_polyhedron = [](const SimpleGraph& g) {
        auto faces = planar_embedding(g);
        REQUIRE(faces.has_value());
        return Polyhedron::build_from_faces(*faces);
    };
    {
        Polyhedron p = as_polyhedron(testutil::lemma42_graph_b());
        CHECK(find_prismatic_circuits(p, 3).size() == 1);
        AndreevReport r = check_andreev(LabeledPolyhedron::all_right(p));
        CHECK_FALSE(r.realizable);
        CHECK_FALSE(r.condition(4).empty());
        CHECK(r.condition(4)[0].sum == Rational(3, 2));
    }
    {
        Polyhedron p = as_polyhedron(testutil::lemma42_graph_a2());
        AndreevReport r = check_andreev(LabeledPolyhedron::all_right(p));
        CHECK_FALSE(r.realizable);
        CHECK(r.condition(4).empty());
        CHECK_FALSE(r.condition(7).empty());
    }
}

TEST_CASE("ideal vertex classification") {
    // degree-3 vertex whose labels sum to exactly pi
    Polyhedron pr = shapes::prism(3);
    std::vector<Angle> labels(pr.edge_count(), Angle::right());
    labels[pr.edge_index(0, 1)] = Angle::right();
    labels[pr.edge_index(2, 0)] = Angle::pi_over(3);
    labels[pr.edge_index(0, 3)] = Angle::pi_over(6);
    LabeledPolyhedron lp(pr, labels);
    auto ideal = ideal_vertices(lp);
    CHECK(ideal == std::vector<int>{0});

    // every degree-4 vertex is ideal
    auto pyramid_ideal = ideal_vertices(LabeledPolyhedron::all_right(shapes::square_pyramid()));
    CHECK(pyramid_ideal == std::vector<int>{4});
}

TEST_CASE("all-right labels with a prismatic 3-circuit always violate condition 4") {
    for (const Polyhedron& p : {shapes::prism(3), shapes::truncate_vertex(shapes::tetrahedron(), 0)}) {
        auto circuits = find_prismatic_circuits(p, 3);
        if (circuits.empty()) continue;
        AndreevReport r = check_andreev(LabeledPolyhedron::all_right(p));
        CHECK(r.condition(4).size() == circuits.size());
    }
}

TEST_CASE("realizability verdict is invariant under relabeling of vertices") {
    for (const LabeledPolyhedron& lp :
         {shapes::lambert_cube(), LabeledPolyhedron::all_right(shapes::cube()),
          shapes::coxeter_prism_233(3, 4, 3)}) {
        bool expected = check_andreev(lp).realizable;
        for (unsigned seed : {11u, 12u}) {
            CHECK(check_andreev(testutil::relabel(lp, seed)).realizable == expected);
        }
    }
}

TEST_CASE("label decrease cannot create circuit violations nor cure vertex-sum ones") {
    std::mt19937 rng(424242);
    std::vector<LabeledPolyhedron> bases{shapes::lambert_cube(), shapes::coxeter_prism_233(3, 4, 3),
                                         LabeledPolyhedron::all_right(shapes::prism(5))};
    for (const auto& base : bases) {
        AndreevReport before = check_andreev(base);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Angle> labels = base.labels;
            int e = static_cast<int>(rng() % labels.size());
            // strictly decrease: bump the denominator
            labels[e] = Angle(labels[e].num, labels[e].den + 1 + static_cast<int>(rng() % 3));
            LabeledPolyhedron dec(base.base, labels);
            AndreevReport after = check_andreev(dec);
            CHECK(after.condition(4).size() <= before.condition(4).size());
            CHECK(after.condition(5).size() <= before.condition(5).size());
            CHECK(after.condition(6).size() <= before.condition(6).size());
            CHECK(after.condition(2).size() >= before.condition(2).size());
            if (after.ideal_vertices == before.ideal_vertices)
                CHECK(after.condition(7).size() <= before.condition(7).size());
        }
    }
}

TEST_CASE("too few vertices is reported, not silently rejected") {
    AndreevReport r = check_andreev(shapes::tetrahedron_353());
    CHECK(r.too_few_vertices);
    CHECK_FALSE(r.realizable);
    CHECK(r.total_violations() == 0);
}
