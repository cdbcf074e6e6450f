#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "haken/canonical.hpp"
#include "haken/polyhedron.hpp"
#include "haken/shapes.hpp"
#include "test_util.hpp"

using namespace haken;

TEST_CASE("tetrahedron and cube build with the expected counts") {
    Polyhedron tet = Polyhedron::build_from_faces({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
    CHECK(tet.vertex_count() == 4);
    CHECK(tet.edge_count() == 6);
    CHECK(tet.face_count() == 4);

    Polyhedron cube = shapes::cube();
    CHECK(cube.vertex_count() == 8);
    CHECK(cube.edge_count() == 12);
    CHECK(cube.face_count() == 6);
}

TEST_CASE("two tetrahedra sharing a vertex are rejected") {
    std::vector<std::vector<int>> faces{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1},
                                        {4, 5, 6}, {0, 6, 5}, {0, 4, 6}, {0, 5, 4}};
    CHECK_THROWS_AS(Polyhedron::build_from_faces(faces), InvalidPolyhedron);
    try {
        Polyhedron::build_from_faces(faces);
    } catch (const InvalidPolyhedron& ex) {
        CHECK(ex.code() == PolyhedronError::NotThreeConnected);
    }
}

TEST_CASE("structural error cases carry specific codes") {
    auto code_of = [](const std::vector<std::vector<int>>& faces) {
        try {
            Polyhedron::build_from_faces(faces);
        } catch (const InvalidPolyhedron& ex) {
            return ex.code();
        }
        return PolyhedronError::NotSimple;  // unreachable for these inputs
    };
    // bigon face
    CHECK(code_of({{0, 1}, {1, 0}, {0, 1, 2}}) == PolyhedronError::NotSimple);
    // repeated vertex in a face
    CHECK(code_of({{0, 1, 2, 1}, {0, 2, 1}, {0, 1, 2}}) == PolyhedronError::NotSimple);
    // duplicated face: every edge of it lies in 3 faces
    CHECK(code_of({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}, {1, 2, 3}}) ==
          PolyhedronError::NonManifoldEdge);
    // doubled triangle: degree-2 vertices
    CHECK(code_of({{0, 1, 2}, {0, 2, 1}}) == PolyhedronError::DegreeTooLow);
    // 3x3 torus grid: everything local is fine but the Euler count is 0
    {
        std::vector<std::vector<int>> faces;
        auto v = [](int i, int j) { return 3 * ((i + 3) % 3) + ((j + 3) % 3); };
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                faces.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1)});
        CHECK(code_of(faces) == PolyhedronError::NotSphere);
    }
}

TEST_CASE("duals: cube <-> octahedron, tetrahedron self-dual, pentagonal prism") {
    CHECK(isomorphic(shapes::cube().dual(), shapes::octahedron()));
    CHECK(isomorphic(shapes::tetrahedron().dual(), shapes::tetrahedron()));
    Polyhedron d = shapes::prism(5).dual();
    CHECK(d.vertex_count() == 7);
    CHECK(d.face_count() == 10);
}

TEST_CASE("dual is an involution on generated polyhedra") {
    for (const Polyhedron& p : testutil::random_polyhedra(20)) {
        CHECK(isomorphic(p.dual().dual(), p));
    }
}

TEST_CASE("Euler formula and handshake on generated polyhedra") {
    for (const Polyhedron& p : testutil::random_polyhedra(30, 7)) {
        CHECK(p.vertex_count() - p.edge_count() + p.face_count() == 2);
        int degsum = 0;
        size_t min_face = 99;
        for (int v = 0; v < p.vertex_count(); ++v) {
            degsum += p.degree(v);
            CHECK(p.degree(v) >= 3);
        }
        for (const auto& f : p.faces()) min_face = std::min(min_face, f.size());
        CHECK(min_face >= 3);
        CHECK(degsum == 2 * p.edge_count());
    }
}

TEST_CASE("degree census") {
    DegreeCensus c = degree_census(shapes::cube());
    CHECK(c.n3 == 8);
    CHECK(c.n4 == 0);
    CHECK(c.higher == 0);
    CHECK(c.edges == 12);

    DegreeCensus s = degree_census(shapes::square_pyramid());
    CHECK(s.n3 == 4);
    CHECK(s.n4 == 1);
    CHECK(s.edges == 8);

    // N4 = 1, N3 = 6 forces 11 edges.
    CHECK((3 * 6 + 4 * 1) % 2 == 0);
    CHECK((3 * 6 + 4 * 1) / 2 == 11);
}

TEST_CASE("3-connectivity agrees with the all-pairs deletion oracle") {
    CHECK(is_three_connected(shapes::tetrahedron().skeleton()));
    CHECK(is_three_connected(shapes::cube().skeleton()));
    CHECK_FALSE(is_three_connected(testutil::lemma42_graph_a1()));

    for (const Polyhedron& p : testutil::random_polyhedra(15, 99)) {
        if (p.vertex_count() > 10) continue;
        SimpleGraph g = p.skeleton();
        CHECK(is_three_connected(g) == testutil::brute_three_connected(g));
    }
    // Non-3-connected raw graphs for the negative side.
    SimpleGraph cycle6(6);
    for (int i = 0; i < 6; ++i) cycle6.add_edge(i, (i + 1) % 6);
    CHECK(is_three_connected(cycle6) == testutil::brute_three_connected(cycle6));
    CHECK_FALSE(is_three_connected(cycle6));
    CHECK(is_three_connected(testutil::lemma42_graph_a1()) ==
          testutil::brute_three_connected(testutil::lemma42_graph_a1()));
    CHECK(is_three_connected(testutil::lemma42_graph_a2()) ==
          testutil::brute_three_connected(testutil::lemma42_graph_a2()));
    CHECK(is_three_connected(testutil::lemma42_graph_b()) ==
          testutil::brute_three_connected(testutil::lemma42_graph_b()));
}

TEST_CASE("canonical form matches brute-force isomorphism on small shapes") {
    std::vector<Polyhedron> shapes_small{shapes::tetrahedron(), shapes::cube(), shapes::octahedron(),
                                         shapes::prism(3),      shapes::pyramid(4)};
    for (size_t i = 0; i < shapes_small.size(); ++i)
        for (size_t j = 0; j < shapes_small.size(); ++j) {
            bool canon = isomorphic(shapes_small[i], shapes_small[j]);
            bool brute = testutil::brute_isomorphic(shapes_small[i], shapes_small[j]);
            CHECK(canon == brute);
        }
}

TEST_CASE("canonical form is invariant under relabeling, labels included") {
    LabeledPolyhedron lam = shapes::lambert_cube();
    for (unsigned seed : {1u, 2u, 3u, 4u}) {
        LabeledPolyhedron r = testutil::relabel(lam, seed);
        CHECK(canonical_form(r) == canonical_form(lam));
        CHECK(isomorphic(r, lam));
    }
    // Different labelings of the same skeleton must separate.
    LabeledPolyhedron right = LabeledPolyhedron::all_right(shapes::cube());
    CHECK_FALSE(isomorphic(right, lam));
    // Unlabeled non-isomorphic pairs must separate.
    CHECK_FALSE(isomorphic(shapes::prism(5), shapes::prism(6)));
    CHECK_FALSE(isomorphic(shapes::cube(), shapes::octahedron()));
}

TEST_CASE("vertex rotations are consistent with faces") {
    Polyhedron p = shapes::dodecahedron();
    for (int v = 0; v < p.vertex_count(); ++v) {
        CHECK(p.vertex_rotation(v).size() == static_cast<size_t>(p.degree(v)));
        CHECK(p.face_rotation(v).size() == static_cast<size_t>(p.degree(v)));
        for (int f : p.face_rotation(v)) {
            const auto& cyc = p.face(f);
            CHECK(std::find(cyc.begin(), cyc.end(), v) != cyc.end());
        }
    }
}
