#include "haken/shapes.hpp"

#include <algorithm>
#include <map>

namespace haken {
namespace shapes {

Polyhedron tetrahedron() {
    return Polyhedron::build_from_faces({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
}

Polyhedron cube() {
    // Vertex v = x + 2y + 4z over the unit cube corners.
    return Polyhedron::build_from_faces({
        {0, 1, 3, 2},  // z = 0
        {4, 6, 7, 5},  // z = 1
        {0, 4, 5, 1},  // y = 0
        {2, 3, 7, 6},  // y = 1
        {0, 2, 6, 4},  // x = 0
        {1, 5, 7, 3},  // x = 1
    });
}

Polyhedron octahedron() {
    return Polyhedron::build_from_faces({
        {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
        {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4},
    });
}

Polyhedron square_pyramid() { return pyramid(4); }

Polyhedron prism(int n) {
    if (n < 3) throw std::invalid_argument("prism needs n >= 3");
    std::vector<std::vector<int>> faces;
    std::vector<int> top(n), bottom(n);
    for (int i = 0; i < n; ++i) top[i] = i;
    for (int i = 0; i < n; ++i) bottom[i] = n + (n - 1 - i);
    faces.push_back(top);
    faces.push_back(bottom);
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        faces.push_back({i, j, n + j, n + i});
    }
    return Polyhedron::build_from_faces(faces);
}

Polyhedron pyramid(int n) {
    if (n < 3) throw std::invalid_argument("pyramid needs n >= 3");
    std::vector<std::vector<int>> faces;
    std::vector<int> base(n);
    for (int i = 0; i < n; ++i) base[i] = i;
    faces.push_back(base);
    for (int i = 0; i < n; ++i) faces.push_back({(i + 1) % n, i, n});
    return Polyhedron::build_from_faces(faces);
}

Polyhedron dodecahedron() {
    // Rings bottom to top: b = 0..4, m = 5..9, u = 10..14, t = 15..19.
    // u_i is adjacent to m_i and m_{i+1}.
    std::vector<std::vector<int>> faces;
    faces.push_back({0, 1, 2, 3, 4});
    for (int i = 0; i < 5; ++i) {
        int j = (i + 1) % 5;
        faces.push_back({i, j, 5 + j, 10 + i, 5 + i});
    }
    for (int i = 0; i < 5; ++i) {
        int j = (i + 1) % 5;
        faces.push_back({15 + i, 15 + j, 10 + j, 5 + j, 10 + i});
    }
    faces.push_back({15, 16, 17, 18, 19});
    return Polyhedron::build_from_faces(faces);
}

Polyhedron glued_pentagonal_prisms() {
    // Quarter-turned gluing: each cap of one prism merges with a belt quad of
    // the other, so the result is not itself a prism. Vertices 0..5 survive
    // from prism A (a2,a3,a4,a7,a8,a9), 6..11 from prism B.
    return Polyhedron::build_from_faces({
        {0, 1, 2, 6, 9},     // top of A + belt quad of B
        {0, 3, 11, 10, 9},   // belt quad of A + bottom of B
        {3, 4, 5, 8, 11},    // bottom of A + belt quad of B
        {5, 2, 6, 7, 8},     // belt quad of A + top of B
        {0, 1, 4, 3},        // free quad of A
        {1, 2, 5, 4},        // free quad of A
        {6, 7, 10, 9},       // free quad of B
        {7, 8, 11, 10},      // free quad of B
    });
}

Polyhedron truncate_vertex(const Polyhedron& p, int v) {
    int deg = p.degree(v);
    int nv = p.vertex_count();
    auto remap = [&](int w) { return w > v ? w - 1 : w; };

    // New vertex per incident edge, in rotation order around v.
    const auto& rot = p.vertex_rotation(v);
    std::map<int, int> cut_vertex;  // neighbour -> new vertex id
    for (int k = 0; k < deg; ++k) cut_vertex[rot[k]] = nv - 1 + k;

    std::vector<std::vector<int>> faces;
    for (const auto& f : p.faces()) {
        std::vector<int> g;
        for (size_t i = 0; i < f.size(); ++i) {
            if (f[i] != v) {
                g.push_back(remap(f[i]));
                continue;
            }
            // v sat between f[i-1] and f[i+1]; replace it by the two cut
            // vertices on those edges, in face order.
            int prev = f[(i + f.size() - 1) % f.size()];
            int next = f[(i + 1) % f.size()];
            g.push_back(cut_vertex.at(prev));
            g.push_back(cut_vertex.at(next));
        }
        faces.push_back(std::move(g));
    }
    std::vector<int> truncation_face;
    for (int k = 0; k < deg; ++k) truncation_face.push_back(cut_vertex.at(rot[k]));
    faces.push_back(std::move(truncation_face));
    return Polyhedron::build_from_faces(faces);
}

Polyhedron stellate_face(const Polyhedron& p, int fi) {
    int apex = p.vertex_count();
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < p.face_count(); ++i)
        if (i != fi) faces.push_back(p.face(i));
    const auto& f = p.face(fi);
    for (size_t i = 0; i < f.size(); ++i)
        faces.push_back({f[i], f[(i + 1) % f.size()], apex});
    return Polyhedron::build_from_faces(faces);
}

LabeledPolyhedron lambert_cube() {
    Polyhedron c = cube();
    std::vector<Angle> labels(c.edge_count(), Angle::right());
    // One edge from each parallel class; pairwise disjoint, no two on a
    // common face.
    labels[c.edge_index(0, 1)] = Angle::pi_over(3);
    labels[c.edge_index(4, 6)] = Angle::pi_over(3);
    labels[c.edge_index(3, 7)] = Angle::pi_over(3);
    return LabeledPolyhedron(std::move(c), std::move(labels));
}

LabeledPolyhedron tetrahedron_353() {
    Polyhedron t = tetrahedron();
    // Faces 0..3; the chain runs edge(F0,F1), edge(F1,F2), edge(F2,F3).
    std::vector<Angle> labels(t.edge_count(), Angle::right());
    auto chain_edge = [&](int f, int g) { return t.shared_edge(f, g); };
    labels[chain_edge(0, 1)] = Angle::pi_over(3);
    labels[chain_edge(1, 2)] = Angle::pi_over(5);
    labels[chain_edge(2, 3)] = Angle::pi_over(3);
    return LabeledPolyhedron(std::move(t), std::move(labels));
}

LabeledPolyhedron coxeter_prism_233(int p, int q, int r) {
    Polyhedron pr = prism(3);
    std::vector<Angle> labels(pr.edge_count(), Angle::right());
    // Triangle labels (pi/2, pi/3, pi/3) on each cap.
    labels[pr.edge_index(0, 1)] = Angle::right();
    labels[pr.edge_index(1, 2)] = Angle::pi_over(3);
    labels[pr.edge_index(2, 0)] = Angle::pi_over(3);
    labels[pr.edge_index(3, 4)] = Angle::right();
    labels[pr.edge_index(4, 5)] = Angle::pi_over(3);
    labels[pr.edge_index(5, 3)] = Angle::pi_over(3);
    labels[pr.edge_index(0, 3)] = Angle::pi_over(p);
    labels[pr.edge_index(1, 4)] = Angle::pi_over(q);
    labels[pr.edge_index(2, 5)] = Angle::pi_over(r);
    return LabeledPolyhedron(std::move(pr), std::move(labels));
}

}  // namespace shapes
}  // namespace haken
