#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "haken/rational.hpp"

namespace haken {

enum class PolyhedronError {
    NotSimple,        // face is not a simple cycle of length >= 3, or bad vertex indices
    NonManifoldEdge,  // some edge does not lie in exactly two faces
    DegreeTooLow,     // vertex of degree < 3
    NotThreeConnected,
    NotSphere,        // Euler characteristic != 2, or vertex link not a single cycle
};

class InvalidPolyhedron : public std::runtime_error {
  public:
    InvalidPolyhedron(PolyhedronError c, const std::string& what)
        : std::runtime_error(what), code_(c) {}
    PolyhedronError code() const { return code_; }

  private:
    PolyhedronError code_;
};

// Undirected simple graph on vertices 0..n-1. Used for the 1-skeleton and for
// the raw graphs of the exhaustive searches, which are not yet polyhedra.
struct SimpleGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    explicit SimpleGraph(int vertices = 0) : n(vertices), adj(vertices) {}

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int edge_count() const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

bool is_connected(const SimpleGraph& g);

// True iff removing any two vertices (with their incident edges) leaves the
// rest connected. Implemented as a single-vertex deletion plus an
// articulation-point scan; the all-pairs deletion oracle lives in the tests.
bool is_three_connected(const SimpleGraph& g);

// A cellulation of the 2-sphere whose 1-skeleton is a simple, planar,
// 3-connected graph (Steinitz: exactly the convex polyhedra, combinatorially).
// Faces are stored coherently oriented; all incidence data is derived at
// construction and immutable afterwards.
class Polyhedron {
  public:
    using Edge = std::pair<int, int>;  // sorted vertex pair

    static Polyhedron build_from_faces(const std::vector<std::vector<int>>& faces);

    int vertex_count() const { return v_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const std::vector<std::vector<int>>& faces() const { return faces_; }
    const std::vector<int>& face(int f) const { return faces_[f]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[e]; }

    int edge_index(int u, int v) const;  // -1 if absent
    const std::array<int, 2>& edge_faces(int e) const { return edge_faces_[e]; }

    int degree(int v) const { return static_cast<int>(rotation_[v].size()); }
    // Neighbours of v in the cyclic order induced by the embedding.
    const std::vector<int>& vertex_rotation(int v) const { return rotation_[v]; }
    // Faces around v, aligned with vertex_rotation: face_rotation(v)[i] is the
    // face between neighbours rotation[v][i] and rotation[v][i+1].
    const std::vector<int>& face_rotation(int v) const { return face_rotation_[v]; }

    const std::vector<int>& vertex_edges(int v) const { return vertex_edges_[v]; }

    // Edge shared by faces f and g, or -1.
    int shared_edge(int f, int g) const;
    // Vertices common to faces f and g.
    std::vector<int> shared_vertices(int f, int g) const;

    SimpleGraph skeleton() const;

    // Planar dual, embedded. Vertex i of the dual is face i of this
    // polyhedron; face j of the dual is vertex j (so edge indices of the dual
    // pair up with edges here via the incident face/vertex correspondence).
    Polyhedron dual() const;

  private:
    int v_ = 0;
    std::vector<std::vector<int>> faces_;
    std::vector<Edge> edges_;
    std::map<Edge, int> edge_index_;
    std::vector<std::array<int, 2>> edge_faces_;
    std::vector<std::vector<int>> rotation_;
    std::vector<std::vector<int>> face_rotation_;
    std::vector<std::vector<int>> vertex_edges_;
};

struct DegreeCensus {
    int n3 = 0;
    int n4 = 0;
    int higher = 0;
    int edges = 0;
};

// Vertex-degree counts. When no vertex has degree > 4 this satisfies the
// handshake identity 2E = 3*N3 + 4*N4.
DegreeCensus degree_census(const Polyhedron& p);

// (P, Theta): polyhedron plus a total non-obtuse labeling of its edges,
// indexed by edge id.
struct LabeledPolyhedron {
    Polyhedron base;
    std::vector<Angle> labels;

    LabeledPolyhedron(Polyhedron p, std::vector<Angle> l) : base(std::move(p)), labels(std::move(l)) {
        if (labels.size() != static_cast<size_t>(base.edge_count()))
            throw std::invalid_argument("label count must equal edge count");
    }

    static LabeledPolyhedron all_right(Polyhedron p) {
        std::vector<Angle> l(p.edge_count(), Angle::right());
        return LabeledPolyhedron(std::move(p), std::move(l));
    }

    const Angle& label(int edge_id) const { return labels[edge_id]; }
    const Angle& label(int u, int v) const { return labels[base.edge_index(u, v)]; }

    // Sum of the labels of the given edges, as a fraction of pi.
    Rational angle_sum(const std::vector<int>& edge_ids) const {
        Rational s(0);
        for (int e : edge_ids) s = s + labels[e].as_fraction_of_pi();
        return s;
    }
};

}  // namespace haken
