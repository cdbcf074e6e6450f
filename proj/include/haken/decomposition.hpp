#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "haken/andreev.hpp"
#include "haken/circuits.hpp"
#include "haken/polyhedron.hpp"

namespace haken {

class CrossingCircuitsError : public std::runtime_error {
  public:
    explicit CrossingCircuitsError(const std::string& w) : std::runtime_error(w) {}
};

class NoFreeQuadError : public std::runtime_error {
  public:
    NoFreeQuadError(int leaf, const std::string& w) : std::runtime_error(w), leaf_(leaf) {}
    int leaf() const { return leaf_; }

  private:
    int leaf_;
};

struct FaceProvenance {
    enum Kind { Original, Truncated, CutFace } kind = Original;
    int parent_face = -1;  // meaningful for Original / Truncated
};

// One side of a cut: the piece, plus maps back into the parent. Cut vertices
// map to -1 in vertex_map and carry the circuit position of the crossed edge
// they sit on in cut_position.
struct CutSide {
    LabeledPolyhedron piece;
    std::vector<int> vertex_map;     // piece vertex -> parent vertex (-1 for cut vertices)
    std::vector<int> cut_position;   // piece vertex -> index i into circuit.edges (-1 otherwise)
    std::vector<FaceProvenance> face_prov;
};

// Cutting a labeled polyhedron along a prismatic circuit. Both sides gain one
// new k-gon face whose edges are labeled pi/2; each crossed edge is split in
// two halves that keep the original label.
struct CutResult {
    PrismaticCircuit circuit;
    std::vector<CutSide> sides;  // exactly 2
};

CutResult cut_along(const LabeledPolyhedron& lp, const PrismaticCircuit& circuit);

// Inverse of cut_along; reconstructs the parent up to relabeling of vertices.
LabeledPolyhedron reglue(const CutResult& cut);

// Decomposition along the essential prismatic 3-circuits: those whose three
// crossed labels are integer submultiples pi/p, pi/q, pi/r with
// 1/p + 1/q + 1/r < 1 (a hyperbolic turnover) and which are not parallel to
// an all-right triangular face (such a turnover doubly covers that face and
// is not cut). Iterated until no essential circuit remains.
struct DunbarDecomposition {
    std::vector<LabeledPolyhedron> components;        // canonically sorted
    std::vector<PrismaticCircuit> cut_circuits;       // in the coordinates of the piece each was cut from
    std::vector<std::array<int, 3>> turnover_types;   // (p, q, r) sorted ascending, one per cut
    std::vector<CutResult> cut_log;                   // in cut order, for round-trip checks
    std::vector<LabeledPolyhedron> cut_parents;       // piece each logged cut applied to
};

DunbarDecomposition dunbar_cut(const LabeledPolyhedron& lp);

// Essential-circuit filter exposed for diagnostics: circuits of lp that
// dunbar_cut would cut.
std::vector<PrismaticCircuit> essential_prismatic_3_circuits(const LabeledPolyhedron& lp);

// Succeeds iff lp is combinatorially a tetrahedron with a (possibly empty)
// set of truncated vertices; each truncation face must be a triangle with all
// three labels pi/2 whose corners have degree 3. The witness lists the
// truncation faces (one per truncated vertex).
struct GenTetWitness {
    std::vector<int> truncation_faces;
};

std::optional<GenTetWitness> is_generalized_tetrahedron(const LabeledPolyhedron& lp);

enum class Verdict { Small, Haken };

struct Classification {
    Verdict verdict = Verdict::Haken;
    std::optional<GenTetWitness> witness;
};

// Per-component classification of the Dunbar decomposition. The whole
// polyhedron is itself small or Haken only when the decomposition is a
// single component.
struct ClassificationReport {
    DunbarDecomposition decomposition;
    std::vector<Classification> components;
    enum class Overall { Small, Haken, Decomposed } overall = Overall::Decomposed;
};

ClassificationReport classify(const LabeledPolyhedron& lp);

// n iff p consists of two n-gons joined by a belt of n quadrilaterals.
std::optional<int> is_prism(const Polyhedron& p);

// Tree of n-prisms (n >= 5) obtained by recursively cutting along prismatic
// 4-circuits, for polyhedra of graph type. Each edge records the glue
// quadrilateral in both incident pieces.
struct PrismTreeNode {
    LabeledPolyhedron piece;
    int prism_size = 0;
    std::vector<FaceProvenance> face_prov;  // relative to the original polyhedron
};

struct PrismTreeEdge {
    int a = -1, b = -1;          // node indices
    int quad_a = -1, quad_b = -1;  // glue-quad face index within each piece
};

struct PrismTree {
    std::vector<PrismTreeNode> nodes;
    std::vector<PrismTreeEdge> edges;
    int leaf_count = 0;
    int ambiguous_cuts = 0;  // steps where more than one candidate circuit existed
    std::vector<std::vector<int>> original_faces;
    std::vector<CutResult> cut_log;
    std::vector<LabeledPolyhedron> cut_parents;

    int node_degree(int i) const {
        int d = 0;
        for (const auto& e : edges) d += (e.a == i) + (e.b == i);
        return d;
    }
};

std::optional<PrismTree> prism_tree(const Polyhedron& p);

// Free-quadrilateral census for graph-type volume bounds: for each leaf prism
// of the tree, selects one free quadrilateral of lp (an untouched original
// quad face with all-right boundary, at least one pi/3 corner, minimising the
// number of pi/3 corners) and counts its pi/3 corners. Requires every label
// of lp to be pi/2 or pi/3.
struct QuadCounts {
    int m1 = 0, m2 = 0, m3 = 0, m4 = 0;
    int total() const { return m1 + m2 + m3 + m4; }
    int weighted() const { return m1 + 2 * m2 + 3 * m3 + 4 * m4; }
};

QuadCounts count_free_quads(const PrismTree& tree, const LabeledPolyhedron& lp);

}  // namespace haken
