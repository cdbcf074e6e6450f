#pragma once

#include <vector>

#include "haken/polyhedron.hpp"

namespace haken {

// A prismatic k-circuit: a simple closed curve of k edges in the planar dual
// such that no two of its edges lie in a common dual face. Equivalently, the
// k crossed edges of P are pairwise vertex-disjoint. faces[i] and
// faces[(i+1) % k] share edges[i].
struct PrismaticCircuit {
    int k = 0;
    std::vector<int> faces;
    std::vector<int> edges;

    // Lexicographically least edge-id sequence over all rotations and both
    // directions, with faces realigned to match.
    void canonicalize();

    bool operator==(const PrismaticCircuit& o) const { return edges == o.edges && faces == o.faces; }
    bool operator<(const PrismaticCircuit& o) const {
        return edges != o.edges ? edges < o.edges : faces < o.faces;
    }
};

// All prismatic k-circuits (k = 3 or 4) up to rotation and reflection, in
// canonical order.
std::vector<PrismaticCircuit> find_prismatic_circuits(const Polyhedron& p, int k);

// True iff the two circuits cannot be realised disjointly: at some common
// face their chords interleave around the boundary.
bool circuits_cross(const Polyhedron& p, const PrismaticCircuit& a, const PrismaticCircuit& b);

}  // namespace haken
