#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "haken/decomposition.hpp"
#include "haken/polyhedron.hpp"

namespace haken {

class ScaleExceededError : public std::runtime_error {
  public:
    explicit ScaleExceededError(const std::string& w) : std::runtime_error(w) {}
};

// A numeric constant cited by a certificate. Provenance is "published" for
// values imported from the literature (this tool does not recompute them)
// and "computed" for values produced by the volume machinery here.
struct ReferencedConstant {
    double value = 0.0;
    std::string provenance;  // "published" or "computed"
    std::string note;
};

struct CertStep {
    std::string id;
    std::string claim;
    bool passed = false;
    nlohmann::ordered_json payload;
};

// Machine-checkable trace of a finite case analysis: ordered steps, each with
// a claim, a pass/fail status and a numeric payload, plus the table of every
// constant the steps cite.
struct Certificate {
    std::string name;
    std::vector<CertStep> steps;
    std::map<std::string, ReferencedConstant> constants;

    bool passed() const;
    // passed() and every cited constant carries a recognised provenance tag.
    bool validate() const;
    nlohmann::ordered_json to_json() const;
};

// One labeling class of the minimal-cube enumeration: a cube with exactly one
// pi/3 edge on each of its three prismatic 4-circuits, all other edges pi/2.
struct LabeledCubeClass {
    LabeledPolyhedron cube;
    int orbit_size = 0;
    std::vector<std::pair<int, int>> sharp_edges;  // vertex pairs of the pi/3 edges
    bool lambert_pattern = false;  // pairwise disjoint and mutually non-cofacial
};

// The 64 labelings quotiented by cube symmetry: exactly four classes, the
// Lambert pattern first, the rest in canonical-form order.
std::vector<LabeledCubeClass> enumerate_min_cubes();

// Exhaustive search for right-angled realizable polyhedra with n4 degree-4
// and n3 degree-3 vertices: enumerates the simple planar 3-connected graphs
// with that degree sequence up to isomorphism, labels every edge pi/2 and
// keeps the ones Andreev admits.
std::vector<Polyhedron> search_right_angled(int n4, int n3);

// Structured replay of the argument that no right-angled polyhedron has one
// degree-4 and six degree-3 vertices, cross-checked against the exhaustive
// search.
Certificate lemma_4_2_trace();

// Case table for graph-type polyhedra: each free-quad census either beats the
// Lambert cube volume outright or (m1 = 2) falls back to the orbifold
// boundary bound.
Certificate graph_type_case_table();

// Full branch structure of the minimality argument for the Lambert cube.
Certificate theorem_1_1_report();

}  // namespace haken
