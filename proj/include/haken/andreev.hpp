#pragma once

#include <array>
#include <string>
#include <vector>

#include "haken/circuits.hpp"
#include "haken/polyhedron.hpp"

namespace haken {

// One failed instance of an Andreev condition. `sum` is the relevant angle
// sum as a fraction of pi where the condition compares a sum.
struct AndreevViolation {
    int condition = 0;
    std::vector<int> vertices;
    std::vector<int> edges;
    std::vector<int> faces;
    Rational sum;
    std::string detail;
};

// Verdict of the seven realizability conditions for a non-obtuse labeled
// abstract polyhedron. Violations are collected independently per condition
// rather than short-circuiting. Ideal vertices are the degree-4 vertices
// together with the degree-3 vertices whose incident labels sum to exactly
// pi, and are computed even when other conditions fail.
struct AndreevReport {
    bool realizable = false;
    bool too_few_vertices = false;  // the theorem requires more than 4 vertices
    std::array<std::vector<AndreevViolation>, 7> conditions;
    std::vector<int> ideal_vertices;
    std::vector<int> finite_vertices;
    std::vector<PrismaticCircuit> circuits3;
    std::vector<PrismaticCircuit> circuits4;

    const std::vector<AndreevViolation>& condition(int i) const { return conditions[i - 1]; }
    int total_violations() const {
        int n = 0;
        for (const auto& c : conditions) n += static_cast<int>(c.size());
        return n;
    }
};

AndreevReport check_andreev(const LabeledPolyhedron& lp);

std::vector<int> ideal_vertices(const LabeledPolyhedron& lp);

}  // namespace haken
