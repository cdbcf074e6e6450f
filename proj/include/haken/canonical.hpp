#pragma once

#include <cstdint>
#include <vector>

#include "haken/polyhedron.hpp"

namespace haken {

// Canonical invariant of an embedded polyhedron (optionally with edge
// labels). Computed by relabeling vertices along a deterministic traversal of
// the rotation system and minimising over every starting dart and both
// orientations; reflections are therefore quotiented out. For 3-connected
// planar graphs the embedding is unique up to reflection (Whitney), so equal
// signatures coincide with abstract graph isomorphism.
using Signature = std::vector<std::int64_t>;

Signature canonical_form(const Polyhedron& p);
Signature canonical_form(const LabeledPolyhedron& lp);

bool isomorphic(const Polyhedron& a, const Polyhedron& b);
bool isomorphic(const LabeledPolyhedron& a, const LabeledPolyhedron& b);

}  // namespace haken
