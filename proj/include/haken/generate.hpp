#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "haken/polyhedron.hpp"

namespace haken {

// Every labeled simple graph on vertices 0..n-1 in which vertex i has degree
// degrees[i]. Backtracks over vertex pairs in lexicographic order; callers
// deduplicate isomorphs. Graphs may be disconnected.
void enumerate_degree_graphs(const std::vector<int>& degrees,
                             const std::function<void(const SimpleGraph&)>& emit);

// A spherical embedding of g as a face list, if one exists, found by
// searching rotation systems and tracing faces until the Euler count hits 2.
std::optional<std::vector<std::vector<int>>> planar_embedding(const SimpleGraph& g);

// Number of rotation systems planar_embedding would have to search.
double rotation_system_count(const SimpleGraph& g);

// Canonical form of a bare graph by minimising the adjacency matrix over all
// vertex permutations. Exponential; intended for the small graphs of the
// exhaustive case analyses.
std::vector<std::uint64_t> graph_canonical_form(const SimpleGraph& g);

}  // namespace haken
