#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "haken/polyhedron.hpp"

namespace haken {

class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& w) : std::runtime_error(w) {}
};

// Polyhedron file format (JSON):
//   {
//     "format": 1,
//     "faces": [[0,1,3,2], ...],            // cyclic vertex lists
//     "angles": [ {"edge": [u,v], "pi_over": n},
//                 {"edge": [u,v], "num": p, "den": q}, ... ]
//   }
// Edges without an entry in "angles" default to pi/2. Structural problems
// the parser can see (bigon faces, bad indices, malformed angles) raise
// ParseError; deeper validity is left to Polyhedron::build_from_faces.
LabeledPolyhedron parse_polyhedron_json(const nlohmann::json& j);
LabeledPolyhedron load_polyhedron_file(const std::string& path);

nlohmann::ordered_json polyhedron_to_json(const LabeledPolyhedron& lp);

}  // namespace haken
