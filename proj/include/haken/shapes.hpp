#pragma once

#include "haken/polyhedron.hpp"

namespace haken {
namespace shapes {

Polyhedron tetrahedron();
Polyhedron cube();
Polyhedron octahedron();
Polyhedron square_pyramid();
Polyhedron prism(int n);         // two n-gons joined by a belt of n quadrilaterals
Polyhedron pyramid(int n);       // n-gon base plus apex
Polyhedron dodecahedron();
// Two pentagonal prisms joined along a quadrilateral: the glued quad and its
// four edges vanish and the faces across them merge, leaving 12 vertices,
// 18 edges and 8 faces (four merged pentagons and four free belt quads).
Polyhedron glued_pentagonal_prisms();

// Truncate vertex v: the vertex is replaced by a deg(v)-gon face. New
// vertices are appended after the surviving originals; old vertex w maps to
// w minus (w > v ? 1 : 0).
Polyhedron truncate_vertex(const Polyhedron& p, int v);

// Erect an apex over face f (apex has degree |f|).
Polyhedron stellate_face(const Polyhedron& p, int f);

// Lambert cube: three pairwise disjoint, mutually non-cofacial pi/3 edges,
// one on each prismatic 4-circuit; every other dihedral angle pi/2.
LabeledPolyhedron lambert_cube();

// Coxeter tetrahedron with linear diagram 3-5-3: dihedral angles pi/3, pi/5,
// pi/3 along a chain of edges, pi/2 on the rest.
LabeledPolyhedron tetrahedron_353();

// Triangular prism whose two triangles carry labels (pi/2, pi/3, pi/3) and
// whose three vertical (square-square) edges carry pi/p, pi/q, pi/r.
LabeledPolyhedron coxeter_prism_233(int p, int q, int r);

}  // namespace shapes
}  // namespace haken
