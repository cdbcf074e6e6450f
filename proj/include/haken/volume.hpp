#pragma once

#include <functional>
#include <string>

#include "haken/rational.hpp"

namespace haken {

// Lobachevsky function L(theta) = -int_0^theta log|2 sin t| dt, odd and
// pi-periodic. Series evaluation, absolute accuracy well below 1e-10.
double lobachevsky(double theta);

// Volume of the regular ideal octahedron, 8 L(pi/4) = 3.663862...
double ideal_octahedron_volume();

// Regular truncated tetrahedron T_theta with dihedral angle theta along the
// edges between truncating planes. Edge length r and theta are tied by
// cosh r = cos theta / (2 cos theta - 1), valid for theta in [0, pi/3).

// r as a function of theta. Throws std::domain_error outside [0, pi/3).
double trunc_tet_edge_length(double theta);

// theta as a function of r >= 0 (the inverse of trunc_tet_edge_length).
double trunc_tet_dihedral(double r);

// vol(T_theta) = V8 - 3 int_0^theta arccosh(cos t / (2 cos t - 1)) dt,
// absolute accuracy 1e-9. Strictly decreasing in theta.
double trunc_tet_volume(double theta);

// rho_3(r): volume of T_theta(r) divided by the total area 4(pi - 3 theta(r))
// of its faces. Increasing in r; rho_3(0) = V8 / (4 pi) = 0.291560...
double volume_area_ratio(double r);

struct VolumeBound {
    enum class Kind { VertexCount, MiyamotoBoundary, GraphTypeQuads } kind = Kind::VertexCount;
    double value = 0.0;
    bool strict = false;   // whether the underlying inequality is strict
    bool clamped = false;  // negative vertex-count bound clamped to zero
    int n3 = 0, n4 = 0;    // VertexCount inputs
    int k = 0;             // MiyamotoBoundary inputs
    Rational x;
    int m1 = 0, m2 = 0, m3 = 0, m4 = 0;  // GraphTypeQuads inputs
    double l = 0.0;

    std::string kind_name() const;
};

// Volume lower bound (4 N4 + N3 - 8)/32 * V8 for non-obtuse polyhedra with
// no prismatic 4-circuits (strict). A negative value is clamped to zero and
// flagged.
VolumeBound vertex_count_bound(int n3, int n4);

// Orbifold Euler characteristic of a mirrored polygon with corner
// reflection orders n_i: chi = 1 - k/2 + sum 1/(2 n_i). Area = -2 pi chi.
Rational mirrored_polygon_chi(const std::vector<int>& corner_orders);

// Lower bound for the length of a return path in an orbifold with totally
// geodesic boundary: the edge length of T_theta at
// theta = pi / (3 (1 - k chi)), where chi = chi(boundary) < 0 and k is the
// maximal order of an elliptic element of the boundary.
double return_path_bound(int k, const Rational& chi_boundary);

// Volume lower bound for a polyhedron cut along totally geodesic
// 2-suborbifolds of total Euler characteristic -x (x > 0). Cutting doubles
// the boundary, so the return-path angle is pi / (3 (1 + 2 k x)); with
// R = f(theta0)/2 the bound is 2 pi x * rho_3(R).
VolumeBound miyamoto_bound(int k, const Rational& x);

// Graph-type bound (pi/6) (m1 + 2 m2 + 3 m3 + 4 m4) rho_3(l/2), where m_i
// counts selected free quadrilaterals with i interior angles pi/3 and l
// bounds the return-path length below (l = 0 uses the minimum of rho_3).
VolumeBound graph_type_bound(int m1, int m2, int m3, int m4, double l);

namespace quadrature {

// Recursive adaptive Simpson with absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol);

// Composite 16-point Gauss-Legendre on uniform panels.
double gauss_legendre(const std::function<double(double)>& f, double a, double b, int panels);

// Composite Gauss-Legendre on panels graded geometrically toward b; handles
// an integrable logarithmic singularity at (or just beyond) the upper end.
double graded_gauss_legendre(const std::function<double(double)>& f, double a, double b);

}  // namespace quadrature

}  // namespace haken
