#include "haken/andreev.hpp"

#include <algorithm>

#include "haken/canonical.hpp"
#include "haken/shapes.hpp"

namespace haken {

std::vector<int> ideal_vertices(const LabeledPolyhedron& lp) {
    const Polyhedron& p = lp.base;
    std::vector<int> ideal;
    for (int v = 0; v < p.vertex_count(); ++v) {
        if (p.degree(v) == 4) {
            ideal.push_back(v);
        } else if (p.degree(v) == 3 && lp.angle_sum(p.vertex_edges(v)) == Rational(1)) {
            ideal.push_back(v);
        }
    }
    return ideal;
}

AndreevReport check_andreev(const LabeledPolyhedron& lp) {
    const Polyhedron& p = lp.base;
    AndreevReport r;
    r.too_few_vertices = p.vertex_count() <= 4;

    // (1) every vertex meets 3 or 4 edges
    for (int v = 0; v < p.vertex_count(); ++v) {
        if (p.degree(v) > 4) {
            AndreevViolation viol;
            viol.condition = 1;
            viol.vertices = {v};
            viol.detail = "vertex " + std::to_string(v) + " has degree " + std::to_string(p.degree(v));
            r.conditions[0].push_back(std::move(viol));
        }
    }

    // (2) degree-3 angle sums >= pi, (3) degree-4 sums = 2 pi
    for (int v = 0; v < p.vertex_count(); ++v) {
        Rational s = lp.angle_sum(p.vertex_edges(v));
        if (p.degree(v) == 3 && s < Rational(1)) {
            AndreevViolation viol;
            viol.condition = 2;
            viol.vertices = {v};
            viol.edges = p.vertex_edges(v);
            viol.sum = s;
            viol.detail = "degree-3 vertex " + std::to_string(v) + " has angle sum " + s.str() + " pi < pi";
            r.conditions[1].push_back(std::move(viol));
        } else if (p.degree(v) == 4 && s != Rational(2)) {
            AndreevViolation viol;
            viol.condition = 3;
            viol.vertices = {v};
            viol.edges = p.vertex_edges(v);
            viol.sum = s;
            viol.detail = "degree-4 vertex " + std::to_string(v) + " has angle sum " + s.str() + " pi != 2 pi";
            r.conditions[2].push_back(std::move(viol));
        }
    }

    // (4) prismatic 3-circuit sums < pi, (5) prismatic 4-circuit sums < 2 pi
    r.circuits3 = find_prismatic_circuits(p, 3);
    r.circuits4 = find_prismatic_circuits(p, 4);
    for (const auto& c : r.circuits3) {
        Rational s = lp.angle_sum(c.edges);
        if (s >= Rational(1)) {
            AndreevViolation viol;
            viol.condition = 4;
            viol.edges = c.edges;
            viol.faces = c.faces;
            viol.sum = s;
            viol.detail = "prismatic 3-circuit has angle sum " + s.str() + " pi >= pi";
            r.conditions[3].push_back(std::move(viol));
        }
    }
    for (const auto& c : r.circuits4) {
        Rational s = lp.angle_sum(c.edges);
        if (s >= Rational(2)) {
            AndreevViolation viol;
            viol.condition = 5;
            viol.edges = c.edges;
            viol.faces = c.faces;
            viol.sum = s;
            viol.detail = "prismatic 4-circuit has angle sum " + s.str() + " pi >= 2 pi";
            r.conditions[4].push_back(std::move(viol));
        }
    }

    // (6) triangular prism: the six edges along the two triangles sum < 3 pi
    if (p.vertex_count() == 6 && p.face_count() == 5 && isomorphic(p, shapes::prism(3))) {
        std::vector<int> tri_edges;
        for (int f = 0; f < p.face_count(); ++f) {
            if (p.face(f).size() != 3) continue;
            const auto& cyc = p.face(f);
            for (size_t i = 0; i < 3; ++i) tri_edges.push_back(p.edge_index(cyc[i], cyc[(i + 1) % 3]));
        }
        Rational s = lp.angle_sum(tri_edges);
        if (s >= Rational(3)) {
            AndreevViolation viol;
            viol.condition = 6;
            viol.edges = tri_edges;
            viol.sum = s;
            viol.detail = "triangular prism: triangle-face edges sum to " + s.str() + " pi >= 3 pi";
            r.conditions[5].push_back(std::move(viol));
        }
    }

    // (7) faces meeting in exactly one ideal vertex: for every chain
    // F_i - F_j - F_k with the ideal vertex off both chain edges, the two
    // chain labels must sum below pi.
    r.ideal_vertices = ideal_vertices(lp);
    for (int v = 0; v < p.vertex_count(); ++v)
        if (!std::binary_search(r.ideal_vertices.begin(), r.ideal_vertices.end(), v))
            r.finite_vertices.push_back(v);

    int nf = p.face_count();
    for (int fi = 0; fi < nf; ++fi) {
        for (int fk = fi + 1; fk < nf; ++fk) {
            if (p.shared_edge(fi, fk) >= 0) continue;
            std::vector<int> common = p.shared_vertices(fi, fk);
            if (common.size() != 1) continue;
            int v = common[0];
            if (!std::binary_search(r.ideal_vertices.begin(), r.ideal_vertices.end(), v)) continue;
            for (int fj = 0; fj < nf; ++fj) {
                if (fj == fi || fj == fk) continue;
                int eij = p.shared_edge(fi, fj), ejk = p.shared_edge(fj, fk);
                if (eij < 0 || ejk < 0) continue;
                auto touches = [&](int e) { return p.edge(e).first == v || p.edge(e).second == v; };
                if (touches(eij) || touches(ejk)) continue;
                Rational s = lp.labels[eij].as_fraction_of_pi() + lp.labels[ejk].as_fraction_of_pi();
                if (s >= Rational(1)) {
                    AndreevViolation viol;
                    viol.condition = 7;
                    viol.vertices = {v};
                    viol.edges = {eij, ejk};
                    viol.faces = {fi, fj, fk};
                    viol.sum = s;
                    viol.detail = "faces " + std::to_string(fi) + "," + std::to_string(fk) +
                                  " meet only at ideal vertex " + std::to_string(v) +
                                  "; chain through face " + std::to_string(fj) + " sums to " + s.str() +
                                  " pi >= pi";
                    r.conditions[6].push_back(std::move(viol));
                }
            }
        }
    }

    r.realizable = r.total_violations() == 0 && !r.too_few_vertices;
    return r;
}

}  // namespace haken
