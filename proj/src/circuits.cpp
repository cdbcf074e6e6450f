#include "haken/circuits.hpp"

#include <algorithm>
#include <set>

namespace haken {

void PrismaticCircuit::canonicalize() {
    PrismaticCircuit best = *this;
    bool first = true;
    for (int dir : {1, -1}) {
        for (int r = 0; r < k; ++r) {
            PrismaticCircuit cand;
            cand.k = k;
            for (int i = 0; i < k; ++i) {
                int idx = ((r + dir * i) % k + k) % k;
                cand.edges.push_back(edges[idx]);
                // Reversing the circuit shifts the face/edge alignment by one:
                // edges[i] joins faces[i] and faces[i+1], so the face list of
                // the reversed circuit starts one step further along.
                int fidx = dir == 1 ? idx : (idx + 1) % k;
                cand.faces.push_back(faces[fidx]);
            }
            if (first || cand < best) {
                best = cand;
                first = false;
            }
        }
    }
    *this = best;
}

namespace {

bool edges_vertex_disjoint(const Polyhedron& p, const std::vector<int>& edge_ids) {
    std::set<int> seen;
    for (int e : edge_ids) {
        auto [u, v] = p.edge(e);
        if (!seen.insert(u).second || !seen.insert(v).second) return false;
    }
    return true;
}

}  // namespace

std::vector<PrismaticCircuit> find_prismatic_circuits(const Polyhedron& p, int k) {
    if (k != 3 && k != 4) throw std::invalid_argument("only prismatic 3- and 4-circuits are meaningful");
    int nf = p.face_count();
    std::set<PrismaticCircuit> out;

    auto try_circuit = [&](std::vector<int> fs) {
        std::vector<int> es;
        for (int i = 0; i < k; ++i) {
            int e = p.shared_edge(fs[i], fs[(i + 1) % k]);
            if (e < 0) return;
            es.push_back(e);
        }
        if (std::set<int>(es.begin(), es.end()).size() != static_cast<size_t>(k)) return;
        if (!edges_vertex_disjoint(p, es)) return;
        PrismaticCircuit c;
        c.k = k;
        c.faces = std::move(fs);
        c.edges = std::move(es);
        c.canonicalize();
        out.insert(std::move(c));
    };

    if (k == 3) {
        for (int a = 0; a < nf; ++a)
            for (int b = a + 1; b < nf; ++b) {
                if (p.shared_edge(a, b) < 0) continue;
                for (int c = b + 1; c < nf; ++c) try_circuit({a, b, c});
            }
    } else {
        for (int a = 0; a < nf; ++a)
            for (int b = a + 1; b < nf; ++b) {
                if (p.shared_edge(a, b) < 0) continue;
                for (int c = a + 1; c < nf; ++c) {
                    if (c == b || p.shared_edge(b, c) < 0) continue;
                    for (int d = b + 1; d < nf; ++d) {
                        if (d == c || d == a) continue;
                        // a is the least face and b < d fixes the direction.
                        try_circuit({a, b, c, d});
                    }
                }
            }
    }
    return {out.begin(), out.end()};
}

bool circuits_cross(const Polyhedron& p, const PrismaticCircuit& a, const PrismaticCircuit& b) {
    for (int f : a.faces) {
        if (std::find(b.faces.begin(), b.faces.end(), f) == b.faces.end()) continue;
        auto chord = [&](const PrismaticCircuit& c) {
            std::vector<int> es;
            for (int e : c.edges)
                if (p.edge_faces(e)[0] == f || p.edge_faces(e)[1] == f) es.push_back(e);
            return es;
        };
        std::vector<int> ca = chord(a), cb = chord(b);
        if (ca.size() != 2 || cb.size() != 2) continue;
        if (ca[0] == cb[0] || ca[0] == cb[1] || ca[1] == cb[0] || ca[1] == cb[1]) continue;
        // Tag the four crossing edges along the face boundary; the chords
        // cross iff the tags alternate.
        const auto& cyc = p.face(f);
        std::vector<int> tags;
        for (size_t i = 0; i < cyc.size(); ++i) {
            int e = p.edge_index(cyc[i], cyc[(i + 1) % cyc.size()]);
            if (e == ca[0] || e == ca[1]) tags.push_back(0);
            if (e == cb[0] || e == cb[1]) tags.push_back(1);
        }
        if (tags.size() == 4 && tags[0] != tags[1] && tags[1] != tags[2] && tags[2] != tags[3])
            return true;
    }
    return false;
}

}  // namespace haken
