#include "haken/canonical.hpp"

#include <algorithm>

namespace haken {

namespace {

// Neighbour sequence of v starting at neighbour `from`, walking the rotation
// in direction dir (+1/-1).
void rotation_from(const Polyhedron& p, int v, int from, int dir, std::vector<int>& out) {
    const auto& rot = p.vertex_rotation(v);
    int deg = static_cast<int>(rot.size());
    int start = 0;
    while (rot[start] != from) ++start;
    out.clear();
    for (int k = 0; k < deg; ++k) out.push_back(rot[((start + dir * k) % deg + deg) % deg]);
}

Signature signature_from(const Polyhedron& p, const std::vector<Angle>* labels, int u0, int v0, int dir) {
    int n = p.vertex_count();
    std::vector<int> new_label(n, -1), entry(n, -1), order;
    order.reserve(n);

    new_label[u0] = 0;
    entry[u0] = v0;
    order.push_back(u0);
    std::vector<int> seq;
    for (size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        rotation_from(p, v, entry[v], dir, seq);
        for (int a : seq) {
            if (new_label[a] < 0) {
                new_label[a] = static_cast<int>(order.size());
                entry[a] = v;
                order.push_back(a);
            }
        }
    }

    Signature sig;
    sig.reserve(2 * n + 4 * p.edge_count());
    for (int v : order) {
        rotation_from(p, v, entry[v], dir, seq);
        sig.push_back(static_cast<std::int64_t>(seq.size()));
        for (int a : seq) {
            sig.push_back(new_label[a]);
            if (labels) {
                const Angle& ang = (*labels)[p.edge_index(v, a)];
                sig.push_back(ang.num);
                sig.push_back(ang.den);
            }
        }
    }
    return sig;
}

Signature canonical_impl(const Polyhedron& p, const std::vector<Angle>* labels) {
    Signature best;
    for (int e = 0; e < p.edge_count(); ++e) {
        auto [u, v] = p.edge(e);
        for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
            for (int dir : {1, -1}) {
                Signature s = signature_from(p, labels, a, b, dir);
                if (best.empty() || s < best) best = std::move(s);
            }
        }
    }
    return best;
}

}  // namespace

Signature canonical_form(const Polyhedron& p) { return canonical_impl(p, nullptr); }

Signature canonical_form(const LabeledPolyhedron& lp) { return canonical_impl(lp.base, &lp.labels); }

bool isomorphic(const Polyhedron& a, const Polyhedron& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
        a.face_count() != b.face_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

bool isomorphic(const LabeledPolyhedron& a, const LabeledPolyhedron& b) {
    if (a.base.vertex_count() != b.base.vertex_count() || a.base.edge_count() != b.base.edge_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace haken
