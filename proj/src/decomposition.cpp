#include "haken/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include "haken/canonical.hpp"
#include "haken/shapes.hpp"

namespace haken {

namespace {

std::vector<int> side_assignment(const Polyhedron& p, const std::set<int>& crossed) {
    std::vector<std::vector<int>> adj(p.vertex_count());
    for (int e = 0; e < p.edge_count(); ++e) {
        if (crossed.count(e)) continue;
        auto [u, v] = p.edge(e);
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> side(p.vertex_count(), -1);
    int comp = 0;
    for (int s = 0; s < p.vertex_count(); ++s) {
        if (side[s] >= 0) continue;
        if (comp >= 2) throw std::logic_error("cut does not separate into two sides");
        std::queue<int> q;
        q.push(s);
        side[s] = comp;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj[u])
                if (side[w] < 0) {
                    side[w] = comp;
                    q.push(w);
                }
        }
        ++comp;
    }
    if (comp != 2) throw std::logic_error("cut does not separate into two sides");
    return side;
}

}  // namespace

CutResult cut_along(const LabeledPolyhedron& lp, const PrismaticCircuit& circuit) {
    const Polyhedron& p = lp.base;
    int k = circuit.k;
    std::set<int> crossed(circuit.edges.begin(), circuit.edges.end());
    std::vector<int> side = side_assignment(p, crossed);

    std::map<int, int> circuit_pos;  // face -> position in circuit
    for (int i = 0; i < k; ++i) circuit_pos[circuit.faces[i]] = i;

    CutResult result;
    result.circuit = circuit;

    for (int s = 0; s < 2; ++s) {
        std::vector<int> to_piece(p.vertex_count(), -1), vmap;
        for (int v = 0; v < p.vertex_count(); ++v)
            if (side[v] == s) {
                to_piece[v] = static_cast<int>(vmap.size());
                vmap.push_back(v);
            }
        int originals = static_cast<int>(vmap.size());
        auto cut_vertex = [&](int i) { return originals + i; };

        std::vector<std::vector<int>> faces;
        std::vector<FaceProvenance> prov;
        for (int f = 0; f < p.face_count(); ++f) {
            const auto& cyc = p.face(f);
            int len = static_cast<int>(cyc.size());
            if (!circuit_pos.count(f)) {
                if (side[cyc[0]] != s) continue;
                std::vector<int> g;
                for (int v : cyc) {
                    if (side[v] != s) throw std::logic_error("uncrossed face straddles the cut");
                    g.push_back(to_piece[v]);
                }
                faces.push_back(std::move(g));
                prov.push_back({FaceProvenance::Original, f});
                continue;
            }
            // Crossed face: the side-s vertices form one contiguous arc; close
            // it with the cut vertices of the entering and leaving edges.
            int start = -1;
            for (int j = 0; j < len; ++j)
                if (side[cyc[j]] == s && side[cyc[(j + len - 1) % len]] != s) {
                    start = j;
                    break;
                }
            if (start < 0) throw std::logic_error("crossed face has no side boundary");
            int e_in = p.edge_index(cyc[(start + len - 1) % len], cyc[start]);
            std::vector<int> g{cut_vertex(std::find(circuit.edges.begin(), circuit.edges.end(), e_in) -
                                          circuit.edges.begin())};
            int j = start;
            while (side[cyc[j]] == s) {
                g.push_back(to_piece[cyc[j]]);
                j = (j + 1) % len;
            }
            int e_out = p.edge_index(cyc[(j + len - 1) % len], cyc[j]);
            g.push_back(cut_vertex(std::find(circuit.edges.begin(), circuit.edges.end(), e_out) -
                                   circuit.edges.begin()));
            for (int v : g)
                if (v < originals && side[vmap[v]] != s) throw std::logic_error("arc not contiguous");
            faces.push_back(std::move(g));
            prov.push_back({FaceProvenance::Truncated, f});
        }
        std::vector<int> cut_face;
        for (int i = 0; i < k; ++i) cut_face.push_back(cut_vertex(i));
        faces.push_back(std::move(cut_face));
        prov.push_back({FaceProvenance::CutFace, -1});

        Polyhedron piece = Polyhedron::build_from_faces(faces);

        std::vector<int> vertex_map(piece.vertex_count(), -1), cut_position(piece.vertex_count(), -1);
        for (int v = 0; v < originals; ++v) vertex_map[v] = vmap[v];
        for (int i = 0; i < k; ++i) cut_position[cut_vertex(i)] = i;

        std::vector<Angle> labels;
        labels.reserve(piece.edge_count());
        for (int e = 0; e < piece.edge_count(); ++e) {
            auto [u, v] = piece.edge(e);
            int pu = vertex_map[u], pv = vertex_map[v];
            if (pu >= 0 && pv >= 0) {
                labels.push_back(lp.label(pu, pv));
            } else if (pu < 0 && pv < 0) {
                labels.push_back(Angle::right());
            } else {
                int pos = pu < 0 ? cut_position[u] : cut_position[v];
                labels.push_back(lp.labels[circuit.edges[pos]]);
            }
        }
        result.sides.push_back({LabeledPolyhedron(std::move(piece), std::move(labels)),
                                std::move(vertex_map), std::move(cut_position), std::move(prov)});
    }
    return result;
}

LabeledPolyhedron reglue(const CutResult& cut) {
    int k = cut.circuit.k;

    // Crossed edges of the parent: for each circuit position, the two
    // half-edge partners of the side cut-vertices.
    std::vector<std::pair<int, int>> crossed_pair(k, {-1, -1});
    std::vector<Angle> crossed_label(k, Angle::right());
    for (int s = 0; s < 2; ++s) {
        const CutSide& cs = cut.sides[s];
        for (int v = 0; v < cs.piece.base.vertex_count(); ++v) {
            int pos = cs.cut_position[v];
            if (pos < 0) continue;
            for (int e : cs.piece.base.vertex_edges(v)) {
                auto [a, b] = cs.piece.base.edge(e);
                int other = a == v ? b : a;
                if (cs.vertex_map[other] < 0) continue;
                (s == 0 ? crossed_pair[pos].first : crossed_pair[pos].second) = cs.vertex_map[other];
                crossed_label[pos] = cs.piece.labels[e];
            }
        }
    }

    // Per crossed parent face: the two truncated halves as linear arcs in
    // parent vertex ids.
    std::map<int, std::vector<std::vector<int>>> halves;
    std::vector<std::vector<int>> faces;
    std::map<std::pair<int, int>, Angle> edge_label;

    for (int s = 0; s < 2; ++s) {
        const CutSide& cs = cut.sides[s];
        const Polyhedron& pb = cs.piece.base;
        for (int e = 0; e < pb.edge_count(); ++e) {
            auto [u, v] = pb.edge(e);
            if (cs.vertex_map[u] < 0 || cs.vertex_map[v] < 0) continue;
            int a = cs.vertex_map[u], b = cs.vertex_map[v];
            edge_label[{std::min(a, b), std::max(a, b)}] = cs.piece.labels[e];
        }
        for (size_t fi = 0; fi < cs.face_prov.size(); ++fi) {
            const FaceProvenance& fp = cs.face_prov[fi];
            const auto& cyc = pb.face(static_cast<int>(fi));
            if (fp.kind == FaceProvenance::Original) {
                std::vector<int> g;
                for (int v : cyc) g.push_back(cs.vertex_map[v]);
                faces.push_back(std::move(g));
            } else if (fp.kind == FaceProvenance::Truncated) {
                int len = static_cast<int>(cyc.size());
                int start = -1;
                for (int j = 0; j < len; ++j)
                    if (cs.vertex_map[cyc[j]] >= 0 && cs.vertex_map[cyc[(j + len - 1) % len]] < 0) start = j;
                std::vector<int> arc;
                int j = start;
                while (cs.vertex_map[cyc[j]] >= 0) {
                    arc.push_back(cs.vertex_map[cyc[j]]);
                    j = (j + 1) % len;
                }
                halves[fp.parent_face].push_back(std::move(arc));
            }
        }
    }

    std::set<std::pair<int, int>> crossed_set;
    for (auto [a, b] : crossed_pair) crossed_set.insert({std::min(a, b), std::max(a, b)});
    for (auto& [f, two] : halves) {
        if (two.size() != 2) throw std::logic_error("truncated face without two halves");
        auto joins = [&](const std::vector<int>& x, const std::vector<int>& y) {
            return crossed_set.count({std::min(x.back(), y.front()), std::max(x.back(), y.front())}) &&
                   crossed_set.count({std::min(y.back(), x.front()), std::max(y.back(), x.front())});
        };
        std::vector<int> merged = two[0];
        std::vector<int> second = two[1];
        if (!joins(merged, second)) std::reverse(second.begin(), second.end());
        if (!joins(merged, second)) throw std::logic_error("halves do not join along crossed edges");
        merged.insert(merged.end(), second.begin(), second.end());
        faces.push_back(std::move(merged));
    }

    Polyhedron parent = Polyhedron::build_from_faces(faces);
    for (int i = 0; i < k; ++i) {
        auto [a, b] = crossed_pair[i];
        edge_label[{std::min(a, b), std::max(a, b)}] = crossed_label[i];
    }
    std::vector<Angle> labels;
    for (int e = 0; e < parent.edge_count(); ++e) labels.push_back(edge_label.at(parent.edge(e)));
    return LabeledPolyhedron(std::move(parent), std::move(labels));
}

namespace {

// A prismatic 3-circuit parallel to an all-right triangular face is the
// boundary of a collar of that face; the corresponding turnover doubly covers
// the face and is not an essential cut.
bool parallel_to_all_right_triangle(const LabeledPolyhedron& lp, const PrismaticCircuit& c) {
    const Polyhedron& p = lp.base;
    std::set<int> crossed(c.edges.begin(), c.edges.end());
    for (int f = 0; f < p.face_count(); ++f) {
        const auto& cyc = p.face(f);
        if (cyc.size() != 3) continue;
        bool right = true;
        for (int i = 0; i < 3; ++i)
            if (lp.label(cyc[i], cyc[(i + 1) % 3]) != Angle::right()) right = false;
        if (!right) continue;
        std::set<int> third;
        bool ok = true;
        for (int v : cyc) {
            if (p.degree(v) != 3) {
                ok = false;
                break;
            }
            for (int e : p.vertex_edges(v)) {
                auto [a, b] = p.edge(e);
                int other = a == v ? b : a;
                if (other != cyc[0] && other != cyc[1] && other != cyc[2]) third.insert(e);
            }
        }
        if (ok && third == crossed) return true;
    }
    return false;
}

}  // namespace

std::vector<PrismaticCircuit> essential_prismatic_3_circuits(const LabeledPolyhedron& lp) {
    std::vector<PrismaticCircuit> out;
    for (const auto& c : find_prismatic_circuits(lp.base, 3)) {
        bool coxeter = true;
        for (int e : c.edges)
            if (!lp.labels[e].is_coxeter()) coxeter = false;
        if (!coxeter) continue;
        if (!(lp.angle_sum(c.edges) < Rational(1))) continue;  // turnover must be hyperbolic
        if (parallel_to_all_right_triangle(lp, c)) continue;
        out.push_back(c);
    }
    return out;
}

DunbarDecomposition dunbar_cut(const LabeledPolyhedron& lp) {
    DunbarDecomposition out;
    std::vector<LabeledPolyhedron> work{lp};
    while (!work.empty()) {
        LabeledPolyhedron piece = std::move(work.back());
        work.pop_back();
        auto essential = essential_prismatic_3_circuits(piece);
        for (size_t i = 0; i < essential.size(); ++i)
            for (size_t j = i + 1; j < essential.size(); ++j)
                if (circuits_cross(piece.base, essential[i], essential[j]))
                    throw CrossingCircuitsError("two essential prismatic 3-circuits interleave");
        if (essential.empty()) {
            out.components.push_back(std::move(piece));
            continue;
        }
        CutResult cut = cut_along(piece, essential.front());
        std::array<int, 3> turnover{};
        for (int i = 0; i < 3; ++i) turnover[i] = static_cast<int>(piece.labels[cut.circuit.edges[i]].order());
        std::sort(turnover.begin(), turnover.end());
        out.cut_circuits.push_back(cut.circuit);
        out.turnover_types.push_back(turnover);
        work.push_back(cut.sides[0].piece);
        work.push_back(cut.sides[1].piece);
        out.cut_parents.push_back(std::move(piece));
        out.cut_log.push_back(std::move(cut));
    }
    std::sort(out.components.begin(), out.components.end(),
              [](const LabeledPolyhedron& a, const LabeledPolyhedron& b) {
                  return canonical_form(a) < canonical_form(b);
              });
    return out;
}

namespace {

std::optional<Polyhedron> contract_faces(const Polyhedron& p, const std::vector<int>& subset) {
    std::vector<int> mark(p.vertex_count(), -1);
    for (size_t i = 0; i < subset.size(); ++i)
        for (int v : p.face(subset[i])) mark[v] = static_cast<int>(i);

    std::set<int> skip(subset.begin(), subset.end());
    std::vector<std::vector<int>> faces;
    for (int f = 0; f < p.face_count(); ++f) {
        if (skip.count(f)) continue;
        std::vector<int> g;
        for (int v : p.face(f)) {
            int w = mark[v] >= 0 ? p.vertex_count() + mark[v] : v;
            if (g.empty() || g.back() != w) g.push_back(w);
        }
        while (g.size() > 1 && g.front() == g.back()) g.pop_back();
        if (std::set<int>(g.begin(), g.end()).size() < 3) return std::nullopt;
        faces.push_back(std::move(g));
    }
    // Reindex densely.
    std::map<int, int> dense;
    for (auto& g : faces)
        for (int& v : g) {
            auto it = dense.find(v);
            if (it == dense.end()) it = dense.emplace(v, static_cast<int>(dense.size())).first;
            v = it->second;
        }
    try {
        return Polyhedron::build_from_faces(faces);
    } catch (const InvalidPolyhedron&) {
        return std::nullopt;
    }
}

}  // namespace

std::optional<GenTetWitness> is_generalized_tetrahedron(const LabeledPolyhedron& lp) {
    const Polyhedron& p = lp.base;
    int need = p.face_count() - 4;
    if (need < 0 || need > 4) return std::nullopt;
    if (need == 0) {
        if (p.vertex_count() == 4) return GenTetWitness{};
        return std::nullopt;
    }

    // Truncation-face candidates: all-right triangles with degree-3 corners
    // meeting three distinct non-triangular faces.
    std::vector<int> candidates;
    for (int f = 0; f < p.face_count(); ++f) {
        const auto& cyc = p.face(f);
        if (cyc.size() != 3) continue;
        bool ok = true;
        std::set<int> nbrs;
        for (int i = 0; i < 3 && ok; ++i) {
            int e = p.edge_index(cyc[i], cyc[(i + 1) % 3]);
            if (lp.labels[e] != Angle::right()) ok = false;
            int other = p.edge_faces(e)[0] == f ? p.edge_faces(e)[1] : p.edge_faces(e)[0];
            if (p.face(other).size() == 3) ok = false;
            nbrs.insert(other);
            if (p.degree(cyc[i]) != 3) ok = false;
        }
        if (ok && nbrs.size() == 3) candidates.push_back(f);
    }
    if (static_cast<int>(candidates.size()) < need) return std::nullopt;

    std::vector<int> subset;
    auto disjoint = [&](int f, int g) {
        for (int v : p.face(f))
            for (int w : p.face(g))
                if (v == w) return false;
        return true;
    };
    std::function<std::optional<GenTetWitness>(size_t)> search = [&](size_t from) -> std::optional<GenTetWitness> {
        if (static_cast<int>(subset.size()) == need) {
            auto contracted = contract_faces(p, subset);
            if (contracted && contracted->vertex_count() == 4) return GenTetWitness{subset};
            return std::nullopt;
        }
        for (size_t i = from; i < candidates.size(); ++i) {
            bool ok = true;
            for (int f : subset)
                if (!disjoint(f, candidates[i])) ok = false;
            if (!ok) continue;
            subset.push_back(candidates[i]);
            if (auto w = search(i + 1)) return w;
            subset.pop_back();
        }
        return std::nullopt;
    };
    return search(0);
}

ClassificationReport classify(const LabeledPolyhedron& lp) {
    ClassificationReport r;
    r.decomposition = dunbar_cut(lp);
    for (const auto& comp : r.decomposition.components) {
        Classification c;
        c.witness = is_generalized_tetrahedron(comp);
        c.verdict = c.witness ? Verdict::Small : Verdict::Haken;
        r.components.push_back(std::move(c));
    }
    if (r.components.size() == 1)
        r.overall = r.components[0].verdict == Verdict::Small ? ClassificationReport::Overall::Small
                                                              : ClassificationReport::Overall::Haken;
    else
        r.overall = ClassificationReport::Overall::Decomposed;
    return r;
}

std::optional<int> is_prism(const Polyhedron& p) {
    int v = p.vertex_count();
    if (v < 6 || v % 2 != 0) return std::nullopt;
    int n = v / 2;
    if (p.face_count() != n + 2) return std::nullopt;
    if (!isomorphic(p, shapes::prism(n))) return std::nullopt;
    return n;
}

namespace {

struct PieceState {
    LabeledPolyhedron piece;
    std::vector<FaceProvenance> prov;  // relative to the root polyhedron; CutFace entries hold a marker id
};

struct SolveResult {
    std::vector<PrismTreeNode> nodes;
    std::vector<PrismTreeEdge> edges;
    std::map<int, std::pair<int, int>> marker_at;  // marker -> (node, face index)
    std::vector<CutResult> log;
    std::vector<LabeledPolyhedron> log_parents;
    int ambiguous = 0;
};

std::optional<SolveResult> solve_prisms(const PieceState& st, int& next_marker) {
    if (auto n = is_prism(st.piece.base)) {
        if (*n < 5) return std::nullopt;
        SolveResult r;
        r.nodes.push_back({st.piece, *n, st.prov});
        for (size_t fi = 0; fi < st.prov.size(); ++fi)
            if (st.prov[fi].kind == FaceProvenance::CutFace)
                r.marker_at[st.prov[fi].parent_face] = {0, static_cast<int>(fi)};
        return r;
    }
    auto circuits = find_prismatic_circuits(st.piece.base, 4);
    std::vector<PrismaticCircuit> usable;
    for (const auto& c : circuits) {
        bool hits_glue = false;
        for (int f : c.faces)
            if (st.prov[f].kind == FaceProvenance::CutFace) hits_glue = true;
        if (!hits_glue) usable.push_back(c);
    }
    for (const auto& c : usable) {
        int marker = next_marker;
        CutResult cut = cut_along(st.piece, c);
        std::array<std::optional<SolveResult>, 2> sub;
        ++next_marker;
        bool ok = true;
        std::array<PieceState, 2> children = {PieceState{cut.sides[0].piece, {}},
                                              PieceState{cut.sides[1].piece, {}}};
        for (int s = 0; s < 2 && ok; ++s) {
            for (const auto& fp : cut.sides[s].face_prov) {
                if (fp.kind == FaceProvenance::CutFace)
                    children[s].prov.push_back({FaceProvenance::CutFace, marker});
                else if (fp.kind == FaceProvenance::Original)
                    children[s].prov.push_back(st.prov[fp.parent_face]);
                else {
                    const FaceProvenance& up = st.prov[fp.parent_face];
                    children[s].prov.push_back({FaceProvenance::Truncated, up.parent_face});
                }
            }
            sub[s] = solve_prisms(children[s], next_marker);
            if (!sub[s]) ok = false;
        }
        if (!ok) continue;

        SolveResult r = std::move(*sub[0]);
        int offset = static_cast<int>(r.nodes.size());
        for (auto& nd : sub[1]->nodes) r.nodes.push_back(std::move(nd));
        for (auto& e : sub[1]->edges) r.edges.push_back({e.a + offset, e.b + offset, e.quad_a, e.quad_b});
        for (auto& [m, loc] : sub[1]->marker_at) {
            auto it = r.marker_at.find(m);
            if (it != r.marker_at.end()) {
                if (m != marker) throw std::logic_error("inherited glue marker found on both sides");
                r.edges.push_back({it->second.first, loc.first + offset, it->second.second, loc.second});
                r.marker_at.erase(it);
            } else {
                r.marker_at[m] = {loc.first + offset, loc.second};
            }
        }
        for (auto& lg : sub[1]->log) r.log.push_back(std::move(lg));
        for (auto& lp2 : sub[1]->log_parents) r.log_parents.push_back(std::move(lp2));
        r.log.push_back(std::move(cut));
        r.log_parents.push_back(st.piece);
        r.ambiguous += sub[1]->ambiguous + (usable.size() > 1 ? 1 : 0);
        return r;
    }
    return std::nullopt;
}

}  // namespace

std::optional<PrismTree> prism_tree(const Polyhedron& p) {
    if (is_prism(p)) return std::nullopt;
    PieceState root{LabeledPolyhedron::all_right(p), {}};
    for (int f = 0; f < p.face_count(); ++f) root.prov.push_back({FaceProvenance::Original, f});
    int next_marker = 0;
    auto res = solve_prisms(root, next_marker);
    if (!res) return std::nullopt;

    PrismTree t;
    t.nodes = std::move(res->nodes);
    t.edges = std::move(res->edges);
    t.ambiguous_cuts = res->ambiguous;
    t.original_faces = p.faces();
    t.cut_log = std::move(res->log);
    t.cut_parents = std::move(res->log_parents);
    for (int i = 0; i < static_cast<int>(t.nodes.size()); ++i)
        if (t.node_degree(i) == 1) ++t.leaf_count;
    return t;
}

QuadCounts count_free_quads(const PrismTree& tree, const LabeledPolyhedron& lp) {
    if (lp.base.faces() != tree.original_faces)
        throw std::invalid_argument("labeled polyhedron does not match the tree's origin");
    for (const Angle& a : lp.labels)
        if (a != Angle::right() && a != Angle::pi_over(3))
            throw std::invalid_argument("count_free_quads requires labels in {pi/2, pi/3}");

    QuadCounts counts;
    for (int i = 0; i < static_cast<int>(tree.nodes.size()); ++i) {
        if (tree.node_degree(i) != 1) continue;
        const PrismTreeNode& node = tree.nodes[i];
        int best_corners = -1, best_face = -1;
        for (const auto& fp : node.face_prov) {
            if (fp.kind != FaceProvenance::Original) continue;
            const auto& cyc = lp.base.face(fp.parent_face);
            if (cyc.size() != 4) continue;
            bool right_boundary = true;
            for (int j = 0; j < 4; ++j)
                if (lp.label(cyc[j], cyc[(j + 1) % 4]) != Angle::right()) right_boundary = false;
            if (!right_boundary) continue;
            int corners = 0;
            for (int v : cyc) {
                if (lp.base.degree(v) != 3)
                    throw std::invalid_argument("free-quad corner of degree != 3");
                for (int e : lp.base.vertex_edges(v)) {
                    auto [a, b] = lp.base.edge(e);
                    int other = a == v ? b : a;
                    bool in_face = std::find(cyc.begin(), cyc.end(), other) != cyc.end();
                    if (!in_face && lp.labels[e] == Angle::pi_over(3)) ++corners;
                }
            }
            if (corners < 1) continue;  // all-right corners would make the quad Euclidean
            if (best_corners < 0 || corners < best_corners ||
                (corners == best_corners && fp.parent_face < best_face)) {
                best_corners = corners;
                best_face = fp.parent_face;
            }
        }
        if (best_corners < 0)
            throw NoFreeQuadError(i, "leaf prism " + std::to_string(i) +
                                         " has no free quadrilateral with all-right boundary and a pi/3 corner");
        if (best_corners == 1) ++counts.m1;
        if (best_corners == 2) ++counts.m2;
        if (best_corners == 3) ++counts.m3;
        if (best_corners == 4) ++counts.m4;
    }
    return counts;
}

}  // namespace haken
