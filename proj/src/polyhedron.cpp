#include "haken/polyhedron.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>

namespace haken {

double Angle::radians() const {
    return M_PI * static_cast<double>(num) / static_cast<double>(den);
}

void SimpleGraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge");
    if (!has_edge(u, v)) {
        adj[u].push_back(v);
        adj[v].push_back(u);
        std::sort(adj[u].begin(), adj[u].end());
        std::sort(adj[v].begin(), adj[v].end());
    }
}

bool SimpleGraph::has_edge(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

int SimpleGraph::edge_count() const {
    int s = 0;
    for (const auto& a : adj) s += static_cast<int>(a.size());
    return s / 2;
}

namespace {

// Connectivity of g restricted to vertices with alive[v] == true.
bool connected_on(const SimpleGraph& g, const std::vector<bool>& alive) {
    int start = -1, count = 0;
    for (int v = 0; v < g.n; ++v)
        if (alive[v]) {
            if (start < 0) start = v;
            ++count;
        }
    if (count <= 1) return true;
    std::vector<bool> seen(g.n, false);
    std::queue<int> q;
    q.push(start);
    seen[start] = true;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.adj[u])
            if (alive[w] && !seen[w]) {
                seen[w] = true;
                ++reached;
                q.push(w);
            }
    }
    return reached == count;
}

// Any articulation point among the alive vertices (standard lowpoint DFS).
bool has_articulation(const SimpleGraph& g, const std::vector<bool>& alive) {
    std::vector<int> disc(g.n, -1), low(g.n, 0);
    int timer = 0;
    bool found = false;

    struct Frame {
        int v, parent;
        size_t next = 0;
        int children = 0;
    };
    for (int root = 0; root < g.n && !found; ++root) {
        if (!alive[root] || disc[root] >= 0) continue;
        std::vector<Frame> stack{{root, -1}};
        disc[root] = low[root] = timer++;
        while (!stack.empty() && !found) {
            Frame& f = stack.back();
            if (f.next < g.adj[f.v].size()) {
                int w = g.adj[f.v][f.next++];
                if (!alive[w] || w == f.parent) continue;
                if (disc[w] < 0) {
                    disc[w] = low[w] = timer++;
                    ++f.children;
                    stack.push_back({w, f.v});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v, parent = f.parent;
                stack.pop_back();
                if (parent >= 0) {
                    low[parent] = std::min(low[parent], low[v]);
                    if (parent != root && low[v] >= disc[parent]) found = true;
                } else if (f.children > 1) {
                    found = true;
                }
            }
        }
    }
    return found;
}

}  // namespace

bool is_connected(const SimpleGraph& g) {
    return connected_on(g, std::vector<bool>(g.n, true));
}

bool is_three_connected(const SimpleGraph& g) {
    if (g.n < 4) return false;
    std::vector<bool> alive(g.n, true);
    if (!connected_on(g, alive)) return false;
    for (int u = 0; u < g.n; ++u) {
        alive[u] = false;
        if (!connected_on(g, alive) || has_articulation(g, alive)) return false;
        alive[u] = true;
    }
    return true;
}

namespace {

[[noreturn]] void fail(PolyhedronError c, const std::string& msg) {
    throw InvalidPolyhedron(c, msg);
}

}  // namespace

Polyhedron Polyhedron::build_from_faces(const std::vector<std::vector<int>>& input_faces) {
    Polyhedron p;
    if (input_faces.empty()) fail(PolyhedronError::NotSimple, "no faces");

    int vmax = -1;
    for (const auto& f : input_faces) {
        if (f.size() < 3)
            fail(PolyhedronError::NotSimple, "face with fewer than 3 vertices");
        std::set<int> distinct(f.begin(), f.end());
        if (distinct.size() != f.size())
            fail(PolyhedronError::NotSimple, "face is not a simple cycle");
        for (int v : f) {
            if (v < 0) fail(PolyhedronError::NotSimple, "negative vertex index");
            vmax = std::max(vmax, v);
        }
    }
    p.v_ = vmax + 1;
    p.faces_ = input_faces;

    std::vector<bool> used(p.v_, false);
    for (const auto& f : p.faces_)
        for (int v : f) used[v] = true;
    for (int v = 0; v < p.v_; ++v)
        if (!used[v]) fail(PolyhedronError::NotSimple, "vertex indices not dense");

    // Edge incidence: every unordered pair must appear in exactly two faces.
    std::map<Edge, std::vector<int>> incident;
    for (int fi = 0; fi < static_cast<int>(p.faces_.size()); ++fi) {
        const auto& f = p.faces_[fi];
        for (size_t i = 0; i < f.size(); ++i) {
            int u = f[i], w = f[(i + 1) % f.size()];
            incident[{std::min(u, w), std::max(u, w)}].push_back(fi);
        }
    }
    for (const auto& [e, fs] : incident)
        if (fs.size() != 2)
            fail(PolyhedronError::NonManifoldEdge,
                 "edge {" + std::to_string(e.first) + "," + std::to_string(e.second) + "} lies in " +
                     std::to_string(fs.size()) + " faces");

    for (const auto& [e, fs] : incident) {
        p.edge_index_[e] = static_cast<int>(p.edges_.size());
        p.edges_.push_back(e);
        p.edge_faces_.push_back({fs[0], fs[1]});
    }

    p.vertex_edges_.assign(p.v_, {});
    for (int e = 0; e < p.edge_count(); ++e) {
        p.vertex_edges_[p.edges_[e].first].push_back(e);
        p.vertex_edges_[p.edges_[e].second].push_back(e);
    }
    for (int v = 0; v < p.v_; ++v)
        if (p.vertex_edges_[v].size() < 3)
            fail(PolyhedronError::DegreeTooLow, "vertex " + std::to_string(v) + " has degree < 3");

    SimpleGraph g(p.v_);
    for (const auto& e : p.edges_) g.add_edge(e.first, e.second);
    if (!is_three_connected(g))
        fail(PolyhedronError::NotThreeConnected, "1-skeleton is not 3-connected");

    if (p.v_ - p.edge_count() + p.face_count() != 2)
        fail(PolyhedronError::NotSphere, "Euler characteristic is not 2");

    // Orient the faces coherently: across every edge the two incident faces
    // must traverse it in opposite directions. BFS over face adjacency,
    // flipping as needed; a conflict means the complex is not a sphere.
    auto traverses = [](const std::vector<int>& f, int u, int w) {
        for (size_t i = 0; i < f.size(); ++i)
            if (f[i] == u && f[(i + 1) % f.size()] == w) return true;
        return false;
    };
    std::vector<int> state(p.face_count(), 0);  // 0 unseen, 1 kept, 2 flipped
    std::queue<int> q;
    state[0] = 1;
    q.push(0);
    int oriented = 1;
    while (!q.empty()) {
        int fi = q.front();
        q.pop();
        const auto& f = p.faces_[fi];
        for (size_t i = 0; i < f.size(); ++i) {
            int u = f[i], w = f[(i + 1) % f.size()];
            int e = p.edge_index_.at({std::min(u, w), std::max(u, w)});
            int other = p.edge_faces_[e][0] == fi ? p.edge_faces_[e][1] : p.edge_faces_[e][0];
            bool same_dir = traverses(p.faces_[other], u, w);
            if (state[other] == 0) {
                if (same_dir) std::reverse(p.faces_[other].begin(), p.faces_[other].end());
                state[other] = 1;
                ++oriented;
                q.push(other);
            } else if (same_dir) {
                fail(PolyhedronError::NotSphere, "face complex is not orientable");
            }
        }
    }
    if (oriented != p.face_count())
        fail(PolyhedronError::NotSphere, "face complex is not connected");

    // Dart maps from the oriented faces, then the rotation at each vertex by
    // walking next_in_face(reverse(dart)). The walk must visit every edge at
    // the vertex in a single cycle (vertex link is a circle).
    std::map<std::pair<int, int>, std::pair<int, int>> next_in_face;
    std::map<std::pair<int, int>, int> face_of_dart;
    for (int fi = 0; fi < p.face_count(); ++fi) {
        const auto& f = p.faces_[fi];
        for (size_t i = 0; i < f.size(); ++i) {
            int a = f[i], b = f[(i + 1) % f.size()], c = f[(i + 2) % f.size()];
            next_in_face[{a, b}] = {b, c};
            face_of_dart[{a, b}] = fi;
        }
    }

    p.rotation_.assign(p.v_, {});
    p.face_rotation_.assign(p.v_, {});
    for (int v = 0; v < p.v_; ++v) {
        int first = -1;
        for (int e : p.vertex_edges_[v]) {
            const Edge& ed = p.edges_[e];
            first = ed.first == v ? ed.second : ed.first;
            break;
        }
        int a = first;
        size_t deg = p.vertex_edges_[v].size();
        for (size_t step = 0; step < deg; ++step) {
            p.rotation_[v].push_back(a);
            auto d = next_in_face.at({a, v});
            p.face_rotation_[v].push_back(face_of_dart.at({a, v}));
            a = d.second;
        }
        if (a != first || std::set<int>(p.rotation_[v].begin(), p.rotation_[v].end()).size() != deg)
            fail(PolyhedronError::NotSphere, "vertex link is not a single cycle");
    }

    return p;
}

int Polyhedron::edge_index(int u, int v) const {
    auto it = edge_index_.find({std::min(u, v), std::max(u, v)});
    return it == edge_index_.end() ? -1 : it->second;
}

int Polyhedron::shared_edge(int f, int g) const {
    const auto& a = faces_[f];
    for (size_t i = 0; i < a.size(); ++i) {
        int e = edge_index(a[i], a[(i + 1) % a.size()]);
        const auto& ef = edge_faces_[e];
        if ((ef[0] == f && ef[1] == g) || (ef[0] == g && ef[1] == f)) return e;
    }
    return -1;
}

std::vector<int> Polyhedron::shared_vertices(int f, int g) const {
    std::set<int> a(faces_[f].begin(), faces_[f].end());
    std::vector<int> out;
    for (int v : faces_[g])
        if (a.count(v)) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

SimpleGraph Polyhedron::skeleton() const {
    SimpleGraph g(v_);
    for (const auto& e : edges_) g.add_edge(e.first, e.second);
    return g;
}

Polyhedron Polyhedron::dual() const {
    // Dual face for primal vertex v = faces around v in rotation order.
    std::vector<std::vector<int>> dual_faces(v_);
    for (int v = 0; v < v_; ++v) dual_faces[v] = face_rotation_[v];
    return build_from_faces(dual_faces);
}

DegreeCensus degree_census(const Polyhedron& p) {
    DegreeCensus c;
    c.edges = p.edge_count();
    for (int v = 0; v < p.vertex_count(); ++v) {
        int d = p.degree(v);
        if (d == 3)
            ++c.n3;
        else if (d == 4)
            ++c.n4;
        else
            ++c.higher;
    }
    if (c.higher == 0 && 2 * c.edges != 3 * c.n3 + 4 * c.n4)
        throw std::logic_error("handshake identity 2E = 3N3 + 4N4 failed");
    return c;
}

}  // namespace haken
