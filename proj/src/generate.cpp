#include "haken/generate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace haken {

namespace {

struct PairEnum {
    int n;
    std::vector<int> rem;
    std::vector<std::pair<int, int>> pairs;
    std::vector<bool> chosen;
    const std::function<void(const SimpleGraph&)>* emit;

    void run(size_t idx) {
        if (idx == pairs.size()) {
            for (int v = 0; v < n; ++v)
                if (rem[v] != 0) return;
            SimpleGraph g(n);
            for (size_t i = 0; i < pairs.size(); ++i)
                if (chosen[i]) g.add_edge(pairs[i].first, pairs[i].second);
            (*emit)(g);
            return;
        }
        auto [u, v] = pairs[idx];
        // Pairs are lexicographic, so once we move past vertex u its degree
        // is frozen; prune when u cannot be completed from the pairs left.
        int pairs_left_for_u = 0;
        for (size_t i = idx; i < pairs.size() && pairs[i].first == u; ++i) ++pairs_left_for_u;
        if (rem[u] > pairs_left_for_u) return;

        if (rem[u] > 0 && rem[v] > 0) {
            chosen[idx] = true;
            --rem[u];
            --rem[v];
            run(idx + 1);
            ++rem[u];
            ++rem[v];
            chosen[idx] = false;
        }
        if (rem[u] < pairs_left_for_u) run(idx + 1);
    }
};

}  // namespace

void enumerate_degree_graphs(const std::vector<int>& degrees,
                             const std::function<void(const SimpleGraph&)>& emit) {
    int n = static_cast<int>(degrees.size());
    int sum = std::accumulate(degrees.begin(), degrees.end(), 0);
    if (sum % 2 != 0) return;
    for (int d : degrees)
        if (d < 0 || d >= n) return;
    PairEnum e;
    e.n = n;
    e.rem = degrees;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.pairs.push_back({u, v});
    e.chosen.assign(e.pairs.size(), false);
    e.emit = &emit;
    e.run(0);
}

double rotation_system_count(const SimpleGraph& g) {
    double total = 1.0;
    for (int v = 0; v < g.n; ++v) {
        double f = 1.0;
        for (int i = 2; i < g.degree(v); ++i) f *= i;  // (d-1)!
        total *= f;
    }
    return total;
}

namespace {

// Rotation-system search with darts as flat indices. Dart 2e points from
// edge(e).first to edge(e).second; dart 2e+1 is its reverse. Face tracing:
// the dart (u, v) is followed by (v, w) where w succeeds u in the rotation
// at v.
struct EmbeddingSearch {
    const SimpleGraph& g;
    int n, m;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> dart_at;  // dart_at[u][v] = dart id u->v (dense matrix)
    std::vector<std::vector<int>> rot;
    std::vector<int> pos;  // pos[v * n + u] = index of u in rot[v]
    std::vector<char> used;

    explicit EmbeddingSearch(const SimpleGraph& graph) : g(graph), n(graph.n) {
        for (int u = 0; u < n; ++u)
            for (int v : g.adj[u])
                if (u < v) edges.push_back({u, v});
        m = static_cast<int>(edges.size());
        dart_at.assign(n, std::vector<int>(n, -1));
        for (int e = 0; e < m; ++e) {
            dart_at[edges[e].first][edges[e].second] = 2 * e;
            dart_at[edges[e].second][edges[e].first] = 2 * e + 1;
        }
        rot.assign(n, {});
        pos.assign(n * n, -1);
        used.assign(2 * m, 0);
    }

    int head(int d) const { return d & 1 ? edges[d >> 1].first : edges[d >> 1].second; }

    int trace_faces(std::vector<std::vector<int>>* faces_out) {
        std::fill(used.begin(), used.end(), 0);
        int faces = 0;
        for (int d0 = 0; d0 < 2 * m; ++d0) {
            if (used[d0]) continue;
            std::vector<int> cycle;
            int d = d0;
            while (!used[d]) {
                used[d] = 1;
                int tail = head(d ^ 1), v = head(d);
                cycle.push_back(tail);
                const auto& rv = rot[v];
                int w = rv[(pos[v * n + tail] + 1) % rv.size()];
                d = dart_at[v][w];
            }
            if (faces_out) faces_out->push_back(std::move(cycle));
            ++faces;
        }
        return faces;
    }

    bool search(int v, std::vector<std::vector<int>>* faces_out) {
        if (v == n) {
            std::vector<std::vector<int>> faces;
            if (n - m + trace_faces(&faces) == 2) {
                if (faces_out) *faces_out = std::move(faces);
                return true;
            }
            return false;
        }
        // Fix the first neighbour, permute the rest: cyclic orders only.
        std::vector<int> tail(g.adj[v].begin() + 1, g.adj[v].end());
        std::sort(tail.begin(), tail.end());
        do {
            rot[v].assign(1, g.adj[v][0]);
            rot[v].insert(rot[v].end(), tail.begin(), tail.end());
            for (size_t i = 0; i < rot[v].size(); ++i) pos[v * n + rot[v][i]] = static_cast<int>(i);
            if (search(v + 1, faces_out)) return true;
        } while (std::next_permutation(tail.begin(), tail.end()));
        return false;
    }
};

}  // namespace

std::optional<std::vector<std::vector<int>>> planar_embedding(const SimpleGraph& g) {
    if (g.n < 3 || !is_connected(g)) return std::nullopt;
    if (g.edge_count() > 3 * g.n - 6) return std::nullopt;
    EmbeddingSearch search(g);
    std::vector<std::vector<int>> faces;
    if (!search.search(0, &faces)) return std::nullopt;
    return faces;
}

std::vector<std::uint64_t> graph_canonical_form(const SimpleGraph& g) {
    if (g.n > 10) throw std::invalid_argument("graph_canonical_form is exponential; n must be <= 10");
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint64_t> best;
    do {
        std::vector<std::uint64_t> rows(g.n, 0);
        for (int v = 0; v < g.n; ++v)
            for (int w : g.adj[v]) rows[perm[v]] |= 1ULL << perm[w];
        if (best.empty() || rows < best) best = rows;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace haken
