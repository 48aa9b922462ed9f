#include "cpg/graph.hpp"

#include <algorithm>

namespace cpg {

bool Graph::check_invariants() const {
    if (n < 0 || n > kMaxN) return false;
    int degsum = 0;
    for (int v = 0; v < n; ++v) {
        if (deg[v] > 3) return false;
        if (nbr[v].count() != deg[v]) return false;
        degsum += deg[v];
        for (int i = 0; i < deg[v]; ++i) {
            int w = adj[v][i];
            if (w == v || w < 0 || w >= n) return false;
            if (!nbr[v].contains(w)) return false;
            if (!nbr[w].contains(v)) return false;
            for (int j = i + 1; j < deg[v]; ++j)
                if (adj[v][j] == w) return false;
        }
    }
    return degsum == 2 * m;
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph relabel(const Graph& g, const std::array<uint8_t, kMaxN>& perm) {
    Graph h(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int i = 0; i < g.deg[u]; ++i) {
            int v = g.adj[u][i];
            if (u < v) h.add_edge(perm[u], perm[v]);
        }
    return h;
}

namespace {

// BFS distances from src, capped at limit (unreached = kInfinity).
void bfs_dist(const Graph& g, int src, int limit, std::array<int, kMaxN>& dist) {
    dist.fill(kInfinity);
    std::array<uint8_t, kMaxN> queue;
    int head = 0, tail = 0;
    dist[src] = 0;
    queue[tail++] = static_cast<uint8_t>(src);
    while (head < tail) {
        int u = queue[head++];
        if (dist[u] == limit) continue;
        for (int i = 0; i < g.deg[u]; ++i) {
            int w = g.adj[u][i];
            if (dist[w] == kInfinity) {
                dist[w] = dist[u] + 1;
                queue[tail++] = static_cast<uint8_t>(w);
            }
        }
    }
}

}  // namespace

int girth(const Graph& g) {
    // BFS from every vertex; a non-tree edge seen from root r closes a cycle
    // of length dist[u] + dist[w] + 1. The minimum over all roots is exact.
    int best = kInfinity;
    std::array<int, kMaxN> dist{};
    std::array<int, kMaxN> parent{};
    std::array<uint8_t, kMaxN> queue;
    for (int r = 0; r < g.n; ++r) {
        dist.fill(kInfinity);
        parent.fill(-1);
        int head = 0, tail = 0;
        dist[r] = 0;
        queue[tail++] = static_cast<uint8_t>(r);
        while (head < tail) {
            int u = queue[head++];
            for (int i = 0; i < g.deg[u]; ++i) {
                int w = g.adj[u][i];
                if (dist[w] == kInfinity) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue[tail++] = static_cast<uint8_t>(w);
                } else if (w != parent[u] && dist[w] >= dist[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

int shortest_cycle_with_new_edge(const Graph& g, int u, int v) {
    assert(!g.has_edge(u, v));
    std::array<int, kMaxN> dist{};
    bfs_dist(g, u, g.n, dist);
    return dist[v] == kInfinity ? kInfinity : dist[v] + 1;
}

namespace {

int count_paths(const Graph& g, int cur, int target, int remaining, VertexSet& used) {
    if (remaining == 0) return cur == target ? 1 : 0;
    int total = 0;
    for (int i = 0; i < g.deg[cur]; ++i) {
        int w = g.adj[cur][i];
        if (used.contains(w)) continue;
        if (w == target && remaining > 1) continue;
        used.add(w);
        total += count_paths(g, w, target, remaining - 1, used);
        used.remove(w);
    }
    return total;
}

}  // namespace

int count_cycles_through_edge(const Graph& g, Edge e, int len) {
    assert(g.has_edge(e.a, e.b));
    assert(len >= 3 && len <= 6);
    // Cycles of length len through ab correspond 1-1 to simple a-b paths of
    // length len-1 avoiding the edge ab itself.
    Graph h = g;
    h.remove_edge(e.a, e.b);
    VertexSet used;
    used.add(e.a);
    return count_paths(h, e.a, e.b, len - 1, used);
}

int ball_size(const Graph& g, int a, int b, int r) {
    std::array<int, kMaxN> da{}, db{};
    bfs_dist(g, a, r, da);
    bfs_dist(g, b, r, db);
    int cnt = 0;
    for (int v = 0; v < g.n; ++v)
        if (std::min(da[v], db[v]) <= r) ++cnt;
    return cnt;
}

int degree2_count_near(const Graph& g, int a, int b, int r) {
    std::array<int, kMaxN> d{};
    int cnt = 0;
    bfs_dist(g, a, r, d);
    for (int v = 0; v < g.n; ++v)
        if (d[v] <= r && g.deg[v] == 2) ++cnt;
    bfs_dist(g, b, r, d);
    for (int v = 0; v < g.n; ++v)
        if (d[v] <= r && g.deg[v] == 2) ++cnt;
    return cnt;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    std::array<int, kMaxN> dist{};
    bfs_dist(g, 0, g.n, dist);
    for (int v = 0; v < g.n; ++v)
        if (dist[v] == kInfinity) return false;
    return true;
}

}  // namespace cpg
