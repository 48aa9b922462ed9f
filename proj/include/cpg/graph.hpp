#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <limits>
#include <vector>

#include "cpg/vertex_set.hpp"

namespace cpg {

// Undirected edge, stored with a < b.
struct Edge {
    uint8_t a = 0;
    uint8_t b = 0;

    Edge() = default;
    Edge(int u, int v) : a(static_cast<uint8_t>(u < v ? u : v)), b(static_cast<uint8_t>(u < v ? v : u)) {
        assert(u != v);
    }

    bool operator==(const Edge&) const = default;
    friend bool operator<(const Edge& x, const Edge& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
};

// Simple undirected graph with maximum degree 3 on at most kMaxN vertices.
// Copies are cheap and the generators copy one per search node.
struct Graph {
    int n = 0;
    int m = 0;
    std::array<uint8_t, kMaxN> deg{};
    std::array<std::array<uint8_t, 3>, kMaxN> adj{};
    std::array<VertexSet, kMaxN> nbr{};

    explicit Graph(int n_ = 0) : n(n_) { assert(n_ >= 0 && n_ <= kMaxN); }

    int degree(int v) const { return deg[v]; }
    bool has_edge(int u, int v) const { return nbr[u].contains(v); }

    void add_edge(int u, int v) {
        assert(u != v && u >= 0 && v >= 0 && u < n && v < n);
        assert(!has_edge(u, v));
        assert(deg[u] < 3 && deg[v] < 3);
        adj[u][deg[u]++] = static_cast<uint8_t>(v);
        adj[v][deg[v]++] = static_cast<uint8_t>(u);
        nbr[u].add(v);
        nbr[v].add(u);
        ++m;
    }

    void remove_edge(int u, int v) {
        assert(has_edge(u, v));
        auto drop = [&](int x, int y) {
            for (int i = 0; i < deg[x]; ++i) {
                if (adj[x][i] == y) {
                    adj[x][i] = adj[x][deg[x] - 1];
                    --deg[x];
                    return;
                }
            }
            assert(false);
        };
        drop(u, v);
        drop(v, u);
        nbr[u].remove(v);
        nbr[v].remove(u);
        --m;
    }

    bool is_cubic() const {
        for (int v = 0; v < n; ++v)
            if (deg[v] != 3) return false;
        return true;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> es;
        es.reserve(m);
        for (int u = 0; u < n; ++u)
            for (int i = 0; i < deg[u]; ++i)
                if (u < adj[u][i]) es.emplace_back(u, adj[u][i]);
        return es;
    }

    // Structural equality: same vertex count and same adjacency sets
    // (the internal order of the adjacency arrays does not matter).
    friend bool operator==(const Graph& x, const Graph& y) {
        if (x.n != y.n || x.m != y.m) return false;
        for (int v = 0; v < x.n; ++v)
            if (!(x.nbr[v] == y.nbr[v])) return false;
        return true;
    }

    // Audits the symmetry/degree/bookkeeping invariants; used by tests.
    bool check_invariants() const;
};

inline constexpr int kInfinity = std::numeric_limits<int>::max();

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// Relabels vertices: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::array<uint8_t, kMaxN>& perm);

// Length of a shortest cycle, kInfinity for forests.
int girth(const Graph& g);

// Length of a shortest cycle through the (not yet present) edge uv,
// i.e. 1 + dist_g(u, v); kInfinity when u and v are disconnected.
int shortest_cycle_with_new_edge(const Graph& g, int u, int v);

// Exact number of cycles of length len (4, 5 or 6) through an existing edge.
int count_cycles_through_edge(const Graph& g, Edge e, int len);

// |{v : min(d(v,a), d(v,b)) <= r}|.
int ball_size(const Graph& g, int a, int b, int r);

// Number of degree-2 vertices at distance <= r from a, plus the same for b.
int degree2_count_near(const Graph& g, int a, int b, int r);

bool is_connected(const Graph& g);

}  // namespace cpg
