#pragma once

// Static footprint graphs: simple, undirected, vertices 0..n-1.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace templab {

using VertexPair = std::pair<int, int>;

inline VertexPair make_vertex_pair(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop");
    return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

struct Graph {
    int n = 0;
    std::vector<VertexPair> edges;  // sorted, unique, endpoints ordered u < v

    Graph() = default;
    explicit Graph(int n_) : n(n_) {}

    void add_edge(int u, int v) {
        auto e = make_vertex_pair(u, v);
        if (e.second >= n || e.first < 0) throw std::invalid_argument("endpoint out of range");
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it != edges.end() && *it == e) throw std::invalid_argument("duplicate edge");
        edges.insert(it, e);
    }

    bool has_edge(int u, int v) const {
        auto e = make_vertex_pair(u, v);
        return std::binary_search(edges.begin(), edges.end(), e);
    }

    int edge_index(int u, int v) const {
        auto e = make_vertex_pair(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it == edges.end() || *it != e) return -1;
        return static_cast<int>(it - edges.begin());
    }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(n);
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        for (auto& row : adj) std::sort(row.begin(), row.end());
        return adj;
    }
};

inline bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    auto adj = g.adjacency();
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.n;
}

inline bool is_tree(const Graph& g) {
    return static_cast<int>(g.edges.size()) == g.n - 1 && is_connected(g);
}

// True iff g is a single cycle v0-v1-...-v_{n-1}-v0 on all n vertices.
inline bool is_cycle(const Graph& g) {
    if (g.n < 3 || static_cast<int>(g.edges.size()) != g.n) return false;
    auto adj = g.adjacency();
    for (const auto& row : adj)
        if (row.size() != 2) return false;
    return is_connected(g);
}

// True iff g is the cycle 0-1-...-(n-1)-0, i.e. vertices are already
// numbered along the cycle.
inline bool is_canonical_cycle(const Graph& g) {
    if (g.n < 3 || static_cast<int>(g.edges.size()) != g.n) return false;
    for (int v = 0; v < g.n; ++v)
        if (!g.has_edge(v, (v + 1) % g.n)) return false;
    return true;
}

// Vertices of a cycle graph in walk order, starting at vertex 0 and
// stepping first toward its smaller neighbour. Deterministic.
inline std::vector<int> cycle_order(const Graph& g) {
    if (!is_cycle(g)) throw std::invalid_argument("footprint is not a cycle");
    auto adj = g.adjacency();
    std::vector<int> order{0, adj[0][0]};
    while (static_cast<int>(order.size()) < g.n) {
        int cur = order.back(), prev = order[order.size() - 2];
        order.push_back(adj[cur][0] == prev ? adj[cur][1] : adj[cur][0]);
    }
    return order;
}

// Biconnected components as edge lists (Hopcroft-Tarjan).
inline std::vector<std::vector<VertexPair>> biconnected_components(const Graph& g) {
    std::vector<std::vector<VertexPair>> blocks;
    auto adj = g.adjacency();
    std::vector<int> disc(g.n, -1), low(g.n, 0);
    std::vector<VertexPair> stack;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int v, int parent) {
        disc[v] = low[v] = timer++;
        for (int w : adj[v]) {
            if (w == parent) {
                parent = -1;  // consume the tree edge once; parallel edges impossible
                continue;
            }
            if (disc[w] == -1) {
                stack.push_back(make_vertex_pair(v, w));
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    std::vector<VertexPair> block;
                    VertexPair top = make_vertex_pair(v, w);
                    while (true) {
                        block.push_back(stack.back());
                        stack.pop_back();
                        if (block.back() == top) break;
                    }
                    std::sort(block.begin(), block.end());
                    blocks.push_back(std::move(block));
                }
            } else if (disc[w] < disc[v]) {
                stack.push_back(make_vertex_pair(v, w));
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    for (int v = 0; v < g.n; ++v)
        if (disc[v] == -1) dfs(v, -1);
    return blocks;
}

// Bridges = biconnected components of size one.
inline std::vector<VertexPair> bridges(const Graph& g) {
    std::vector<VertexPair> result;
    for (auto& block : biconnected_components(g))
        if (block.size() == 1) result.push_back(block[0]);
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace templab
