#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "moorekit/mixed_graph.hpp"

namespace moorekit {

/// Table of directed distances over the associated digraph.
class DistanceMatrix {
public:
    static constexpr int kUnreachable = -1;

    explicit DistanceMatrix(int n) : n_(n), dist_(static_cast<std::size_t>(n) * n, kUnreachable) {}

    int n() const { return n_; }

    int operator()(int u, int v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
    int& at(int u, int v) { return dist_[static_cast<std::size_t>(u) * n_ + v]; }

    bool reachable(int u, int v) const { return (*this)(u, v) != kUnreachable; }

    /// Max entry over all ordered pairs; absent if any pair is unreachable.
    std::optional<int> max_distance() const {
        int best = 0;
        for (int d : dist_) {
            if (d == kUnreachable) return std::nullopt;
            if (d > best) best = d;
        }
        return best;
    }

private:
    int n_;
    std::vector<int> dist_;
};

/// Exact directed distances, by BFS from every vertex over the associated
/// digraph.
inline DistanceMatrix distances(const MixedGraph& g) {
    const int n = g.order();
    DistanceMatrix m(n);
    std::vector<int> queue;
    queue.reserve(n);
    for (int s = 0; s < n; ++s) {
        m.at(s, s) = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.out_neighbors(u)) {
                if (m(s, v) == DistanceMatrix::kUnreachable) {
                    m.at(s, v) = m(s, u) + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    return m;
}

/// Directed diameter; absent when the graph is not strongly connected.
inline std::optional<int> diameter(const MixedGraph& g) {
    if (g.order() == 0) return 0;
    return distances(g).max_distance();
}

/// Number of distinct shortest directed u->v paths in the associated digraph.
inline std::uint64_t shortest_path_count(const MixedGraph& g, int u, int v) {
    const int n = g.order();
    if (u < 0 || u >= n || v < 0 || v >= n)
        fail(ErrorKind::out_of_range, "vertex label outside graph");
    std::vector<int> dist(n, -1);
    std::vector<std::uint64_t> count(n, 0);
    dist[u] = 0;
    count[u] = 1;
    std::vector<int> queue{u};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int w = queue[head];
        for (int x : g.out_neighbors(w)) {
            if (dist[x] == -1) {
                dist[x] = dist[w] + 1;
                queue.push_back(x);
            }
            if (dist[x] == dist[w] + 1) count[x] += count[w];
        }
    }
    if (dist[v] == -1)
        fail(ErrorKind::unreachable,
             std::to_string(v) + " not reachable from " + std::to_string(u));
    return count[v];
}

/// Shortest cycle length of the underlying undirected simple graph (digons
/// are single edges, never 2-cycles). Absent when the graph is acyclic.
inline std::optional<int> girth_underlying(const MixedGraph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (const auto& [u, v] : g.arcs()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    int best = -1;
    std::vector<int> dist(n), parent(n), queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : adj[u]) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (parent[u] != v && parent[v] != u) {
                    // Non-tree edge: closes a cycle through the BFS root.
                    int len = dist[u] + dist[v] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

}  // namespace moorekit
