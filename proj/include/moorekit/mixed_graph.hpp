#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "moorekit/error.hpp"

namespace moorekit {

using VertexPair = std::pair<int, int>;

/// Per-vertex degree triple: undirected degree, out-degree, in-degree.
struct DegreeTriple {
    int undirected = 0;
    int out = 0;
    int in = 0;

    friend bool operator==(const DegreeTriple&, const DegreeTriple&) = default;
};

using DegreeProfile = std::vector<DegreeTriple>;

struct Bipartition {
    std::vector<int> x;  // contains the lowest-labeled vertex of every component
    std::vector<int> y;
};

/// A graph with both undirected edges and directed arcs, stored in normalized
/// form: no self-loops, edges and arcs disjoint as adjacencies, and no digon
/// kept as a pair of arcs (a digon is always stored as an edge). Immutable
/// after construction; all queries are read-only and safe to call concurrently.
class MixedGraph {
public:
    /// Validates and normalizes the input. Arc pairs (u,v),(v,u) are folded
    /// into a single edge {u,v}. An edge and an arc on the same vertex pair
    /// are rejected.
    static MixedGraph build(int n, std::vector<VertexPair> edges, std::vector<VertexPair> arcs) {
        if (n < 0) fail(ErrorKind::invalid_argument, "vertex count must be non-negative");

        auto check_pair = [n](VertexPair p, const char* what) {
            if (p.first < 0 || p.first >= n || p.second < 0 || p.second >= n)
                fail(ErrorKind::out_of_range,
                     std::string(what) + " (" + std::to_string(p.first) + "," +
                         std::to_string(p.second) + ") outside 0.." + std::to_string(n - 1));
            if (p.first == p.second)
                fail(ErrorKind::self_loop,
                     std::string(what) + " at vertex " + std::to_string(p.first));
        };

        std::set<VertexPair> edge_set;
        for (auto e : edges) {
            check_pair(e, "edge");
            if (e.first > e.second) std::swap(e.first, e.second);
            edge_set.insert(e);
        }

        std::set<VertexPair> arc_set;
        for (auto a : arcs) {
            check_pair(a, "arc");
            arc_set.insert(a);
        }

        for (const auto& a : arc_set) {
            VertexPair key{std::min(a.first, a.second), std::max(a.first, a.second)};
            if (edge_set.count(key))
                fail(ErrorKind::edge_arc_conflict,
                     "arc (" + std::to_string(a.first) + "," + std::to_string(a.second) +
                         ") parallel to an edge");
        }

        // Fold digons into edges.
        for (auto it = arc_set.begin(); it != arc_set.end();) {
            VertexPair rev{it->second, it->first};
            if (it->first < it->second && arc_set.count(rev)) {
                edge_set.insert(*it);
                arc_set.erase(rev);
                it = arc_set.erase(it);
            } else {
                ++it;
            }
        }

        return MixedGraph(n, {edge_set.begin(), edge_set.end()}, {arc_set.begin(), arc_set.end()});
    }

    int order() const { return n_; }

    /// Edges as sorted (u,v) pairs with u < v.
    const std::vector<VertexPair>& edges() const { return edges_; }

    /// Arcs as sorted ordered pairs.
    const std::vector<VertexPair>& arcs() const { return arcs_; }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), VertexPair{u, v});
    }

    bool has_arc(int u, int v) const {
        return std::binary_search(arcs_.begin(), arcs_.end(), VertexPair{u, v});
    }

    /// Out-neighbors in the associated digraph (each edge acts as a digon).
    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }

    friend bool operator==(const MixedGraph& a, const MixedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.arcs_ == b.arcs_;
    }

private:
    MixedGraph(int n, std::vector<VertexPair> edges, std::vector<VertexPair> arcs)
        : n_(n), edges_(std::move(edges)), arcs_(std::move(arcs)), out_(n), in_(n) {
        for (const auto& [u, v] : edges_) {
            out_[u].push_back(v);
            out_[v].push_back(u);
            in_[u].push_back(v);
            in_[v].push_back(u);
        }
        for (const auto& [u, v] : arcs_) {
            out_[u].push_back(v);
            in_[v].push_back(u);
        }
        for (int v = 0; v < n_; ++v) {
            std::sort(out_[v].begin(), out_[v].end());
            std::sort(in_[v].begin(), in_[v].end());
        }
    }

    int n_;
    std::vector<VertexPair> edges_;
    std::vector<VertexPair> arcs_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

/// Arc list of the associated digraph: one ordered pair per arc plus two per
/// edge. Sorted; size is 2|edges| + |arcs|.
inline std::vector<VertexPair> associated_digraph(const MixedGraph& g) {
    std::vector<VertexPair> arcs;
    arcs.reserve(2 * g.edges().size() + g.arcs().size());
    for (const auto& [u, v] : g.edges()) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    arcs.insert(arcs.end(), g.arcs().begin(), g.arcs().end());
    std::sort(arcs.begin(), arcs.end());
    return arcs;
}

inline DegreeProfile degree_profile(const MixedGraph& g) {
    DegreeProfile profile(g.order());
    for (const auto& [u, v] : g.edges()) {
        ++profile[u].undirected;
        ++profile[v].undirected;
    }
    for (const auto& [u, v] : g.arcs()) {
        ++profile[u].out;
        ++profile[v].in;
    }
    return profile;
}

/// Returns (r, z) if every vertex has undirected degree r and in-degree =
/// out-degree = z; absent otherwise.
inline std::optional<std::pair<int, int>> total_regularity(const MixedGraph& g) {
    if (g.order() == 0) return std::nullopt;
    auto profile = degree_profile(g);
    const int r = profile[0].undirected;
    const int z = profile[0].out;
    for (const auto& t : profile)
        if (t.undirected != r || t.out != z || t.in != z) return std::nullopt;
    return std::make_pair(r, z);
}

/// 2-coloring of the underlying undirected graph of the associated digraph.
/// Absent if some component contains an odd closed walk. The lowest-labeled
/// vertex of each component goes to part x.
inline std::optional<Bipartition> bipartition(const MixedGraph& g) {
    const int n = g.order();
    std::vector<int> color(n, -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            auto visit = [&](int v) -> bool {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                    return true;
                }
                return color[v] != color[u];
            };
            for (int v : g.out_neighbors(u))
                if (!visit(v)) return std::nullopt;
            for (int v : g.in_neighbors(u))
                if (!visit(v)) return std::nullopt;
        }
    }
    Bipartition parts;
    for (int v = 0; v < n; ++v) (color[v] == 0 ? parts.x : parts.y).push_back(v);
    return parts;
}

/// The converse mixed graph: every arc reversed, edges unchanged.
inline MixedGraph converse(const MixedGraph& g) {
    std::vector<VertexPair> reversed;
    reversed.reserve(g.arcs().size());
    for (const auto& [u, v] : g.arcs()) reversed.emplace_back(v, u);
    return MixedGraph::build(g.order(), g.edges(), reversed);
}

/// Relabels vertices: vertex v becomes perm[v].
inline MixedGraph relabel(const MixedGraph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order())
        fail(ErrorKind::invalid_argument, "permutation size mismatch");
    std::vector<VertexPair> edges, arcs;
    edges.reserve(g.edges().size());
    arcs.reserve(g.arcs().size());
    for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    for (const auto& [u, v] : g.arcs()) arcs.emplace_back(perm[u], perm[v]);
    return MixedGraph::build(g.order(), edges, arcs);
}

}  // namespace moorekit
