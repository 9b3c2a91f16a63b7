#pragma once

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "moorekit/bounds.hpp"
#include "moorekit/metrics.hpp"
#include "moorekit/mixed_graph.hpp"

namespace moorekit {

/// K_{d,d}: parts {0..d-1} and {d..2d-1}, all cross pairs as edges.
inline MixedGraph complete_bipartite(int d) {
    if (d < 1) fail(ErrorKind::invalid_argument, "degree must be at least 1");
    std::vector<VertexPair> edges;
    edges.reserve(static_cast<std::size_t>(d) * d);
    for (int u = 0; u < d; ++u)
        for (int v = 0; v < d; ++v) edges.emplace_back(u, d + v);
    return MixedGraph::build(2 * d, edges, {});
}

/// Cycle on n vertices, undirected (n edges) or directed (n arcs).
inline MixedGraph cycle(int n, bool directed) {
    if (n < 3) fail(ErrorKind::invalid_argument, "cycle needs at least 3 vertices");
    std::vector<VertexPair> pairs;
    pairs.reserve(n);
    for (int v = 0; v < n; ++v) pairs.emplace_back(v, (v + 1) % n);
    if (directed) return MixedGraph::build(n, {}, pairs);
    return MixedGraph::build(n, pairs, {});
}

struct LineDigraphResult {
    MixedGraph graph;
    /// Vertex i of the line digraph is this arc of the associated digraph
    /// of the input.
    std::vector<VertexPair> vertex_arcs;
};

/// Line digraph on the associated digraph: one vertex per arc, an arc from
/// (u,v) to (v,w) for every out-neighbor w of v. The digon pairs
/// (u,v) <-> (v,u) arising from edges of the input normalize back to edges,
/// so each input edge contributes one edge between its two arc-vertices.
inline LineDigraphResult line_digraph(const MixedGraph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.out_neighbors(v).empty())
            fail(ErrorKind::empty_out_neighborhood,
                 "vertex " + std::to_string(v) + " has no out-neighbor");

    auto arcs = associated_digraph(g);
    const int nl = static_cast<int>(arcs.size());
    auto index_of = [&arcs](VertexPair a) {
        return static_cast<int>(std::lower_bound(arcs.begin(), arcs.end(), a) - arcs.begin());
    };

    std::vector<VertexPair> line_arcs;
    for (int i = 0; i < nl; ++i) {
        const auto& [u, v] = arcs[i];
        (void)u;
        for (int w : g.out_neighbors(v)) line_arcs.emplace_back(i, index_of({v, w}));
    }
    return {MixedGraph::build(nl, {}, line_arcs), std::move(arcs)};
}

namespace detail {

inline bool is_prime(int q) {
    if (q < 2) return false;
    for (int f = 2; f * f <= q; ++f)
        if (q % f == 0) return false;
    return true;
}

}  // namespace detail

/// Point-line incidence graph of the projective plane of prime order q:
/// 2(q^2+q+1) vertices, (q+1)-regular, diameter 3, girth 6. Points come
/// first, lines after.
inline MixedGraph projective_plane_incidence(int q) {
    if (!detail::is_prime(q)) fail(ErrorKind::not_prime, std::to_string(q));

    // Normalized homogeneous coordinates over the field of order q: the
    // first nonzero entry is 1. Lines use the same representatives.
    std::vector<std::array<int, 3>> reps;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) reps.push_back({1, a, b});
    for (int c = 0; c < q; ++c) reps.push_back({0, 1, c});
    reps.push_back({0, 0, 1});

    const int np = static_cast<int>(reps.size());
    std::vector<VertexPair> edges;
    for (int p = 0; p < np; ++p)
        for (int l = 0; l < np; ++l) {
            int dot = 0;
            for (int i = 0; i < 3; ++i) dot += reps[p][i] * reps[l][i];
            if (dot % q == 0) edges.emplace_back(p, np + l);
        }
    return MixedGraph::build(2 * np, edges, {});
}

/// Incidence graph of the 15 edges vs the 15 perfect matchings of the
/// complete graph on 6 vertices: 3-regular bipartite, order 30, diameter 4,
/// girth 8.
inline MixedGraph tutte_coxeter() {
    std::vector<VertexPair> k6_edges;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) k6_edges.emplace_back(i, j);

    auto disjoint = [](VertexPair a, VertexPair b) {
        return a.first != b.first && a.first != b.second && a.second != b.first &&
               a.second != b.second;
    };

    std::vector<std::array<int, 3>> matchings;
    const int ne = static_cast<int>(k6_edges.size());
    for (int a = 0; a < ne; ++a)
        for (int b = a + 1; b < ne; ++b) {
            if (!disjoint(k6_edges[a], k6_edges[b])) continue;
            for (int c = b + 1; c < ne; ++c)
                if (disjoint(k6_edges[a], k6_edges[c]) && disjoint(k6_edges[b], k6_edges[c]))
                    matchings.push_back({a, b, c});
        }

    std::vector<VertexPair> edges;
    for (int m = 0; m < static_cast<int>(matchings.size()); ++m)
        for (int e : matchings[m]) edges.emplace_back(e, ne + m);
    return MixedGraph::build(ne + static_cast<int>(matchings.size()), edges, {});
}

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) fail(ErrorKind::invariant_violation, what);
}

inline void check_construction(const MixedGraph& g, int order, int r, int z, int diam,
                               const std::string& name) {
    require(g.order() == order, name + ": unexpected order");
    require(total_regularity(g) == std::make_pair(r, z), name + ": not totally regular");
    require(bipartition(g).has_value(), name + ": not bipartite");
    require(diameter(g) == diam, name + ": unexpected diameter");
}

}  // namespace detail

/// The Moore bipartite mixed graph of diameter 3 with r = 1, z = d - 1:
/// the line digraph of K_{d,d}, of order 2d^2.
inline MixedGraph moore_mixed_k3(int d) {
    if (d < 2) fail(ErrorKind::invalid_argument, "degree must be at least 2");
    MixedGraph g = line_digraph(complete_bipartite(d)).graph;
    BoundParams p{1, d - 1, 3};
    detail::require(small_k_formula(p).value == 2 * d * d, "moore_mixed_k3: bound mismatch");
    detail::check_construction(g, 2 * d * d, 1, d - 1, 3, "moore_mixed_k3");
    return g;
}

/// Dense bipartite mixed families from line digraphs of Moore bipartite
/// graphs: k = 4 uses the projective-plane incidence graph of prime order q
/// (order 2d((d-1)^3 - 1)/(d-2) with d = q+1); k = 5 uses the Tutte-Coxeter
/// graph (order 90, z = 2).
inline MixedGraph dense_family(int k, int q) {
    if (k == 4) {
        MixedGraph g = line_digraph(projective_plane_incidence(q)).graph;
        const int d = q + 1;
        const Int order = 2 * d * (detail::int_pow(d - 1, 3) - 1) / (d - 2);
        detail::require(order == g.order(), "dense_family: order formula mismatch");
        detail::check_construction(g, g.order(), 1, q, 4, "dense_family k=4");
        return g;
    }
    if (k == 5) {
        MixedGraph g = line_digraph(tutte_coxeter()).graph;
        detail::check_construction(g, 90, 1, 2, 5, "dense_family k=5");
        return g;
    }
    fail(ErrorKind::unsupported_k, "dense family exists for k in {4,5}");
}

/// The diameter-3 Moore graph with r = z = 1: the line digraph of the
/// undirected 4-cycle. Order 8, spectrum {2, 0^6, -2}.
inline MixedGraph fig2a() {
    MixedGraph g = line_digraph(cycle(4, false)).graph;
    detail::check_construction(g, 8, 1, 1, 3, "fig2a");
    return g;
}

}  // namespace moorekit
