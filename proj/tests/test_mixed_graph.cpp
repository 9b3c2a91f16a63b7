#include <catch2/catch_amalgamated.hpp>

#include "moorekit/constructions.hpp"
#include "moorekit/mixed_graph.hpp"
#include "oracles.hpp"

using namespace moorekit;

TEST_CASE("build normalizes a digon into an edge") {
    MixedGraph g = MixedGraph::build(2, {}, {{0, 1}, {1, 0}});
    REQUIRE(g.edges() == std::vector<VertexPair>{{0, 1}});
    REQUIRE(g.arcs().empty());
}

TEST_CASE("build rejects an arc parallel to an edge") {
    REQUIRE_THROWS_MATCHES(MixedGraph::build(2, {{0, 1}}, {{0, 1}}), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.kind() == ErrorKind::edge_arc_conflict;
                           }));
    // Same conflict when the arc pair would fold onto an existing edge.
    REQUIRE_THROWS_AS(MixedGraph::build(2, {{0, 1}}, {{0, 1}, {1, 0}}), Error);
}

TEST_CASE("build rejects self-loops and out-of-range labels") {
    REQUIRE_THROWS_MATCHES(MixedGraph::build(3, {{1, 1}}, {}), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.kind() == ErrorKind::self_loop;
                           }));
    REQUIRE_THROWS_MATCHES(MixedGraph::build(3, {}, {{0, 3}}), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.kind() == ErrorKind::out_of_range;
                           }));
}

TEST_CASE("build accepts a mixed 4-cycle with max degrees (1,1)") {
    MixedGraph g = MixedGraph::build(4, {{0, 1}, {2, 3}}, {{1, 2}, {3, 0}});
    for (const auto& t : degree_profile(g)) {
        REQUIRE(t.undirected == 1);
        REQUIRE(t.out <= 1);
        REQUIRE(t.in <= 1);
    }
    // Arc degrees are not balanced vertex by vertex, so the graph is not
    // totally regular.
    REQUIRE_FALSE(total_regularity(g).has_value());
    REQUIRE(diameter(g) == 3);
}

TEST_CASE("duplicate input pairs collapse") {
    MixedGraph g = MixedGraph::build(3, {{0, 1}, {1, 0}}, {{1, 2}, {1, 2}});
    REQUIRE(g.edges().size() == 1);
    REQUIRE(g.arcs().size() == 1);
}

TEST_CASE("associated digraph sizes") {
    REQUIRE(associated_digraph(complete_bipartite(2)).size() == 8);

    MixedGraph c3 = cycle(3, true);
    REQUIRE(associated_digraph(c3) == c3.arcs());

    MixedGraph f = fig2a();
    REQUIRE(f.edges().size() == 4);
    REQUIRE(f.arcs().size() == 8);
    REQUIRE(associated_digraph(f).size() == 16);
}

TEST_CASE("total regularity") {
    REQUIRE(total_regularity(complete_bipartite(3)) == std::make_pair(3, 0));
    REQUIRE(total_regularity(fig2a()) == std::make_pair(1, 1));

    // In-degree 2 vs out-degree 0 at vertex 2: not totally regular.
    MixedGraph bad = MixedGraph::build(3, {}, {{0, 2}, {1, 2}});
    REQUIRE_FALSE(total_regularity(bad).has_value());

    MixedGraph empty = MixedGraph::build(0, {}, {});
    REQUIRE_FALSE(total_regularity(empty).has_value());
}

TEST_CASE("bipartition") {
    auto parts = bipartition(complete_bipartite(2));
    REQUIRE(parts.has_value());
    REQUIRE(parts->x == std::vector<int>{0, 1});
    REQUIRE(parts->y == std::vector<int>{2, 3});

    REQUIRE_FALSE(bipartition(cycle(3, true)).has_value());

    auto lk22 = bipartition(moore_mixed_k3(2));
    REQUIRE(lk22.has_value());
    REQUIRE(lk22->x.size() == 4);
    REQUIRE(lk22->y.size() == 4);
}

TEST_CASE("bipartition puts the lowest vertex of every component in x") {
    // Two disjoint edges.
    MixedGraph g = MixedGraph::build(4, {{0, 1}, {2, 3}}, {});
    auto parts = bipartition(g);
    REQUIRE(parts.has_value());
    REQUIRE(parts->x == std::vector<int>{0, 2});
}

TEST_CASE("degree sums match edge and arc counts") {
    for (std::uint32_t seed = 0; seed < 20; ++seed) {
        MixedGraph g = oracle::random_mixed_graph(8, 5, 6, seed);
        auto profile = degree_profile(g);
        int und = 0, out = 0, in = 0;
        for (const auto& t : profile) {
            und += t.undirected;
            out += t.out;
            in += t.in;
        }
        REQUIRE(und == 2 * static_cast<int>(g.edges().size()));
        REQUIRE(out == static_cast<int>(g.arcs().size()));
        REQUIRE(in == static_cast<int>(g.arcs().size()));
    }
}

TEST_CASE("total regularity fixes the global counts") {
    MixedGraph g = moore_mixed_k3(3);
    auto reg = total_regularity(g);
    REQUIRE(reg.has_value());
    auto [r, z] = *reg;
    REQUIRE(2 * static_cast<int>(g.edges().size()) == g.order() * r);
    REQUIRE(static_cast<int>(g.arcs().size()) == g.order() * z);
}

TEST_CASE("rebuilding from the associated digraph is the identity") {
    std::vector<MixedGraph> zoo{fig2a(), complete_bipartite(3), cycle(5, true),
                                cycle(6, false)};
    for (std::uint32_t seed = 0; seed < 10; ++seed)
        zoo.push_back(oracle::random_mixed_graph(7, 4, 5, 100 + seed));
    for (const auto& g : zoo) {
        MixedGraph rebuilt = MixedGraph::build(g.order(), {}, associated_digraph(g));
        REQUIRE(rebuilt == g);
    }
}

TEST_CASE("converse is an involution that preserves edges") {
    MixedGraph g = fig2a();
    MixedGraph rev = converse(g);
    REQUIRE(rev.edges() == g.edges());
    REQUIRE(converse(rev) == g);
}
