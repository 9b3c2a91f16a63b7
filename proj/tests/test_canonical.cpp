#include <catch2/catch_amalgamated.hpp>

#include "moorekit/canonical.hpp"
#include "moorekit/constructions.hpp"
#include "moorekit/search.hpp"
#include "oracles.hpp"

using namespace moorekit;

TEST_CASE("canonical form is invariant under relabeling") {
    MixedGraph g = fig2a();
    CanonicalForm base = canonical_form(g);
    for (std::uint32_t seed = 0; seed < 100; ++seed) {
        auto perm = oracle::random_permutation(g.order(), seed);
        REQUIRE(canonical_form(relabel(g, perm)) == base);
    }
}

TEST_CASE("canonical form is idempotent on its own representative") {
    MixedGraph g = moore_mixed_k3(3);
    CanonicalForm form = canonical_form(g);
    MixedGraph rep = MixedGraph::build(form.n, form.edges, form.arcs);
    CanonicalForm again = canonical_form(rep);
    REQUIRE(again == form);
    REQUIRE(again.edges == form.edges);
    REQUIRE(again.arcs == form.arcs);
}

TEST_CASE("the two diameter-3 Moore graphs have distinct forms") {
    auto cert = enumerate({1, 1, 3, 8});
    REQUIRE(cert.count() == 2);
    REQUIRE_FALSE(cert.forms[0] == cert.forms[1]);
    REQUIRE_FALSE(is_isomorphic(cert.representatives[0], cert.representatives[1]));
}

TEST_CASE("same order, different structure") {
    MixedGraph two_triangles =
        MixedGraph::build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}, {});
    MixedGraph c6 = cycle(6, false);
    REQUIRE_FALSE(canonical_form(two_triangles) == canonical_form(c6));
}

TEST_CASE("relabelings are isomorphic") {
    for (std::uint32_t seed = 0; seed < 20; ++seed) {
        MixedGraph g = oracle::random_mixed_graph(7, 4, 5, 300 + seed);
        auto perm = oracle::random_permutation(7, 1000 + seed);
        REQUIRE(is_isomorphic(g, relabel(g, perm)));
    }
}

TEST_CASE("isomorphism agrees with brute-force search") {
    // Relabeled pairs must be isomorphic; structurally perturbed pairs
    // usually are not. Either way both deciders must agree.
    for (std::uint32_t seed = 0; seed < 15; ++seed) {
        MixedGraph g = oracle::random_mixed_graph(6, 4, 4, 400 + seed);
        MixedGraph h = relabel(g, oracle::random_permutation(6, 2000 + seed));
        REQUIRE(is_isomorphic(g, h) == oracle::brute_force_isomorphic(g, h));

        MixedGraph other = oracle::random_mixed_graph(6, 4, 4, 483 + seed);
        REQUIRE(is_isomorphic(g, other) == oracle::brute_force_isomorphic(g, other));
    }
}

TEST_CASE("mirror image is checked against brute force") {
    MixedGraph g = fig2a();
    MixedGraph mirror = converse(g);
    REQUIRE(is_isomorphic(g, mirror) == oracle::brute_force_isomorphic(g, mirror));
}

TEST_CASE("edges never map to arcs") {
    MixedGraph edge = MixedGraph::build(2, {{0, 1}}, {});
    MixedGraph digon_free_pair = MixedGraph::build(2, {}, {{0, 1}});
    REQUIRE_FALSE(is_isomorphic(edge, digon_free_pair));
}
