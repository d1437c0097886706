#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "lcskit/relgraph.hpp"

using namespace lcskit;

namespace {

// Abstract graph with trivial labels, for the structural predicates.
RelationGraph plain_graph(int vertices, const std::vector<std::pair<int, int>>& edges) {
    RelationGraph g;
    for (int i = 0; i < vertices; ++i) g.vertices.push_back({i, i, 3, {}});
    int id = 0;
    for (auto [u, v] : edges) g.edges.push_back({id++, 0, std::min(u, v), std::max(u, v)});
    return g;
}

}  // namespace

TEST_CASE("triangle fixture graph is a 3-cycle") {
    auto g = build_graph(testutil::fixture("triangle7.txt"));
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(betti(g) == 1);
    CHECK(g.component_count() == 1);
    CHECK(is_cycle_separated(g));
    CHECK(is_conjugation_free_graph(g));
}

TEST_CASE("braid section fixture graph is K4") {
    auto g = build_graph(testutil::fixture("braid_section6.txt"));
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(betti(g) == 3);
    CHECK_FALSE(is_cycle_separated(g));
    CHECK_FALSE(is_conjugation_free_graph(g));
}

TEST_CASE("pencil and generic fixtures give trivial graphs") {
    auto g = build_graph(testutil::fixture("pencil4.txt"));
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
    CHECK(betti(g) == 0);
    auto h = build_graph(testutil::fixture("generic4.txt"));
    CHECK(h.vertex_count() == 0);
    CHECK(betti(h) == 0);
    CHECK(is_cycle_separated(h));
    CHECK(is_conjugation_free_graph(h));
}

TEST_CASE("edges require supports sharing exactly one generator") {
    // Two triples sharing nothing, one pair sharing one.
    auto p = parse_presentation(testutil::presentation_text(7, {{1, 2, 3}, {4, 5, 6}}));
    auto g = build_graph(p);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 0);
    auto q = parse_presentation(testutil::presentation_text(6, {{1, 2, 3}, {3, 4, 5}}));
    auto h = build_graph(q);
    CHECK(h.edge_count() == 1);
    CHECK(h.edges[0].generator == 3);
}

TEST_CASE("cycle-separated predicate on hand-built graphs") {
    // Two triangles sharing a vertex: blocks are cycles but not vertex-disjoint.
    auto shared = plain_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    CHECK_FALSE(is_cycle_separated(shared));
    // Two triangles joined by a bridge edge: fine.
    auto bridged = plain_graph(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(is_cycle_separated(bridged));
    CHECK(is_conjugation_free_graph(bridged));
    // Theta graph: a block with two independent cycles.
    auto theta = plain_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
    CHECK_FALSE(is_cycle_separated(theta));
    // A tree is always cycle separated.
    auto tree = plain_graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
    CHECK(is_cycle_separated(tree));
    CHECK(betti(tree) == 0);
}

TEST_CASE("degree pruning accepts some non-cycle-separated graphs") {
    // K4 plus a pendant still fails; a 4-cycle with a chord... use the theta
    // graph: max degree 3 but beta = 2, pruning eats it from the degree-2
    // vertices and succeeds only if it can empty the graph.
    auto theta = plain_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
    CHECK(is_conjugation_free_graph(theta));
    CHECK_FALSE(is_cycle_separated(theta));
    auto k4 = plain_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(is_conjugation_free_graph(k4));
}

TEST_CASE("contraction of a cycle-separated graph is a forest") {
    auto g = build_graph(testutil::fixture("triangle7.txt"));
    auto c = contract(g);
    CHECK(c.nodes.size() == 1);
    CHECK(c.nodes[0].cycled);
    CHECK(c.nodes[0].members.size() == 3);
    CHECK(c.links.empty());

    auto k4 = build_graph(testutil::fixture("braid_section6.txt"));
    CHECK_THROWS_AS(contract(k4), HypothesisError);
}

TEST_CASE("isomorphism respects multiplicity labels") {
    auto p = parse_presentation(testutil::presentation_text(6, {{1, 2, 3}, {3, 4, 5}}));
    auto q = parse_presentation(testutil::presentation_text(6, {{1, 2, 4}, {4, 5, 6}}));
    auto g = build_graph(p), h = build_graph(q);
    auto iso = graphs_isomorphic(g, h);
    REQUIRE(iso.has_value());
    // A quadruple cannot map to a triple.
    auto r = parse_presentation(testutil::presentation_text(7, {{1, 2, 3, 6}, {3, 4, 5}}));
    CHECK_FALSE(graphs_isomorphic(g, build_graph(r)).has_value());
}

TEST_CASE("isomorphism distinguishes path from triangle") {
    auto path = plain_graph(3, {{0, 1}, {1, 2}});
    auto tri = plain_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_FALSE(graphs_isomorphic(path, tri).has_value());
    CHECK(graphs_isomorphic(tri, tri).has_value());
}

TEST_CASE("random cycle-separated generator produces what it promises") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        auto p = parse_presentation(testutil::random_cycle_separated_text(rng));
        CHECK(validate(p).ok());
        CHECK(p.n <= 10);
        auto g = build_graph(p);
        CHECK(is_cycle_separated(g));
        CHECK(is_conjugation_free_graph(g));
    }
}
