#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "snake/errors.hpp"
#include "snake/exact_matrix.hpp"
#include "snake/matchings.hpp"
#include "snake/tri_dag.hpp"

#include "test_util.hpp"

using namespace snake;

TEST_CASE("contracted running example UR, standard assignment") {
    SnakeGraph g = SnakeGraph::from_word("UR");
    TriDag t = contract(g, Assignment::Standard);

    CHECK(t.nodes().size() == 6);
    CHECK(t.arcs().size() == 8);
    REQUIRE(t.triangles().size() == 3);
    CHECK(t.triangles()[0].label == 1);
    CHECK(t.triangles()[0].up);
    CHECK(t.triangles()[1].label == 2);
    CHECK(!t.triangles()[1].up);
    CHECK(t.triangles()[2].label == 3);
    CHECK(t.triangles()[2].up);

    // Exactly two contraction nodes: e_1 = (0,1)-(1,1) at its midpoint
    // (1/2, 1) and the north edge of G_3 at (3/2, 2).
    std::set<std::pair<int, int>> contraction_pos;
    for (const TriNode& n : t.nodes())
        if (n.contraction_of) contraction_pos.insert({n.pos.x2, n.pos.y2});
    CHECK(contraction_pos == std::set<std::pair<int, int>>{{1, 2}, {3, 4}});

    Terminals term = terminals(t);
    REQUIRE(term.k() == 2);
    CHECK(t.node(term.sources[0]).pos == HalfPoint{-1, 0});
    CHECK(t.node(term.sources[1]).pos == HalfPoint{-1, 4});
    CHECK(t.node(term.sinks[0]).pos == HalfPoint{3, 0});
    CHECK(t.node(term.sinks[1]).pos == HalfPoint{5, 2});

    CHECK(hourglass_count(t) == 1);
}

TEST_CASE("contracted running example UR, opposite assignment") {
    TriDag t = contract(SnakeGraph::from_word("UR"), Assignment::Opposite);
    CHECK(t.nodes().size() == 5);
    CHECK(t.arcs().size() == 7);
    Terminals term = terminals(t);
    CHECK(term.k() == 1);
    CHECK(hourglass_count(t) == 0);
    // Triangle orientations swap under the opposite assignment.
    CHECK(!t.triangles()[0].up);
    CHECK(t.triangles()[1].up);
    CHECK(!t.triangles()[2].up);
}

TEST_CASE("single tile") {
    TriDag t = contract(SnakeGraph::from_word(""), Assignment::Standard);
    CHECK(t.nodes().size() == 3);
    CHECK(t.arcs().size() == 3);
    REQUIRE(t.triangles().size() == 1);
    CHECK(t.triangles()[0].up);
    Terminals term = terminals(t);
    CHECK(term.k() == 1);
    CHECK(hourglass_count(t) == 0);
}

TEST_CASE("vertical ladders stack hourglasses") {
    // L_5 vertical: k = 3 sources, 2 hourglasses.
    TriDag t = contract(SnakeGraph::from_word("UUUU"), Assignment::Standard);
    CHECK(terminals(t).k() == 3);
    CHECK(hourglass_count(t) == 2);
}

TEST_CASE("structure laws over all graphs up to 10 tiles") {
    for (int d = 1; d <= 10; ++d) {
        for (const auto& w : testutil::all_words(d)) {
            SnakeGraph g = SnakeGraph::from_word(w);
            for (Assignment a : {Assignment::Standard, Assignment::Opposite}) {
                TriDag t = contract(g, a);
                // Arcs strictly increase x; node ids are a topological order.
                for (const TriArc& arc : t.arcs()) {
                    REQUIRE(t.node(arc.from).pos.x2 < t.node(arc.to).pos.x2);
                    REQUIRE(arc.from < arc.to);
                }
                // Arcs biject with non-contracted edges.
                std::set<Edge> arc_edges;
                for (const TriArc& arc : t.arcs()) arc_edges.insert(arc.edge);
                REQUIRE(arc_edges.size() == t.arcs().size());
                int contractions = 0;
                for (const TriNode& n : t.nodes()) {
                    if (n.contraction_of) {
                        ++contractions;
                        REQUIRE(!arc_edges.count(*n.contraction_of));
                    }
                }
                REQUIRE(t.arcs().size() + static_cast<std::size_t>(contractions) ==
                        g.edges().size());
                // Sources balance sinks; hourglass law. terminals() itself
                // asserts the y-distinctness the ordering needs.
                Terminals term = terminals(t);
                REQUIRE(term.sources.size() == term.sinks.size());
                REQUIRE(static_cast<int>(term.k()) == hourglass_count(t) + 1);
            }
        }
    }
}

TEST_CASE("matching to route on the running example") {
    SnakeGraph g = SnakeGraph::from_word("UR");
    TriDag t = contract(g, Assignment::Standard);

    // A 2-route whose matched edges are {south G_1, west G_2, south G_3},
    // with the contracted north edge of G_3 unused by any path.
    PerfectMatching m;
    m.edges = {Edge::of({0, 0}, {1, 0}), Edge::of({0, 1}, {0, 2}), Edge::of({1, 1}, {2, 1}),
               Edge::of({1, 2}, {2, 2})};
    std::sort(m.edges.begin(), m.edges.end());

    Route r = matching_to_route(t, m);
    REQUIRE(r.paths.size() == 2);
    REQUIRE(r.paths[0].size() == 1);
    REQUIRE(r.paths[1].size() == 2);
    CHECK(t.arcs()[static_cast<std::size_t>(r.paths[0][0])].edge == Edge::of({0, 0}, {1, 0}));
    CHECK(t.arcs()[static_cast<std::size_t>(r.paths[1][0])].edge == Edge::of({0, 1}, {0, 2}));
    CHECK(t.arcs()[static_cast<std::size_t>(r.paths[1][1])].edge == Edge::of({1, 1}, {2, 1}));

    CHECK(route_to_matching(t, r) == m);
}

TEST_CASE("single tile east-west matching uses the slanted arcs") {
    SnakeGraph g = SnakeGraph::from_word("");
    TriDag t = contract(g, Assignment::Standard);
    PerfectMatching m;
    m.edges = {Edge::of({0, 0}, {0, 1}), Edge::of({1, 0}, {1, 1})};
    std::sort(m.edges.begin(), m.edges.end());
    Route r = matching_to_route(t, m);
    REQUIRE(r.paths.size() == 1);
    REQUIRE(r.paths[0].size() == 2);  // west up to the apex, east down
    CHECK(route_to_matching(t, r) == m);
}

TEST_CASE("bijection: matchings and routes, exhaustively for d <= 6") {
    for (int d = 1; d <= 6; ++d) {
        for (const auto& w : testutil::all_words(d)) {
            SnakeGraph g = SnakeGraph::from_word(w);
            auto ms = enumerate_matchings(g, 100000);
            for (Assignment a : {Assignment::Standard, Assignment::Opposite}) {
                TriDag t = contract(g, a);
                std::set<Route> routes;
                for (const auto& m : ms) {
                    Route r = matching_to_route(t, m);
                    // Round trip and route validity.
                    REQUIRE(route_to_matching(t, r) == m);
                    routes.insert(std::move(r));
                }
                // Injective onto the full route set.
                REQUIRE(routes.size() == ms.size());
                auto enumerated = enumerate_routes(t, 100000);
                REQUIRE(std::set<Route>(enumerated.begin(), enumerated.end()) == routes);
            }
        }
    }
}

TEST_CASE("route round trip on random graphs up to 8 tiles") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 15; ++trial) {
        SnakeGraph g = SnakeGraph::from_word(testutil::random_word(rng, 1, 8));
        auto ms = enumerate_matchings(g, 1 << 20);
        for (Assignment a : {Assignment::Standard, Assignment::Opposite}) {
            TriDag t = contract(g, a);
            Terminals term = terminals(t);
            for (const auto& m : ms) {
                Route r = matching_to_route(t, m);
                REQUIRE(r.paths.size() == term.k());
                REQUIRE(route_to_matching(t, r) == m);
            }
        }
    }
}

TEST_CASE("route and matching validation") {
    SnakeGraph g = SnakeGraph::from_word("UR");
    TriDag t = contract(g, Assignment::Standard);
    auto ms = enumerate_matchings(g, 100);

    SUBCASE("matching of a different graph is rejected") {
        PerfectMatching foreign;
        foreign.edges = {Edge::of({0, 0}, {1, 0}), Edge::of({0, 1}, {1, 1})};
        CHECK_THROWS_AS(matching_to_route(t, foreign), NotAMatching);
    }
    SUBCASE("swapped paths are not a route") {
        Route r = matching_to_route(t, ms[2]);
        std::swap(r.paths[0], r.paths[1]);
        CHECK_THROWS_AS(route_to_matching(t, r), NotARoute);
    }
    SUBCASE("wrong path count") {
        Route r = matching_to_route(t, ms[2]);
        r.paths.pop_back();
        CHECK_THROWS_AS(route_to_matching(t, r), NotARoute);
    }
    SUBCASE("intersecting paths") {
        // Duplicate a path so nodes repeat.
        Route r = matching_to_route(t, ms[2]);
        r.paths[1] = r.paths[0];
        CHECK_THROWS_AS(route_to_matching(t, r), NotARoute);
    }
    SUBCASE("arc ids out of range") {
        Route r = matching_to_route(t, ms[2]);
        r.paths[0][0] = 999;
        CHECK_THROWS_AS(route_to_matching(t, r), NotARoute);
    }
}

TEST_CASE("decontraction") {
    SUBCASE("single tile") {
        TriDag t = contract(SnakeGraph::from_word(""), Assignment::Standard);
        CHECK(decontract(t) == SnakeGraph::from_word(""));
    }
    SUBCASE("round trip over every graph up to 10 tiles, both assignments") {
        for (int d = 1; d <= 10; ++d) {
            for (const auto& w : testutil::all_words(d)) {
                SnakeGraph g = SnakeGraph::from_word(w);
                REQUIRE(decontract(contract(g, Assignment::Standard)) == g);
                REQUIRE(decontract(contract(g, Assignment::Opposite)) == g);
            }
        }
    }
}

TEST_CASE("unknown node ids") {
    TriDag t = contract(SnakeGraph::from_word("UR"), Assignment::Standard);
    CHECK_THROWS_AS(t.node(-1), UnknownNode);
    CHECK_THROWS_AS(t.node(99), UnknownNode);
}
