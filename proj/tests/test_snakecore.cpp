#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "snake/errors.hpp"
#include "snake/matchings.hpp"
#include "snake/snake_graph.hpp"

#include "test_util.hpp"

using namespace snake;

TEST_CASE("from_word builds the right vertex and edge counts") {
    SUBCASE("single tile") {
        SnakeGraph g = SnakeGraph::from_word("");
        CHECK(g.tile_count() == 1);
        CHECK(g.vertices().size() == 4);
        CHECK(g.edges().size() == 4);
    }
    SUBCASE("running example UR") {
        SnakeGraph g = SnakeGraph::from_word("UR");
        CHECK(g.tile_count() == 3);
        CHECK(g.vertices().size() == 8);
        CHECK(g.edges().size() == 10);
        // G_2 above G_1, G_3 east of G_2
        CHECK(g.tile_sw(0) == Vertex{0, 0});
        CHECK(g.tile_sw(1) == Vertex{0, 1});
        CHECK(g.tile_sw(2) == Vertex{1, 1});
    }
    SUBCASE("ladder L_4") {
        SnakeGraph g = SnakeGraph::from_word("RRR");
        CHECK(g.vertices().size() == 10);
        CHECK(g.edges().size() == 13);
    }
    SUBCASE("counts for all words up to 9 tiles") {
        for (int d = 1; d <= 9; ++d) {
            for (const auto& w : testutil::all_words(d)) {
                SnakeGraph g = SnakeGraph::from_word(w);
                REQUIRE(g.vertices().size() == static_cast<std::size_t>(2 * d + 2));
                REQUIRE(g.edges().size() == static_cast<std::size_t>(3 * d + 1));
            }
        }
    }
}

TEST_CASE("distinguished edges") {
    SnakeGraph g = SnakeGraph::from_word("UR");
    CHECK(g.distinguished_edge(0) == Edge::of({0, 0}, {1, 0}));  // south of G_1
    CHECK(g.distinguished_edge(1) == Edge::of({0, 1}, {1, 1}));  // N of G_1 / S of G_2
    CHECK(g.distinguished_edge(2) == Edge::of({1, 1}, {1, 2}));  // E of G_2 / W of G_3
    CHECK(g.distinguished_edge(3) == Edge::of({1, 2}, {2, 2}));  // north of G_3
    CHECK(g.is_interior(g.distinguished_edge(1)));
    CHECK(g.is_interior(g.distinguished_edge(2)));
    CHECK(!g.is_interior(g.distinguished_edge(0)));
    CHECK(!g.is_interior(g.distinguished_edge(3)));
}

TEST_CASE("sign sequences") {
    auto signs_of = [](const char* w) {
        SignSequence s = sign_sequence(SnakeGraph::from_word(w));
        std::string out;
        for (Sign x : s.signs) out.push_back(x == Sign::Plus ? '+' : '-');
        return out;
    };
    // North is opposite south on a single tile.
    CHECK(signs_of("") == "+-");
    // Hand-propagated across L_3: keep (south->east), flip (west->east),
    // keep (west->north).
    CHECK(signs_of("RR") == "++--");
    // Hand-propagated: flip (south->north), keep (south->east), keep
    // (west->north).
    CHECK(signs_of("UR") == "+---");
}

TEST_CASE("snake_to_cf") {
    SUBCASE("single tile: raw [1,1], canonical [2]") {
        SnakeGraph g = SnakeGraph::from_word("");
        CHECK(snake_to_cf(g, CfForm::Raw).terms == std::vector<int>{1, 1});
        CHECK(snake_to_cf(g).terms == std::vector<int>{2});
    }
    SUBCASE("L_3 gives [2,2] with continuant 5") {
        ContinuedFraction cf = snake_to_cf(SnakeGraph::from_word("RR"));
        CHECK(cf.terms == std::vector<int>{2, 2});
        CHECK(cf_numerator(cf) == 5);
    }
    SUBCASE("UR gives a CF with continuant 4") {
        ContinuedFraction cf = snake_to_cf(SnakeGraph::from_word("UR"));
        CHECK(cf.terms == std::vector<int>{1, 3});
        CHECK(cf_numerator(cf) == 4);
    }
    SUBCASE("term sum is d+1 for every word up to 10 tiles") {
        for (int d = 1; d <= 10; ++d) {
            for (const auto& w : testutil::all_words(d)) {
                ContinuedFraction raw = snake_to_cf(SnakeGraph::from_word(w), CfForm::Raw);
                long long sum = 0;
                for (int a : raw.terms) sum += a;
                REQUIRE(sum == d + 1);
                ContinuedFraction canon = snake_to_cf(SnakeGraph::from_word(w));
                sum = 0;
                for (int a : canon.terms) sum += a;
                REQUIRE(sum == d + 1);
                if (canon.terms.size() > 1) REQUIRE(canon.terms.back() >= 2);
            }
        }
    }
}

TEST_CASE("snake_from_cf") {
    CHECK(snake_from_cf({{2}}).tile_count() == 1);
    CHECK(snake_from_cf({{2, 2}}) == SnakeGraph::from_word("RR"));
    CHECK(count_matchings(snake_from_cf({{2, 2}})) == 5);
    // Continuant recurrence gives 2, 5, 12 for [2], [2,2], [2,2,2].
    CHECK(count_matchings(snake_from_cf({{2, 2, 2}})) == 12);
    CHECK(snake_from_cf({{1, 3}}) == SnakeGraph::from_word("UR"));
    // Both members of a merge pair name the same graph.
    CHECK(snake_from_cf({{2, 1}}) == snake_from_cf({{3}}));
    CHECK(snake_from_cf({{1, 1}}) == snake_from_cf({{2}}));

    CHECK_THROWS_AS(snake_from_cf({{}}), EmptyCF);
    CHECK_THROWS_AS(snake_from_cf({{0, 2}}), NonPositiveTerm);
    CHECK_THROWS_AS(snake_from_cf({{-1}}), NonPositiveTerm);
    CHECK_THROWS_AS(snake_from_cf({{1}}), DegenerateCF);
}

TEST_CASE("cf round trip for all graphs up to 10 tiles") {
    for (int d = 1; d <= 10; ++d) {
        for (const auto& w : testutil::all_words(d)) {
            SnakeGraph g = SnakeGraph::from_word(w);
            REQUIRE(snake_from_cf(snake_to_cf(g)) == g);
            REQUIRE(snake_from_cf(snake_to_cf(g, CfForm::Raw)) == g);
        }
    }
}

TEST_CASE("chain decomposition") {
    CHECK(chain_decomposition(SnakeGraph::from_word("")) ==
          ChainSpec{Orientation::Horizontal, {1}});
    // The 10-tile graph G_h(2,2,4,3,2,2).
    CHECK(chain_decomposition(SnakeGraph::from_word("RURRRUURU")) ==
          ChainSpec{Orientation::Horizontal, {2, 2, 4, 3, 2, 2}});
    CHECK(chain_decomposition(SnakeGraph::from_word("UR")) ==
          ChainSpec{Orientation::Vertical, {2, 2}});
}

TEST_CASE("snake_from_chains") {
    CHECK(snake_from_chains({Orientation::Horizontal, {2, 2, 4, 3, 2, 2}}).tile_count() == 10);
    CHECK(snake_from_chains({Orientation::Horizontal, {2, 2, 4, 3, 2, 2}}) ==
          SnakeGraph::from_word("RURRRUURU"));
    CHECK(snake_from_chains({Orientation::Vertical, {4}}) == SnakeGraph::from_word("UUU"));
    CHECK(snake_from_chains({Orientation::Horizontal, {1}}) == SnakeGraph::from_word(""));
    SUBCASE("G_h(3,2,3) has 6 tiles and 16 matchings") {
        SnakeGraph g = snake_from_chains({Orientation::Horizontal, {3, 2, 3}});
        CHECK(g.tile_count() == 6);
        CHECK(count_matchings(g) == 16);
        CHECK(enumerate_matchings(g, 1000).size() == 16);
    }
    CHECK_THROWS_AS(snake_from_chains({Orientation::Horizontal, {2, 1, 3}}), BadChainLength);
    CHECK_THROWS_AS(snake_from_chains({Orientation::Horizontal, {}}), BadChainLength);

    SUBCASE("round trip against chain_decomposition, d <= 10") {
        for (int d = 1; d <= 10; ++d) {
            for (const auto& w : testutil::all_words(d)) {
                SnakeGraph g = SnakeGraph::from_word(w);
                ChainSpec spec = chain_decomposition(g);
                long long total = 0;
                for (int l : spec.lengths) total += l;
                REQUIRE(total - static_cast<long long>(spec.lengths.size() - 1) == d);
                REQUIRE(snake_from_chains(spec) == g);
            }
        }
    }
}

TEST_CASE("reverse") {
    CHECK(reverse(SnakeGraph::from_word("RRU")) == SnakeGraph::from_word("URR"));
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        SnakeGraph g = SnakeGraph::from_word(testutil::random_word(rng, 1, 12));
        REQUIRE(reverse(reverse(g)) == g);
    }
    // Rotation invariance of the continuant (same numerator up to rotation).
    CHECK(cf_numerator(snake_to_cf(reverse(snake_from_cf({{1, 3}})))) ==
          cf_numerator(ContinuedFraction{{1, 3}}));
    for (int d = 1; d <= 10; ++d) {
        for (const auto& w : testutil::all_words(d)) {
            SnakeGraph g = SnakeGraph::from_word(w);
            REQUIRE(cf_numerator(snake_to_cf(g)) == cf_numerator(snake_to_cf(reverse(g))));
        }
    }
}

TEST_CASE("tail-1 merge identity on random continued fractions") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> terms = testutil::random_cf(rng, 20);
        ContinuedFraction merged{terms};
        ++merged.terms.back();
        ContinuedFraction split{terms};
        split.terms.push_back(1);
        REQUIRE(cf_numerator(split) == cf_numerator(merged));
    }
}

TEST_CASE("cover") {
    SUBCASE("single tile: 4 squares, 2 left-decorated") {
        Cover c = cover(SnakeGraph::from_word(""));
        CHECK(c.squares.size() == 4);
        int left = 0;
        for (const CoverSquare& s : c.squares) left += s.left_decorated ? 1 : 0;
        CHECK(left == 2);
    }
    SUBCASE("UR cover: 8 squares, initial square left-decorated") {
        Cover c = cover(SnakeGraph::from_word("UR"));
        CHECK(c.squares.size() == 8);
        auto it = std::find_if(c.squares.begin(), c.squares.end(),
                               [](const CoverSquare& s) { return s.center == Vertex{0, 0}; });
        REQUIRE(it != c.squares.end());
        CHECK(it->left_decorated);
        // Adjacent squares alternate decoration.
        for (const CoverSquare& s : c.squares)
            CHECK(s.left_decorated == ((s.center.x + s.center.y) % 2 == 0));
    }
    SUBCASE("one square per vertex") {
        for (const auto& w : testutil::all_words(6)) {
            SnakeGraph g = SnakeGraph::from_word(w);
            REQUIRE(cover(g).squares.size() == g.vertices().size());
        }
    }
}

TEST_CASE("graph spec grammar") {
    CHECK(parse_graph_spec("word:UR") == SnakeGraph::from_word("UR"));
    CHECK(parse_graph_spec("cf:[2,2,2]") == snake_from_cf({{2, 2, 2}}));
    CHECK(parse_graph_spec("chains:h:2,2,4") ==
          snake_from_chains({Orientation::Horizontal, {2, 2, 4}}));
    CHECK(parse_graph_spec("chains:v:3,3") ==
          snake_from_chains({Orientation::Vertical, {3, 3}}));

    CHECK_THROWS_AS(parse_graph_spec("word:URX"), UsageError);
    CHECK_THROWS_AS(parse_graph_spec("cf:[0,2]"), UsageError);
    CHECK_THROWS_AS(parse_graph_spec("cf:2,2"), UsageError);
    CHECK_THROWS_AS(parse_graph_spec("chains:x:2,2"), UsageError);
    CHECK_THROWS_AS(parse_graph_spec("chains:h:2,1"), UsageError);
    CHECK_THROWS_AS(parse_graph_spec("nonsense"), UsageError);
}

TEST_CASE("formatting") {
    CHECK(format_cf({{2, 2, 2}}) == "[2,2,2]");
    CHECK(format_chains({Orientation::Horizontal, {2, 2, 4}}) == "h:2,2,4");
    CHECK(format_chains({Orientation::Vertical, {3, 3}}) == "v:3,3");
}
