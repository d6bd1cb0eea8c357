#pragma once

#include <cstdint>
#include <vector>

#include "snake/bigint.hpp"
#include "snake/snake_graph.hpp"

namespace snake {

/// Edge set covering every vertex exactly once; edges kept sorted in
/// normal form, so matchings compare lexicographically.
struct PerfectMatching {
    std::vector<Edge> edges;

    friend auto operator<=>(const PerfectMatching&, const PerfectMatching&) = default;
};

/// Two edge-adjacent cover squares, identified by their centers (a < b).
struct Domino {
    Vertex a;
    Vertex b;

    static Domino of(Vertex u, Vertex v) { return u < v ? Domino{u, v} : Domino{v, u}; }

    friend auto operator<=>(const Domino&, const Domino&) = default;
};

/// Partition of the snake graph cover into dominoes, sorted.
struct Tiling {
    std::vector<Domino> dominoes;

    friend auto operator<=>(const Tiling&, const Tiling&) = default;
};

/// All perfect matchings of g, sorted lexicographically on their canonical
/// edge lists. Throws CapExceeded once more than `cap` matchings exist.
std::vector<PerfectMatching> enumerate_matchings(const SnakeGraph& g, std::uint64_t cap);

/// Numerator of [a_1,...,a_n] via the continuant recurrence
/// p_0 = 1, p_1 = a_1, p_i = a_i p_{i-1} + p_{i-2}.
BigInt cf_numerator(const ContinuedFraction& cf);

/// m(g): the continuant of the continued fraction of g.
BigInt count_matchings(const SnakeGraph& g);

/// m(g) by the chain recurrence
/// m = F_{l_1} m(G(l_2-1, ...)) + F_{l_1+1} m(G(l_2-2, ...)),
/// with m(single chain of length l) = F_{l+2} and m(empty) = 1.
BigInt count_chain_recurrence(const ChainSpec& spec);

/// One domino per matched edge, linking the squares centered at its
/// endpoints.
Tiling matching_to_tiling(const SnakeGraph& g, const PerfectMatching& m);

/// Inverse of matching_to_tiling: every vertex lies in exactly one domino,
/// whose two centers give the matched edge.
PerfectMatching tiling_to_matching(const SnakeGraph& g, const Tiling& t);

}  // namespace snake
