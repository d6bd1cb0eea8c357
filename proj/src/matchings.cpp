#include "snake/matchings.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <optional>

#include "snake/errors.hpp"
#include "snake/sequences.hpp"

namespace snake {

namespace {

struct Backtracker {
    const std::vector<Vertex>& vertices;
    std::vector<std::array<int, 4>> neighbor;  // E, N, W, S neighbor index or -1
    std::vector<char> covered;
    std::vector<Edge> chosen;
    std::vector<PerfectMatching> out;
    std::uint64_t cap;

    explicit Backtracker(const SnakeGraph& g, std::uint64_t cap_)
        : vertices(g.vertices()), cap(cap_) {
        const auto index_of = [&](Vertex v) -> int {
            auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
            if (it == vertices.end() || *it != v) return -1;
            return static_cast<int>(it - vertices.begin());
        };
        neighbor.resize(vertices.size());
        covered.assign(vertices.size(), 0);
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            Vertex v = vertices[i];
            const std::array<Vertex, 4> enws = {Vertex{v.x + 1, v.y}, Vertex{v.x, v.y + 1},
                                                Vertex{v.x - 1, v.y}, Vertex{v.x, v.y - 1}};
            for (int k = 0; k < 4; ++k) {
                int j = index_of(enws[static_cast<std::size_t>(k)]);
                neighbor[i][static_cast<std::size_t>(k)] =
                    (j >= 0 && g.has_edge(Edge::of(v, enws[static_cast<std::size_t>(k)]))) ? j
                                                                                           : -1;
            }
        }
    }

    void search(std::size_t from) {
        while (from < covered.size() && covered[from]) ++from;
        if (from == covered.size()) {
            if (out.size() == cap) throw CapExceeded(cap);
            PerfectMatching m{chosen};
            std::sort(m.edges.begin(), m.edges.end());
            out.push_back(std::move(m));
            return;
        }
        // `from` is the lowest uncovered vertex in (x,y) order; its W and S
        // neighbors are already covered, so only E and N can match it.
        covered[from] = 1;
        for (int k = 0; k < 4; ++k) {
            int j = neighbor[from][static_cast<std::size_t>(k)];
            if (j < 0 || covered[static_cast<std::size_t>(j)]) continue;
            covered[static_cast<std::size_t>(j)] = 1;
            chosen.push_back(Edge::of(vertices[from], vertices[static_cast<std::size_t>(j)]));
            search(from + 1);
            chosen.pop_back();
            covered[static_cast<std::size_t>(j)] = 0;
        }
        covered[from] = 0;
    }
};

}  // namespace

std::vector<PerfectMatching> enumerate_matchings(const SnakeGraph& g, std::uint64_t cap) {
    Backtracker bt(g, cap);
    bt.search(0);
    std::sort(bt.out.begin(), bt.out.end());
    return std::move(bt.out);
}

BigInt cf_numerator(const ContinuedFraction& cf) {
    if (cf.terms.empty()) throw EmptyCF();
    BigInt prev = 0;
    BigInt cur = 1;  // p_0 = 1; after term a_i, cur = p_i = a_i p_{i-1} + p_{i-2}
    for (int a : cf.terms) {
        if (a < 1) throw NonPositiveTerm(a);
        BigInt next = a * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigInt count_matchings(const SnakeGraph& g) { return cf_numerator(snake_to_cf(g)); }

namespace {

// Chain-recurrence counting ignores orientation (a reflection swaps
// horizontal and vertical without changing m). Heads of length 0 or 1 fold
// into the next chain: a length-1 head is the next chain's first tile, so
// G(1, l, ...) = G(l, ...); an empty head leaves the north edge of the
// removed chain dangling as a forced pendant that eats one more tile of
// the next chain, so G(0, l, ...) = G(l-2, ...).
BigInt chain_count(std::vector<int> ls) {
    while (true) {
        if (ls.empty()) return 1;
        if (ls.size() == 1) return fibonacci_number(static_cast<std::size_t>(ls[0] + 2));
        if (ls[0] == 0) {
            ls.erase(ls.begin());
            ls[0] -= 2;
        } else if (ls[0] == 1) {
            ls.erase(ls.begin());
        } else {
            break;
        }
    }
    const int l1 = ls[0];
    std::vector<int> rest(ls.begin() + 1, ls.end());
    std::vector<int> rest_minus2 = rest;
    --rest[0];
    rest_minus2[0] -= 2;
    return fibonacci_number(static_cast<std::size_t>(l1)) * chain_count(std::move(rest)) +
           fibonacci_number(static_cast<std::size_t>(l1 + 1)) *
               chain_count(std::move(rest_minus2));
}

}  // namespace

BigInt count_chain_recurrence(const ChainSpec& spec) {
    if (spec.lengths.empty()) throw BadChainLength("chain list is empty");
    if (!(spec.lengths.size() == 1 && spec.lengths.front() == 1)) {
        for (int l : spec.lengths)
            if (l < 2)
                throw BadChainLength("chain length " + std::to_string(l) +
                                     " is < 2 and spec is not the single-tile [1]");
    }
    return chain_count(spec.lengths);
}

namespace {

void require_matching(const SnakeGraph& g, const PerfectMatching& m) {
    const std::size_t want = static_cast<std::size_t>(g.tile_count()) + 1;
    if (m.edges.size() != want)
        throw NotAMatching("expected " + std::to_string(want) + " edges, got " +
                           std::to_string(m.edges.size()));
    std::vector<Vertex> seen;
    for (const Edge& e : m.edges) {
        if (!g.has_edge(e)) throw NotAMatching("edge not in the snake graph");
        seen.push_back(e.a);
        seen.push_back(e.b);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw NotAMatching("two edges share a vertex");
    // |edges| = d+1 and all 2d+2 endpoints distinct => every vertex covered.
}

}  // namespace

Tiling matching_to_tiling(const SnakeGraph& g, const PerfectMatching& m) {
    require_matching(g, m);
    Tiling t;
    t.dominoes.reserve(m.edges.size());
    for (const Edge& e : m.edges) t.dominoes.push_back(Domino::of(e.a, e.b));
    std::sort(t.dominoes.begin(), t.dominoes.end());
    return t;
}

PerfectMatching tiling_to_matching(const SnakeGraph& g, const Tiling& t) {
    const std::size_t want = static_cast<std::size_t>(g.tile_count()) + 1;
    if (t.dominoes.size() != want)
        throw NotATiling("expected " + std::to_string(want) + " dominoes, got " +
                         std::to_string(t.dominoes.size()));
    std::vector<Vertex> seen;
    for (const Domino& d : t.dominoes) {
        if (!g.has_vertex(d.a) || !g.has_vertex(d.b))
            throw NotATiling("domino square is not centered at a graph vertex");
        const int dist = std::abs(d.a.x - d.b.x) + std::abs(d.a.y - d.b.y);
        if (dist != 1) throw NotATiling("domino squares are not edge-adjacent");
        seen.push_back(d.a);
        seen.push_back(d.b);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw NotATiling("dominoes overlap");

    PerfectMatching m;
    m.edges.reserve(t.dominoes.size());
    for (const Domino& d : t.dominoes) {
        Edge e = Edge::of(d.a, d.b);
        if (!g.has_edge(e)) throw NotATiling("domino does not lie over a graph edge");
        m.edges.push_back(e);
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

}  // namespace snake
