#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace snake {

// Integer lattice point. Ordering is lexicographic (x, then y); it is the
// canonical order used everywhere (edge normal form, enumeration order,
// serialization).
struct Vertex {
    int x{};
    int y{};

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// Unit grid edge in normal form: a < b.
struct Edge {
    Vertex a;
    Vertex b;

    static Edge of(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

    bool horizontal() const { return a.y == b.y; }
    Vertex midpoint_times2() const { return Vertex{a.x + b.x, a.y + b.y}; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A snake graph: a sequence of d unit tiles, each attached North ('U') or
/// East ('R') of the previous one, with the SW corner of the first tile at
/// the origin. The step word is the identity of the graph; all geometry is
/// derived from it.
class SnakeGraph {
public:
    /// Builds the graph for a step word over {'R','U'}. The empty word is
    /// the single tile. Any such word is valid.
    static SnakeGraph from_word(std::string_view word);

    int tile_count() const { return static_cast<int>(tile_sw_.size()); }
    const std::string& word() const { return word_; }

    /// SW corner of tile G_{i+1} (0-based index).
    Vertex tile_sw(int i) const { return tile_sw_.at(static_cast<std::size_t>(i)); }

    /// All 2d+2 vertices, sorted.
    const std::vector<Vertex>& vertices() const { return vertices_; }
    /// All 3d+1 edges, sorted in normal form.
    const std::vector<Edge>& edges() const { return edges_; }

    /// The distinguished edges e_0 .. e_d: e_0 is the south edge of G_1,
    /// e_i (0 < i < d) the edge shared by G_i and G_{i+1}, e_d the north
    /// edge of G_d.
    Edge distinguished_edge(int i) const;

    /// True for e_1 .. e_{d-1}.
    bool is_interior(const Edge& e) const;
    bool has_edge(const Edge& e) const;
    bool has_vertex(const Vertex& v) const;

    // Graphs compare by word; geometry is derived, never compared.
    friend bool operator==(const SnakeGraph& l, const SnakeGraph& r) {
        return l.word_ == r.word_;
    }

private:
    SnakeGraph() = default;

    std::string word_;
    std::vector<Vertex> tile_sw_;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<Edge> interior_;  // e_1 .. e_{d-1}, in tile order
};

enum class Sign : signed char { Plus = +1, Minus = -1 };

inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

/// Signs of the distinguished edges e_0 .. e_d, normalized to signs[0] = +.
struct SignSequence {
    std::vector<Sign> signs;
};

/// Positive continued fraction [a_1, ..., a_n].
struct ContinuedFraction {
    std::vector<int> terms;

    /// Merges a trailing 1 into its predecessor: [..., a, 1] -> [..., a+1].
    ContinuedFraction canonical() const;
    /// Reversed term order.
    ContinuedFraction reversed() const;

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

enum class CfForm { Canonical, Raw };

enum class Orientation { Horizontal, Vertical };

/// Maximal straight runs of tiles; consecutive chains overlap in one tile.
/// `orientation` is the direction of the odd-position (first) chains.
struct ChainSpec {
    Orientation orientation{Orientation::Horizontal};
    std::vector<int> lengths;

    friend bool operator==(const ChainSpec&, const ChainSpec&) = default;
};

/// One unit square per snake-graph vertex; the square at (x,y) is
/// left-decorated iff x+y is even.
struct CoverSquare {
    Vertex center;
    bool left_decorated{};

    friend auto operator<=>(const CoverSquare&, const CoverSquare&) = default;
};

struct Cover {
    std::vector<CoverSquare> squares;  // sorted by center
};

/// Signs of e_0 .. e_d under the per-tile sign axioms (north opposite
/// south, north = west, south = east), normalized to f(e_0) = +.
SignSequence sign_sequence(const SnakeGraph& g);

/// Run-length encoding of the sign sequence; sums to d+1.
ContinuedFraction snake_to_cf(const SnakeGraph& g, CfForm form = CfForm::Canonical);

/// The snake graph with d = sum(a_i) - 1 tiles determined by the sign
/// sequence of the given continued fraction. Accepts both members of a
/// merge pair ([...,a,1] and [...,a+1] produce the same graph).
SnakeGraph snake_from_cf(const ContinuedFraction& cf);

ChainSpec chain_decomposition(const SnakeGraph& g);
SnakeGraph snake_from_chains(const ChainSpec& spec);

/// The graph of the reversed word; equals the 180-degree rotation of g up
/// to translation. Involution.
SnakeGraph reverse(const SnakeGraph& g);

Cover cover(const SnakeGraph& g);

/// Parses the CLI graph-spec grammar: "word:RURU", "cf:[2,2,2]",
/// "chains:h:2,2,4", "chains:v:3,3". Malformed specs (including bad values
/// inside them) throw UsageError.
SnakeGraph parse_graph_spec(std::string_view spec);

std::string format_cf(const ContinuedFraction& cf);
std::string format_chains(const ChainSpec& spec);

}  // namespace snake
