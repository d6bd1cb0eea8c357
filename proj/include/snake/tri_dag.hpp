#pragma once

#include <array>
#include <optional>
#include <vector>

#include "snake/matchings.hpp"
#include "snake/snake_graph.hpp"

namespace snake {

/// Which edge of each tile gets contracted. Standard contracts the north
/// edge of odd tiles and the south edge of even tiles; Opposite swaps the
/// two. Both produce the same number of routes.
enum class Assignment { Standard, Opposite };

/// Planar position with half-integer granularity, stored doubled so the
/// geometry stays in exact integers.
struct HalfPoint {
    int x2{};
    int y2{};

    friend auto operator<=>(const HalfPoint&, const HalfPoint&) = default;
};

/// Node of the triangular (contracted) snake graph. A node either is the
/// contraction of one snake-graph edge or survives contraction untouched,
/// in which case it is a source or a sink and remembers its vertex.
struct TriNode {
    HalfPoint pos;
    std::optional<Edge> contraction_of;
    std::optional<Vertex> vertex;

    bool is_terminal() const { return !contraction_of.has_value(); }
};

/// Directed arc; carries the snake-graph edge it represents. Arcs always
/// point in strictly increasing x.
struct TriArc {
    int from{};
    int to{};
    Edge edge;
};

/// Triangular tile; `label` is the 1-based snake tile index, `up` tells
/// whether the contracted corner (the apex) is the tile's north edge.
struct TriTile {
    int label{};
    std::array<int, 3> corners{};  // node ids, ascending
    bool up{};
};

// Immutable after construction; safe to share across tasks.
class TriDag {
public:
    TriDag(Assignment assignment, std::vector<TriNode> nodes, std::vector<TriArc> arcs,
           std::vector<TriTile> triangles);

    Assignment assignment() const { return assignment_; }
    const std::vector<TriNode>& nodes() const { return nodes_; }
    const std::vector<TriArc>& arcs() const { return arcs_; }
    const std::vector<TriTile>& triangles() const { return triangles_; }

    const TriNode& node(int id) const;

    /// Arc ids leaving / entering a node, ascending.
    const std::vector<int>& out_arcs(int id) const;
    const std::vector<int>& in_arcs(int id) const;

private:
    Assignment assignment_;
    std::vector<TriNode> nodes_;
    std::vector<TriArc> arcs_;
    std::vector<TriTile> triangles_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

/// Ordered terminal vectors s and t: ascending y, ties broken by x (ties
/// have never been observed; see terminals()).
struct Terminals {
    std::vector<int> sources;
    std::vector<int> sinks;

    std::size_t k() const { return sources.size(); }
};

/// k vertex-disjoint paths, path i from s_i to t_i, each a list of arc ids.
struct Route {
    std::vector<std::vector<int>> paths;

    friend auto operator<=>(const Route&, const Route&) = default;
};

/// The oriented contracted snake graph of g under the given assignment.
TriDag contract(const SnakeGraph& g, Assignment assignment = Assignment::Standard);

/// Indegree-0 and outdegree-0 nodes in terminal order. Throws
/// TerminalOrderError if two sources (or two sinks) share a y coordinate.
Terminals terminals(const TriDag& t);

/// Number of consecutive triangle pairs joined at a single node (necks);
/// equals |sources| - 1.
int hourglass_count(const TriDag& t);

/// The k-route whose arcs are exactly the arcs of t representing edges of
/// m. Throws NotAMatching if m is not a perfect matching of decontract(t),
/// BrokenRoute if assembly fails (which the theory rules out).
Route matching_to_route(const TriDag& t, const PerfectMatching& m);

/// Inverse: matched edges are the arcs used by r plus the contracted edges
/// of every contraction node not visited by r. Throws NotARoute for
/// intersecting or mis-terminated paths.
PerfectMatching route_to_matching(const TriDag& t, const Route& r);

/// Splits every contraction node back into its edge and reconstructs the
/// snake graph (word and all).
SnakeGraph decontract(const TriDag& t);

}  // namespace snake
