#include "snake/tri_dag.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <string>

#include "snake/errors.hpp"

namespace snake {

namespace {

// Decorated-grid image of a snake-graph vertex. Under Standard the vertex
// (x,y) maps to (x - 1/2, y) when x+y is even and (x + 1/2, y) when odd;
// Opposite mirrors the parity. The two endpoints of a horizontal edge land
// on the same point exactly when that edge is the contracted one of its
// tile, which is what makes this rule equivalent to the odd-north /
// even-south tile contraction.
HalfPoint image(Vertex v, Assignment a) {
    const bool even = (v.x + v.y) % 2 == 0;
    const bool left = (a == Assignment::Standard) ? even : !even;
    return HalfPoint{2 * v.x + (left ? -1 : +1), 2 * v.y};
}

}  // namespace

TriDag::TriDag(Assignment assignment, std::vector<TriNode> nodes, std::vector<TriArc> arcs,
               std::vector<TriTile> triangles)
    : assignment_(assignment),
      nodes_(std::move(nodes)),
      arcs_(std::move(arcs)),
      triangles_(std::move(triangles)),
      out_(nodes_.size()),
      in_(nodes_.size()) {
    for (std::size_t a = 0; a < arcs_.size(); ++a) {
        out_[static_cast<std::size_t>(arcs_[a].from)].push_back(static_cast<int>(a));
        in_[static_cast<std::size_t>(arcs_[a].to)].push_back(static_cast<int>(a));
    }
}

const TriNode& TriDag::node(int id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= nodes_.size()) throw UnknownNode(id);
    return nodes_[static_cast<std::size_t>(id)];
}

const std::vector<int>& TriDag::out_arcs(int id) const {
    node(id);
    return out_[static_cast<std::size_t>(id)];
}

const std::vector<int>& TriDag::in_arcs(int id) const {
    node(id);
    return in_[static_cast<std::size_t>(id)];
}

TriDag contract(const SnakeGraph& g, Assignment assignment) {
    // Collect the distinct vertex images; sorting by (x2, y2) makes node
    // ids a topological order, since every arc strictly increases x.
    std::map<HalfPoint, TriNode> by_pos;
    for (Vertex v : g.vertices()) {
        HalfPoint p = image(v, assignment);
        auto [it, inserted] = by_pos.try_emplace(p, TriNode{p, std::nullopt, v});
        if (!inserted) {
            // Second vertex with the same image: this is a contracted
            // horizontal edge, not a surviving vertex.
            Vertex other = *it->second.vertex;
            it->second.contraction_of = Edge::of(other, v);
            it->second.vertex.reset();
        }
    }

    std::vector<TriNode> nodes;
    nodes.reserve(by_pos.size());
    std::map<HalfPoint, int> id_of;
    for (auto& [pos, node] : by_pos) {
        id_of.emplace(pos, static_cast<int>(nodes.size()));
        nodes.push_back(node);
    }

    std::vector<TriArc> arcs;
    arcs.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        HalfPoint pa = image(e.a, assignment);
        HalfPoint pb = image(e.b, assignment);
        if (pa == pb) continue;  // contracted
        if (pb < pa) std::swap(pa, pb);
        arcs.push_back(TriArc{id_of.at(pa), id_of.at(pb), e});
    }
    std::sort(arcs.begin(), arcs.end(), [](const TriArc& l, const TriArc& r) {
        return std::pair(l.from, l.to) < std::pair(r.from, r.to);
    });

    std::vector<TriTile> tiles;
    tiles.reserve(static_cast<std::size_t>(g.tile_count()));
    for (int i = 0; i < g.tile_count(); ++i) {
        Vertex sw = g.tile_sw(i);
        std::array<int, 3> corners{};
        std::set<int> ids;
        for (Vertex v : {sw, Vertex{sw.x + 1, sw.y}, Vertex{sw.x, sw.y + 1},
                         Vertex{sw.x + 1, sw.y + 1}})
            ids.insert(id_of.at(image(v, assignment)));
        assert(ids.size() == 3);
        std::copy(ids.begin(), ids.end(), corners.begin());
        const bool odd_tile = (i % 2 == 0);  // 1-based label 2i-1
        const bool north_contracted = (assignment == Assignment::Standard) == odd_tile;
        tiles.push_back(TriTile{i + 1, corners, north_contracted});
    }

    return TriDag(assignment, std::move(nodes), std::move(arcs), std::move(tiles));
}

Terminals terminals(const TriDag& t) {
    Terminals out;
    for (int id = 0; id < static_cast<int>(t.nodes().size()); ++id) {
        const bool source = t.in_arcs(id).empty();
        const bool sink = t.out_arcs(id).empty();
        assert(!(source && sink));
        if (source) out.sources.push_back(id);
        if (sink) out.sinks.push_back(id);
    }
    auto by_y_then_x = [&](int l, int r) {
        const HalfPoint& a = t.node(l).pos;
        const HalfPoint& b = t.node(r).pos;
        return std::pair(a.y2, a.x2) < std::pair(b.y2, b.x2);
    };
    std::sort(out.sources.begin(), out.sources.end(), by_y_then_x);
    std::sort(out.sinks.begin(), out.sinks.end(), by_y_then_x);
    for (const std::vector<int>* v : {&out.sources, &out.sinks}) {
        for (std::size_t i = 1; i < v->size(); ++i) {
            if (t.node((*v)[i - 1]).pos.y2 == t.node((*v)[i]).pos.y2)
                throw TerminalOrderError("two terminals share y-coordinate " +
                                         std::to_string(t.node((*v)[i]).pos.y2 / 2.0));
        }
    }
    return out;
}

int hourglass_count(const TriDag& t) {
    const auto& tiles = t.triangles();
    int count = 0;
    for (std::size_t i = 0; i + 1 < tiles.size(); ++i) {
        const auto& a = tiles[i].corners;
        const auto& b = tiles[i + 1].corners;
        std::vector<int> shared;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(shared));
        if (shared.size() == 1) ++count;
    }
    return count;
}

namespace {

// Every edge of the underlying snake graph, split into arc-borne edges and
// contracted ones.
struct EdgeInventory {
    std::vector<Edge> all;         // sorted
    std::vector<Edge> contracted;  // sorted

    explicit EdgeInventory(const TriDag& t) {
        for (const TriArc& a : t.arcs()) all.push_back(a.edge);
        for (const TriNode& n : t.nodes())
            if (n.contraction_of) {
                all.push_back(*n.contraction_of);
                contracted.push_back(*n.contraction_of);
            }
        std::sort(all.begin(), all.end());
        std::sort(contracted.begin(), contracted.end());
    }
};

void require_matching_of_underlying(const TriDag& t, const EdgeInventory& inv,
                                    const PerfectMatching& m) {
    std::vector<Vertex> all_vertices;
    for (const Edge& e : inv.all) {
        all_vertices.push_back(e.a);
        all_vertices.push_back(e.b);
    }
    std::sort(all_vertices.begin(), all_vertices.end());
    all_vertices.erase(std::unique(all_vertices.begin(), all_vertices.end()),
                       all_vertices.end());

    if (2 * m.edges.size() != all_vertices.size())
        throw NotAMatching("wrong number of edges for a perfect matching");
    std::vector<Vertex> seen;
    for (const Edge& e : m.edges) {
        if (!std::binary_search(inv.all.begin(), inv.all.end(), e))
            throw NotAMatching("edge not in the underlying snake graph");
        seen.push_back(e.a);
        seen.push_back(e.b);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw NotAMatching("two edges share a vertex");
    (void)t;
}

}  // namespace

Route matching_to_route(const TriDag& t, const PerfectMatching& m) {
    EdgeInventory inv(t);
    require_matching_of_underlying(t, inv, m);

    const auto matched = [&](const Edge& e) {
        return std::binary_search(m.edges.begin(), m.edges.end(), e);
    };

    std::vector<int> next_arc(t.nodes().size(), -1);
    std::size_t matched_arcs = 0;
    for (std::size_t a = 0; a < t.arcs().size(); ++a) {
        const TriArc& arc = t.arcs()[a];
        if (!matched(arc.edge)) continue;
        ++matched_arcs;
        if (next_arc[static_cast<std::size_t>(arc.from)] != -1)
            throw BrokenRoute("two matched arcs leave one node");
        next_arc[static_cast<std::size_t>(arc.from)] = static_cast<int>(a);
    }

    Terminals term = terminals(t);
    Route route;
    route.paths.resize(term.k());
    std::size_t used = 0;
    for (std::size_t i = 0; i < term.k(); ++i) {
        int at = term.sources[i];
        auto& path = route.paths[i];
        while (next_arc[static_cast<std::size_t>(at)] != -1) {
            int a = next_arc[static_cast<std::size_t>(at)];
            path.push_back(a);
            ++used;
            at = t.arcs()[static_cast<std::size_t>(a)].to;
            if (path.size() > t.arcs().size()) throw BrokenRoute("path does not terminate");
        }
        if (path.empty()) throw BrokenRoute("source has no matched arc");
        if (at != term.sinks[i])
            throw BrokenRoute("path from source " + std::to_string(i + 1) +
                              " does not end at the matching sink");
    }
    if (used != matched_arcs) throw BrokenRoute("matched arcs left over after assembly");
    return route;
}

PerfectMatching route_to_matching(const TriDag& t, const Route& r) {
    Terminals term = terminals(t);
    if (r.paths.size() != term.k())
        throw NotARoute("expected " + std::to_string(term.k()) + " paths, got " +
                        std::to_string(r.paths.size()));

    std::vector<char> visited(t.nodes().size(), 0);
    PerfectMatching m;
    for (std::size_t i = 0; i < r.paths.size(); ++i) {
        const auto& path = r.paths[i];
        if (path.empty()) throw NotARoute("empty path");
        int at = term.sources[i];
        for (int a : path) {
            if (a < 0 || static_cast<std::size_t>(a) >= t.arcs().size())
                throw NotARoute("arc id out of range");
            const TriArc& arc = t.arcs()[static_cast<std::size_t>(a)];
            if (arc.from != at) throw NotARoute("arcs do not chain");
            if (visited[static_cast<std::size_t>(arc.from)])
                throw NotARoute("paths intersect");
            visited[static_cast<std::size_t>(arc.from)] = 1;
            m.edges.push_back(arc.edge);
            at = arc.to;
        }
        if (visited[static_cast<std::size_t>(at)]) throw NotARoute("paths intersect");
        visited[static_cast<std::size_t>(at)] = 1;
        if (at != term.sinks[i])
            throw NotARoute("path " + std::to_string(i + 1) + " does not end at sink " +
                            std::to_string(i + 1));
    }

    for (std::size_t id = 0; id < t.nodes().size(); ++id) {
        const TriNode& n = t.nodes()[id];
        if (n.contraction_of && !visited[id]) m.edges.push_back(*n.contraction_of);
    }
    std::sort(m.edges.begin(), m.edges.end());

    // A valid route always decontracts to a matching; if this trips, the
    // input structures are corrupt.
    std::vector<Vertex> seen;
    for (const Edge& e : m.edges) {
        seen.push_back(e.a);
        seen.push_back(e.b);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw BrokenRoute("decontracted edges are not a matching");
    return m;
}

SnakeGraph decontract(const TriDag& t) {
    EdgeInventory inv(t);

    std::set<Vertex> vertices;
    for (const Edge& e : inv.all) {
        vertices.insert(e.a);
        vertices.insert(e.b);
    }
    const auto has_edge = [&](Edge e) {
        return std::binary_search(inv.all.begin(), inv.all.end(), e);
    };

    // A unit cell is a tile exactly when all four of its sides are edges.
    std::vector<Vertex> cells;
    for (Vertex v : vertices) {
        Vertex se{v.x + 1, v.y}, nw{v.x, v.y + 1}, ne{v.x + 1, v.y + 1};
        if (has_edge(Edge::of(v, se)) && has_edge(Edge::of(v, nw)) &&
            has_edge(Edge::of(se, ne)) && has_edge(Edge::of(nw, ne)))
            cells.push_back(v);
    }
    // Tile i has SW-corner coordinate sum i-1, so this sort is the tile order.
    std::sort(cells.begin(), cells.end(),
              [](Vertex l, Vertex r) { return l.x + l.y < r.x + r.y; });
    assert(!cells.empty());

    std::string word;
    for (std::size_t i = 1; i < cells.size(); ++i) {
        const int dx = cells[i].x - cells[i - 1].x;
        const int dy = cells[i].y - cells[i - 1].y;
        if (!((dx == 1 && dy == 0) || (dx == 0 && dy == 1)))
            throw BrokenRoute("decontracted tiles do not form a snake");
        word.push_back(dx == 1 ? 'R' : 'U');
    }
    SnakeGraph g = SnakeGraph::from_word(word);
    if (g.edges() != inv.all)
        throw BrokenRoute("decontracted edge set does not match a snake graph");
    return g;
}

}  // namespace snake
