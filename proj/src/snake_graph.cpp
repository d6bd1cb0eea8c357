#include "snake/snake_graph.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <stdexcept>

#include "snake/errors.hpp"

namespace snake {

namespace {

void add_unique_sorted(std::vector<Vertex>& vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

void add_unique_sorted(std::vector<Edge>& es) {
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
}

// The four edges of the unit tile with SW corner c.
struct TileEdges {
    Edge south, east, north, west;
};

TileEdges tile_edges(Vertex c) {
    Vertex sw = c;
    Vertex se{c.x + 1, c.y};
    Vertex ne{c.x + 1, c.y + 1};
    Vertex nw{c.x, c.y + 1};
    return {Edge::of(sw, se), Edge::of(se, ne), Edge::of(nw, ne), Edge::of(sw, nw)};
}

}  // namespace

SnakeGraph SnakeGraph::from_word(std::string_view word) {
    SnakeGraph g;
    g.word_.assign(word);
    Vertex sw{0, 0};
    g.tile_sw_.push_back(sw);
    for (char c : word) {
        if (c == 'R') {
            ++sw.x;
        } else if (c == 'U') {
            ++sw.y;
        } else {
            throw std::invalid_argument("snake word may contain only 'R' and 'U'");
        }
        g.tile_sw_.push_back(sw);
    }

    for (Vertex c : g.tile_sw_) {
        g.vertices_.push_back(c);
        g.vertices_.push_back({c.x + 1, c.y});
        g.vertices_.push_back({c.x, c.y + 1});
        g.vertices_.push_back({c.x + 1, c.y + 1});
        TileEdges te = tile_edges(c);
        g.edges_.insert(g.edges_.end(), {te.south, te.east, te.north, te.west});
    }
    add_unique_sorted(g.vertices_);
    add_unique_sorted(g.edges_);

    const int d = g.tile_count();
    for (int i = 0; i + 1 < d; ++i) {
        TileEdges te = tile_edges(g.tile_sw_[static_cast<std::size_t>(i)]);
        g.interior_.push_back(word[static_cast<std::size_t>(i)] == 'U' ? te.north : te.east);
    }

    assert(g.vertices_.size() == static_cast<std::size_t>(2 * d + 2));
    assert(g.edges_.size() == static_cast<std::size_t>(3 * d + 1));
    return g;
}

Edge SnakeGraph::distinguished_edge(int i) const {
    const int d = tile_count();
    if (i < 0 || i > d) throw std::out_of_range("distinguished edge index");
    if (i == 0) return tile_edges(tile_sw_.front()).south;
    if (i == d) return tile_edges(tile_sw_.back()).north;
    return interior_[static_cast<std::size_t>(i - 1)];
}

bool SnakeGraph::is_interior(const Edge& e) const {
    return std::find(interior_.begin(), interior_.end(), e) != interior_.end();
}

bool SnakeGraph::has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool SnakeGraph::has_vertex(const Vertex& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

SignSequence sign_sequence(const SnakeGraph& g) {
    const int d = g.tile_count();
    const std::string& w = g.word();

    SignSequence seq;
    seq.signs.reserve(static_cast<std::size_t>(d) + 1);
    seq.signs.push_back(Sign::Plus);

    // Tile G_i is entered through e_{i-1} (South or West side) and exited
    // through e_i (North or East side). The tile axioms reduce to: the sign
    // flips across a tile exactly when entry and exit are parallel
    // (south->north or west->east) and is kept when they are perpendicular.
    bool entry_south = true;
    Sign s = Sign::Plus;
    for (int i = 1; i <= d; ++i) {
        const bool exit_north = (i == d) || w[static_cast<std::size_t>(i - 1)] == 'U';
        const bool flips = (entry_south == exit_north);
        s = flips ? flip(s) : s;
        seq.signs.push_back(s);
        entry_south = exit_north;
    }
    return seq;
}

ContinuedFraction ContinuedFraction::canonical() const {
    ContinuedFraction out = *this;
    if (out.terms.size() >= 2 && out.terms.back() == 1) {
        out.terms.pop_back();
        ++out.terms.back();
    }
    return out;
}

ContinuedFraction ContinuedFraction::reversed() const {
    ContinuedFraction out = *this;
    std::reverse(out.terms.begin(), out.terms.end());
    return out;
}

ContinuedFraction snake_to_cf(const SnakeGraph& g, CfForm form) {
    SignSequence seq = sign_sequence(g);
    ContinuedFraction cf;
    int run = 0;
    Sign cur = Sign::Plus;
    for (Sign s : seq.signs) {
        if (run > 0 && s == cur) {
            ++run;
        } else {
            if (run > 0) cf.terms.push_back(run);
            cur = s;
            run = 1;
        }
    }
    cf.terms.push_back(run);
    return form == CfForm::Canonical ? cf.canonical() : cf;
}

SnakeGraph snake_from_cf(const ContinuedFraction& cf) {
    if (cf.terms.empty()) throw EmptyCF();
    long long total = 0;
    for (int a : cf.terms) {
        if (a < 1) throw NonPositiveTerm(a);
        total += a;
    }
    if (total < 2) throw DegenerateCF();
    const int d = static_cast<int>(total - 1);

    // Expand the run lengths into signs e_0 .. e_d. Only the first d signs
    // are free; the sign of e_d is forced by the geometry, which is exactly
    // why [..., a, 1] and [..., a+1] name the same graph.
    std::vector<Sign> signs;
    signs.reserve(static_cast<std::size_t>(total));
    Sign s = Sign::Plus;
    for (int a : cf.terms) {
        for (int j = 0; j < a; ++j) signs.push_back(s);
        s = flip(s);
    }

    std::string word;
    word.reserve(static_cast<std::size_t>(d > 0 ? d - 1 : 0));
    bool entry_south = true;
    for (int i = 1; i <= d - 1; ++i) {
        const bool flips =
            signs[static_cast<std::size_t>(i)] != signs[static_cast<std::size_t>(i - 1)];
        const bool exit_north = (flips == entry_south);
        word.push_back(exit_north ? 'U' : 'R');
        entry_south = exit_north;
    }
    return SnakeGraph::from_word(word);
}

ChainSpec chain_decomposition(const SnakeGraph& g) {
    const std::string& w = g.word();
    if (w.empty()) return ChainSpec{Orientation::Horizontal, {1}};

    ChainSpec spec;
    spec.orientation = w.front() == 'R' ? Orientation::Horizontal : Orientation::Vertical;
    int run = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] == w[i - 1]) {
            ++run;
        } else {
            spec.lengths.push_back(run + 1);
            run = 1;
        }
    }
    spec.lengths.push_back(run + 1);
    return spec;
}

SnakeGraph snake_from_chains(const ChainSpec& spec) {
    if (spec.lengths.empty()) throw BadChainLength("chain list is empty");
    if (spec.lengths.size() == 1 && spec.lengths.front() == 1)
        return SnakeGraph::from_word("");
    for (int l : spec.lengths) {
        if (l < 2)
            throw BadChainLength("chain length " + std::to_string(l) +
                                 " is < 2 and spec is not the single-tile [1]");
    }

    std::string word;
    for (std::size_t i = 0; i < spec.lengths.size(); ++i) {
        const bool horizontal = (spec.orientation == Orientation::Horizontal) == (i % 2 == 0);
        word.append(static_cast<std::size_t>(spec.lengths[i] - 1), horizontal ? 'R' : 'U');
    }
    return SnakeGraph::from_word(word);
}

SnakeGraph reverse(const SnakeGraph& g) {
    std::string w = g.word();
    std::reverse(w.begin(), w.end());
    return SnakeGraph::from_word(w);
}

Cover cover(const SnakeGraph& g) {
    Cover c;
    c.squares.reserve(g.vertices().size());
    for (Vertex v : g.vertices())
        c.squares.push_back(CoverSquare{v, (v.x + v.y) % 2 == 0});
    return c;
}

namespace {

int parse_int(std::string_view s) {
    int value = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw UsageError("expected an integer, got '" + std::string(s) + "'");
    return value;
}

std::vector<int> parse_int_list(std::string_view s) {
    std::vector<int> out;
    if (s.empty()) throw UsageError("empty integer list");
    while (true) {
        std::size_t comma = s.find(',');
        out.push_back(parse_int(s.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace

SnakeGraph parse_graph_spec(std::string_view spec) {
    try {
        if (spec.rfind("word:", 0) == 0) {
            std::string_view w = spec.substr(5);
            for (char c : w)
                if (c != 'R' && c != 'U')
                    throw UsageError("word may contain only 'R' and 'U'");
            return SnakeGraph::from_word(w);
        }
        if (spec.rfind("cf:", 0) == 0) {
            std::string_view body = spec.substr(3);
            if (body.size() < 2 || body.front() != '[' || body.back() != ']')
                throw UsageError("cf spec must look like cf:[2,2,2]");
            ContinuedFraction cf{parse_int_list(body.substr(1, body.size() - 2))};
            return snake_from_cf(cf);
        }
        if (spec.rfind("chains:", 0) == 0) {
            std::string_view body = spec.substr(7);
            Orientation o;
            if (body.rfind("h:", 0) == 0) {
                o = Orientation::Horizontal;
            } else if (body.rfind("v:", 0) == 0) {
                o = Orientation::Vertical;
            } else {
                throw UsageError("chains spec must look like chains:h:2,2,4 or chains:v:3,3");
            }
            return snake_from_chains(ChainSpec{o, parse_int_list(body.substr(2))});
        }
    } catch (const UsageError&) {
        throw;
    } catch (const Error& e) {
        // A bad value inside a spec string is a usage error at the CLI
        // boundary (e.g. cf:[0,2]).
        throw UsageError(std::string(e.name()) + " in graph spec '" + std::string(spec) +
                         "': " + e.what());
    }
    throw UsageError("graph spec must start with word:, cf: or chains:");
}

std::string format_cf(const ContinuedFraction& cf) {
    std::string out = "[";
    for (std::size_t i = 0; i < cf.terms.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(cf.terms[i]);
    }
    out += ']';
    return out;
}

std::string format_chains(const ChainSpec& spec) {
    std::string out = spec.orientation == Orientation::Horizontal ? "h:" : "v:";
    for (std::size_t i = 0; i < spec.lengths.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(spec.lengths[i]);
    }
    return out;
}

}  // namespace snake
