#include "snake/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "snake/errors.hpp"

namespace snake {

namespace {

using nlohmann::json;

json edge_json(const Edge& e) {
    return json::array({json::array({e.a.x, e.a.y}), json::array({e.b.x, e.b.y})});
}

// Half-integer coordinate as a JSON number; .5 values are exact in double.
double half(int doubled) { return doubled / 2.0; }

}  // namespace

nlohmann::json to_json(const SnakeGraph& g) {
    return json{{"word", g.word()}, {"d", g.tile_count()}};
}

SnakeGraph snake_graph_from_json(const nlohmann::json& j) {
    const std::string word = j.at("word").get<std::string>();
    SnakeGraph g = SnakeGraph::from_word(word);
    if (j.contains("d") && j.at("d").get<int>() != g.tile_count())
        throw UsageError("JSON snake graph: 'd' does not match the word length");
    return g;
}

nlohmann::json to_json(const PerfectMatching& m) {
    json out = json::array();
    for (const Edge& e : m.edges) out.push_back(edge_json(e));
    return out;
}

nlohmann::json to_json(const Tiling& t) {
    json out = json::array();
    for (const Domino& d : t.dominoes)
        out.push_back(json::array(
            {json::array({d.a.x, d.a.y}), json::array({d.b.x, d.b.y})}));
    return out;
}

nlohmann::json to_json(const ExactMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return json{{"n", m.size()}, {"rows", std::move(rows)}};
}

nlohmann::json to_json(const TriDag& t, const Route& r) {
    json out = json::array();
    for (const auto& path : r.paths) {
        json arcs = json::array();
        for (int a : path) arcs.push_back(edge_json(t.arcs()[static_cast<std::size_t>(a)].edge));
        out.push_back(std::move(arcs));
    }
    return out;
}

nlohmann::json to_json(const TriDag& t) {
    json nodes = json::array();
    for (std::size_t id = 0; id < t.nodes().size(); ++id) {
        const TriNode& n = t.nodes()[id];
        json node{{"id", id}, {"x", half(n.pos.x2)}, {"y", half(n.pos.y2)}};
        if (n.contraction_of) {
            node["origin"] = json{{"kind", "contraction"}, {"edge", edge_json(*n.contraction_of)}};
        } else {
            node["origin"] =
                json{{"kind", "source_sink"}, {"vertex", json::array({n.vertex->x, n.vertex->y})}};
        }
        nodes.push_back(std::move(node));
    }
    json arcs = json::array();
    for (const TriArc& a : t.arcs())
        arcs.push_back(json{{"from", a.from}, {"to", a.to}, {"edge", edge_json(a.edge)}});
    json triangles = json::array();
    for (const TriTile& tile : t.triangles())
        triangles.push_back(json{{"label", tile.label},
                                 {"nodes", json::array({tile.corners[0], tile.corners[1],
                                                        tile.corners[2]})},
                                 {"up", tile.up}});
    return json{{"assignment", t.assignment() == Assignment::Standard ? "standard" : "opposite"},
                {"nodes", std::move(nodes)},
                {"arcs", std::move(arcs)},
                {"triangles", std::move(triangles)}};
}

nlohmann::json to_json(const IdentityReport& r) {
    return json{{"identity", r.identity}, {"parameter", r.parameter},
                {"left", r.left.str()},   {"right", r.right.str()},
                {"holds", r.holds},       {"note", r.note}};
}

namespace {

std::string format_half(int doubled) {
    std::string s = std::to_string(doubled / 2);
    if (doubled % 2 != 0) {
        if (doubled < 0 && doubled / 2 == 0) s = "-0";
        s += ".5";
    }
    return s;
}

}  // namespace

std::string to_dot(const TriDag& t, const SnakeGraph& g) {
    const auto& edges = g.edges();
    const auto edge_index = [&](const Edge& e) {
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        return static_cast<int>(it - edges.begin());
    };

    Terminals term = terminals(t);
    const auto is_in = [](const std::vector<int>& v, int id) {
        return std::find(v.begin(), v.end(), id) != v.end();
    };

    std::ostringstream out;
    out << "digraph tri_snake {\n  rankdir=LR;\n";
    for (std::size_t id = 0; id < t.nodes().size(); ++id) {
        const TriNode& n = t.nodes()[id];
        out << "  n" << id << " [";
        if (n.contraction_of) {
            out << "shape=point, xlabel=\"e" << edge_index(*n.contraction_of) << " ("
                << format_half(n.pos.x2) << "," << format_half(n.pos.y2) << ")\"";
        } else {
            const bool source = is_in(term.sources, static_cast<int>(id));
            out << "shape=" << (source ? "circle" : "doublecircle") << ", label=\""
                << (source ? "s" : "t") << " (" << format_half(n.pos.x2) << ","
                << format_half(n.pos.y2) << ")\"";
        }
        out << "];\n";
    }
    for (const TriArc& a : t.arcs())
        out << "  n" << a.from << " -> n" << a.to << " [label=\"e" << edge_index(a.edge)
            << "\"];\n";
    out << "}\n";
    return out.str();
}

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

SequenceKind ingest_sequence(std::istream& in) {
    std::vector<BigInt> terms;
    std::optional<bool> bfile;
    long long expected_index = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) {
            if (tok[0] == '#') break;
            tokens.push_back(tok);
        }
        if (tokens.empty()) continue;
        if (tokens.size() > 2) throw ParseError(line_no, "expected 1 or 2 columns");
        for (const std::string& s : tokens)
            if (!is_integer_token(s)) throw ParseError(line_no, "not an integer: '" + s + "'");

        const bool two = tokens.size() == 2;
        if (!bfile.has_value()) {
            bfile = two;
            if (two) {
                // b-files may start at index 0 or 1.
                expected_index = std::stoll(tokens[0]);
                if (expected_index != 0 && expected_index != 1)
                    throw ParseError(line_no, "b-file must start at index 0 or 1");
            }
        } else if (*bfile != two) {
            throw ParseError(line_no, "mixed plain and b-file rows");
        }

        if (two) {
            if (std::stoll(tokens[0]) != expected_index) throw GapError(line_no);
            ++expected_index;
            terms.emplace_back(tokens[1]);
        } else {
            terms.emplace_back(tokens[0]);
        }
    }
    if (terms.empty()) throw ParseError(line_no == 0 ? 1 : line_no, "no sequence terms found");
    return SequenceKind::custom_terms(std::move(terms));
}

SequenceKind ingest_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return ingest_sequence(in);
}

}  // namespace snake
