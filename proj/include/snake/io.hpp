#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "snake/exact_matrix.hpp"
#include "snake/identities.hpp"
#include "snake/matchings.hpp"
#include "snake/snake_graph.hpp"
#include "snake/tri_dag.hpp"

namespace snake {

// JSON shapes are part of the tool's external interface and are stable:
//   SnakeGraph        {"word":"RU","d":3}
//   PerfectMatching   [[[x1,y1],[x2,y2]], ...]            (sorted)
//   Tiling            [[[cx,cy],[cx2,cy2]], ...]          (sorted centers)
//   ExactMatrix       {"n":k,"rows":[["2","2"],["1","3"]]} (decimal strings)
//   Route             [[edge,edge,...], ...]               (one list per path)
//   TriDag            {"assignment":...,"nodes":...,"arcs":...,"triangles":...}
//   IdentityReport    one JSON object per line
nlohmann::json to_json(const SnakeGraph& g);
SnakeGraph snake_graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PerfectMatching& m);
nlohmann::json to_json(const Tiling& t);
nlohmann::json to_json(const ExactMatrix& m);
nlohmann::json to_json(const TriDag& t, const Route& r);
nlohmann::json to_json(const TriDag& t);
nlohmann::json to_json(const IdentityReport& r);

/// Graphviz rendering of the triangular snake graph: left-to-right ranks,
/// contraction nodes as points, sources/sinks as distinct circle shapes,
/// arcs labelled with the index of their snake-graph edge in g's sorted
/// edge list.
std::string to_dot(const TriDag& t, const SnakeGraph& g);

/// Reads a custom integer sequence. Two formats, autodetected per file:
/// plain (one decimal integer per line) and b-file ("index value" per
/// line, 0- or 1-indexed, indices consecutive). '#' lines are comments.
SequenceKind ingest_sequence(std::istream& in);
SequenceKind ingest_sequence_file(const std::string& path);

}  // namespace snake
