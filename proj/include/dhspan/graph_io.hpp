#pragma once

#include <iosfwd>
#include <string>

#include "dhspan/graph.hpp"

namespace dhspan {

// Canonical text format:
//   n m
//   u v        (m lines, 0-based indices)
// Blank lines and '#' comments are ignored.
Graph read_graph_text(std::istream& in);
Graph parse_graph_text(const std::string& text);

/// Non-contiguous graphs are written by rank in vertices(), preceded by an
/// informational `# ids: ...` comment line.
void write_graph_text(std::ostream& out, const Graph& g);
std::string graph_to_text(const Graph& g);

// Structured form: {"vertices": [ids...], "edges": [[u, v], ...]}.
Graph parse_graph_json(const std::string& text);
std::string graph_to_json(const Graph& g);

}  // namespace dhspan
