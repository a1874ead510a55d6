#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "updom/graph.hpp"

namespace updom {

// graph6 (the de-facto ASCII format of nauty/geng): byte n+63 for n <= 62
// (a 126-prefixed 3-byte form for 63 <= n <= 258047), then the upper-triangle
// adjacency bits column-major in 6-bit chunks, each chunk +63, MSB first.
std::string graph6_encode(const Graph& g);

// Accepts an optional ">>graph6<<" header and a trailing newline.
// Malformed input is rejected with a diagnostic naming the byte offset.
Graph graph6_decode(std::string_view line);

// Plain text edge list: first line "n m", then m lines "u v" (0-based).
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

enum class GraphFormat { graph6, edge_list, autodetect };

// Parses one graph from text in the given format. Autodetection: a first line
// containing a space is an edge-list header, anything else is graph6.
Graph parse_graph(const std::string& text, GraphFormat format = GraphFormat::autodetect);

}  // namespace updom
