// graph6 text codec (the usual >>graph6<< interchange format: size
// prefix, then the upper adjacency triangle in column order packed into
// printable 6-bit groups).
#pragma once

#include <string>
#include <string_view>

#include "wqoim/graph.hpp"

namespace wqoim {

/// One-line graph6 encoding, without trailing newline or optional header.
std::string graph6_encode(const Graph& g);

/// Decodes a graph6 line.  A leading ">>graph6<<" header is tolerated.
/// Throws std::invalid_argument on malformed input or if the encoded
/// graph exceeds Graph::max_vertices.
Graph graph6_decode(std::string_view line);

}  // namespace wqoim
