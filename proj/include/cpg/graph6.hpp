#pragma once

#include <string>
#include <string_view>

#include "cpg/graph.hpp"

namespace cpg {

// Standard graph6 encoding: size header, then the upper triangle of the
// adjacency matrix in column order, 6 bits per byte, offset by 63.
// Orders up to 62 use the one-byte header, larger orders the '~' form.
std::string encode_graph6(const Graph& g);

// Throws std::invalid_argument on malformed input (bad length, stray
// padding bits, out-of-range bytes, or degree above 3).
Graph decode_graph6(std::string_view line);

}  // namespace cpg
