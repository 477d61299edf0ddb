#pragma once

#include <string>
#include <string_view>

#include "booldim/graph.hpp"

namespace booldim {

/// Parses one graph6 string. An optional ">>graph6<<" header and trailing
/// whitespace are accepted. Throws ParseError (with byte offset) on a bad
/// header, an out-of-range character, or a payload of the wrong length.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding, without a trailing newline.
std::string write_graph6(const Graph& g);

/// Edge-list text: one "u v" pair per line, 0-indexed, '#' starts a comment.
/// A line holding a single integer declares the vertex count (needed for
/// trailing isolated vertices); otherwise the count is max index + 1.
Graph parse_edge_list(std::string_view text);

std::string write_edge_list(const Graph& g);

}  // namespace booldim
