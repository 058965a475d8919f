#pragma once

#include <iosfwd>
#include <string>

#include "netfunc/graph.hpp"

namespace netfunc {

/// Reads the edge-list text format:
///
///   # optional comment lines
///   n <count>
///   u v
///   ...
///
/// Throws ParseError with the 1-based line number on malformed input,
/// including loop edges and out-of-range ids.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Writes `header_comment` (if non-empty, one '#' line per text line), then the
/// "n" line and the edges with u < v in lexicographic order.
void write_edge_list(std::ostream& out, const Graph& g, const std::string& header_comment = {});

}  // namespace netfunc
