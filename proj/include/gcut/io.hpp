#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gcut/graph.hpp"

namespace gcut {

// Edge-list text format:
//
//   # optional comment lines, anywhere
//   n m
//   u v        (exactly m lines, 0-based; "u u" is a loop; parallel edges repeat)
//
// ASCII with LF line endings. Blank lines are ignored.

/// Throws ParseError carrying the 1-based line number of the first problem.
Graph parse_edge_list(std::string_view text);

/// Writes each comment as "# <comment>", then the header and one line per
/// unit of multiplicity, in edge order.
std::string write_edge_list(const Graph& g, const std::vector<std::string>& comments = {});

Graph read_edge_list_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

struct DotHighlight {
    VertexSet side;           // drawn filled
    std::vector<Edge> edges;  // drawn red and bold
};

/// Graphviz DOT for an undirected graph, one line per unit of multiplicity.
std::string write_dot(const Graph& g, const DotHighlight* highlight = nullptr);

}  // namespace gcut
