#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "p5col/coloring.hpp"
#include "p5col/graph.hpp"

namespace p5col {

enum class GraphFormat { Dimacs, EdgeList };

/// "dimacs"/"col" or "edges"/"edge-list". Throws std::invalid_argument.
GraphFormat parse_format_name(std::string_view name);
/// Guess from a file extension: .col/.dimacs -> Dimacs, otherwise EdgeList.
GraphFormat format_from_path(std::string_view path);

/// DIMACS: "c" comment lines, one "p edge n m" header, "e u v" lines with
/// 1-based ids. Edge list: "u v" per line with 0-based ids, blank lines and
/// "#" comments ignored; a "# n <count>" comment fixes the vertex count
/// (otherwise it is one more than the largest id). Throws ParseError.
Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_graph(std::string_view text, GraphFormat format);
Graph read_graph_file(const std::string& path, GraphFormat format);

void write_graph(std::ostream& out, const Graph& g, GraphFormat format);
std::string format_graph(const Graph& g, GraphFormat format);

/// Lines "vertex weight", 0-based, "#" comments; unlisted vertices weigh 1.
VertexWeights parse_weights(std::istream& in, int n);
VertexWeights read_weights_file(const std::string& path, int n);

}  // namespace p5col
