#pragma once

// Plain-text graph formats. Output is byte-reproducible: edges are written
// in lexicographic order with 0-based indices.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "wood/graph.hpp"

namespace wood {

enum class ExportFormat { EdgeList, Dot };

// Throws ParameterError for anything other than "edgelist" or "dot".
ExportFormat parse_export_format(const std::string& name);

// One "u v" line per edge, u < v.
void write_edge_list(const Graph& g, std::ostream& out);

// Reads "u v" lines (blank lines and '#' comments ignored). The order is
// max index + 1 unless given explicitly.
Graph read_edge_list(std::istream& in, std::optional<std::size_t> order = std::nullopt);

// Undirected DOT, one node statement per vertex (with its label if any).
void write_dot(const Graph& g, std::ostream& out);

// Throws std::runtime_error when the path cannot be written.
void export_graph(const Graph& g, ExportFormat format, const std::filesystem::path& path);

}  // namespace wood
