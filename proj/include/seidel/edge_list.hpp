#pragma once

#include <filesystem>
#include <iosfwd>

#include "seidel/graph.hpp"

namespace seidel {

// Text format:
//   n m
//   i j        (m lines, 0 <= i < j < n)
// Whitespace-separated, newline-terminated. Blank lines after the last edge
// are tolerated; anything else is a ParseError carrying the line number.

Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g);
/// Throws std::filesystem::filesystem_error when the file cannot be written.
void write_edge_list(const std::filesystem::path& path, const Graph& g);

}  // namespace seidel
