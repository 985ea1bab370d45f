#include "seidel/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "seidel/errors.hpp"

namespace seidel {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    const auto start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    if (pos > start) fields.push_back(line.substr(start, pos - start));
  }
  return fields;
}

long long parse_int(std::string_view field, std::size_t line_no) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(line_no, "expected an integer, got '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw ParseError(1, "missing header line 'n m'");
  ++line_no;
  auto header = split_fields(line);
  if (header.size() != 2) throw ParseError(line_no, "header must be 'n m'");
  const auto n = parse_int(header[0], line_no);
  const auto m = parse_int(header[1], line_no);
  if (n < 1 || n > kMaxOrder) {
    throw ParseError(line_no, "order " + std::to_string(n) + " outside [1, " +
                                  std::to_string(kMaxOrder) + "]");
  }
  const auto max_edges = static_cast<long long>(pair_count(static_cast<int>(n)));
  if (m < 0 || m > max_edges) {
    throw ParseError(line_no, "edge count " + std::to_string(m) + " outside [0, " +
                                  std::to_string(max_edges) + "]");
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::vector<bool> seen(static_cast<std::size_t>(max_edges), false);
  while (static_cast<long long>(edges.size()) < m) {
    if (!std::getline(in, line)) {
      throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                        std::to_string(edges.size()));
    }
    ++line_no;
    auto fields = split_fields(line);
    if (fields.size() != 2) throw ParseError(line_no, "edge line must be 'i j'");
    const auto i = parse_int(fields[0], line_no);
    const auto j = parse_int(fields[1], line_no);
    if (i < 0 || j >= n || i >= j) {
      throw ParseError(line_no, "edge (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") violates 0 <= i < j < n");
    }
    const auto idx = pair_index(static_cast<Vertex>(i), static_cast<Vertex>(j), static_cast<int>(n));
    if (seen[idx]) {
      throw ParseError(line_no, "edge (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") repeated");
    }
    seen[idx] = true;
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!split_fields(line).empty()) throw ParseError(line_no, "unexpected content after last edge");
  }
  return make_graph(static_cast<int>(n), edges);
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::filesystem::filesystem_error("cannot open edge list", path,
                                            std::make_error_code(std::errc::no_such_file_or_directory));
  }
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [i, j] : g.edges()) out << i << ' ' << j << '\n';
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw std::filesystem::filesystem_error("cannot write edge list", path,
                                            std::make_error_code(std::errc::permission_denied));
  }
  write_edge_list(out, g);
  out.flush();
  if (!out) {
    throw std::filesystem::filesystem_error("write failed", path,
                                            std::make_error_code(std::errc::io_error));
  }
}

}  // namespace seidel
