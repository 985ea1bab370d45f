#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace seidel {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kMaxOrder = 64;
inline constexpr int kIsomorphismCap = 8;

/// Number of unordered vertex pairs on n vertices, n(n-1)/2.
constexpr std::size_t pair_count(int n) noexcept {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

/// Position of the pair {i,j} (i < j) in lexicographic pair order on n vertices:
/// (0,1),(0,2),...,(0,n-1),(1,2),...
constexpr std::size_t pair_index(Vertex i, Vertex j, int n) noexcept {
  const auto ii = static_cast<std::size_t>(i);
  const auto nn = static_cast<std::size_t>(n);
  return ii * (2 * nn - ii - 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

/// Inverse of pair_index.
Edge pair_at(std::size_t index, int n);

/// Simple labeled graph on vertices 0..n-1 (1 <= n <= 64). Values are
/// immutable once built; every factory validates its input.
class Graph {
public:
  /// Edgeless graph on `order` vertices.
  explicit Graph(int order);

  /// Builds from adjacency bit rows; bit j of rows[i] set means i~j.
  /// Rows must be symmetric with a clear diagonal.
  static Graph from_rows(int order, std::vector<std::uint64_t> rows);

  /// Builds from indices into the lexicographic pair order. Indices must be
  /// distinct and below pair_count(order).
  static Graph from_pair_indices(int order, std::span<const std::size_t> pairs);

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return size_; }

  bool has_edge(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  std::uint64_t neighbors(Vertex v) const;
  std::span<const std::uint64_t> rows() const noexcept { return rows_; }

  /// Degrees sorted non-increasing.
  std::vector<int> degree_sequence() const;
  /// Edges (i,j), i < j, in lexicographic order.
  std::vector<Edge> edges() const;
  /// Sorted pair indices of the edge set.
  std::vector<std::size_t> pair_indices() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  Graph(int order, std::vector<std::uint64_t> rows, std::size_t size)
      : order_(order), size_(size), rows_(std::move(rows)) {}

  int order_;
  std::size_t size_;
  std::vector<std::uint64_t> rows_;
};

/// Validated construction. Throws InvalidOrder, VertexOutOfRange, SelfLoop
/// or DuplicateEdge.
Graph make_graph(int n, std::span<const Edge> edges);

/// K_{d,n-d} with parts {0..d-1} and {d..n-1}.
Graph complete_bipartite(int d, int n);

/// The star K_{1,m} centered at 0 with leaves 1..m, plus isolated
/// vertices m+1..n-1.
Graph star_union(int n, int m);

/// Removes v and compacts labels, keeping relative order.
Graph delete_vertex(const Graph& g, Vertex v);

/// Relabels vertex i as perm[i]; perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Complement within the same vertex labels.
Graph complement(const Graph& g);

struct IsoLimits {
  int max_order = kIsomorphismCap;
};

/// Backtracking permutation search, pruned by degree sequence and iterated
/// neighbourhood-degree colouring. Throws CapacityError above
/// limits.max_order; graphs of different order are simply non-isomorphic.
bool are_isomorphic(const Graph& g, const Graph& h, IsoLimits limits = {});

}  // namespace seidel
