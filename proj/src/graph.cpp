#include "seidel/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

#include "seidel/errors.hpp"

namespace seidel {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw InvalidOrder("graph order " + std::to_string(n) + " outside [1, " +
                       std::to_string(kMaxOrder) + "]");
  }
}

void check_vertex(Vertex v, int n) {
  if (v < 0 || v >= n) {
    throw VertexOutOfRange("vertex " + std::to_string(v) + " outside [0, " +
                           std::to_string(n - 1) + "]");
  }
}

constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

constexpr std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

Edge pair_at(std::size_t index, int n) {
  if (index >= pair_count(n)) {
    throw VertexOutOfRange("pair index " + std::to_string(index) + " outside order " +
                           std::to_string(n));
  }
  Vertex i = 0;
  std::size_t row = static_cast<std::size_t>(n - 1);
  while (index >= row) {
    index -= row;
    --row;
    ++i;
  }
  return {i, i + 1 + static_cast<Vertex>(index)};
}

Graph::Graph(int order) : order_(order), size_(0) {
  check_order(order);
  rows_.assign(static_cast<std::size_t>(order), 0);
}

Graph Graph::from_rows(int order, std::vector<std::uint64_t> rows) {
  check_order(order);
  if (rows.size() != static_cast<std::size_t>(order)) {
    throw LengthMismatch("expected " + std::to_string(order) + " adjacency rows, got " +
                         std::to_string(rows.size()));
  }
  std::size_t degree_sum = 0;
  for (Vertex i = 0; i < order; ++i) {
    const auto row = rows[static_cast<std::size_t>(i)];
    if (row & ~low_mask(order)) {
      throw VertexOutOfRange("row " + std::to_string(i) + " references a vertex >= order");
    }
    if (row & bit(i)) throw SelfLoop("self-loop at vertex " + std::to_string(i));
    for (auto rest = row; rest != 0; rest &= rest - 1) {
      const int j = std::countr_zero(rest);
      if (!(rows[static_cast<std::size_t>(j)] & bit(i))) {
        throw GraphError("adjacency rows not symmetric at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
    }
    degree_sum += static_cast<std::size_t>(std::popcount(row));
  }
  return Graph(order, std::move(rows), degree_sum / 2);
}

Graph Graph::from_pair_indices(int order, std::span<const std::size_t> pairs) {
  check_order(order);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(order), 0);
  for (const auto p : pairs) {
    const auto [i, j] = pair_at(p, order);
    auto& row = rows[static_cast<std::size_t>(i)];
    if (row & bit(j)) {
      throw DuplicateEdge("pair index " + std::to_string(p) + " repeated");
    }
    row |= bit(j);
    rows[static_cast<std::size_t>(j)] |= bit(i);
  }
  return Graph(order, std::move(rows), pairs.size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u, order_);
  check_vertex(v, order_);
  return (rows_[static_cast<std::size_t>(u)] & bit(v)) != 0;
}

int Graph::degree(Vertex v) const {
  check_vertex(v, order_);
  return std::popcount(rows_[static_cast<std::size_t>(v)]);
}

std::uint64_t Graph::neighbors(Vertex v) const {
  check_vertex(v, order_);
  return rows_[static_cast<std::size_t>(v)];
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> degrees;
  degrees.reserve(rows_.size());
  for (const auto row : rows_) degrees.push_back(std::popcount(row));
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return degrees;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (Vertex i = 0; i < order_; ++i) {
    auto above = rows_[static_cast<std::size_t>(i)] & ~low_mask(i + 1);
    for (; above != 0; above &= above - 1) out.emplace_back(i, std::countr_zero(above));
  }
  return out;
}

std::vector<std::size_t> Graph::pair_indices() const {
  std::vector<std::size_t> out;
  out.reserve(size_);
  for (const auto& [i, j] : edges()) out.push_back(pair_index(i, j, order_));
  return out;
}

Graph make_graph(int n, std::span<const Edge> edges) {
  check_order(n);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : edges) {
    check_vertex(u, n);
    check_vertex(v, n);
    if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
    auto& row = rows[static_cast<std::size_t>(u)];
    if (row & bit(v)) {
      throw DuplicateEdge("edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") listed twice");
    }
    row |= bit(v);
    rows[static_cast<std::size_t>(v)] |= bit(u);
  }
  return Graph::from_rows(n, std::move(rows));
}

Graph complete_bipartite(int d, int n) {
  check_order(n);
  if (d < 0 || d > n) {
    throw GraphError("part size " + std::to_string(d) + " outside [0, " + std::to_string(n) +
                     "]");
  }
  const std::uint64_t small = low_mask(d);
  const std::uint64_t large = low_mask(n) & ~small;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) rows[static_cast<std::size_t>(v)] = v < d ? large : small;
  return Graph::from_rows(n, std::move(rows));
}

Graph star_union(int n, int m) {
  check_order(n);
  if (m < 0 || m > n - 1) {
    throw GraphError("star size " + std::to_string(m) + " outside [0, " +
                     std::to_string(n - 1) + "]");
  }
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (Vertex leaf = 1; leaf <= m; ++leaf) {
    rows[0] |= bit(leaf);
    rows[static_cast<std::size_t>(leaf)] = bit(0);
  }
  return Graph::from_rows(n, std::move(rows));
}

Graph delete_vertex(const Graph& g, Vertex v) {
  const int n = g.order();
  check_vertex(v, n);
  if (n < 2) throw InvalidOrder("cannot delete the only vertex of a graph");
  const std::uint64_t below = low_mask(v);
  std::vector<std::uint64_t> rows;
  rows.reserve(static_cast<std::size_t>(n - 1));
  for (Vertex u = 0; u < n; ++u) {
    if (u == v) continue;
    const auto row = g.rows()[static_cast<std::size_t>(u)];
    rows.push_back((row & below) | ((row >> 1) & ~below));
  }
  return Graph::from_rows(n - 1, std::move(rows));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const int n = g.order();
  if (perm.size() != static_cast<std::size_t>(n)) {
    throw LengthMismatch("permutation length " + std::to_string(perm.size()) +
                         " does not match order " + std::to_string(n));
  }
  std::uint64_t seen = 0;
  for (const auto p : perm) {
    check_vertex(p, n);
    if (seen & bit(p)) throw GraphError("relabeling is not a permutation");
    seen |= bit(p);
  }
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (const auto& [i, j] : g.edges()) {
    const auto a = perm[static_cast<std::size_t>(i)];
    const auto b = perm[static_cast<std::size_t>(j)];
    rows[static_cast<std::size_t>(a)] |= bit(b);
    rows[static_cast<std::size_t>(b)] |= bit(a);
  }
  return Graph::from_rows(n, std::move(rows));
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    rows[static_cast<std::size_t>(v)] = ~g.rows()[static_cast<std::size_t>(v)] & low_mask(n) & ~bit(v);
  }
  return Graph::from_rows(n, std::move(rows));
}

namespace {

// Joint colour refinement on the disjoint union of g and h, so colours are
// comparable across the two graphs. Returns {colours of g, colours of h}.
std::pair<std::vector<int>, std::vector<int>> refine_colours(const Graph& g, const Graph& h) {
  const int n = g.order();
  std::vector<int> cg(static_cast<std::size_t>(n)), ch(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    cg[static_cast<std::size_t>(v)] = g.degree(v);
    ch[static_cast<std::size_t>(v)] = h.degree(v);
  }
  std::size_t classes = 0;
  while (true) {
    using Signature = std::pair<int, std::vector<int>>;
    auto signature = [](const Graph& graph, const std::vector<int>& colour, Vertex v) {
      std::vector<int> around;
      for (auto rest = graph.rows()[static_cast<std::size_t>(v)]; rest != 0; rest &= rest - 1) {
        around.push_back(colour[static_cast<std::size_t>(std::countr_zero(rest))]);
      }
      std::sort(around.begin(), around.end());
      return Signature{colour[static_cast<std::size_t>(v)], std::move(around)};
    };
    std::vector<Signature> sg, sh;
    for (Vertex v = 0; v < n; ++v) {
      sg.push_back(signature(g, cg, v));
      sh.push_back(signature(h, ch, v));
    }
    std::map<Signature, int> ids;
    for (const auto& s : sg) ids.emplace(s, 0);
    for (const auto& s : sh) ids.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (Vertex v = 0; v < n; ++v) {
      cg[static_cast<std::size_t>(v)] = ids.at(sg[static_cast<std::size_t>(v)]);
      ch[static_cast<std::size_t>(v)] = ids.at(sh[static_cast<std::size_t>(v)]);
    }
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {std::move(cg), std::move(ch)};
}

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  const std::vector<int>& cg;
  const std::vector<int>& ch;
  std::vector<Vertex> order;    // g vertices in assignment order
  std::vector<Vertex> image;    // image[v] for g vertex v, -1 if unmapped
  std::uint64_t used = 0;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex v = order[depth];
    const auto colour = cg[static_cast<std::size_t>(v)];
    for (Vertex w = 0; w < h.order(); ++w) {
      if ((used & bit(w)) || ch[static_cast<std::size_t>(w)] != colour) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const Vertex u = order[k];
        const bool eg = (g.rows()[static_cast<std::size_t>(v)] & bit(u)) != 0;
        const bool eh = (h.rows()[static_cast<std::size_t>(w)] &
                         bit(image[static_cast<std::size_t>(u)])) != 0;
        consistent = eg == eh;
      }
      if (!consistent) continue;
      image[static_cast<std::size_t>(v)] = w;
      used |= bit(w);
      if (extend(depth + 1)) return true;
      used &= ~bit(w);
      image[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }
};

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h, IsoLimits limits) {
  if (g.order() != h.order()) return false;
  if (g.order() > limits.max_order) {
    throw CapacityError("isomorphism search limited to order " +
                            std::to_string(limits.max_order) + ", got " +
                            std::to_string(g.order()),
                        static_cast<std::size_t>(g.order()),
                        static_cast<std::size_t>(limits.max_order));
  }
  if (g.size() != h.size()) return false;
  if (g.degree_sequence() != h.degree_sequence()) return false;
  if (g == h) return true;

  auto [cg, ch] = refine_colours(g, h);
  {
    auto sg = cg, sh = ch;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
  }

  const int n = g.order();
  std::map<int, int> class_size;
  for (const auto c : cg) ++class_size[c];

  // Small colour classes first; within a class, follow adjacency so that
  // consistency checks bite early.
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    const auto sa = class_size[cg[static_cast<std::size_t>(a)]];
    const auto sb = class_size[cg[static_cast<std::size_t>(b)]];
    if (sa != sb) return sa < sb;
    return cg[static_cast<std::size_t>(a)] < cg[static_cast<std::size_t>(b)];
  });

  IsoSearch search{g, h, cg, ch, std::move(order), std::vector<Vertex>(static_cast<std::size_t>(n), -1)};
  return search.extend(0);
}

}  // namespace seidel
