#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "seidel/edge_list.hpp"
#include "seidel/errors.hpp"
#include "seidel/graph.hpp"
#include "support.hpp"
#include "test_config.hpp"

using namespace seidel;
using seidel::testing::kPropertySeed;

namespace {

std::vector<int> degrees(std::initializer_list<int> v) { return v; }

int isolated_count(const Graph& g) {
  int count = 0;
  for (Vertex v = 0; v < g.order(); ++v) count += g.degree(v) == 0;
  return count;
}

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

std::size_t parse_error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const seidel::ParseError& e) {
    return e.line();
  }
  FAIL("expected a parse error for: " << text);
  return 0;
}

}  // namespace

TEST_CASE("pair order is lexicographic and invertible") {
  CHECK(pair_count(1) == 0);
  CHECK(pair_count(5) == 10);
  CHECK(pair_index(0, 1, 5) == 0);
  CHECK(pair_index(0, 4, 5) == 3);
  CHECK(pair_index(1, 2, 5) == 4);
  CHECK(pair_index(3, 4, 5) == 9);
  for (int n = 2; n <= 12; ++n) {
    std::size_t expected = 0;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j, ++expected) {
        REQUIRE(pair_index(i, j, n) == expected);
        REQUIRE(pair_at(expected, n) == Edge{i, j});
      }
    }
  }
}

TEST_CASE("make_graph examples") {
  const auto empty = make_graph(3, {});
  CHECK(empty.order() == 3);
  CHECK(empty.size() == 0);

  const std::vector<Edge> one{{0, 1}};
  const auto k2 = make_graph(2, one);
  CHECK(k2.size() == 1);
  CHECK(k2.has_edge(1, 0));

  const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
  CHECK(make_graph(4, star).degree_sequence() == degrees({3, 1, 1, 1}));
}

TEST_CASE("make_graph rejects malformed input") {
  const std::vector<Edge> none;
  CHECK_THROWS_AS(make_graph(0, none), InvalidOrder);
  CHECK_THROWS_AS(make_graph(65, none), InvalidOrder);
  const std::vector<Edge> out_of_range{{0, 3}};
  CHECK_THROWS_AS(make_graph(3, out_of_range), VertexOutOfRange);
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(make_graph(3, loop), SelfLoop);
  const std::vector<Edge> twice{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(make_graph(3, twice), DuplicateEdge);
  CHECK_NOTHROW(make_graph(64, none));
}

TEST_CASE("edges come back sorted regardless of input order") {
  const std::vector<Edge> edges{{3, 1}, {0, 2}, {2, 1}};
  const auto g = make_graph(4, edges);
  CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}, {1, 3}});
  CHECK(g.pair_indices() == std::vector<std::size_t>{1, 3, 4});
  const auto same = Graph::from_pair_indices(4, g.pair_indices());
  CHECK(same == g);
}

TEST_CASE("from_rows validates symmetry and diagonal") {
  CHECK_NOTHROW(Graph::from_rows(2, {0b10, 0b01}));
  CHECK_THROWS_AS(Graph::from_rows(2, {0b10, 0b00}), GraphError);
  CHECK_THROWS_AS(Graph::from_rows(2, {0b01, 0b00}), SelfLoop);
  CHECK_THROWS_AS(Graph::from_rows(2, {0b100, 0b00}), VertexOutOfRange);
  CHECK_THROWS_AS(Graph::from_rows(3, {0, 0}), LengthMismatch);
  const std::vector<std::size_t> repeated{0, 0};
  CHECK_THROWS_AS(Graph::from_pair_indices(3, repeated), DuplicateEdge);
  const std::vector<std::size_t> beyond{3};
  CHECK_THROWS_AS(Graph::from_pair_indices(3, beyond), VertexOutOfRange);
}

TEST_CASE("complete_bipartite examples") {
  CHECK(complete_bipartite(0, 4).size() == 0);
  const auto k13 = complete_bipartite(1, 4);
  CHECK(k13.size() == 3);
  CHECK(k13.degree(0) == 3);
  const auto k24 = complete_bipartite(2, 6);
  CHECK(k24.size() == 8);
  CHECK(k24.degree_sequence() == degrees({4, 4, 2, 2, 2, 2}));
  CHECK(k24.has_edge(1, 5));
  CHECK_FALSE(k24.has_edge(0, 1));
  CHECK_FALSE(k24.has_edge(2, 3));
  CHECK_THROWS_AS(complete_bipartite(-1, 4), GraphError);
  CHECK_THROWS_AS(complete_bipartite(5, 4), GraphError);
}

TEST_CASE("complete_bipartite has d(n-d) edges") {
  for (int n = 1; n <= 64; ++n) {
    for (int d = 0; d <= n; ++d) {
      REQUIRE(complete_bipartite(d, n).size() == static_cast<std::size_t>(d * (n - d)));
    }
  }
}

TEST_CASE("star_union examples") {
  const auto empty = star_union(5, 0);
  CHECK(empty.size() == 0);
  CHECK(empty == Graph(5));
  const auto single = star_union(6, 1);
  CHECK(single.edges() == std::vector<Edge>{{0, 1}});
  CHECK(isolated_count(single) == 4);
  CHECK(star_union(7, 3).degree_sequence() == degrees({3, 1, 1, 1, 0, 0, 0}));
  CHECK_THROWS_AS(star_union(4, 4), GraphError);
}

TEST_CASE("star_union shape") {
  for (int n = 1; n <= 64; ++n) {
    for (int m = 1; m <= n - 1; ++m) {
      const auto g = star_union(n, m);
      REQUIRE(g.degree_sequence().front() == m);
      REQUIRE(isolated_count(g) == n - m - 1);
    }
  }
}

TEST_CASE("are_isomorphic examples") {
  const std::vector<Edge> center0{{0, 1}, {0, 2}, {0, 3}};
  const std::vector<Edge> center2{{0, 2}, {1, 2}, {2, 3}};
  CHECK(are_isomorphic(make_graph(4, center0), make_graph(4, center2)));

  const std::vector<Edge> path{{0, 1}, {1, 2}, {2, 3}};
  CHECK_FALSE(are_isomorphic(make_graph(4, path), make_graph(4, center0)));

  const auto k24 = complete_bipartite(2, 6);
  const auto co = complement(k24);
  CHECK(co.size() == 7);
  CHECK_FALSE(are_isomorphic(k24, co));

  CHECK_FALSE(are_isomorphic(Graph(3), Graph(4)));
  CHECK_FALSE(are_isomorphic(Graph(12), Graph(9)));
  CHECK_THROWS_AS(are_isomorphic(Graph(9), Graph(9)), CapacityError);
  CHECK(are_isomorphic(Graph(9), Graph(9), IsoLimits{9}));
}

TEST_CASE("are_isomorphic separates same-degree graphs") {
  // C6 against two disjoint triangles: both 2-regular on 6 vertices.
  const std::vector<Edge> cycle{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}};
  const std::vector<Edge> triangles{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  CHECK_FALSE(are_isomorphic(make_graph(6, cycle), make_graph(6, triangles)));
  // Cube against the Wagner graph: both 3-regular on 8 vertices.
  std::vector<Edge> cube;
  for (int v = 0; v < 8; ++v) {
    for (int b = 0; b < 3; ++b) {
      const int w = v ^ (1 << b);
      if (v < w) cube.emplace_back(v, w);
    }
  }
  std::vector<Edge> wagner;
  for (int v = 0; v < 8; ++v) {
    wagner.emplace_back(std::min(v, (v + 1) % 8), std::max(v, (v + 1) % 8));
    if (v < 4) wagner.emplace_back(v, v + 4);
  }
  CHECK_FALSE(are_isomorphic(make_graph(8, cube), make_graph(8, wagner)));
}

TEST_CASE("are_isomorphic agrees with exhaustive permutation search") {
  std::mt19937_64 rng(kPropertySeed);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const auto g = testing::random_graph(rng, n, 0.5);
    const auto h = testing::random_graph_with_size(rng, n, static_cast<int>(g.size()));
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    bool brute = false;
    do {
      brute = relabel(g, perm) == h;
    } while (!brute && std::next_permutation(perm.begin(), perm.end()));
    REQUIRE(are_isomorphic(g, h) == brute);
  }
}

TEST_CASE("are_isomorphic is reflexive, symmetric and permutation invariant") {
  std::mt19937_64 rng(kPropertySeed + 1);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const auto g = testing::random_graph(rng, n, p);
    const auto h = testing::random_graph(rng, n, p);
    REQUIRE(are_isomorphic(g, g));
    REQUIRE(are_isomorphic(g, h) == are_isomorphic(h, g));
    const auto gp = relabel(g, testing::random_permutation(rng, n));
    const auto hp = relabel(h, testing::random_permutation(rng, n));
    REQUIRE(are_isomorphic(g, gp));
    REQUIRE(are_isomorphic(g, h) == are_isomorphic(gp, hp));
  }
}

TEST_CASE("relabel and complement") {
  const std::vector<Edge> edges{{0, 1}, {1, 2}};
  const auto g = make_graph(3, edges);
  const std::vector<Vertex> perm{2, 0, 1};
  CHECK(relabel(g, perm).edges() == std::vector<Edge>{{0, 1}, {0, 2}});
  const std::vector<Vertex> bad{0, 0, 1};
  CHECK_THROWS_AS(relabel(g, bad), GraphError);
  const std::vector<Vertex> short_perm{0, 1};
  CHECK_THROWS_AS(relabel(g, short_perm), LengthMismatch);
  CHECK(complement(g).edges() == std::vector<Edge>{{0, 2}});
  CHECK(complement(complement(g)) == g);
  CHECK(complement(Graph(64)).size() == pair_count(64));
}

TEST_CASE("delete_vertex examples") {
  const auto s52 = star_union(5, 2);
  CHECK(delete_vertex(s52, 0) == Graph(4));

  const std::vector<Edge> one{{0, 1}};
  const auto single = delete_vertex(make_graph(2, one), 0);
  CHECK(single.order() == 1);
  CHECK(single.size() == 0);

  const auto k24 = delete_vertex(complete_bipartite(2, 6), 1);
  CHECK(k24.order() == 5);
  CHECK(k24.size() == 4);
  CHECK(k24.degree(0) == 4);
  CHECK(are_isomorphic(k24, complete_bipartite(1, 5)));

  CHECK_THROWS_AS(delete_vertex(Graph(1), 0), InvalidOrder);
  CHECK_THROWS_AS(delete_vertex(Graph(3), 3), VertexOutOfRange);
}

TEST_CASE("delete_vertex keeps the induced subgraph on compacted labels") {
  std::mt19937_64 rng(kPropertySeed + 2);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 64)(rng);
    const auto g = testing::random_graph(rng, n, 0.3);
    const int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const auto h = delete_vertex(g, v);
    REQUIRE(h.size() == g.size() - static_cast<std::size_t>(g.degree(v)));
    auto old_label = [v](int x) { return x < v ? x : x + 1; };
    for (int i = 0; i < n - 1; ++i) {
      for (int j = i + 1; j < n - 1; ++j) {
        REQUIRE(h.has_edge(i, j) == g.has_edge(old_label(i), old_label(j)));
      }
    }
  }
}

TEST_CASE("edge list round trip") {
  std::mt19937_64 rng(kPropertySeed + 3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 64)(rng);
    const auto g = testing::random_graph(rng, n, 0.2);
    std::ostringstream out;
    write_edge_list(out, g);
    REQUIRE(parse(out.str()) == g);
  }
  std::ostringstream out;
  write_edge_list(out, star_union(4, 2));
  CHECK(out.str() == "4 2\n0 1\n0 2\n");
}

TEST_CASE("edge list parsing") {
  CHECK(parse("3 0\n") == Graph(3));
  CHECK(parse("3 1\n0 2\n\n\n").edges() == std::vector<Edge>{{0, 2}});
  CHECK(parse("3 1\r\n 0\t2 \r\n").size() == 1);
  CHECK(parse("3 0").size() == 0);
}

TEST_CASE("edge list errors carry the offending line") {
  CHECK(parse_error_line("") == 1);
  CHECK(parse_error_line("three 1\n") == 1);
  CHECK(parse_error_line("3\n") == 1);
  CHECK(parse_error_line("0 0\n") == 1);
  CHECK(parse_error_line("65 0\n") == 1);
  CHECK(parse_error_line("3 4\n") == 1);
  CHECK(parse_error_line("3 -1\n") == 1);
  CHECK(parse_error_line("3 2\n0 1\n") == 3);
  CHECK(parse_error_line("3 2\n0 1\n1 1\n") == 3);
  CHECK(parse_error_line("3 2\n0 1\n2 1\n") == 3);
  CHECK(parse_error_line("3 2\n0 1\n1 3\n") == 3);
  CHECK(parse_error_line("3 2\n0 1\n0 1\n") == 3);
  CHECK(parse_error_line("3 1\n0 x\n") == 2);
  CHECK(parse_error_line("3 1\n0 1 2\n") == 2);
  CHECK(parse_error_line("3 1\n0 1\n\n1 2\n") == 4);
}

TEST_CASE("edge list files") {
  const auto dir = std::filesystem::temp_directory_path() / "seidel_edge_list_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "k24.txt";
  write_edge_list(path, complete_bipartite(2, 6));
  CHECK(read_edge_list(path) == complete_bipartite(2, 6));
  CHECK_THROWS_AS(read_edge_list(dir / "missing.txt"), std::filesystem::filesystem_error);
  CHECK_THROWS_AS(write_edge_list(dir / "no_such_dir" / "g.txt", Graph(2)),
                  std::filesystem::filesystem_error);
  std::filesystem::remove_all(dir);
}
