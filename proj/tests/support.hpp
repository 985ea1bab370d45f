#pragma once

// Independent reference computations for the test suites. Nothing here goes
// through the library's eigensolver or enumeration code.

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "seidel/graph.hpp"

namespace seidel::testing {

inline Eigen::MatrixXd reference_seidel(const Graph& g) {
  const int n = g.order();
  Eigen::MatrixXd s(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s(i, j) = i == j ? 0.0 : (g.has_edge(i, j) ? -1.0 : 1.0);
  }
  return s;
}

// Eigenvalues, descending.
inline std::vector<double> reference_spectrum(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  std::vector<double> v(solver.eigenvalues().data(),
                        solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

inline std::vector<double> reference_spectrum(const Graph& g) {
  return reference_spectrum(reference_seidel(g));
}

inline double reference_index(const Graph& g) { return reference_spectrum(g).front(); }

inline Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1U) edges.emplace_back(i, j);
    }
  }
  return make_graph(n, edges);
}

struct BruteForceMax {
  double best = -1e300;
  std::vector<Graph> maximizers;  // labeled graphs within tol of best
  std::uint64_t scanned = 0;
};

// Every m-edge labeled graph on n vertices via Gosper's hack over pair masks.
inline BruteForceMax brute_force_max(int n, int m, double tol) {
  const int pairs = n * (n - 1) / 2;
  BruteForceMax out;
  std::vector<std::pair<double, std::uint64_t>> all;
  auto visit = [&](std::uint64_t mask) {
    const double idx = reference_index(graph_from_mask(n, mask));
    all.emplace_back(idx, mask);
    out.best = std::max(out.best, idx);
    ++out.scanned;
  };
  if (m == 0) {
    visit(0);
  } else {
    std::uint64_t mask = (std::uint64_t{1} << m) - 1;
    const std::uint64_t limit = std::uint64_t{1} << pairs;
    while (mask < limit) {
      visit(mask);
      const std::uint64_t low = mask & -mask;
      const std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  for (const auto& [idx, mask] : all) {
    if (idx >= out.best - tol) out.maximizers.push_back(graph_from_mask(n, mask));
  }
  return out;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return make_graph(n, edges);
}

inline Graph random_graph_with_size(std::mt19937_64& rng, int n, int m) {
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(static_cast<std::size_t>(m));
  return make_graph(n, pairs);
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline std::vector<Vertex> random_subset(std::mt19937_64& rng, int n) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Vertex> u;
  for (int v = 0; v < n; ++v) {
    if (coin(rng)) u.push_back(v);
  }
  return u;
}

// Unit vector with entries drawn from (0.05, 1].
inline std::vector<double> random_positive_unit(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> dist(0.05, 1.0);
  std::vector<double> x(static_cast<std::size_t>(n));
  double norm = 0.0;
  for (auto& v : x) {
    v = dist(rng);
    norm += v * v;
  }
  norm = std::sqrt(norm);
  for (auto& v : x) v /= norm;
  return x;
}

}  // namespace seidel::testing
