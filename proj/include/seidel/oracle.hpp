#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "seidel/graph.hpp"

namespace seidel {

inline constexpr int kEnumerationCap = 8;
inline constexpr double kDefaultMaximizerTolerance = 1e-7;
/// Graphs whose floating index is this close to the scan maximum are
/// re-ranked with exact characteristic polynomials.
inline constexpr double kExactRecheckWindow = 1e-4;

/// Every labeled graph with n vertices and m edges, as m-subsets of the
/// lexicographic pair order, in lexicographic (combinadic) subset order.
/// A stream may be restricted to a half-open rank range.
class GraphStream {
public:
  GraphStream(int n, int m);
  GraphStream(int n, int m, std::uint64_t rank_begin, std::uint64_t rank_end);

  /// Total number of subsets, C(n(n-1)/2, m), regardless of the range.
  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t rank() const noexcept { return rank_; }

  std::optional<Graph> next();

private:
  int n_;
  std::uint64_t total_;
  std::uint64_t rank_;
  std::uint64_t end_;
  std::vector<std::size_t> subset_;
};

GraphStream enumerate_graphs(int n, int m);

struct MaximizerClass {
  Graph representative;         ///< lowest-rank labeled maximizer of the class
  std::uint64_t rank;           ///< its combinadic rank
  std::uint64_t labeled_count;  ///< labeled maximizers in the class
};

struct VerificationReport {
  int n = 0;
  int m = 0;
  double tol = kDefaultMaximizerTolerance;
  double true_max = 0.0;
  std::vector<MaximizerClass> maximizer_classes;
  std::uint64_t graphs_scanned = 0;
  /// Graphs inside the exact re-check window.
  std::uint64_t candidates_rechecked = 0;
  /// Graphs where the plain tolerance cut and the exact ranking disagree.
  std::uint64_t tolerance_disagreements = 0;

  // Filled by verify_theorem only.
  std::optional<double> theory_max;
  std::optional<std::size_t> theory_variants;
  std::optional<bool> value_matches;
  std::optional<bool> classes_match;
  std::optional<bool> theorem_holds;

  std::chrono::duration<double> elapsed{};
};

/// Exhaustive scan for the maximal Seidel index at (n, m), n <= 8. The scan
/// is split into `jobs` contiguous rank ranges; the result does not depend
/// on `jobs`.
VerificationReport find_maximizers(int n, int m, double tol = kDefaultMaximizerTolerance,
                                   unsigned jobs = 1);

/// find_maximizers plus comparison with max_index and hnm_variants. For
/// n <= 3 the class comparison is reported but theorem_holds rests on the
/// value comparison alone.
VerificationReport verify_theorem(int n, int m, double tol = kDefaultMaximizerTolerance,
                                  unsigned jobs = 1);

/// The graph predicted by the earlier star / complete-bipartite conjecture:
/// S_{n,m} for m < n-1, K_{r,n-r} when m = r(n-r), and otherwise the
/// (r+1, n-r-1) bipartite graph on parts {0..r}, {r+1..n-1} where vertices
/// 0..r-1 are complete to the other part and vertex r is joined to its
/// first m - r(n-r-1) vertices.
Graph conjecture_graph(int n, int m);

}  // namespace seidel
