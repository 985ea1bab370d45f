#pragma once

#include <array>
#include <optional>
#include <vector>

#include "seidel/graph.hpp"

namespace seidel {

/// Parameters of the extremal construction for order n and size m.
///
/// d(n-d), d <= floor(n/2), is the product closest to m and t = |m - d(n-d)|.
/// r is the largest j <= floor(n/2) with j(n-j) <= m, a = m - r(n-r) and
/// b = (r+1)(n-r-1) - m; b is absent when r = floor(n/2). When m is
/// equidistant from two products, `tie` is set and d is the smaller one.
struct ExtremalParams {
  int n = 0;
  int m = 0;
  int d = 0;
  int t = 0;
  int r = 0;
  int a = 0;
  std::optional<int> b;
  bool tie = false;
};

/// xi in [xi_lo, xi_hi] and the resulting index rho = n - 1 - xi.
struct CubicSolution {
  double xi = 0.0;
  double xi_lo = 0.0;
  double xi_hi = 0.0;
  double rho = 0.0;
};

struct XiBounds {
  double lo;
  double hi;
};

/// Where the K_{1,t} star sits relative to K_{d,n-d}.
enum class StarPlacement {
  none,                     ///< t = 0, the bipartite graph itself
  removed_center_in_small,  ///< star removed, center in {0..d-1}
  removed_center_in_large,  ///< star removed, center in {d..n-1}
  added_in_small,           ///< star added inside {0..d-1}
  added_in_large,           ///< star added inside {d..n-1}
};

const char* to_string(StarPlacement placement);

/// One labeled extremal graph. Switching `graph` with respect to the small
/// part {0..d-1} yields exactly the star with `star_center` and
/// `star_leaves`, i.e. S_{n,t} after moving the center to 0 and the leaves
/// to 1..t.
struct HnmVariant {
  Graph graph;
  int d;
  int t;
  StarPlacement placement;
  Vertex star_center;
  std::vector<Vertex> star_leaves;
};

inline constexpr double kBisectionTolerance = 1e-12;
inline constexpr int kBisectionMaxIterations = 200;

/// Throws DomainError unless n >= 2 and 0 <= m <= floor(n^2/4).
ExtremalParams extremal_params(int n, int m);

/// Every placement of the star (center in either part, star inside either
/// part large enough, both d on a tie), deduplicated up to isomorphism.
std::vector<HnmVariant> hnm_variants(int n, int m);

/// Graphs of hnm_variants(n, m).
std::vector<Graph> construct_hnm(int n, int m);

using Matrix3 = std::array<std::array<double, 3>, 3>;

/// Quotient of S(S_{n,t}) over the degree partition {center, leaves,
/// isolated}. Requires 1 <= t <= n-2.
Matrix3 quotient_matrix(int n, int t);

/// Characteristic polynomial of the quotient matrix, highest degree first:
/// (1, 3-n, 3-2n, -4t^2 + 4nt - 4t - n + 1).
std::array<long long, 4> char_cubic(int n, int t);

/// Real roots of a monic cubic with three real roots, descending.
std::array<double, 3> real_cubic_roots(const std::array<long long, 4>& coeffs);

/// g(y) = f(n-1-y) = 4t(n-1-t) - y(n-y)^2.
double shifted_cubic(int n, int t, double y);

/// 4t(n-1-t)/n^2 and 4t(n-1-t)/(n-1)^2.
XiBounds xi_bounds(int n, int t);

/// Smallest root of g by bisection on the xi_bounds bracket. Requires n >= 3
/// and 0 <= t <= (n-1)/2. Throws ConsistencyError if the bracket has no sign
/// change.
CubicSolution solve_xi(int n, int t);

/// Largest Seidel eigenvalue of S_{n,m} for m > (n-1)/2 as well; S_{n,t} and
/// S_{n,n-1-t} share it because g only depends on t(n-1-t).
double star_index(int n, int t);

/// Maximal index over graphs of order n and size m.
CubicSolution max_index(int n, int m);

}  // namespace seidel
