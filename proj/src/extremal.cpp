#include "seidel/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "seidel/errors.hpp"

namespace seidel {

namespace {

long long product(int j, int n) { return static_cast<long long>(j) * (n - j); }

// K_{d,n-d} with a star removed or added according to `placement`.
HnmVariant build_variant(int n, int d, int t, StarPlacement placement) {
  Vertex center = -1;
  std::vector<Vertex> leaves;
  switch (placement) {
    case StarPlacement::none:
      break;
    case StarPlacement::removed_center_in_small:
      center = 0;
      for (int k = 0; k < t; ++k) leaves.push_back(d + k);
      break;
    case StarPlacement::removed_center_in_large:
      center = d;
      for (int k = 0; k < t; ++k) leaves.push_back(k);
      break;
    case StarPlacement::added_in_small:
      center = 0;
      for (int k = 1; k <= t; ++k) leaves.push_back(k);
      break;
    case StarPlacement::added_in_large:
      center = d;
      for (int k = 1; k <= t; ++k) leaves.push_back(d + k);
      break;
  }
  const auto host = complete_bipartite(d, n);
  std::vector<std::uint64_t> rows(host.rows().begin(), host.rows().end());
  for (const auto leaf : leaves) {
    rows[static_cast<std::size_t>(center)] ^= std::uint64_t{1} << leaf;
    rows[static_cast<std::size_t>(leaf)] ^= std::uint64_t{1} << center;
  }
  return HnmVariant{Graph::from_rows(n, std::move(rows)), d, t, placement, center,
                    std::move(leaves)};
}

}  // namespace

const char* to_string(StarPlacement placement) {
  switch (placement) {
    case StarPlacement::none: return "none";
    case StarPlacement::removed_center_in_small: return "removed_center_in_small";
    case StarPlacement::removed_center_in_large: return "removed_center_in_large";
    case StarPlacement::added_in_small: return "added_in_small";
    case StarPlacement::added_in_large: return "added_in_large";
  }
  return "unknown";
}

ExtremalParams extremal_params(int n, int m) {
  if (n < 2 || n > kMaxOrder) {
    throw DomainError("n must lie in [2, " + std::to_string(kMaxOrder) + "], got " +
                      std::to_string(n));
  }
  const long long cap = static_cast<long long>(n) * n / 4;
  if (m < 0) throw DomainError("m must be non-negative");
  if (m > cap) {
    throw DomainError("m exceeds floor(n^2/4) = " + std::to_string(cap));
  }

  ExtremalParams p;
  p.n = n;
  p.m = m;
  const int half = n / 2;
  long long best = -1;
  for (int j = 0; j <= half; ++j) {
    const long long dist = std::llabs(m - product(j, n));
    if (best < 0 || dist < best) {
      best = dist;
      p.d = j;
      p.tie = false;
    } else if (dist == best) {
      p.tie = true;
    }
    if (product(j, n) <= m) p.r = j;
  }
  p.t = static_cast<int>(best);
  p.a = static_cast<int>(m - product(p.r, n));
  if (p.r < half) p.b = static_cast<int>(product(p.r + 1, n) - m);
  return p;
}

std::vector<HnmVariant> hnm_variants(int n, int m) {
  const auto params = extremal_params(n, m);
  std::vector<int> parts{params.d};
  if (params.tie) parts.push_back(params.d + 1);

  std::vector<HnmVariant> candidates;
  for (const int d : parts) {
    const long long host = product(d, n);
    const int t = static_cast<int>(std::llabs(m - host));
    if (t == 0) {
      candidates.push_back(build_variant(n, d, 0, StarPlacement::none));
    } else if (m < host) {
      if (d >= 1 && n - d >= t) {
        candidates.push_back(build_variant(n, d, t, StarPlacement::removed_center_in_small));
      }
      if (n - d >= 1 && d >= t) {
        candidates.push_back(build_variant(n, d, t, StarPlacement::removed_center_in_large));
      }
    } else {
      if (d >= t + 1) candidates.push_back(build_variant(n, d, t, StarPlacement::added_in_small));
      if (n - d >= t + 1) {
        candidates.push_back(build_variant(n, d, t, StarPlacement::added_in_large));
      }
    }
  }

  std::vector<HnmVariant> unique;
  for (auto& candidate : candidates) {
    const bool repeated = std::any_of(unique.begin(), unique.end(), [&](const HnmVariant& u) {
      return are_isomorphic(u.graph, candidate.graph, IsoLimits{kMaxOrder});
    });
    if (!repeated) unique.push_back(std::move(candidate));
  }
  return unique;
}

std::vector<Graph> construct_hnm(int n, int m) {
  std::vector<Graph> out;
  for (auto& v : hnm_variants(n, m)) out.push_back(std::move(v.graph));
  return out;
}

Matrix3 quotient_matrix(int n, int t) {
  if (t < 1 || t > n - 2) {
    throw DomainError("quotient matrix needs 1 <= t <= n-2, got n=" + std::to_string(n) +
                      " t=" + std::to_string(t));
  }
  const double nt = n - t;
  const double tt = t;
  return Matrix3{{{0.0, -tt, nt - 1.0}, {-1.0, tt - 1.0, nt - 1.0}, {1.0, tt, nt - 2.0}}};
}

std::array<long long, 4> char_cubic(int n, int t) {
  const long long nn = n;
  const long long tt = t;
  return {1, 3 - nn, 3 - 2 * nn, -4 * tt * tt + 4 * nn * tt - 4 * tt - nn + 1};
}

std::array<double, 3> real_cubic_roots(const std::array<long long, 4>& coeffs) {
  const double a = static_cast<double>(coeffs[1]);
  const double b = static_cast<double>(coeffs[2]);
  const double c = static_cast<double>(coeffs[3]);
  const double shift = a / 3.0;
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;

  std::array<double, 3> roots{};
  if (p >= 0.0) {
    // Only a triple root is real-rooted with p >= 0.
    roots.fill(std::cbrt(-q) - shift);
  } else {
    const double amplitude = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * amplitude), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) {
      roots[static_cast<std::size_t>(k)] =
          amplitude * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0) - shift;
    }
  }
  for (auto& x : roots) {
    for (int it = 0; it < 3; ++it) {
      const double fx = ((x + a) * x + b) * x + c;
      const double dfx = (3.0 * x + 2.0 * a) * x + b;
      if (std::abs(dfx) < 1e-9) break;
      const double next = x - fx / dfx;
      if (!std::isfinite(next)) break;
      x = next;
    }
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

double shifted_cubic(int n, int t, double y) {
  const double nn = n;
  const double tt = t;
  return 4.0 * tt * (nn - 1.0 - tt) - y * (nn - y) * (nn - y);
}

XiBounds xi_bounds(int n, int t) {
  const double numerator = 4.0 * t * (n - 1.0 - t);
  return {numerator / (static_cast<double>(n) * n),
          numerator / ((n - 1.0) * (n - 1.0))};
}

CubicSolution solve_xi(int n, int t) {
  if (n < 3) throw DomainError("solve_xi needs n >= 3, got " + std::to_string(n));
  if (t < 0 || 2 * t > n - 1) {
    throw DomainError("solve_xi needs 0 <= t <= (n-1)/2, got n=" + std::to_string(n) +
                      " t=" + std::to_string(t));
  }
  const auto bounds = xi_bounds(n, t);
  CubicSolution sol;
  sol.xi_lo = bounds.lo;
  sol.xi_hi = bounds.hi;
  if (t == 0) {
    sol.rho = n - 1.0;
    return sol;
  }

  // At t = (n-1)/2 the root is xi_hi = 1 exactly; for n = 3 it is a double
  // root with no sign change, so exact endpoint roots are taken directly.
  for (const double end : {bounds.lo, bounds.hi}) {
    if (shifted_cubic(n, t, end) == 0.0) {
      sol.xi = end;
      sol.rho = n - 1.0 - end;
      return sol;
    }
  }

  // Widen slightly so a root sitting on an endpoint stays bracketed.
  double lo = bounds.lo * (1.0 - 1e-15);
  double hi = bounds.hi * (1.0 + 1e-15);
  double g_lo = shifted_cubic(n, t, lo);
  const double g_hi = shifted_cubic(n, t, hi);
  const double scale = 1e-9 * (1.0 + 4.0 * t * (n - 1.0 - t));
  if ((g_lo < -scale && g_hi < -scale) || (g_lo > scale && g_hi > scale)) {
    throw ConsistencyError("g has no sign change on [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "] for n=" + std::to_string(n) +
                           " t=" + std::to_string(t));
  }

  // Bisect down to double resolution; the width ends far below
  // kBisectionTolerance, which keeps the 12th printed decimal of rho exact.
  for (int it = 0; it < kBisectionMaxIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double g_mid = shifted_cubic(n, t, mid);
    if (g_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((g_mid > 0.0) == (g_lo > 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  if (hi - lo > kBisectionTolerance) {
    throw ConsistencyError("bisection for xi did not reach tolerance");
  }
  sol.xi = std::clamp(0.5 * (lo + hi), bounds.lo, bounds.hi);
  sol.rho = n - 1.0 - sol.xi;
  return sol;
}

double star_index(int n, int t) {
  if (n < 1 || t < 0 || t > n - 1) {
    throw DomainError("star_index needs 0 <= t <= n-1, got n=" + std::to_string(n) +
                      " t=" + std::to_string(t));
  }
  if (n < 3) return n - 1.0;
  return solve_xi(n, std::min(t, n - 1 - t)).rho;
}

CubicSolution max_index(int n, int m) {
  const auto params = extremal_params(n, m);
  if (params.t == 0) return CubicSolution{0.0, 0.0, 0.0, n - 1.0};
  return solve_xi(n, params.t);
}

}  // namespace seidel
