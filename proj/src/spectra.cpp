#include "seidel/spectra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "seidel/errors.hpp"

namespace seidel {

SymMatrix::SymMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw InvalidOrder("matrix dimension must be at least 1");
  data_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0.0);
}

void SymMatrix::set(int i, int j, double value) {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) {
    throw VertexOutOfRange("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                           ") outside dimension " + std::to_string(dim_));
  }
  const auto n = static_cast<std::size_t>(dim_);
  data_[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] = value;
  data_[static_cast<std::size_t>(j) * n + static_cast<std::size_t>(i)] = value;
}

double SymMatrix::trace() const {
  double sum = 0.0;
  for (int i = 0; i < dim_; ++i) sum += (*this)(i, i);
  return sum;
}

double SymMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const auto v : data_) sum += v * v;
  return std::sqrt(sum);
}

SymMatrix seidel_matrix(const Graph& g) {
  const int n = g.order();
  SymMatrix s(n);
  for (Vertex i = 0; i < n; ++i) {
    const auto row = g.rows()[static_cast<std::size_t>(i)];
    for (Vertex j = i + 1; j < n; ++j) s.set(i, j, (row >> j) & 1U ? -1.0 : 1.0);
  }
  return s;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) sum += a[i * n + j] * a[i * n + j];
  return std::sqrt(2.0 * sum);
}

// Cyclic Jacobi on a full symmetric n x n array; on return the diagonal holds
// the eigenvalues and, when requested, columns of `vecs` the eigenvectors.
void jacobi(std::vector<double>& a, std::size_t n, std::vector<double>* vecs) {
  if (vecs) {
    vecs->assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) (*vecs)[i * n + i] = 1.0;
  }
  double fro = 0.0;
  for (const auto v : a) fro += v * v;
  const double target = kJacobiRelativeTolerance * (std::sqrt(fro) + 1.0);

  for (int sweep = 0;; ++sweep) {
    const double off = off_diagonal_norm(a, n);
    if (off <= target) return;
    if (sweep == kJacobiMaxSweeps) {
      throw NonConvergence("Jacobi iteration did not converge in " +
                               std::to_string(kJacobiMaxSweeps) + " sweeps",
                           off);
    }
    // Early sweeps only rotate the large entries.
    const double threshold = sweep < 3 ? 0.2 * off / static_cast<double>(n * n) : 0.0;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0 || std::abs(apq) <= threshold) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          const double np = c * akp - s * akq;
          const double nq = s * akp + c * akq;
          a[k * n + p] = np;
          a[p * n + k] = np;
          a[k * n + q] = nq;
          a[q * n + k] = nq;
        }
        if (vecs) {
          auto& v = *vecs;
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v[k * n + p];
            const double vkq = v[k * n + q];
            v[k * n + p] = c * vkp - s * vkq;
            v[k * n + q] = s * vkp + c * vkq;
          }
        }
      }
    }
  }
}

void normalise_sign(std::vector<double>& v) {
  double largest = 0.0;
  for (const auto x : v) largest = std::max(largest, std::abs(x));
  for (const auto x : v) {
    if (std::abs(x) >= largest - 1e-12) {
      if (x < 0.0) {
        for (auto& y : v) y = -y;
      }
      return;
    }
  }
}

}  // namespace

Spectrum eigen_decompose(const SymMatrix& m) {
  const auto n = static_cast<std::size_t>(m.dim());
  std::vector<double> a(m.data().begin(), m.data().end());
  std::vector<double> vecs;
  jacobi(a, n, &vecs);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a[x * n + x] > a[y * n + y]; });

  Spectrum out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (const auto k : order) {
    out.values.push_back(a[k * n + k]);
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = vecs[i * n + k];
    normalise_sign(v);
    out.vectors.push_back(std::move(v));
  }
  return out;
}

std::vector<double> eigenvalues(const SymMatrix& m) {
  const auto n = static_cast<std::size_t>(m.dim());
  std::vector<double> a(m.data().begin(), m.data().end());
  jacobi(a, n, nullptr);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a[i * n + i];
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

std::vector<EigenCluster> cluster_eigenvalues(std::span<const double> descending, double tol) {
  std::vector<EigenCluster> clusters;
  double run_sum = 0.0;
  int run = 0;
  for (std::size_t i = 0; i < descending.size(); ++i) {
    if (run > 0 && descending[i - 1] - descending[i] >= tol) {
      clusters.push_back({run_sum / run, run});
      run_sum = 0.0;
      run = 0;
    }
    run_sum += descending[i];
    ++run;
  }
  if (run > 0) clusters.push_back({run_sum / run, run});
  return clusters;
}

double seidel_index(const Graph& g) { return eigenvalues(seidel_matrix(g)).front(); }

PrincipalVector principal_eigenvector(const Graph& g) {
  auto spectrum = eigen_decompose(seidel_matrix(g));
  PrincipalVector out;
  out.index = spectrum.values.front();
  out.gap = spectrum.values.size() > 1 ? spectrum.values[0] - spectrum.values[1]
                                       : std::numeric_limits<double>::infinity();
  out.simple = out.gap >= kClusterTolerance;
  out.vector = std::move(spectrum.vectors.front());
  return out;
}

Graph seidel_switch(const Graph& g, std::span<const Vertex> u) {
  const int n = g.order();
  std::uint64_t in_u = 0;
  for (const auto v : u) {
    if (v < 0 || v >= n) {
      throw VertexOutOfRange("switching vertex " + std::to_string(v) + " outside [0, " +
                             std::to_string(n - 1) + "]");
    }
    in_u |= std::uint64_t{1} << v;
  }
  const std::uint64_t all = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::uint64_t outside = all & ~in_u;
  std::vector<std::uint64_t> rows(g.rows().begin(), g.rows().end());
  for (Vertex v = 0; v < n; ++v) {
    rows[static_cast<std::size_t>(v)] ^= ((in_u >> v) & 1U) ? outside : in_u;
  }
  return Graph::from_rows(n, std::move(rows));
}

double quadratic_form(const Graph& g, std::span<const double> x) {
  const int n = g.order();
  if (x.size() != static_cast<std::size_t>(n)) {
    throw LengthMismatch("vector length " + std::to_string(x.size()) +
                         " does not match order " + std::to_string(n));
  }
  double sum = 0.0;
  for (Vertex i = 0; i < n; ++i) {
    const auto row = g.rows()[static_cast<std::size_t>(i)];
    double partial = 0.0;
    for (Vertex j = i + 1; j < n; ++j) {
      const double sign = (row >> j) & 1U ? -1.0 : 1.0;
      partial += sign * x[static_cast<std::size_t>(j)];
    }
    sum += x[static_cast<std::size_t>(i)] * partial;
  }
  return 2.0 * sum;
}

std::size_t negative_term_count(const Graph& g, std::span<const double> x) {
  const int n = g.order();
  if (x.size() != static_cast<std::size_t>(n)) {
    throw LengthMismatch("vector length " + std::to_string(x.size()) +
                         " does not match order " + std::to_string(n));
  }
  std::uint64_t negative = 0;
  for (Vertex i = 0; i < n; ++i) {
    const double xi = x[static_cast<std::size_t>(i)];
    if (!(std::abs(xi) > kZeroComponentTolerance)) {
      throw ZeroComponent("component " + std::to_string(i) + " is zero");
    }
    if (xi < 0.0) negative |= std::uint64_t{1} << i;
  }
  const std::uint64_t all = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::uint64_t positive = all & ~negative;
  std::size_t count = 0;
  for (Vertex i = 0; i < n; ++i) {
    const std::uint64_t bipartite_row = ((negative >> i) & 1U) ? positive : negative;
    const std::uint64_t above = i >= 63 ? 0 : all & ~((std::uint64_t{2} << i) - 1);
    count += static_cast<std::size_t>(
        std::popcount((bipartite_row ^ g.rows()[static_cast<std::size_t>(i)]) & above));
  }
  return count;
}

}  // namespace seidel
