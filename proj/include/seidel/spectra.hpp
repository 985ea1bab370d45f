#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "seidel/graph.hpp"

namespace seidel {

/// Dense real symmetric matrix, row-major storage. set() writes both
/// triangles, so the symmetry invariant cannot be broken from outside.
class SymMatrix {
public:
  explicit SymMatrix(int dim);

  int dim() const noexcept { return dim_; }
  double operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                 static_cast<std::size_t>(j)];
  }
  void set(int i, int j, double value);

  std::span<const double> data() const noexcept { return data_; }
  double trace() const;
  double frobenius_norm() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
  int dim_;
  std::vector<double> data_;
};

/// Full eigendecomposition, eigenvalues descending. vectors[k] is the unit
/// eigenvector of values[k], sign-normalised so its largest-magnitude entry
/// (lowest index on ties) is positive.
struct Spectrum {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;

  double index() const { return values.front(); }
};

struct EigenCluster {
  double value;
  int multiplicity;
};

inline constexpr double kJacobiRelativeTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kClusterTolerance = 1e-7;
inline constexpr double kZeroComponentTolerance = 1e-12;

/// S(H) = J - I - 2A(H): 0 on the diagonal, -1 on edges, +1 on non-edges.
SymMatrix seidel_matrix(const Graph& g);

/// Cyclic Jacobi with threshold sweeps. Converged when the off-diagonal
/// Frobenius norm drops to 1e-12 * (||M||_F + 1); throws NonConvergence
/// after 100 sweeps.
Spectrum eigen_decompose(const SymMatrix& m);

/// Same iteration without eigenvector accumulation; descending order.
std::vector<double> eigenvalues(const SymMatrix& m);

/// Groups a descending eigenvalue list into runs whose neighbours differ by
/// less than tol.
std::vector<EigenCluster> cluster_eigenvalues(std::span<const double> descending,
                                              double tol = kClusterTolerance);

/// Largest eigenvalue of S(g).
double seidel_index(const Graph& g);

struct PrincipalVector {
  std::vector<double> vector;
  double index;
  double gap;   ///< index minus the second eigenvalue (infinity when n = 1)
  bool simple;  ///< gap >= kClusterTolerance
};

PrincipalVector principal_eigenvector(const Graph& g);

/// Seidel switching with respect to u: pairs with exactly one end in u are
/// complemented, everything else is kept.
Graph seidel_switch(const Graph& g, std::span<const Vertex> u);

/// x^T S(g) x evaluated directly from the edge set.
double quadratic_form(const Graph& g, std::span<const double> x);

/// Number of pairs {i,j} whose term s_ij x_i x_j is negative, counted as
/// |E(K_{P,Q}) xor E(g)| with P, Q the positive/negative supports of x.
/// Throws ZeroComponent if some |x_i| <= 1e-12.
std::size_t negative_term_count(const Graph& g, std::span<const double> x);

}  // namespace seidel
