#include "seidel/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <thread>

#include "seidel/combinadic.hpp"
#include "seidel/errors.hpp"
#include "seidel/extremal.hpp"
#include "seidel/polynomial.hpp"
#include "seidel/spectra.hpp"

namespace seidel {

namespace {

void check_scan_size(int n, int m) {
  if (n > kEnumerationCap) {
    throw CapacityError("exhaustive enumeration limited to n <= " +
                            std::to_string(kEnumerationCap) + ", got " + std::to_string(n),
                        static_cast<std::size_t>(n), kEnumerationCap);
  }
  if (n < 1) throw InvalidOrder("graph order must be at least 1");
  if (m < 0 || static_cast<std::size_t>(m) > pair_count(n)) {
    throw DomainError("m=" + std::to_string(m) + " outside [0, " +
                      std::to_string(pair_count(n)) + "] for n=" + std::to_string(n));
  }
}

struct Candidate {
  std::uint64_t rank;
  double index;
};

struct RangeResult {
  double best = -std::numeric_limits<double>::infinity();
  std::vector<Candidate> near;
};

void prune(RangeResult& r) {
  const double cut = r.best - kExactRecheckWindow;
  std::erase_if(r.near, [cut](const Candidate& c) { return c.index < cut; });
}

RangeResult scan_range(int n, int m, std::uint64_t begin, std::uint64_t end) {
  RangeResult out;
  if (begin >= end) return out;
  const std::size_t universe = pair_count(n);
  std::vector<Edge> pair_table;
  pair_table.reserve(universe);
  for (std::size_t p = 0; p < universe; ++p) pair_table.push_back(pair_at(p, n));

  const SymMatrix all_positive = seidel_matrix(Graph(n));
  auto subset = unrank_combination(begin, universe, static_cast<std::size_t>(m));
  for (std::uint64_t rank = begin; rank < end; ++rank) {
    SymMatrix s = all_positive;
    for (const auto p : subset) s.set(pair_table[p].first, pair_table[p].second, -1.0);
    const double index = eigenvalues(s).front();
    if (index > out.best) {
      out.best = index;
      if (out.near.size() > 4096) prune(out);
    }
    if (index >= out.best - kExactRecheckWindow) out.near.push_back({rank, index});
    next_combination(subset, universe);
  }
  prune(out);
  return out;
}

RangeResult parallel_scan(int n, int m, std::uint64_t total, unsigned jobs) {
  jobs = std::max(1U, jobs);
  if (total < jobs) jobs = static_cast<unsigned>(std::max<std::uint64_t>(1, total));
  std::vector<RangeResult> parts(jobs);
  if (jobs == 1) {
    parts[0] = scan_range(n, m, 0, total);
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    {
      std::vector<std::jthread> workers;
      for (unsigned k = 0; k < jobs; ++k) {
        const std::uint64_t lo = total / jobs * k + std::min<std::uint64_t>(k, total % jobs);
        const std::uint64_t hi = lo + total / jobs + (k < total % jobs ? 1 : 0);
        workers.emplace_back([&, k, lo, hi] {
          try {
            parts[k] = scan_range(n, m, lo, hi);
          } catch (...) {
            errors[k] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  RangeResult merged;
  for (const auto& part : parts) merged.best = std::max(merged.best, part.best);
  for (auto& part : parts) {
    merged.near.insert(merged.near.end(), part.near.begin(), part.near.end());
  }
  prune(merged);
  std::sort(merged.near.begin(), merged.near.end(),
            [](const Candidate& a, const Candidate& b) { return a.rank < b.rank; });
  return merged;
}

}  // namespace

GraphStream::GraphStream(int n, int m) : GraphStream(n, m, 0, std::numeric_limits<std::uint64_t>::max()) {}

GraphStream::GraphStream(int n, int m, std::uint64_t rank_begin, std::uint64_t rank_end)
    : n_(n) {
  check_scan_size(n, m);
  total_ = binomial(pair_count(n), static_cast<std::uint64_t>(m));
  rank_ = std::min(rank_begin, total_);
  end_ = std::min(rank_end, total_);
  if (rank_ < end_) subset_ = unrank_combination(rank_, pair_count(n), static_cast<std::size_t>(m));
}

std::optional<Graph> GraphStream::next() {
  if (rank_ >= end_) return std::nullopt;
  auto g = Graph::from_pair_indices(n_, subset_);
  ++rank_;
  next_combination(subset_, pair_count(n_));
  return g;
}

GraphStream enumerate_graphs(int n, int m) { return GraphStream(n, m); }

VerificationReport find_maximizers(int n, int m, double tol, unsigned jobs) {
  const auto started = std::chrono::steady_clock::now();
  check_scan_size(n, m);
  const std::size_t universe = pair_count(n);
  const std::uint64_t total = binomial(universe, static_cast<std::uint64_t>(m));

  VerificationReport report;
  report.n = n;
  report.m = m;
  report.tol = tol;
  report.graphs_scanned = total;

  const auto scan = parallel_scan(n, m, total, jobs);
  report.candidates_rechecked = scan.near.size();

  // Exact re-ranking: group candidates by characteristic polynomial and
  // compare largest roots symbolically.
  std::vector<Graph> graphs;
  std::vector<IntPoly> polys;
  graphs.reserve(scan.near.size());
  std::map<IntPoly, std::size_t> distinct;
  for (const auto& c : scan.near) {
    graphs.push_back(Graph::from_pair_indices(
        n, unrank_combination(c.rank, universe, static_cast<std::size_t>(m))));
    polys.push_back(seidel_characteristic_polynomial(graphs.back()));
    distinct.emplace(polys.back(), distinct.size());
  }

  std::set<IntPoly> top;
  std::optional<RatPoly> top_poly;
  for (const auto& [poly, unused] : distinct) {
    const auto rational = to_rational(poly);
    if (!top_poly) {
      top_poly = rational;
      top.insert(poly);
      continue;
    }
    const auto order = compare_largest_roots(rational, *top_poly);
    if (order == std::strong_ordering::greater) {
      top.clear();
      top_poly = rational;
      top.insert(poly);
    } else if (order == std::strong_ordering::equal) {
      top.insert(poly);
    }
  }

  report.true_max = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < scan.near.size(); ++k) {
    const bool exact_max = top.contains(polys[k]);
    const bool float_max = scan.near[k].index >= scan.best - tol;
    if (exact_max != float_max) ++report.tolerance_disagreements;
    if (!exact_max) continue;
    report.true_max = std::max(report.true_max, scan.near[k].index);

    auto found = std::find_if(report.maximizer_classes.begin(), report.maximizer_classes.end(),
                              [&](const MaximizerClass& cls) {
                                return are_isomorphic(cls.representative, graphs[k]);
                              });
    if (found != report.maximizer_classes.end()) {
      ++found->labeled_count;
    } else {
      report.maximizer_classes.push_back({graphs[k], scan.near[k].rank, 1});
    }
  }

  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

VerificationReport verify_theorem(int n, int m, double tol, unsigned jobs) {
  const auto started = std::chrono::steady_clock::now();
  const auto theory = max_index(n, m);
  const auto variants = construct_hnm(n, m);
  auto report = find_maximizers(n, m, tol, jobs);

  report.theory_max = theory.rho;
  report.theory_variants = variants.size();
  report.value_matches = std::abs(report.true_max - theory.rho) <= tol;

  const bool every_class_is_variant =
      std::all_of(report.maximizer_classes.begin(), report.maximizer_classes.end(),
                  [&](const MaximizerClass& cls) {
                    return std::any_of(variants.begin(), variants.end(), [&](const Graph& v) {
                      return are_isomorphic(cls.representative, v);
                    });
                  });
  const bool every_variant_found =
      std::all_of(variants.begin(), variants.end(), [&](const Graph& v) {
        return std::any_of(report.maximizer_classes.begin(), report.maximizer_classes.end(),
                           [&](const MaximizerClass& cls) {
                             return are_isomorphic(cls.representative, v);
                           });
      });
  report.classes_match = every_class_is_variant && every_variant_found &&
                         report.maximizer_classes.size() == variants.size();
  report.theorem_holds = *report.value_matches && (n <= 3 || *report.classes_match);
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

Graph conjecture_graph(int n, int m) {
  const auto params = extremal_params(n, m);
  if (m < n - 1) return star_union(n, m);
  const int r = params.r;
  if (params.a == 0) return complete_bipartite(r, n);

  // Parts {0..r} and {r+1..n-1}; vertex r is the deficient one.
  std::vector<Edge> edges;
  for (Vertex u = 0; u < r; ++u) {
    for (Vertex w = r + 1; w < n; ++w) edges.emplace_back(u, w);
  }
  const int deficient_degree = m - r * (n - r - 1);
  for (int k = 0; k < deficient_degree; ++k) edges.emplace_back(r, r + 1 + k);
  return make_graph(n, edges);
}

}  // namespace seidel
