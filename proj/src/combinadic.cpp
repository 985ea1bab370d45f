#include "seidel/combinadic.hpp"

#include <numeric>
#include <string>

#include "seidel/errors.hpp"

namespace seidel {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is integral; cancel gcd(result, i) first so
    // the remaining divisor divides (n - k + i).
    const std::uint64_t common = std::gcd(result, i);
    const std::uint64_t factor = (n - k + i) / (i / common);
    std::uint64_t next = 0;
    if (__builtin_mul_overflow(result / common, factor, &next)) {
      throw CapacityError("binomial C(" + std::to_string(n) + "," + std::to_string(k) +
                              ") overflows 64 bits",
                          static_cast<std::size_t>(n), 64);
    }
    result = next;
  }
  return result;
}

std::uint64_t rank_combination(std::span<const std::size_t> subset, std::size_t universe) {
  const std::size_t k = subset.size();
  std::uint64_t rank = 0;
  std::size_t next_free = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (subset[i] < next_free || subset[i] >= universe) {
      throw GraphError("combination is not a sorted subset of the universe");
    }
    for (std::size_t v = next_free; v < subset[i]; ++v) {
      rank += binomial(universe - 1 - v, k - 1 - i);
    }
    next_free = subset[i] + 1;
  }
  return rank;
}

std::vector<std::size_t> unrank_combination(std::uint64_t rank, std::size_t universe,
                                            std::size_t k) {
  if (rank >= binomial(universe, k)) {
    throw GraphError("rank " + std::to_string(rank) + " outside C(" + std::to_string(universe) +
                     "," + std::to_string(k) + ")");
  }
  std::vector<std::size_t> subset;
  subset.reserve(k);
  std::size_t v = 0;
  for (std::size_t i = 0; i < k; ++i) {
    while (true) {
      const auto block = binomial(universe - 1 - v, k - 1 - i);
      if (rank < block) break;
      rank -= block;
      ++v;
    }
    subset.push_back(v++);
  }
  return subset;
}

bool next_combination(std::vector<std::size_t>& subset, std::size_t universe) {
  const std::size_t k = subset.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (subset[i] < universe - k + i) {
      ++subset[i];
      for (std::size_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace seidel
