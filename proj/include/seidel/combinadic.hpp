#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace seidel {

/// C(n, k); throws CapacityError when the value does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Position of a sorted k-subset of {0..universe-1} in lexicographic order.
std::uint64_t rank_combination(std::span<const std::size_t> subset, std::size_t universe);

/// The k-subset with the given lexicographic rank.
std::vector<std::size_t> unrank_combination(std::uint64_t rank, std::size_t universe,
                                            std::size_t k);

/// Advances to the lexicographic successor; false once past the last subset.
bool next_combination(std::vector<std::size_t>& subset, std::size_t universe);

}  // namespace seidel
