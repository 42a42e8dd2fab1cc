#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace birkhoff {

// C(n, k) as uint64; throws std::overflow_error if the exact value does not fit.
std::uint64_t binomial(std::size_t n, std::size_t k);

// k-subsets of {0, .., n-1} as strictly increasing index vectors, enumerated in
// lexicographic order.  unrank(rank) is the rank-th such subset, 0-based;
// next() advances in place and returns false past the last subset.
std::vector<std::uint32_t> combination_unrank(std::size_t n, std::size_t k,
                                              std::uint64_t rank);
bool combination_next(std::vector<std::uint32_t>& c, std::size_t n);

}  // namespace birkhoff
