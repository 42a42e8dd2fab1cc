#include "birkhoff/combinatorics.hpp"

#include <limits>
#include <stdexcept>

namespace birkhoff {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;  // exact: acc holds C(n-k+i, i) at each step
    if (acc > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("binomial: value exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<std::uint32_t> combination_unrank(std::size_t n, std::size_t k,
                                              std::uint64_t rank) {
  if (rank >= binomial(n, k))
    throw std::out_of_range("combination_unrank: rank out of range");
  std::vector<std::uint32_t> c(k);
  std::size_t lo = 0;
  for (std::size_t i = 0; i < k; ++i) {
    // pick the smallest value v >= lo whose block of C(n-1-v, k-1-i)
    // continuations covers the remaining rank
    std::size_t v = lo;
    for (;;) {
      const std::uint64_t block = binomial(n - 1 - v, k - 1 - i);
      if (rank < block) break;
      rank -= block;
      ++v;
    }
    c[i] = static_cast<std::uint32_t>(v);
    lo = v + 1;
  }
  return c;
}

bool combination_next(std::vector<std::uint32_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  if (k == 0) return false;
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (c[i] + (k - i) < n) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace birkhoff
