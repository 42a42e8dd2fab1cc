#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "birkhoff/perm.hpp"

namespace birkhoff {

// Monte Carlo estimate of the probability that a uniformly random set of k
// distinct n x n permutation matrices is linearly dependent.
struct McConfig {
  int n = 0;
  std::size_t k = 0;  // 0 means the default (n-1)^2 + 1
  std::uint64_t iters = 0;
  std::uint64_t seed = 0;
  int workers = 1;

  std::size_t subset_size() const {
    return k != 0 ? k : static_cast<std::size_t>(n - 1) * (n - 1) + 1;
  }
};

struct McResult {
  std::uint64_t dependent = 0;
  std::uint64_t independent = 0;
  double estimate = 0;  // dependent / (dependent + independent)
  double wilson_lo = 0;
  double wilson_hi = 0;
};

// k i.i.d. uniform permutations; the whole draw is retried until all k are
// distinct, so rejected draws never count as samples.
std::vector<Perm> sample_subset(int n, std::size_t k, std::mt19937_64& rng);

// True iff the vectorized 0/1 matrices have rational rank < k.  Fast path:
// rank modulo a random 62-bit prime, which can only under-estimate the rank,
// so full rank mod p certifies independence; deficiency is confirmed by exact
// elimination before reporting dependence.
bool is_dependent(const std::vector<Perm>& perms);

// Exact-elimination-only verdict, for cross-checking the fast path.
bool is_dependent_exact(const std::vector<Perm>& perms);

// Runs cfg.iters accepted samples and returns counts, the point estimate, and
// a 95% Wilson score interval.  Deterministic in cfg (including workers: each
// worker owns a seed split off the master seed and a fixed share of iters).
McResult estimate(const McConfig& cfg);

}  // namespace birkhoff
