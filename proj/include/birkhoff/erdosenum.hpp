#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "birkhoff/bistoch.hpp"
#include "birkhoff/exact_matrix.hpp"
#include "birkhoff/perm.hpp"

namespace birkhoff {

// Outcome of the Gram pipeline on one subset of permutations.  The stages are
// monotone: erdos => positive => independent; gram_solution is present exactly
// when the subset is independent, candidate exactly when the solution is
// strictly positive.
struct SubsetRecord {
  std::vector<Perm> perms;  // sorted, identity first when present
  bool independent = false;
  std::optional<RatVec> gram_solution;  // y with  gram(perms) y = 1
  bool positive = false;
  std::optional<BistochMatrix> candidate;  // sum x_i P_i with x = y / <1,y>
  bool erdos = false;
};

// k x k matrix of pairwise agreement counts M(i,j) = |{l : a_i(l) = a_j(l)}|,
// the Frobenius inner product of the permutation matrices.
ExactMatrix gram(const std::vector<Perm>& perms);

// Core pipeline on a duplicate-free subset (identity not required): rank of
// the vectorized permutation stack decides independence; if independent,
// solve My = 1; if y > 0 strictly, normalize and certify the candidate.
SubsetRecord solve_subset(const std::vector<Perm>& perms);

// Same pipeline, but enforces the enumeration contract: perms sorted,
// duplicate-free, and containing the identity.
SubsetRecord candidate_from_subset(const std::vector<Perm>& perms);

// Per-size counters in the order the pipeline filters subsets.
struct EnumStats {
  // index 0 unused; entry k describes subsets of size k
  std::vector<std::uint64_t> total;
  std::vector<std::uint64_t> independent;
  std::vector<std::uint64_t> positive;
  std::vector<std::uint64_t> erdos;
  std::vector<std::uint64_t> classes;  // distinct canonical forms at size k
  std::size_t max_k() const { return total.empty() ? 0 : total.size() - 1; }
};

struct EnumResult {
  std::vector<BistochMatrix> classes;  // canonical forms, sorted by key
  EnumStats stats;
  std::size_t transpose_classes = 0;
};

// Sweep every subset of permutation matrices containing the identity, sizes
// k = 1 .. (n-1)^2 + 1, and classify the Erdos matrices they generate up to
// two-sided permutation equivalence.  n is limited to 3 or 4: the subset
// count explodes combinatorially beyond that ((5!-1 choose 16) alone exceeds
// 10^19), so larger n is rejected.
EnumResult enumerate_erdos(std::size_t n, unsigned workers = 1);

// TSV rendering of the per-size stats: header plus one row per k.
std::string stats_tsv(const EnumStats& stats);

}  // namespace birkhoff
