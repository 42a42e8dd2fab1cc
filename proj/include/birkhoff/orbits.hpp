#pragma once

#include <cstdint>
#include <vector>

#include "birkhoff/perm.hpp"
#include "birkhoff/rational.hpp"

namespace birkhoff {

// Equivalence of k-subsets S, T of S_n: S ~ T iff T = a S b for some a, b.
// Both counters below count the orbits of that two-sided action.

// Minimal representative of the orbit of `subset`, encoded as the sorted
// lexicographic ranks of its elements.  Only orbit members containing the
// identity need scanning: e in aSb forces a = b^{-1} s^{-1} for some s in S,
// so the minimum runs over |S| * n! candidates.
std::vector<std::uint64_t> canonical_subset(const std::vector<Perm>& subset);

// Exhaustive sweep of all C(n!, k) subsets, counting distinct canonical
// keys.  Cost is C(n!, k) * k * n! key computations; n <= 4 enforced.
std::uint64_t count_orbits_canonical(std::size_t n, std::size_t k);

// Cauchy-Frobenius count: average over pairs (a, b) of the number of
// k-subsets fixed by S -> a S b, i.e. unions of cycles of s -> a s b summing
// to k.  The pair sum collapses to conjugacy-class pairs -- replacing (a, b)
// by conjugates only conjugates the induced bijection of S_n -- which keeps
// n = 8 tractable; n <= 8 enforced.
Integer count_orbits_burnside(std::size_t n, std::size_t k);

// Same sweep, all k = 0 .. n! at once (one pass over the class pairs).
std::vector<Integer> orbit_counts_burnside(std::size_t n);

// Partition function p(n) via the pentagonal-number recurrence.
Integer partition_count(std::size_t n);

}  // namespace birkhoff
