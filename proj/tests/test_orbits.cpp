#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "birkhoff/combinatorics.hpp"
#include "birkhoff/orbits.hpp"
#include "util.hpp"

using namespace birkhoff;

TEST_CASE("canonical subset key is invariant and minimal") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 80; ++t) {
        const std::size_t n = 3 + rng() % 2;
        const std::size_t k = 1 + rng() % 4;
        const auto subset = testutil::random_subset(n, k, rng);
        const auto key = canonical_subset(subset);
        REQUIRE(key.size() == k);
        CHECK(std::is_sorted(key.begin(), key.end()));

        // moving the subset around the two-sided action never changes the key
        const Perm a = testutil::random_perm(n, rng);
        const Perm b = testutil::random_perm(n, rng);
        std::vector<Perm> moved;
        for (const auto& s : subset) moved.push_back(a * s * b);
        std::sort(moved.begin(), moved.end());
        CHECK(canonical_subset(moved) == key);

        // the key is itself reachable: it names ranks of an orbit member
        std::vector<std::uint64_t> self;
        for (const auto& s : subset) self.push_back(perm_rank(s));
        std::sort(self.begin(), self.end());
        CHECK(key <= self);
    }
}

TEST_CASE("orbit counts match the published 3x3 row by both methods") {
    const std::vector<std::uint64_t> expected{1, 2, 2, 2, 1, 1};
    for (std::size_t k = 1; k <= 6; ++k) {
        CHECK(count_orbits_canonical(3, k) == expected[k - 1]);
        CHECK(count_orbits_burnside(3, k) == Integer(static_cast<long>(expected[k - 1])));
    }
}

TEST_CASE("canonical and Burnside agree at n = 4 on cheap sizes") {
    for (std::size_t k : {1, 2, 3, 23, 24}) {
        const Integer via_burnside = count_orbits_burnside(4, k);
        const std::uint64_t via_canon = count_orbits_canonical(4, k);
        CHECK(via_burnside == Integer(static_cast<long>(via_canon)));
    }
}

TEST_CASE("brute-force fixed-subset counts validate the Burnside kernel") {
    // for sampled pairs (a, b), count the k-subsets S with a S b = S directly
    // and compare against the cycle-structure count used inside Burnside
    std::mt19937_64 rng(67);
    const std::size_t n = 3;
    const auto group = all_perms(n);
    for (int t = 0; t < 12; ++t) {
        const Perm a = testutil::random_perm(n, rng);
        const Perm b = testutil::random_perm(n, rng);

        // cycle lengths of s -> a s b
        std::vector<std::size_t> lens;
        std::vector<bool> used(group.size(), false);
        for (std::size_t i = 0; i < group.size(); ++i) {
            if (used[i]) continue;
            std::size_t len = 0, cur = i;
            while (!used[cur]) {
                used[cur] = true;
                ++len;
                cur = perm_rank(a * group[cur] * b);
            }
            lens.push_back(len);
        }

        for (std::size_t k = 1; k <= 3; ++k) {
            // brute force over all C(6, k) subsets
            std::uint64_t brute = 0;
            auto comb = combination_unrank(group.size(), k, 0);
            do {
                std::vector<std::uint64_t> ranks, moved;
                for (auto idx : comb) ranks.push_back(idx);
                for (auto idx : comb) moved.push_back(perm_rank(a * group[idx] * b));
                std::sort(moved.begin(), moved.end());
                if (moved == ranks) ++brute;
            } while (combination_next(comb, group.size()));

            // knapsack over the cycle lengths: subsets fixed by the action
            // are exactly unions of full cycles
            std::vector<std::uint64_t> coeff(k + 1, 0);
            coeff[0] = 1;
            for (auto len : lens) {
                if (len > k) continue;
                for (std::size_t d = k; d >= len; --d) coeff[d] += coeff[d - len];
            }
            CHECK(coeff[k] == brute);
        }
    }
}

TEST_CASE("orbit row sums to the total orbit count over all subset sizes") {
    // summing f_{n,k} over k = 0..n! must equal the Cauchy-Frobenius count
    // of orbits of the power set: avg over (a, b) of 2^{#cycles of s -> a s b}
    const std::size_t n = 4;
    const auto group = all_perms(n);
    Integer direct = 0;
    for (const auto& a : group) {
        for (const auto& b : group) {
            std::vector<bool> used(group.size(), false);
            int cycles = 0;
            for (std::size_t i = 0; i < group.size(); ++i) {
                if (used[i]) continue;
                ++cycles;
                std::size_t cur = i;
                while (!used[cur]) {
                    used[cur] = true;
                    cur = perm_rank(a * group[cur] * b);
                }
            }
            Integer pow2 = 1;
            pow2 <<= cycles;
            direct += pow2;
        }
    }
    const Integer group_sq = Integer(static_cast<long>(group.size())) *
                             Integer(static_cast<long>(group.size()));
    CHECK(direct % group_sq == 0);
    direct /= group_sq;

    const auto row = orbit_counts_burnside(n);
    REQUIRE(row.size() == group.size() + 1);
    Integer total = 0;
    for (const auto& f : row) total += f;
    CHECK(total == direct);
}

TEST_CASE("orbit counts are symmetric in k vs n! - k") {
    const auto row4 = orbit_counts_burnside(4);
    for (std::size_t k = 0; k <= 24; ++k) CHECK(row4[k] == row4[24 - k]);
}

TEST_CASE("two-element orbits match partitions") {
    for (std::size_t n = 2; n <= 7; ++n) {
        CHECK(count_orbits_burnside(n, 2) == partition_count(n) - 1);
    }
}

TEST_CASE("partition counts follow the pentagonal recurrence") {
    const std::vector<long> small{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (std::size_t i = 0; i < small.size(); ++i) {
        CHECK(partition_count(i) == Integer(small[i]));
    }
    CHECK(partition_count(100) == Integer(190569292));
}

TEST_CASE("method domain guards") {
    CHECK_THROWS_AS(count_orbits_canonical(5, 2), std::invalid_argument);
    CHECK_THROWS_AS(count_orbits_burnside(9, 2), std::invalid_argument);
}
