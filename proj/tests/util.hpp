#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "birkhoff/bistoch.hpp"
#include "birkhoff/exact_matrix.hpp"
#include "birkhoff/perm.hpp"

namespace birkhoff::testutil {

inline Perm random_perm(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::uint8_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(i);
    for (std::size_t i = n - 1; i > 0; --i) {
        std::swap(img[i], img[rng() % (i + 1)]);
    }
    return *Perm::from_images(std::move(img));
}

// Distinct permutations, sorted; k must not exceed n!.
inline std::vector<Perm> random_subset(std::size_t n, std::size_t k, std::mt19937_64& rng) {
    std::vector<Perm> out;
    while (out.size() < k) {
        Perm p = random_perm(n, rng);
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Random convex combination of permutation matrices with small integer
// weights: exactly bistochastic with modest denominators.
inline BistochMatrix random_bistoch(std::size_t n, std::mt19937_64& rng) {
    const std::size_t terms = 2 + rng() % (n + 2);
    ExactMatrix acc(n, n);
    long total = 0;
    for (std::size_t t = 0; t < terms; ++t) {
        const long w = 1 + static_cast<long>(rng() % 9);
        const Perm p = random_perm(n, rng);
        for (std::size_t i = 0; i < n; ++i) acc.at(i, p(i)) += w;
        total += w;
    }
    return BistochMatrix(acc.scaled(rational(1, total)));
}

// Nonnegative with all row and column sums <= 1: a bistochastic matrix
// damped by row/column factors, with a few entries zeroed outright.
inline ExactMatrix random_sub_bistoch(std::size_t n, std::mt19937_64& rng) {
    ExactMatrix m = random_bistoch(n, rng).matrix();
    for (std::size_t i = 0; i < n; ++i) {
        const Rational row_f = rational(1 + static_cast<long>(rng() % 8), 8);
        const Rational col_f = rational(1 + static_cast<long>(rng() % 8), 8);
        for (std::size_t j = 0; j < n; ++j) {
            m.at(i, j) *= row_f;
            m.at(j, i) *= col_f;
        }
    }
    for (std::size_t z = 0; z < n / 2; ++z) m.at(rng() % n, rng() % n) = 0;
    return m;
}

}  // namespace birkhoff::testutil
