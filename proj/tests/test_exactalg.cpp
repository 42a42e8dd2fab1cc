#include <doctest.h>

#include <random>

#include "birkhoff/assignment.hpp"
#include "birkhoff/combinatorics.hpp"
#include "birkhoff/exact_matrix.hpp"
#include "birkhoff/linalg.hpp"
#include "birkhoff/matrix_io.hpp"
#include "birkhoff/perm.hpp"
#include "birkhoff/rational.hpp"
#include "util.hpp"

using namespace birkhoff;

TEST_CASE("rationals normalize and print in lowest terms") {
    CHECK(rational(2, 4) == rational(1, 2));
    CHECK(rational(-2, -4) == rational(1, 2));
    CHECK(to_string(rational(6, 4)) == "3/2");
    CHECK(to_string(rational(8, 4)) == "2");
    CHECK(to_string(rational(0, 7)) == "0");
    CHECK(parse_rational("3/9").value() == rational(1, 3));
    CHECK(parse_rational("-5").value() == rational(-5));
    CHECK_FALSE(parse_rational("1/0").has_value());
    CHECK_FALSE(parse_rational("2x").has_value());
}

TEST_CASE("permutation composition matches matrix composition") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 2 + rng() % 5;
        const Perm a = testutil::random_perm(n, rng);
        const Perm b = testutil::random_perm(n, rng);
        CHECK(perm_to_matrix(a * b) == perm_to_matrix(a) * perm_to_matrix(b));
        CHECK((a * a.inverse()).is_identity());
        CHECK((a.inverse() * a).is_identity());
        CHECK((a * b).inverse() == b.inverse() * a.inverse());
        CHECK(a.agreements(a) == static_cast<int>(n));
        CHECK(a.agreements(b) == b.agreements(a));
    }
}

TEST_CASE("perm rank round-trips and orders lexicographically") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto all = all_perms(n);
        REQUIRE(all.size() == factorial(n));
        CHECK(all.front().is_identity());
        for (std::uint64_t r = 0; r < all.size(); ++r) {
            CHECK(perm_rank(all[r]) == r);
            CHECK(nth_perm(n, r) == all[r]);
            if (r > 0) CHECK(all[r - 1] < all[r]);
        }
    }
}

TEST_CASE("binomial and combination enumeration agree") {
    CHECK(binomial(23, 9) == 817190);
    CHECK(binomial(23, 5) == 33649);
    CHECK(binomial(0, 0) == 1);
    CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);

    // unrank agrees with sequential next()
    const std::size_t n = 7, k = 3;
    auto c = combination_unrank(n, k, 0);
    std::uint64_t rank = 0;
    do {
        CHECK(combination_unrank(n, k, rank) == c);
        ++rank;
    } while (combination_next(c, n));
    CHECK(rank == binomial(n, k));
}

TEST_CASE("vectorized permutation stacks have the expected rank") {
    // span of all permutation matrices has dimension (n-1)^2 + 1
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto all = all_perms(n);
        CHECK(rank(vectorized_perm_stack(all, n)) == (n - 1) * (n - 1) + 1);
    }
    // a single permutation is independent
    CHECK(rank(vectorized_perm_stack({Perm(3)}, 3)) == 1);
}

TEST_CASE("solve_linear returns exact solutions and flags singularity") {
    ExactMatrix a(2, 2);
    a.at(0, 0) = rational(2);
    a.at(0, 1) = rational(1);
    a.at(1, 0) = rational(1);
    a.at(1, 1) = rational(3);
    const RatVec b{rational(1), rational(1)};
    const auto x = solve_linear(a, b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == rational(2, 5));
    CHECK((*x)[1] == rational(1, 5));

    ExactMatrix s(2, 2);
    s.at(0, 0) = rational(1);
    s.at(0, 1) = rational(2);
    s.at(1, 0) = rational(2);
    s.at(1, 1) = rational(4);
    // inconsistent (b not in the column space) and consistent underdetermined
    CHECK_FALSE(solve_linear(s, b).has_value());
    CHECK_FALSE(solve_linear(s, RatVec{rational(1), rational(2)}).has_value());
}

TEST_CASE("exact assignment minimizes over random rational costs") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 2 + rng() % 4;  // brute force below is n! work
        std::vector<std::vector<Rational>> cost(n, std::vector<Rational>(n));
        for (auto& row : cost) {
            for (auto& c : row) c = rational(static_cast<long>(rng() % 41) - 20, 1 + rng() % 7);
        }
        const auto lap = lap_min(cost);
        Rational best;
        bool first = true;
        for (const auto& p : all_perms(n)) {
            Rational v;
            for (std::size_t i = 0; i < n; ++i) v += cost[i][p(i)];
            if (first || v < best) best = v, first = false;
        }
        CHECK(lap.value == best);
        // row_to_col is a permutation achieving the value
        Rational achieved;
        std::vector<bool> used(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            REQUIRE(!used[static_cast<std::size_t>(lap.row_to_col[i])]);
            used[static_cast<std::size_t>(lap.row_to_col[i])] = true;
            achieved += cost[i][static_cast<std::size_t>(lap.row_to_col[i])];
        }
        CHECK(achieved == best);
    }
}

TEST_CASE("matrix text round-trips byte for byte") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 25; ++t) {
        const auto m = testutil::random_bistoch(2 + rng() % 4, rng).matrix();
        const std::string text = write_matrix(m);
        CHECK(parse_matrix_text(text) == m);
        CHECK(write_matrix(parse_matrix_text(text)) == text);
    }
    CHECK_THROWS(parse_matrix_text("n 2\n1 0\n"));        // missing row
    CHECK_THROWS(parse_matrix_text("n 2\n1 0\n0 x\n"));   // bad entry
}
