#include <doctest.h>

#include <cstdint>
#include <random>

#include "birkhoff/bistoch.hpp"
#include "birkhoff/infarray.hpp"
#include "util.hpp"

using namespace birkhoff;

TEST_CASE("row ends of the first six rows") {
    const ArrayPrefix a(6);
    const long expected[] = {2, 3, 8, 17, 30, 55};
    for (std::size_t k = 1; k <= 6; ++k) {
        CHECK(a.row_end(k) == Integer(expected[k - 1]));
        CHECK(a.run_count(k) == a.row_end(k) - Integer(static_cast<long>(k)) + 1);
        CHECK(a.run_count(k) >= 2);
    }
    CHECK_THROWS_AS(a.row_end(0), std::out_of_range);
    CHECK_THROWS_AS(a.row_end(7), std::out_of_range);
    CHECK_THROWS_AS(ArrayPrefix(0), std::invalid_argument);
}

TEST_CASE("every generated row sums to exactly one") {
    const ArrayPrefix a(64);
    for (std::size_t k = 1; k <= 64; ++k) CHECK(a.row_sum(k) == 1);
}

TEST_CASE("entries are symmetric and vanish beyond the run") {
    const ArrayPrefix a(32);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        const Integer i(1 + static_cast<long>(rng() % 32));
        Integer j(1 + static_cast<long>(rng() % 4096));
        if (trial % 5 == 0) j <<= 40;  // far beyond any generated run
        CHECK(a.entry(i, j) == a.entry(j, i));
        CHECK(a.entry(i, j) >= 0);
    }
    // spot values in row 3 (run 3..8 at 1/8, mirror of row 2 at column 2)
    CHECK(a.entry(3, 1) == 0);
    CHECK(a.entry(3, 2) == rational(1, 4));
    CHECK(a.entry(3, 3) == rational(1, 8));
    CHECK(a.entry(3, 8) == rational(1, 8));
    CHECK(a.entry(3, 9) == 0);
    CHECK_THROWS_AS(a.entry(Integer(33), Integer(40)), std::out_of_range);
    CHECK_THROWS_AS(a.entry(Integer(0), Integer(1)), std::out_of_range);
}

TEST_CASE("squared l2 mass grows but stays below 4/3") {
    Rational prev(0);
    for (std::size_t r = 1; r <= 20; ++r) {
        const Rational cur = ArrayPrefix(r).prefix_l2();
        CHECK(cur >= prev);
        prev = cur;
    }
    CHECK(ArrayPrefix(1).prefix_l2() == rational(1, 2));
    CHECK(ArrayPrefix(2).prefix_l2() == rational(7, 8));
    const Rational full = ArrayPrefix(64).prefix_l2();
    CHECK(full > rational(6, 5));
    CHECK(full < rational(1328, 1000));
    CHECK(full < rational(4, 3));
}

TEST_CASE("diagonal pairing traces match the closed form") {
    const ArrayPrefix a(64);
    for (std::size_t t = 1; t <= 32; ++t) {
        const Integer four_pow = Integer(1) << (2 * t);
        CHECK(a.pairing_trace(t) == rational(4 * (four_pow - 1), 3 * four_pow));
    }
    CHECK_THROWS_AS(a.pairing_trace(33), std::out_of_range);
}

TEST_CASE("pairing traces approach the l2 ceiling from below") {
    const ArrayPrefix a(64);
    const Rational l2 = a.prefix_l2();
    CHECK(l2 < rational(4, 3));
    CHECK(a.pairing_trace(32) < rational(4, 3));
    CHECK(a.pairing_trace(32) > l2);  // the pairing already beats the prefix mass
}

TEST_CASE("bistochastic extension embeds the block and balances exactly") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const ExactMatrix b = testutil::random_sub_bistoch(n, rng);
        const BistochMatrix ext = bistochastic_extension(b);  // ctor validates
        REQUIRE(ext.matrix().rows() == 2 * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                CHECK(ext.at(i, j) == b.at(i, j));
    }
}

TEST_CASE("bistochastic extension edge blocks") {
    // zero block: complement becomes the swap [[0, I], [I, 0]]
    const ExactMatrix zero(2, 2);
    const BistochMatrix ez = bistochastic_extension(zero);
    CHECK(ez.at(0, 2) == 1);
    CHECK(ez.at(2, 0) == 1);
    CHECK(ez.at(2, 2) == 0);

    // already-bistochastic block: surplus spreads to the flat matrix
    const BistochMatrix ei = bistochastic_extension(ExactMatrix::identity(3));
    CHECK(ei.at(0, 0) == 1);
    CHECK(ei.at(0, 3) == 0);
    CHECK(ei.at(3, 3) == rational(1, 3));
    CHECK(ei.at(5, 4) == rational(1, 3));

    ExactMatrix bad(1, 1);
    bad.at(0, 0) = rational(3, 2);
    CHECK_THROWS_AS(bistochastic_extension(bad), std::invalid_argument);
    bad.at(0, 0) = rational(-1, 2);
    CHECK_THROWS_AS(bistochastic_extension(bad), std::invalid_argument);
}

TEST_CASE("truncated pairing bound holds for every feasible depth") {
    const ArrayPrefix p(16), q(8);
    for (std::size_t k = 1; k <= 8; ++k) {
        const TruncCheck tc = truncated_mr_check(p, q, k);
        CHECK(tc.bound == 2);
        CHECK(tc.inner >= 0);
        CHECK(tc.inner <= tc.bound);
        CHECK(tc.pass);
    }
    // the comparison honours a custom bound
    CHECK_FALSE(truncated_mr_check(p, q, 1, Rational(0)).pass);
    CHECK_THROWS_AS(truncated_mr_check(p, q, 9), std::out_of_range);
    CHECK_THROWS_AS(truncated_mr_check(p, q, 0), std::invalid_argument);
}
