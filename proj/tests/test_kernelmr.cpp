#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "birkhoff/kernelmr.hpp"

using namespace birkhoff;

namespace {

double grid_drift(const DyadicGrid& g) {
    const std::size_t d = g.dim();
    const double scale = 1.0 / static_cast<double>(d);
    double worst = 0;
    for (std::size_t i = 0; i < d; ++i) {
        double r = 0, c = 0;
        for (std::size_t j = 0; j < d; ++j) {
            r += g.at(i, j) * scale;
            c += g.at(j, i) * scale;
        }
        worst = std::max({worst, std::abs(r - 1.0), std::abs(c - 1.0)});
    }
    return worst;
}

double max_coarsen_gap(const DyadicGrid& fine) {
    const DyadicGrid c = coarsen(fine);
    double worst = 0;
    for (std::size_t i = 0; i < c.dim(); ++i)
        for (std::size_t j = 0; j < c.dim(); ++j) {
            const double direct = 0.25 * (fine.at(2 * i, 2 * j) + fine.at(2 * i, 2 * j + 1) +
                                          fine.at(2 * i + 1, 2 * j) + fine.at(2 * i + 1, 2 * j + 1));
            worst = std::max(worst, std::abs(c.at(i, j) - direct));
        }
    return worst;
}

}  // namespace

TEST_CASE("uniform kernel grids are all ones") {
    const DyadicGrid g = dyadic_average(uniform_kernel(), 5);
    CHECK(g.dim() == 32);
    for (double v : g.w) CHECK(v == 1.0);
    const MrReport r = check_finite_mr(g);
    CHECK(r.pass);
    CHECK(r.lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.rhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.drift == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("cosine kernel has exact rectangle means") {
    const KernelFn k = cosine_kernel(0.7);
    // compare the closed-form mean against a fine midpoint sum
    const double x0 = 0.125, x1 = 0.375, y0 = 0.5, y1 = 0.625;
    const int s = 2000;
    double acc = 0;
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
            acc += k.eval(x0 + (x1 - x0) * (a + 0.5) / s, y0 + (y1 - y0) * (b + 0.5) / s);
    acc /= static_cast<double>(s) * s;
    CHECK(k.cell_average(x0, x1, y0, y1) == doctest::Approx(acc).epsilon(1e-6));
    CHECK_THROWS_AS(cosine_kernel(1.5), std::invalid_argument);
    CHECK_THROWS_AS(cosine_kernel(-2.0), std::invalid_argument);
}

TEST_CASE("cosine kernel satisfies the trace bound with the expected mass") {
    for (double eps : {0.25, 0.5, 1.0}) {
        const DyadicGrid g = dyadic_average(cosine_kernel(eps), 6);
        CHECK(grid_drift(g) < 1e-12);  // cosine integrates to zero over full rows
        const MrReport r = check_finite_mr(g);
        CHECK(r.pass);
        // discretized mass approaches 1 + eps^2/4 from below
        CHECK(r.lhs < 1 + eps * eps / 4);
        CHECK(r.lhs > 1 + eps * eps / 4 - 2e-3);
        CHECK(r.rhs >= r.lhs - 1e-12);
    }
}

TEST_CASE("coarsening equals direct block means and tower steps stay exact") {
    for (const KernelFn& k : {cosine_kernel(0.5), step_kernel(99, 6)}) {
        const DyadicGrid fine = dyadic_average(k, 7);
        CHECK(max_coarsen_gap(fine) < 1e-12);
        // coarsen(avg(m)) == avg(m-1) whenever the cell means are exact
        const DyadicGrid direct = dyadic_average(k, 6);
        const DyadicGrid stepped = coarsen(fine);
        REQUIRE(stepped.dim() == direct.dim());
        double worst = 0;
        for (std::size_t i = 0; i < direct.w.size(); ++i)
            worst = std::max(worst, std::abs(stepped.w[i] - direct.w[i]));
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("random step kernels balance to tight marginals") {
    const KernelFn k = step_kernel(12345);
    const DyadicGrid g = dyadic_average(k, 8);
    CHECK(grid_drift(g) < 1e-9);
    const MrReport r = check_finite_mr(g);
    CHECK(r.pass);
    CHECK(r.lhs > 1.0 - 1e-9);  // flat coupling minimizes the mass
    CHECK(r.drift < 1e-9);

    // deterministic in the seed, pointwise
    const KernelFn k2 = step_kernel(12345);
    CHECK(k2.eval(0.3, 0.9) == k.eval(0.3, 0.9));
    const KernelFn other = step_kernel(12346);
    bool differs = false;
    for (double x : {0.1, 0.3, 0.55, 0.8})
        for (double y : {0.2, 0.45, 0.7, 0.95})
            differs = differs || other.eval(x, y) != k.eval(x, y);
    CHECK(differs);
    CHECK_THROWS_AS(step_kernel(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(step_kernel(1, 11), std::invalid_argument);
}

TEST_CASE("kernel spec parsing") {
    CHECK(parse_kernel("uniform").name == "uniform");
    const KernelFn c = parse_kernel("cosine:0.5");
    CHECK(c.eval(0.0, 0.0) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(parse_kernel("random:42").name == step_kernel(42).name);
    for (const char* bad : {"", "cosine", "cosine:", "cosine:abc", "cosine:0.5x",
                            "random:", "random:9q", "triangle", "uniform:1"})
        CHECK_THROWS_AS(parse_kernel(bad), std::invalid_argument);
}

TEST_CASE("coupling bound holds and the uniform coupling is exactly one") {
    const DyadicGrid a = dyadic_average(step_kernel(7), 6);
    const DyadicGrid b = dyadic_average(cosine_kernel(0.8), 6);
    const DyadicGrid u = dyadic_average(uniform_kernel(), 6);

    const MrReport ab = check_coupling_mr(a, b);
    CHECK(ab.pass);
    const MrReport self = check_coupling_mr(a, a);
    CHECK(self.pass);
    CHECK(self.lhs == doctest::Approx(check_finite_mr(a).lhs).epsilon(1e-12));

    // <A, 1> is the total mass of A, which its marginals pin to 1
    const MrReport au = check_coupling_mr(a, u);
    CHECK(au.lhs == doctest::Approx(1.0).epsilon(1e-9));
    const MrReport bu = check_coupling_mr(b, u);
    CHECK(bu.lhs == doctest::Approx(1.0).epsilon(1e-12));

    DyadicGrid small = dyadic_average(uniform_kernel(), 3);
    CHECK_THROWS_AS(check_coupling_mr(a, small), std::invalid_argument);
}
