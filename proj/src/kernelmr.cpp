#include "birkhoff/kernelmr.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <random>
#include <stdexcept>

#include "birkhoff/assignment.hpp"

namespace birkhoff {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Mean of cos(2 pi t) over [a, b].
double cos_mean(double a, double b) {
    return (std::sin(kTwoPi * b) - std::sin(kTwoPi * a)) / (kTwoPi * (b - a));
}

double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

KernelFn uniform_kernel() {
    KernelFn k;
    k.name = "uniform";
    k.eval = [](double, double) { return 1.0; };
    k.cell_average = [](double, double, double, double) { return 1.0; };
    return k;
}

KernelFn cosine_kernel(double eps) {
    if (!(std::abs(eps) <= 1.0)) {
        throw std::invalid_argument("cosine kernel needs |eps| <= 1 to stay nonnegative");
    }
    KernelFn k;
    k.name = "cosine";
    k.eval = [eps](double x, double y) {
        return 1.0 + eps * std::cos(kTwoPi * x) * std::cos(kTwoPi * y);
    };
    k.cell_average = [eps](double x0, double x1, double y0, double y1) {
        return 1.0 + eps * cos_mean(x0, x1) * cos_mean(y0, y1);
    };
    return k;
}

KernelFn step_kernel(std::uint64_t seed, int level) {
    if (level < 1 || level > 10) throw std::invalid_argument("step kernel level out of range");
    const std::size_t dim = std::size_t{1} << level;

    auto cells = std::make_shared<std::vector<double>>(dim * dim);
    std::mt19937_64 rng(seed);
    for (double& c : *cells) c = 0.25 + 1.5 * unit_uniform(rng);

    // Iterative proportional fitting: rescale rows then columns until every
    // induced marginal integral is within 1e-10 of 1.  Cells are bounded away
    // from zero, so the scheme converges; the cap only guards against bugs.
    const double target = static_cast<double>(dim);  // row of means summing to dim <=> integral 1
    for (int pass = 0;; ++pass) {
        if (pass > 10000) throw std::logic_error("step kernel balancing failed to converge");
        for (std::size_t i = 0; i < dim; ++i) {
            double s = 0;
            for (std::size_t j = 0; j < dim; ++j) s += (*cells)[i * dim + j];
            const double f = target / s;
            for (std::size_t j = 0; j < dim; ++j) (*cells)[i * dim + j] *= f;
        }
        double worst = 0;
        for (std::size_t j = 0; j < dim; ++j) {
            double s = 0;
            for (std::size_t i = 0; i < dim; ++i) s += (*cells)[i * dim + j];
            const double f = target / s;
            for (std::size_t i = 0; i < dim; ++i) (*cells)[i * dim + j] *= f;
            worst = std::max(worst, std::abs(s / target - 1.0));
        }
        if (worst <= 1e-10) break;  // row pass ran after the last column pass distortion
    }

    const double h = 1.0 / static_cast<double>(dim);
    KernelFn k;
    k.name = "random";
    k.eval = [cells, dim, h](double x, double y) {
        const auto idx = [&](double t) {
            auto i = static_cast<std::size_t>(std::max(0.0, t) / h);
            return std::min(i, dim - 1);
        };
        return (*cells)[idx(x) * dim + idx(y)];
    };
    k.cell_average = [cells, dim, h](double x0, double x1, double y0, double y1) {
        // Piecewise-constant kernel: mean over the rectangle is the
        // area-weighted mean of the overlapped cells.
        const auto lo = [&](double t) {
            return std::min(static_cast<std::size_t>(std::max(0.0, t) / h), dim - 1);
        };
        const std::size_t i0 = lo(x0), j0 = lo(y0);
        double total = 0;
        for (std::size_t i = i0; i < dim && static_cast<double>(i) * h < x1; ++i) {
            const double wx = std::min(x1, static_cast<double>(i + 1) * h) -
                              std::max(x0, static_cast<double>(i) * h);
            if (wx <= 0) continue;
            for (std::size_t j = j0; j < dim && static_cast<double>(j) * h < y1; ++j) {
                const double wy = std::min(y1, static_cast<double>(j + 1) * h) -
                                  std::max(y0, static_cast<double>(j) * h);
                if (wy <= 0) continue;
                total += (*cells)[i * dim + j] * wx * wy;
            }
        }
        return total / ((x1 - x0) * (y1 - y0));
    };
    return k;
}

KernelFn parse_kernel(const std::string& spec) {
    if (spec == "uniform") return uniform_kernel();
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "cosine") {
        char* end = nullptr;
        const double eps = std::strtod(arg.c_str(), &end);
        if (arg.empty() || end == nullptr || *end != '\0') {
            throw std::invalid_argument("cosine kernel needs a numeric amplitude, e.g. cosine:0.5");
        }
        return cosine_kernel(eps);
    }
    if (head == "random") {
        char* end = nullptr;
        const unsigned long long seed = std::strtoull(arg.c_str(), &end, 10);
        if (arg.empty() || end == nullptr || *end != '\0') {
            throw std::invalid_argument("random kernel needs a decimal seed, e.g. random:42");
        }
        return step_kernel(seed);
    }
    throw std::invalid_argument("unknown kernel '" + spec + "' (uniform | cosine:EPS | random:SEED)");
}

DyadicGrid dyadic_average(const KernelFn& k, int m, int subsamples) {
    if (m < 0 || m > 10) throw std::invalid_argument("dyadic scale out of range");
    if (subsamples < 1) throw std::invalid_argument("subsamples must be positive");
    DyadicGrid g;
    g.m = m;
    const std::size_t dim = g.dim();
    g.w.assign(dim * dim, 0.0);
    const double h = 1.0 / static_cast<double>(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const double x0 = static_cast<double>(i) * h, y0 = static_cast<double>(j) * h;
            if (k.cell_average) {
                g.at(i, j) = k.cell_average(x0, x0 + h, y0, y0 + h);
                continue;
            }
            double acc = 0;
            const double step = h / subsamples;
            for (int a = 0; a < subsamples; ++a) {
                for (int b = 0; b < subsamples; ++b) {
                    acc += k.eval(x0 + (a + 0.5) * step, y0 + (b + 0.5) * step);
                }
            }
            g.at(i, j) = acc / (static_cast<double>(subsamples) * subsamples);
        }
    }
    return g;
}

DyadicGrid coarsen(const DyadicGrid& g) {
    if (g.m < 1) throw std::invalid_argument("cannot coarsen the single-cell grid");
    DyadicGrid out;
    out.m = g.m - 1;
    const std::size_t dim = out.dim();
    out.w.assign(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            out.at(i, j) = 0.25 * (g.at(2 * i, 2 * j) + g.at(2 * i, 2 * j + 1) +
                                   g.at(2 * i + 1, 2 * j) + g.at(2 * i + 1, 2 * j + 1));
        }
    }
    return out;
}

std::vector<std::vector<double>> grid_to_bistoch(const DyadicGrid& g) {
    const std::size_t dim = g.dim();
    const double scale = 1.0 / static_cast<double>(dim);
    std::vector<std::vector<double>> a(dim, std::vector<double>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) a[i][j] = scale * g.at(i, j);
    }
    return a;
}

namespace {

double marginal_drift(const std::vector<std::vector<double>>& a) {
    const std::size_t n = a.size();
    double worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0, c = 0;
        for (std::size_t j = 0; j < n; ++j) {
            r += a[i][j];
            c += a[j][i];
        }
        worst = std::max({worst, std::abs(r - 1.0), std::abs(c - 1.0)});
    }
    return worst;
}

double float_maxtrace(const std::vector<std::vector<double>>& a) {
    std::vector<std::vector<double>> cost(a.size(), std::vector<double>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) cost[i][j] = -a[i][j];
    }
    return -lap_min(cost).value;
}

}  // namespace

MrReport check_finite_mr(const DyadicGrid& g, double tol) {
    if (g.dim() > 1024) throw std::invalid_argument("grid too large for the assignment step");
    const auto a = grid_to_bistoch(g);
    MrReport rep;
    rep.tol = tol;
    rep.drift = marginal_drift(a);
    for (const auto& row : a) {
        for (double v : row) rep.lhs += v * v;
    }
    rep.rhs = float_maxtrace(a);
    rep.pass = rep.lhs <= rep.rhs + tol;
    return rep;
}

MrReport check_coupling_mr(const DyadicGrid& gw, const DyadicGrid& gv, double tol) {
    if (gw.m != gv.m) throw std::invalid_argument("coupling check needs grids of equal scale");
    if (gw.dim() > 1024) throw std::invalid_argument("grid too large for the assignment step");
    const auto a = grid_to_bistoch(gw);
    const auto b = grid_to_bistoch(gv);
    MrReport rep;
    rep.tol = tol;
    rep.drift = std::max(marginal_drift(a), marginal_drift(b));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) rep.lhs += a[i][j] * b[i][j];
    }
    rep.rhs = float_maxtrace(a);
    rep.pass = rep.lhs <= rep.rhs + tol;
    return rep;
}

}  // namespace birkhoff
