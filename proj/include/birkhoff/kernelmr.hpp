#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace birkhoff {

// Kernel on [0,1]^2: a pointwise evaluator plus, when the kernel admits one,
// an exact mean over axis-aligned rectangles (x0, x1, y0, y1).  Averaging
// prefers the exact path and falls back to midpoint quadrature.
struct KernelFn {
  std::string name;
  std::function<double(double, double)> eval;
  std::function<double(double, double, double, double)> cell_average;
};

// W == 1, the density of the independent coupling.
KernelFn uniform_kernel();

// W(x, y) = 1 + eps * cos(2 pi x) cos(2 pi y); bistochastic for |eps| <= 1,
// with L2 norm squared 1 + eps^2 / 4.
KernelFn cosine_kernel(double eps);

// Random positive step kernel on a 2^level grid, balanced by iterative
// proportional fitting until the induced row/column integrals are within
// 1e-10 of 1.  Deterministic in (seed, level).
KernelFn step_kernel(std::uint64_t seed, int level = 8);

// "uniform" | "cosine:EPS" | "random:SEED"
KernelFn parse_kernel(const std::string& spec);

// Cell means of a kernel over the dyadic 2^m x 2^m partition of the square.
struct DyadicGrid {
  int m = 0;
  std::vector<double> w;  // row-major cell averages

  std::size_t dim() const { return std::size_t{1} << m; }
  double& at(std::size_t i, std::size_t j) { return w[i * dim() + j]; }
  double at(std::size_t i, std::size_t j) const { return w[i * dim() + j]; }
};

// m <= 10; subsamples is the midpoint-rule resolution per axis when the
// kernel has no exact rectangle mean.
DyadicGrid dyadic_average(const KernelFn& k, int m, int subsamples = 8);

// Exact 2x2 block means: the scale-(m-1) grid of the same kernel.
DyadicGrid coarsen(const DyadicGrid& g);

// A(i, j) = 2^{-m} W(i, j): bistochastic up to the kernel's drift.
std::vector<std::vector<double>> grid_to_bistoch(const DyadicGrid& g);

struct MrReport {
  double lhs = 0;    // squared Frobenius norm, resp. <A, B>
  double rhs = 0;    // max trace of A
  double drift = 0;  // worst |row/column sum - 1| among the matrices involved
  double tol = 0;
  bool pass = false;  // lhs <= rhs + tol
};

// ||A||_F^2 <= maxtrace(A) + tol for the induced matrix (2^m <= 1024).
MrReport check_finite_mr(const DyadicGrid& g, double tol = 1e-9);

// <A, B> <= maxtrace(A) + tol for two grids of equal scale.
MrReport check_coupling_mr(const DyadicGrid& gw, const DyadicGrid& gv,
                           double tol = 1e-9);

}  // namespace birkhoff
