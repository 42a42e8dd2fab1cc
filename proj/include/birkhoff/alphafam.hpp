#pragma once

#include <cstddef>
#include <vector>

#include "birkhoff/exact_matrix.hpp"
#include "birkhoff/highfloat.hpp"
#include "birkhoff/perm.hpp"

namespace birkhoff {

// Dense square matrix over HighFloat, used by the one-parameter families
// whose entries involve square roots.
struct FloatMatrix {
  std::size_t n = 0;
  std::vector<HighFloat> a;

  FloatMatrix() = default;
  explicit FloatMatrix(std::size_t dim) : n(dim), a(dim * dim) {}
  HighFloat& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const HighFloat& at(std::size_t i, std::size_t j) const {
    return a[i * n + j];
  }
};

FloatMatrix to_float(const ExactMatrix& m);

struct FloatTrace {
  HighFloat value;  // true maximum over all permutations
  Perm witness;     // lex-smallest permutation within tie_eps of the maximum
};

// Brute-force trace maximization with HighFloat accumulation, n <= 8.  The
// witness collapses near-ties (within tie_eps) toward the lexicographically
// smallest permutation, so an exactly-maximizing identity is always reported
// as the witness regardless of rounding noise in the competitors.
FloatTrace float_maxtrace(const FloatMatrix& m, const HighFloat& tie_eps);

HighFloat float_frobenius_sq(const FloatMatrix& m);

struct FloatDelta {
  HighFloat delta;
  FloatTrace trace;
  HighFloat frobenius_sq;
};

FloatDelta float_delta(const FloatMatrix& m, const HighFloat& tie_eps);
FloatDelta float_delta(const FloatMatrix& m);  // tie_eps = 1e-12

struct FloatInterval {
  HighFloat lo;
  HighFloat hi;
};

// --- 3x3 family ---------------------------------------------------------
// For 0 < alpha < 1/2, every x in the interval below extends to a symmetric
// bistochastic matrix with delta exactly alpha (up to rounding).  The
// interval is piecewise in alpha with branch point 2/9; it collapses to the
// single point 1/3 as alpha -> 0 and has nonempty interior inside (0, 1/2).
FloatInterval interval3(const HighFloat& alpha);

// The smaller root z of 10z^2 + (16x-14)z + (10x^2-16x+6+alpha) = 0; a
// negative discriminant (beyond rounding noise) means x is infeasible.
HighFloat z_of_x3(const HighFloat& alpha, const HighFloat& x);

// [[x, z, 1-x-z], [z, x, 1-x-z], [1-x-z, 1-x-z, 2x+2z-1]]
FloatMatrix alpha_erdos3(const HighFloat& alpha, const HighFloat& x);

// --- general-n family ----------------------------------------------------
// Same construction one dimension up: x on the diagonal and z off-diagonal
// in the leading (n-1)-block, last row/column filled to bistochasticity.
// Valid for n >= 3 and 0 < alpha < (n-1)/4; at n = 3 the three functions
// reduce exactly to the 3x3 ones.
FloatInterval interval_n(std::size_t n, const HighFloat& alpha);
HighFloat z_of_x_n(std::size_t n, const HighFloat& alpha, const HighFloat& x);
FloatMatrix alpha_erdos_n(std::size_t n, const HighFloat& alpha,
                          const HighFloat& x);

// --- segment construction -------------------------------------------------
// Embeds a 3x3 bistochastic base as base (+) I_{n-3} and walks the segment
// from the delta-maximizing midpoint matrix (I + J)/2 (delta = (n-1)/4 at
// t = 0) to the embedded base (delta = delta(base) at t = 1), bisecting for
// |delta - alpha| <= eps.  alpha must lie strictly between the endpoint
// delta values.
struct SegmentPoint {
  HighFloat t;
  FloatMatrix matrix;
  HighFloat delta;
  HighFloat delta_at0;  // float evaluation at t = 0, equals (n-1)/4
  HighFloat delta_at1;  // float evaluation at t = 1, equals delta(base)
};

SegmentPoint alpha_on_segment(std::size_t n, const HighFloat& alpha,
                              const ExactMatrix& base3, const HighFloat& eps);

}  // namespace birkhoff
