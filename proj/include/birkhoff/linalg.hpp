#pragma once

#include <cstddef>
#include <optional>

#include "birkhoff/exact_matrix.hpp"

namespace birkhoff {

// Exact rank over the rationals via fraction-free (Bareiss) elimination with
// partial pivoting on the first nonzero entry. No floating point is involved;
// rows are cleared of denominators first, and a machine-word path is used when
// a Hadamard bound proves int64 cannot overflow.
std::size_t rank(const ExactMatrix& m);

// Solves A x = b exactly for square A. A singular system is an expected
// outcome for callers, so it is reported as nullopt rather than thrown.
std::optional<RatVec> solve_linear(const ExactMatrix& a, const RatVec& b);

}  // namespace birkhoff
