#pragma once

#include <cstddef>

#include "birkhoff/bistoch.hpp"
#include "birkhoff/exact_matrix.hpp"
#include "birkhoff/rational.hpp"

namespace birkhoff {

// Explicit symmetric bistochastic array over the positive integers,
// materialized R rows at a time.  Row k carries the value 2^{-k} on the
// contiguous run of columns k..m_k; below the diagonal it mirrors the
// earlier rows (A(k, j) = 2^{-j} wherever row j's run covers column k).
// Each m_k is chosen greedily so the row sums to exactly 1 -- the remaining
// mass is always a positive multiple of 2^{-k}, so the construction never
// gets stuck.  Row ends grow like 2^k (m_1..m_6 = 2, 3, 8, 17, 30, 55),
// hence arbitrary-precision column indices.
class ArrayPrefix {
 public:
  explicit ArrayPrefix(std::size_t rows);  // rows >= 1

  std::size_t rows() const { return rows_; }

  // last column of row k's run (1-indexed rows, k <= rows)
  const Integer& row_end(std::size_t k) const;
  // number of run cells in row k: m_k - k + 1
  Integer run_count(std::size_t k) const;

  // entry at 1-indexed (i, j); defined for min(i, j) <= rows
  Rational entry(const Integer& i, const Integer& j) const;

  // exact full sum of row k (k <= rows); equals 1 by construction
  Rational row_sum(std::size_t k) const;

  // sum of squares over all cells of the generated rows (each cell of rows
  // 1..R counted once); nondecreasing in R with limit = the array's squared
  // l2 norm
  Rational prefix_l2() const;

  // sum of A(2i-1, 2i) + A(2i, 2i-1) for i = 1..terms (needs 2*terms <=
  // rows); equals (4/3) * (1 - 4^{-terms}) exactly
  Rational pairing_trace(std::size_t terms) const;

 private:
  std::size_t rows_;
  std::vector<Integer> m_;  // m_[k-1] = m_k
};

// Embeds a nonnegative square matrix with all row and column sums <= 1 as
// the top-left block of an exactly bistochastic matrix of twice the size:
// diagonal slack blocks restore the sums, and the bottom-right block spreads
// the surplus proportionally (X(i, j) = colslack_i * rowslack_j-complement
// style outer product over the total mass, with 0/0 = 0).
BistochMatrix bistochastic_extension(const ExactMatrix& b);

struct TruncCheck {
  Rational inner;  // <2k-block of P, extension of Q's k-block>
  Rational bound;
  bool pass;  // inner <= bound
};

// Finite-truncation trace bound: pair the leading 2k x 2k block of P against
// the bistochastic extension of Q's leading k x k block and compare with
// `bound`.  For the example array any row or column holds each value 2^{-j}
// at most twice, so 2 bounds every such pairing.
TruncCheck truncated_mr_check(const ArrayPrefix& p, const ArrayPrefix& q,
                              std::size_t k, const Rational& bound);
TruncCheck truncated_mr_check(const ArrayPrefix& p, const ArrayPrefix& q,
                              std::size_t k);  // bound = 2

}  // namespace birkhoff
