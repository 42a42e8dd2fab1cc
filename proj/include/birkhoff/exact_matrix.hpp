#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "birkhoff/perm.hpp"
#include "birkhoff/rational.hpp"

namespace birkhoff {

using RatVec = std::vector<Rational>;

// Dense rational matrix, row-major. Most uses are square but rank computations
// stack vectorized permutation matrices into k x n^2 shapes.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix constant(std::size_t n, const Rational& value);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    ExactMatrix operator*(const ExactMatrix& rhs) const;
    ExactMatrix operator+(const ExactMatrix& rhs) const;
    ExactMatrix scaled(const Rational& s) const;
    ExactMatrix transpose() const;

    bool operator==(const ExactMatrix& rhs) const;

    // Row-major lexicographic order; total on matrices of equal shape.
    static int compare(const ExactMatrix& a, const ExactMatrix& b);

    // Compact canonical serialization ("r c : e00 e01 ..."), usable as a set
    // or map key since rationals print in lowest terms.
    std::string key() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    RatVec a_;
};

// Permutation matrix with entry (i, p(i)) = 1.
ExactMatrix perm_to_matrix(const Perm& p);

// Rows are the vectorized (row-major) permutation matrices of `perms`,
// giving a k x n^2 stack.
ExactMatrix vectorized_perm_stack(const std::vector<Perm>& perms, std::size_t n);

}  // namespace birkhoff
