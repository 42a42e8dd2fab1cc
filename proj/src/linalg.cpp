#include "birkhoff/linalg.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace birkhoff {
namespace {

using IntRow = std::vector<Integer>;

// Multiplies each row by the lcm of its denominators. Row scaling by positive
// factors changes neither the rank nor (applied to [A | b]) the solution set.
std::vector<IntRow> rows_cleared(const ExactMatrix& m, const RatVec* b) {
    std::vector<IntRow> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer lcm = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        if (b) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), (*b)[i].get_den().get_mpz_t());
        IntRow& row = out[i];
        row.reserve(m.cols() + (b ? 1 : 0));
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& e = m.at(i, j);
            row.push_back(e.get_num() * (lcm / e.get_den()));
        }
        if (b) row.push_back((*b)[i].get_num() * (lcm / (*b)[i].get_den()));
    }
    return out;
}

// log2 of the Hadamard bound on the minors of an integer matrix (product of
// row norms). Any Bareiss intermediate is such a minor, so when this bound
// stays below 62 bits the whole elimination fits machine words.
double hadamard_log2(const std::vector<IntRow>& rows) {
    double total = 0.0;
    for (const IntRow& row : rows) {
        double norm_sq = 0.0;
        for (const Integer& e : row) {
            const double d = std::abs(e.get_d());
            norm_sq += d * d;
        }
        if (norm_sq > 0.0) total += 0.5 * std::log2(norm_sq);
        if (!std::isfinite(total)) return 1e9;
    }
    return total;
}

// Fraction-free elimination in place; returns the rank and leaves the matrix
// in echelon form whose pivot entries sit at (i, pivot_col[i]). Template so
// the int64 fast path and the bignum path share one implementation.
//
// Bareiss step: M(i,j) <- (M(r,c) * M(i,j) - M(i,c) * M(r,j)) / prev, with
// `prev` the previous pivot; every division is exact because each entry stays
// a minor of the original matrix.
template <typename T, typename Wide>
std::size_t bareiss(std::vector<std::vector<T>>& m, std::vector<std::size_t>* pivot_cols) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    T prev = T(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Wide v = Wide(m[r][c]) * Wide(m[i][j]) - Wide(m[i][c]) * Wide(m[r][j]);
                if constexpr (std::is_same_v<T, std::int64_t>) {
                    m[i][j] = static_cast<std::int64_t>(v / prev);
                } else {
                    mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                }
            }
            m[i][c] = T(0);
        }
        prev = m[r][c];
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

struct Echelon {
    std::vector<IntRow> rows;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

Echelon eliminate(std::vector<IntRow> rows) {
    Echelon e;
    if (hadamard_log2(rows) < 61.0) {
        std::vector<std::vector<std::int64_t>> small(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            small[i].reserve(rows[i].size());
            for (const Integer& v : rows[i]) small[i].push_back(v.get_si());
        }
        e.rank = bareiss<std::int64_t, __int128>(small, &e.pivot_cols);
        e.rows.resize(small.size());
        for (std::size_t i = 0; i < small.size(); ++i)
            e.rows[i] = IntRow(small[i].begin(), small[i].end());
    } else {
        e.rank = bareiss<Integer, Integer>(rows, &e.pivot_cols);
        e.rows = std::move(rows);
    }
    return e;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return eliminate(rows_cleared(m, nullptr)).rank;
}

std::optional<RatVec> solve_linear(const ExactMatrix& a, const RatVec& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("solve_linear requires a square matrix");
    if (b.size() != n) throw std::invalid_argument("right-hand side length mismatch");
    if (n == 0) return RatVec{};

    Echelon e = eliminate(rows_cleared(a, &b));
    // A pivot in the appended column means [A | b] has rank n while A does
    // not: the system is inconsistent, not solvable.
    if (e.rank < n || e.pivot_cols.back() >= n) return std::nullopt;

    // Pivots occupy columns 0..n-1 in order (full rank), so back-substitution
    // over rationals finishes the job exactly.
    RatVec x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rational acc = rational(e.rows[ii][n], 1);
        for (std::size_t j = ii + 1; j < n; ++j) acc -= rational(e.rows[ii][j], 1) * x[j];
        x[ii] = acc / rational(e.rows[ii][ii], 1);
    }
    return x;
}

}  // namespace birkhoff
