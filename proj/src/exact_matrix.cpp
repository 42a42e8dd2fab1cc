#include "birkhoff/exact_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace birkhoff {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::constant(std::size_t n, const Rational& value) {
    ExactMatrix m(n, n);
    for (auto& e : m.a_) e = value;
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
    ExactMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += aik * rhs.at(k, j);
        }
    return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
    ExactMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
    return out;
}

ExactMatrix ExactMatrix::scaled(const Rational& s) const {
    ExactMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * s;
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
}

int ExactMatrix::compare(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("comparing matrices of different shape");
    for (std::size_t i = 0; i < a.a_.size(); ++i) {
        const int c = mpq_cmp(a.a_[i].get_mpq_t(), b.a_[i].get_mpq_t());
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

std::string ExactMatrix::key() const {
    std::ostringstream out;
    out << rows_ << ' ' << cols_ << ':';
    for (const auto& e : a_) out << ' ' << e;
    return out.str();
}

ExactMatrix perm_to_matrix(const Perm& p) {
    ExactMatrix m(p.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i) m.at(i, p(i)) = 1;
    return m;
}

ExactMatrix vectorized_perm_stack(const std::vector<Perm>& perms, std::size_t n) {
    ExactMatrix m(perms.size(), n * n);
    for (std::size_t r = 0; r < perms.size(); ++r) {
        if (perms[r].size() != n) throw std::invalid_argument("permutation degree mismatch");
        for (std::size_t i = 0; i < n; ++i) m.at(r, i * n + perms[r](i)) = 1;
    }
    return m;
}

}  // namespace birkhoff
