#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "birkhoff/exact_matrix.hpp"

namespace birkhoff {

// All entries nonnegative, every row and column summing to exactly 1.
bool is_bistochastic(const ExactMatrix& m);

// Validated at construction; the operations below can then assume the
// invariant instead of re-checking it.
class BistochMatrix {
public:
    explicit BistochMatrix(ExactMatrix m);  // throws std::invalid_argument

    const ExactMatrix& matrix() const { return m_; }
    std::size_t size() const { return m_.rows(); }
    const Rational& at(std::size_t i, std::size_t j) const { return m_.at(i, j); }

    bool operator==(const BistochMatrix& rhs) const { return m_ == rhs.m_; }

private:
    ExactMatrix m_;
};

Rational frobenius_sq(const ExactMatrix& m);

enum class MaxtraceMethod { kAuto, kBrute, kAssignment };

struct MaxtraceWitness {
    Rational value;
    Perm witness;  // lexicographically smallest maximizer
};

// max over permutations of the diagonal sum picked by sigma. The brute path
// enumerates all n! permutations and is the default for n <= 8; the
// assignment path solves an exact LAP and then refines its maximizer to the
// lexicographically smallest one.
MaxtraceWitness maxtrace(const ExactMatrix& m, MaxtraceMethod method = MaxtraceMethod::kAuto);

struct ErdosCertificate {
    Rational delta;
    Rational maxtrace_value;
    Perm witness;
    Rational frobenius;
    bool erdos;  // delta == 0
};

// delta(A) = maxtrace(A) - ||A||_F^2, nonnegative on bistochastic matrices.
ErdosCertificate delta(const BistochMatrix& a);

// A ~ B iff B = P A Q for permutation matrices P, Q. The witness returns
// permutations (p, q) with B == perm_to_matrix(p) * A * perm_to_matrix(q).
std::optional<std::pair<Perm, Perm>> equivalence_witness(const BistochMatrix& a,
                                                         const BistochMatrix& b);
bool equivalent(const BistochMatrix& a, const BistochMatrix& b);

// Lexicographically smallest element (row-major reading) of the orbit
// { P A Q }. Enumerates all row orders, each closed by sorting columns, so
// cost grows super-exponentially with n; intended for n <= 5.
BistochMatrix canonical_form(const BistochMatrix& a);

// Merges representatives that are equivalent up to transposition. Input must
// be pairwise non-equivalent; output keeps the first representative of each
// coarser class, in input order.
std::vector<BistochMatrix> transpose_class_merge(const std::vector<BistochMatrix>& reps);

// The matrix with every entry 1/n (the barycenter of the polytope).
BistochMatrix flat_matrix(std::size_t n);

}  // namespace birkhoff
