#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace birkhoff {

// Permutation of {0, ..., n-1} in one-line notation. Text I/O is 1-indexed.
//
// Composition follows the permutation-matrix convention: (a * b)(i) = b(a(i)),
// i.e. a acts first, so matrix_of(a * b) = matrix_of(a) * matrix_of(b).
class Perm {
public:
    Perm() = default;
    explicit Perm(std::size_t n);  // identity

    // Validates that `images` (0-indexed) is a bijection.
    static std::optional<Perm> from_images(std::vector<std::uint8_t> images);
    // One-line notation with 1-indexed entries, e.g. {2, 1, 3}.
    static std::optional<Perm> from_one_line(const std::vector<int>& entries);

    std::size_t size() const { return img_.size(); }
    std::uint8_t operator()(std::size_t i) const { return img_[i]; }
    const std::vector<std::uint8_t>& images() const { return img_; }

    Perm operator*(const Perm& rhs) const;
    Perm inverse() const;
    bool is_identity() const;

    // Number of points where this and `other` agree; equals the Frobenius
    // inner product of the two permutation matrices.
    int agreements(const Perm& other) const;

    std::string to_one_line() const;  // "2 1 3"

    // Lexicographic order on one-line notation; the identity comes first.
    auto operator<=>(const Perm& rhs) const = default;

private:
    std::vector<std::uint8_t> img_;
};

// All n! permutations in lexicographic order (identity first).
std::vector<Perm> all_perms(std::size_t n);

// Rank of `p` in lexicographic order (inverse of `nth_perm`).
std::uint64_t perm_rank(const Perm& p);
Perm nth_perm(std::size_t n, std::uint64_t rank);

std::uint64_t factorial(std::size_t n);

}  // namespace birkhoff
