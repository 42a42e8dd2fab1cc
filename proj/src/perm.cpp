#include "birkhoff/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace birkhoff {

Perm::Perm(std::size_t n) : img_(n) {
    std::iota(img_.begin(), img_.end(), std::uint8_t{0});
}

std::optional<Perm> Perm::from_images(std::vector<std::uint8_t> images) {
    const std::size_t n = images.size();
    std::vector<bool> seen(n, false);
    for (std::uint8_t v : images) {
        if (v >= n || seen[v]) return std::nullopt;
        seen[v] = true;
    }
    Perm p;
    p.img_ = std::move(images);
    return p;
}

std::optional<Perm> Perm::from_one_line(const std::vector<int>& entries) {
    std::vector<std::uint8_t> images;
    images.reserve(entries.size());
    for (int v : entries) {
        if (v < 1 || v > static_cast<int>(entries.size())) return std::nullopt;
        images.push_back(static_cast<std::uint8_t>(v - 1));
    }
    return from_images(std::move(images));
}

Perm Perm::operator*(const Perm& rhs) const {
    if (size() != rhs.size()) throw std::invalid_argument("perm size mismatch");
    Perm out;
    out.img_.resize(size());
    for (std::size_t i = 0; i < size(); ++i) out.img_[i] = rhs.img_[img_[i]];
    return out;
}

Perm Perm::inverse() const {
    Perm out;
    out.img_.resize(size());
    for (std::size_t i = 0; i < size(); ++i) out.img_[img_[i]] = static_cast<std::uint8_t>(i);
    return out;
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

int Perm::agreements(const Perm& other) const {
    if (size() != other.size()) throw std::invalid_argument("perm size mismatch");
    int count = 0;
    for (std::size_t i = 0; i < size(); ++i)
        if (img_[i] == other.img_[i]) ++count;
    return count;
}

std::string Perm::to_one_line() const {
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(int(img_[i]) + 1);
    }
    return out;
}

std::vector<Perm> all_perms(std::size_t n) {
    std::vector<std::uint8_t> images(n);
    std::iota(images.begin(), images.end(), std::uint8_t{0});
    std::vector<Perm> out;
    out.reserve(factorial(n));
    do {
        out.push_back(*Perm::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

std::uint64_t perm_rank(const Perm& p) {
    const std::size_t n = p.size();
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (p(j) < p(i)) ++smaller;
        rank += smaller * factorial(n - 1 - i);
    }
    return rank;
}

Perm nth_perm(std::size_t n, std::uint64_t rank) {
    std::vector<std::uint8_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::uint8_t{0});
    std::vector<std::uint8_t> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t f = factorial(n - 1 - i);
        const std::size_t idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        images.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return *Perm::from_images(std::move(images));
}

std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace birkhoff
