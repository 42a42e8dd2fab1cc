#include "birkhoff/randindep.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <thread>

#include "birkhoff/exact_matrix.hpp"
#include "birkhoff/linalg.hpp"

namespace birkhoff {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Unbiased uniform draw from [0, m) by rejecting the short residue class.
u64 bounded(std::mt19937_64& rng, u64 m) {
    const u64 reject = (u64{0} - m) % m;  // 2^64 mod m
    for (;;) {
        const u64 x = rng();
        if (x >= reject) return x % m;
    }
}

u64 splitmix64(u64 x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    for (b %= m; e != 0; e >>= 1) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
    }
    return r;
}

// Deterministic for all 64-bit inputs with this base set.
bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// One random 62-bit prime per process.  Any prime keeps the fast path sound
// (rank mod p never exceeds the rational rank), so results do not depend on
// the choice; randomizing it just breaks adversarial rank collisions.
u64 fast_path_prime() {
    static const u64 prime = [] {
        std::random_device rd;
        u64 state = (u64{rd()} << 32) ^ rd();
        for (;;) {
            state = splitmix64(state);
            const u64 cand = (state | (u64{1} << 61) | 1) & ((u64{1} << 62) - 1);
            if (is_prime(cand)) return cand;
        }
    }();
    return prime;
}

// Rank over F_p of the k x n^2 stack of vectorized permutation matrices.
std::size_t rank_mod_p(const std::vector<Perm>& perms, u64 p) {
    const std::size_t k = perms.size();
    if (k == 0) return 0;
    const std::size_t n = perms[0].size();
    std::vector<std::vector<u64>> rows(k, std::vector<u64>(n * n, 0));
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t i = 0; i < n; ++i) rows[r][i * n + perms[r](i)] = 1;
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n * n && rank < k; ++col) {
        std::size_t pivot = rank;
        while (pivot < k && rows[pivot][col] == 0) ++pivot;
        if (pivot == k) continue;
        std::swap(rows[rank], rows[pivot]);
        const u64 inv = powmod(rows[rank][col], p - 2, p);
        for (std::size_t r = rank + 1; r < k; ++r) {
            if (rows[r][col] == 0) continue;
            const u64 f = mulmod(rows[r][col], inv, p);
            for (std::size_t c = col; c < n * n; ++c) {
                rows[r][c] = (rows[r][c] + p - mulmod(f, rows[rank][c], p)) % p;
            }
        }
        ++rank;
    }
    return rank;
}

Perm random_perm(int n, std::mt19937_64& rng) {
    std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(bounded(rng, static_cast<u64>(i) + 1));
        std::swap(img[static_cast<std::size_t>(i)], img[j]);
    }
    return *Perm::from_images(img);
}

struct WorkerTally {
    u64 dependent = 0;
    u64 total = 0;
};

WorkerTally run_worker(int n, std::size_t k, u64 share, u64 seed) {
    std::mt19937_64 rng(seed);
    WorkerTally t;
    for (u64 it = 0; it < share; ++it) {
        const auto subset = sample_subset(n, k, rng);
        if (is_dependent(subset)) ++t.dependent;
        ++t.total;
    }
    return t;
}

}  // namespace

std::vector<Perm> sample_subset(int n, std::size_t k, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("sample_subset needs n >= 1");
    if (n <= 20 && k > factorial(static_cast<std::size_t>(n))) {
        throw std::invalid_argument("cannot draw more distinct permutations than n! allows");
    }
    std::vector<Perm> subset;
    std::vector<u64> ranks(k);
    for (;;) {
        subset.clear();
        for (std::size_t i = 0; i < k; ++i) subset.push_back(random_perm(n, rng));
        for (std::size_t i = 0; i < k; ++i) ranks[i] = perm_rank(subset[i]);
        std::sort(ranks.begin(), ranks.end());
        if (std::adjacent_find(ranks.begin(), ranks.end()) == ranks.end()) return subset;
    }
}

bool is_dependent_exact(const std::vector<Perm>& perms) {
    if (perms.empty()) return false;
    const std::size_t n = perms[0].size();
    return rank(vectorized_perm_stack(perms, n)) < perms.size();
}

bool is_dependent(const std::vector<Perm>& perms) {
    if (perms.empty()) return false;
    if (rank_mod_p(perms, fast_path_prime()) == perms.size()) return false;
    return is_dependent_exact(perms);
}

McResult estimate(const McConfig& cfg) {
    if (cfg.n < 2) throw std::invalid_argument("estimate needs n >= 2");
    if (cfg.iters == 0) throw std::invalid_argument("estimate needs at least one sample");
    if (cfg.workers < 1) throw std::invalid_argument("estimate needs a positive worker count");
    const std::size_t k = cfg.subset_size();

    const auto workers = static_cast<u64>(cfg.workers);
    std::vector<WorkerTally> tallies(workers);
    u64 state = cfg.seed;
    std::vector<u64> seeds(workers);
    for (u64 w = 0; w < workers; ++w) seeds[w] = state = splitmix64(state);

    if (workers == 1) {
        tallies[0] = run_worker(cfg.n, k, cfg.iters, seeds[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (u64 w = 0; w < workers; ++w) {
            const u64 share = cfg.iters / workers + (w < cfg.iters % workers ? 1 : 0);
            pool.emplace_back([&tallies, w, &seeds, &cfg, k, share] {
                tallies[w] = run_worker(cfg.n, k, share, seeds[w]);
            });
        }
        for (auto& th : pool) th.join();
    }

    McResult out;
    for (const auto& t : tallies) {
        out.dependent += t.dependent;
        out.independent += t.total - t.dependent;
    }
    const auto total = static_cast<double>(out.dependent + out.independent);
    const double phat = static_cast<double>(out.dependent) / total;
    out.estimate = phat;

    const double z = 1.959963984540054;  // 97.5% normal quantile
    const double z2 = z * z;
    const double denom = 1.0 + z2 / total;
    const double center = (phat + z2 / (2.0 * total)) / denom;
    const double half =
        z * std::sqrt(phat * (1.0 - phat) / total + z2 / (4.0 * total * total)) / denom;
    out.wilson_lo = std::max(0.0, center - half);
    out.wilson_hi = std::min(1.0, center + half);
    return out;
}

}  // namespace birkhoff
