#include "birkhoff/orbits.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "birkhoff/combinatorics.hpp"

namespace birkhoff {

std::vector<std::uint64_t> canonical_subset(const std::vector<Perm>& subset) {
  if (subset.empty()) throw std::invalid_argument("canonical_subset: empty");
  const std::size_t n = subset.front().size();
  for (const Perm& p : subset)
    if (p.size() != n)
      throw std::invalid_argument("canonical_subset: mixed sizes");

  const std::vector<Perm> group = all_perms(n);
  std::vector<std::uint64_t> best;
  std::vector<std::uint64_t> key(subset.size());
  for (const Perm& s : subset) {
    const Perm s_inv = s.inverse();
    for (const Perm& nu : group) {
      const Perm pre = nu.inverse() * s_inv;  // sends s to the identity
      for (std::size_t t = 0; t < subset.size(); ++t)
        key[t] = perm_rank(pre * subset[t] * nu);
      std::sort(key.begin(), key.end());
      if (best.empty() || key < best) best = key;
    }
  }
  return best;
}

namespace {

// Multiplication/inverse tables over the lex order of S_n; n <= 4 keeps the
// ranks inside a byte.
struct SmallGroup {
  std::size_t size = 0;
  std::vector<std::uint8_t> mul;  // size * size
  std::vector<std::uint8_t> inv;

  std::uint8_t times(std::uint8_t a, std::uint8_t b) const {
    return mul[static_cast<std::size_t>(a) * size + b];
  }
};

SmallGroup small_group(std::size_t n) {
  const std::vector<Perm> group = all_perms(n);
  SmallGroup g;
  g.size = group.size();
  g.mul.resize(g.size * g.size);
  g.inv.resize(g.size);
  for (std::size_t a = 0; a < g.size; ++a) {
    g.inv[a] = static_cast<std::uint8_t>(perm_rank(group[a].inverse()));
    for (std::size_t b = 0; b < g.size; ++b)
      g.mul[a * g.size + b] =
          static_cast<std::uint8_t>(perm_rank(group[a] * group[b]));
  }
  return g;
}

}  // namespace

std::uint64_t count_orbits_canonical(std::size_t n, std::size_t k) {
  if (n == 0 || n > 4)
    throw std::invalid_argument(
        "count_orbits_canonical: the subset sweep costs C(n!, k) * k * n! key "
        "computations, workable only for n <= 4");
  const SmallGroup g = small_group(n);
  if (k == 0 || k > g.size)
    throw std::invalid_argument("count_orbits_canonical: need 1 <= k <= n!");

  std::unordered_set<std::string> keys;
  std::vector<std::uint32_t> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = static_cast<std::uint32_t>(i);
  std::string key(k, '\0');
  std::string best(k, '\0');
  do {
    best.assign(k, '\x7f');
    for (std::size_t si = 0; si < k; ++si) {
      const std::uint8_t s_inv = g.inv[comb[si]];
      for (std::size_t nu = 0; nu < g.size; ++nu) {
        const std::uint8_t pre =
            g.times(g.inv[static_cast<std::uint8_t>(nu)], s_inv);
        for (std::size_t t = 0; t < k; ++t) {
          // insertion sort keeps the key ordered as elements arrive
          const char v = static_cast<char>(
              g.times(g.times(pre, static_cast<std::uint8_t>(comb[t])),
                      static_cast<std::uint8_t>(nu)));
          std::size_t pos = t;
          while (pos > 0 && key[pos - 1] > v) {
            key[pos] = key[pos - 1];
            --pos;
          }
          key[pos] = v;
        }
        if (key < best) best = key;
      }
    }
    keys.insert(best);
  } while (combination_next(comb, g.size));
  return keys.size();
}

namespace {

std::uint64_t lehmer_rank(const std::uint8_t* p, std::size_t n) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller += p[j] < p[i];
    r = r * (n - i) + smaller;
  }
  return r;
}

struct ConjClass {
  std::uint32_t rep;    // lex rank of a representative
  std::uint64_t size;   // class cardinality
};

// One pass over S_n in lex order: flat one-line images plus the conjugacy
// classes keyed by sorted cycle-length signature.
void build_group(std::size_t n, std::vector<std::uint8_t>& img,
                 std::vector<ConjClass>& classes) {
  std::vector<std::uint8_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(i);
  std::map<std::string, std::pair<std::uint32_t, std::uint64_t>> by_type;
  std::uint32_t rank = 0;
  std::vector<char> seen(n);
  do {
    img.insert(img.end(), p.begin(), p.end());
    std::fill(seen.begin(), seen.end(), 0);
    std::string type;
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = p[j]) {
        seen[j] = 1;
        ++len;
      }
      type.push_back(static_cast<char>(len));
    }
    std::sort(type.begin(), type.end());
    auto [it, fresh] = by_type.try_emplace(type, rank, 0);
    ++it->second.second;
    ++rank;
  } while (std::next_permutation(p.begin(), p.end()));
  classes.reserve(by_type.size());
  for (const auto& [type, info] : by_type)
    classes.push_back({info.first, info.second});
}

// Row f_{n, 0..kmax} by averaging fixed-subset counts over the two-sided
// action.  Fixed k-subsets of S -> a S b are unions of cycles of s -> a s b,
// tallied by a knapsack over the cycle lengths, truncated at kmax.
std::vector<Integer> burnside_row(std::size_t n, std::size_t kmax) {
  std::vector<std::uint8_t> img;
  std::vector<ConjClass> classes;
  build_group(n, img, classes);
  const std::size_t f = img.size() / n;

  std::vector<Integer> total(kmax + 1, 0);
  std::vector<Integer> coeff(kmax + 1);
  std::vector<std::uint32_t> stack;
  std::vector<char> seen(f);
  std::vector<std::uint8_t> c(n);
  for (const ConjClass& ca : classes) {
    const std::uint8_t* a = &img[static_cast<std::size_t>(ca.rep) * n];
    for (const ConjClass& cb : classes) {
      const std::uint8_t* b = &img[static_cast<std::size_t>(cb.rep) * n];
      const Integer weight = Integer(ca.size) * Integer(cb.size);

      std::fill(coeff.begin(), coeff.end(), 0);
      coeff[0] = 1;
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t r = 0; r < f; ++r) {
        if (seen[r]) continue;
        // walk the cycle of rank r under s -> a s b
        std::size_t len = 0;
        std::size_t cur = r;
        do {
          seen[cur] = 1;
          ++len;
          const std::uint8_t* s = &img[cur * n];
          for (std::size_t i = 0; i < n; ++i) c[i] = b[s[a[i]]];
          cur = lehmer_rank(c.data(), n);
        } while (cur != r);
        if (len > kmax) continue;  // cannot fit in a k-subset, k <= kmax
        for (std::size_t d = kmax; d >= len; --d) coeff[d] += coeff[d - len];
      }
      for (std::size_t k = 0; k <= kmax; ++k)
        if (coeff[k] != 0) total[k] += weight * coeff[k];
    }
  }

  const Integer order = Integer(f) * Integer(f);
  for (std::size_t k = 0; k <= kmax; ++k) {
    if (!mpz_divisible_p(total[k].get_mpz_t(), order.get_mpz_t()))
      throw std::logic_error("burnside sum not divisible by the group order");
    mpz_divexact(total[k].get_mpz_t(), total[k].get_mpz_t(),
                 order.get_mpz_t());
  }
  return total;
}

}  // namespace

Integer count_orbits_burnside(std::size_t n, std::size_t k) {
  if (n == 0 || n > 8)
    throw std::invalid_argument(
        "count_orbits_burnside: the class-pair sweep walks all n! elements "
        "per pair, workable only for n <= 8");
  const std::size_t f = static_cast<std::size_t>(factorial(n));
  if (k == 0 || k > f)
    throw std::invalid_argument("count_orbits_burnside: need 1 <= k <= n!");
  return burnside_row(n, k)[k];
}

std::vector<Integer> orbit_counts_burnside(std::size_t n) {
  if (n == 0 || n > 6)
    throw std::invalid_argument(
        "orbit_counts_burnside: full rows need the untruncated knapsack, "
        "workable only for n <= 6");
  return burnside_row(n, static_cast<std::size_t>(factorial(n)));
}

Integer partition_count(std::size_t n) {
  std::vector<Integer> p(n + 1);
  p[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Integer acc = 0;
    for (std::size_t j = 1;; ++j) {
      const std::size_t g1 = j * (3 * j - 1) / 2;
      const std::size_t g2 = j * (3 * j + 1) / 2;
      if (g1 > m) break;
      const bool plus = j % 2 == 1;
      if (plus)
        acc += p[m - g1];
      else
        acc -= p[m - g1];
      if (g2 <= m) {
        if (plus)
          acc += p[m - g2];
        else
          acc -= p[m - g2];
      }
    }
    p[m] = acc;
  }
  return p[n];
}

}  // namespace birkhoff
