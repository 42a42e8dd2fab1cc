#include "birkhoff/erdosenum.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "birkhoff/combinatorics.hpp"
#include "birkhoff/linalg.hpp"

namespace birkhoff {

namespace {

void require_sorted_distinct(const std::vector<Perm>& perms) {
  if (perms.empty()) throw std::invalid_argument("subset must be nonempty");
  const std::size_t n = perms.front().size();
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (perms[i].size() != n)
      throw std::invalid_argument("subset mixes permutation sizes");
    if (i > 0 && !(perms[i - 1] < perms[i]))
      throw std::invalid_argument("subset must be strictly sorted");
  }
}

}  // namespace

ExactMatrix gram(const std::vector<Perm>& perms) {
  if (perms.empty()) throw std::invalid_argument("gram: empty subset");
  const std::size_t k = perms.size();
  ExactMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      const Rational v(static_cast<long>(perms[i].agreements(perms[j])));
      m.at(i, j) = v;
      m.at(j, i) = v;
    }
  return m;
}

SubsetRecord solve_subset(const std::vector<Perm>& perms) {
  require_sorted_distinct(perms);
  SubsetRecord rec;
  rec.perms = perms;
  const std::size_t n = perms.front().size();
  const std::size_t k = perms.size();

  rec.independent = rank(vectorized_perm_stack(perms, n)) == k;
  if (!rec.independent) return rec;

  const ExactMatrix m = gram(perms);
  RatVec ones(k, Rational(1));
  auto y = solve_linear(m, ones);
  if (!y)  // cannot happen for an independent subset: M = VV^T is invertible
    throw std::logic_error("gram system singular despite independent subset");
  rec.gram_solution = *y;

  rec.positive =
      std::all_of(y->begin(), y->end(), [](const Rational& v) { return v > 0; });
  if (!rec.positive) return rec;

  Rational total;
  for (const Rational& v : *y) total += v;
  ExactMatrix a(n, n);
  for (std::size_t t = 0; t < k; ++t) {
    const Rational x = (*y)[t] / total;
    for (std::size_t i = 0; i < n; ++i) a.at(i, perms[t](i)) += x;
  }
  rec.candidate.emplace(std::move(a));
  rec.erdos = delta(*rec.candidate).erdos;
  return rec;
}

SubsetRecord candidate_from_subset(const std::vector<Perm>& perms) {
  require_sorted_distinct(perms);
  if (!perms.front().is_identity())
    throw std::invalid_argument("subset must contain the identity");
  return solve_subset(perms);
}

namespace {

// Shared, read-only context for the subset sweep.
struct SweepCtx {
  std::size_t n = 0;
  std::vector<Perm> perms;        // all of S_n, sorted, identity first
  std::vector<std::int8_t> agree;  // n! x n! pairwise agreement counts

  std::int8_t agree_at(std::size_t i, std::size_t j) const {
    return agree[i * perms.size() + j];
  }
};

SweepCtx make_ctx(std::size_t n) {
  SweepCtx ctx;
  ctx.n = n;
  ctx.perms = all_perms(n);
  const std::size_t f = ctx.perms.size();
  ctx.agree.resize(f * f);
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = i; j < f; ++j) {
      const auto v =
          static_cast<std::int8_t>(ctx.perms[i].agreements(ctx.perms[j]));
      ctx.agree[i * f + j] = v;
      ctx.agree[j * f + i] = v;
    }
  return ctx;
}

constexpr std::size_t kMaxSubset = 10;  // (4-1)^2 + 1

// Fraction-free elimination of the augmented system [M | 1] in int64.  Every
// intermediate is a minor of the augmented matrix, and Hadamard bounds those
// by (sqrt(10*4^2 + 1))^10 < 2^37 for the n = 4 Gram systems handled here, so
// the arithmetic cannot overflow (products stay inside __int128).
// Returns 0 dependent / 1 independent, some y_i <= 0 / 2 strictly positive y.
int gram_solve_fast(const SweepCtx& ctx, const std::vector<std::uint32_t>& sel,
                    std::vector<Rational>& y) {
  const std::size_t k = sel.size();
  std::int64_t m[kMaxSubset][kMaxSubset + 1];
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      m[i][j] = ctx.agree_at(sel[i], sel[j]);
    m[i][k] = 1;
  }

  std::int64_t prev = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && m[p][c] == 0) ++p;
    if (p == k) return 0;  // singular Gram <=> dependent subset
    if (p != c)
      for (std::size_t j = 0; j <= k; ++j) std::swap(m[p][j], m[c][j]);
    for (std::size_t i = c + 1; i < k; ++i) {
      for (std::size_t j = c + 1; j <= k; ++j) {
        const __int128 t = static_cast<__int128>(m[c][c]) * m[i][j] -
                           static_cast<__int128>(m[i][c]) * m[c][j];
        m[i][j] = static_cast<std::int64_t>(t / prev);  // exact by Bareiss
      }
      m[i][c] = 0;
    }
    prev = m[c][c];
  }

  y.assign(k, Rational());
  for (std::size_t ii = k; ii-- > 0;) {
    Rational rhs(static_cast<long>(m[ii][k]));
    for (std::size_t j = ii + 1; j < k; ++j)
      rhs -= Rational(static_cast<long>(m[ii][j])) * y[j];
    y[ii] = rhs / Rational(static_cast<long>(m[ii][ii]));
    if (y[ii] <= 0) return 1;  // positivity already lost; y left partial
  }
  return 2;
}

struct SweepAcc {
  std::uint64_t total = 0;
  std::uint64_t independent = 0;
  std::uint64_t positive = 0;
  std::uint64_t erdos = 0;
  std::map<std::string, ExactMatrix> reps;  // canonical key -> canonical form
};

// Processes combination ranks [lo, hi) of (k-1)-subsets of the non-identity
// permutations; each is joined with the identity (index 0).
void sweep_range(const SweepCtx& ctx, std::size_t k, std::uint64_t lo,
                 std::uint64_t hi, SweepAcc& acc) {
  const std::size_t m = ctx.perms.size() - 1;
  std::vector<std::uint32_t> comb;
  std::vector<std::uint32_t> sel(k);
  std::vector<Rational> y;
  sel[0] = 0;
  for (std::uint64_t r = lo; r < hi; ++r) {
    if (r == lo)
      comb = combination_unrank(m, k - 1, r);
    else
      combination_next(comb, m);
    for (std::size_t i = 0; i + 1 < k; ++i) sel[i + 1] = comb[i] + 1;

    ++acc.total;
    const int verdict = gram_solve_fast(ctx, sel, y);
    if (verdict == 0) continue;
    ++acc.independent;
    if (verdict == 1) continue;
    ++acc.positive;

    Rational total;
    for (const Rational& v : y) total += v;
    ExactMatrix a(ctx.n, ctx.n);
    for (std::size_t t = 0; t < k; ++t) {
      const Rational x = y[t] / total;
      const Perm& p = ctx.perms[sel[t]];
      for (std::size_t i = 0; i < ctx.n; ++i) a.at(i, p(i)) += x;
    }
    BistochMatrix bm(std::move(a));
    if (!delta(bm).erdos) continue;
    ++acc.erdos;
    BistochMatrix canon = canonical_form(bm);
    std::string key = canon.matrix().key();
    acc.reps.emplace(std::move(key), canon.matrix());
  }
}

}  // namespace

EnumResult enumerate_erdos(std::size_t n, unsigned workers) {
  if (n < 3 || n > 4)
    throw std::invalid_argument(
        "enumerate_erdos: only n = 3 and n = 4 are supported; the number of "
        "subsets grows prohibitively for larger n");
  if (workers == 0) workers = 1;

  const SweepCtx ctx = make_ctx(n);
  const std::size_t d = (n - 1) * (n - 1) + 1;
  const std::size_t m = ctx.perms.size() - 1;

  EnumResult res;
  auto& st = res.stats;
  st.total.assign(d + 1, 0);
  st.independent.assign(d + 1, 0);
  st.positive.assign(d + 1, 0);
  st.erdos.assign(d + 1, 0);
  st.classes.assign(d + 1, 0);

  std::map<std::string, ExactMatrix> global;
  for (std::size_t k = 1; k <= d; ++k) {
    const std::uint64_t count = binomial(m, k - 1);
    const std::uint64_t nw = std::min<std::uint64_t>(workers, count);
    std::vector<SweepAcc> accs(nw);
    if (nw <= 1) {
      sweep_range(ctx, k, 0, count, accs[0]);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(nw);
      for (std::uint64_t w = 0; w < nw; ++w) {
        const std::uint64_t lo = count * w / nw;
        const std::uint64_t hi = count * (w + 1) / nw;
        pool.emplace_back(sweep_range, std::cref(ctx), k, lo, hi,
                          std::ref(accs[w]));
      }
      for (auto& t : pool) t.join();
    }

    std::map<std::string, ExactMatrix> level;
    for (auto& acc : accs) {
      st.total[k] += acc.total;
      st.independent[k] += acc.independent;
      st.positive[k] += acc.positive;
      st.erdos[k] += acc.erdos;
      level.merge(acc.reps);
    }
    st.classes[k] = level.size();
    global.merge(level);
  }

  res.classes.reserve(global.size());
  for (auto& [key, mat] : global) res.classes.emplace_back(BistochMatrix(mat));
  res.transpose_classes = transpose_class_merge(res.classes).size();
  return res;
}

std::string stats_tsv(const EnumStats& stats) {
  std::ostringstream out;
  out << "k\ttotal\tindependent\tpositive\terdos\tclasses\n";
  for (std::size_t k = 1; k <= stats.max_k(); ++k)
    out << k << '\t' << stats.total[k] << '\t' << stats.independent[k] << '\t'
        << stats.positive[k] << '\t' << stats.erdos[k] << '\t'
        << stats.classes[k] << '\n';
  return out.str();
}

}  // namespace birkhoff
