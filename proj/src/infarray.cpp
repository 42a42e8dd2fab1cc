#include "birkhoff/infarray.hpp"

#include <stdexcept>

namespace birkhoff {

namespace {

Rational inv_pow2(std::size_t k) {
  Rational r(1);
  r /= Rational(Integer(1) << k);
  return r;  // already canonical: numerator 1
}

}  // namespace

ArrayPrefix::ArrayPrefix(std::size_t rows) : rows_(rows) {
  if (rows == 0) throw std::invalid_argument("ArrayPrefix: need rows >= 1");
  m_.reserve(rows);
  for (std::size_t k = 1; k <= rows; ++k) {
    Rational remaining(1);
    for (std::size_t j = 1; j < k; ++j)
      if (mpz_cmp_ui(m_[j - 1].get_mpz_t(), k) >= 0)  // row j's run covers k
        remaining -= inv_pow2(j);
    Rational count = remaining * Rational(Integer(1) << k);
    if (count.get_den() != 1 || count <= 0)
      throw std::logic_error("ArrayPrefix: row mass not a 2^{-k} multiple");
    m_.push_back(count.get_num() + Integer(k) - 1);  // run spans k..m_k
  }
}

const Integer& ArrayPrefix::row_end(std::size_t k) const {
  if (k == 0 || k > rows_) throw std::out_of_range("row_end: row not generated");
  return m_[k - 1];
}

Integer ArrayPrefix::run_count(std::size_t k) const {
  return row_end(k) - Integer(k) + 1;
}

Rational ArrayPrefix::entry(const Integer& i, const Integer& j) const {
  if (i < 1 || j < 1) throw std::out_of_range("entry: indices are 1-based");
  const Integer& s = i <= j ? i : j;
  const Integer& t = i <= j ? j : i;
  if (!s.fits_ulong_p() || s.get_ui() > rows_)
    throw std::out_of_range("entry: min(i, j) exceeds the generated rows");
  const std::size_t k = static_cast<std::size_t>(s.get_ui());
  return t <= m_[k - 1] ? inv_pow2(k) : Rational(0);
}

Rational ArrayPrefix::row_sum(std::size_t k) const {
  if (k == 0 || k > rows_) throw std::out_of_range("row_sum: row not generated");
  Rational sum = Rational(run_count(k)) * inv_pow2(k);
  for (std::size_t j = 1; j < k; ++j)
    if (mpz_cmp_ui(m_[j - 1].get_mpz_t(), k) >= 0) sum += inv_pow2(j);
  return sum;
}

Rational ArrayPrefix::prefix_l2() const {
  Rational sum;
  for (std::size_t k = 1; k <= rows_; ++k) {
    sum += Rational(run_count(k)) * inv_pow2(2 * k);
    for (std::size_t j = 1; j < k; ++j)  // mirrored cells below the diagonal
      if (mpz_cmp_ui(m_[j - 1].get_mpz_t(), k) >= 0) sum += inv_pow2(2 * j);
  }
  return sum;
}

Rational ArrayPrefix::pairing_trace(std::size_t terms) const {
  if (2 * terms > rows_)
    throw std::out_of_range("pairing_trace: needs 2*terms generated rows");
  Rational sum;
  for (std::size_t i = 1; i <= terms; ++i) {
    const Integer a(2 * i - 1), b(2 * i);
    sum += entry(a, b) + entry(b, a);
  }
  return sum;
}

BistochMatrix bistochastic_extension(const ExactMatrix& b) {
  const std::size_t n = b.rows();
  if (n == 0 || b.cols() != n)
    throw std::invalid_argument("bistochastic_extension: need a square block");
  std::vector<Rational> rsum(n), csum(n);
  Rational total;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = b.at(i, j);
      if (v < 0)
        throw std::invalid_argument("bistochastic_extension: negative entry");
      rsum[i] += v;
      csum[j] += v;
      total += v;
    }
  for (std::size_t i = 0; i < n; ++i)
    if (rsum[i] > 1 || csum[i] > 1)
      throw std::invalid_argument("bistochastic_extension: sums exceed 1");

  ExactMatrix d(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d.at(i, j) = b.at(i, j);
    d.at(i, n + i) = 1 - rsum[i];  // restores row i
    d.at(n + i, i) = 1 - csum[i];  // restores column i
  }
  // surplus block: row n+i gets csum[i], split along the rsum profile
  if (total != 0)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d.at(n + i, n + j) = csum[i] * rsum[j] / total;
  return BistochMatrix(std::move(d));  // validates exactness
}

TruncCheck truncated_mr_check(const ArrayPrefix& p, const ArrayPrefix& q,
                              std::size_t k, const Rational& bound) {
  if (k == 0) throw std::invalid_argument("truncated_mr_check: k >= 1");
  if (p.rows() < 2 * k || q.rows() < k)
    throw std::out_of_range(
        "truncated_mr_check: prefixes must cover 2k and k rows");
  ExactMatrix block(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      block.at(i, j) = q.entry(Integer(i + 1), Integer(j + 1));
  const BistochMatrix ext = bistochastic_extension(block);

  Rational inner;
  for (std::size_t i = 0; i < 2 * k; ++i)
    for (std::size_t j = 0; j < 2 * k; ++j)
      inner += p.entry(Integer(i + 1), Integer(j + 1)) * ext.at(i, j);
  return {inner, bound, inner <= bound};
}

TruncCheck truncated_mr_check(const ArrayPrefix& p, const ArrayPrefix& q,
                              std::size_t k) {
  return truncated_mr_check(p, q, k, Rational(2));
}

}  // namespace birkhoff
