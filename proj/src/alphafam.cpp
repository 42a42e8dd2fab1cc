#include "birkhoff/alphafam.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "birkhoff/bistoch.hpp"

namespace birkhoff {

FloatMatrix to_float(const ExactMatrix& m) {
  ensure_precision();
  if (m.rows() != m.cols()) throw std::invalid_argument("to_float: not square");
  FloatMatrix out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out.at(i, j) = to_highfloat(m.at(i, j));
  return out;
}

FloatTrace float_maxtrace(const FloatMatrix& m, const HighFloat& tie_eps) {
  ensure_precision();
  if (m.n == 0 || m.n > 8)
    throw std::invalid_argument("float_maxtrace: need 1 <= n <= 8");
  std::vector<std::uint8_t> idx(m.n);
  for (std::size_t i = 0; i < m.n; ++i) idx[i] = static_cast<std::uint8_t>(i);
  HighFloat best;
  bool first = true;
  do {  // lex order over all permutations
    HighFloat tr;
    for (std::size_t i = 0; i < m.n; ++i) tr += m.at(i, idx[i]);
    if (first || tr > best) {
      best = tr;
      first = false;
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  // second pass: lex-first permutation within tie_eps of the maximum
  for (std::size_t i = 0; i < m.n; ++i) idx[i] = static_cast<std::uint8_t>(i);
  do {
    HighFloat tr;
    for (std::size_t i = 0; i < m.n; ++i) tr += m.at(i, idx[i]);
    if (tr >= best - tie_eps) return {best, *Perm::from_images(idx)};
  } while (std::next_permutation(idx.begin(), idx.end()));
  throw std::logic_error("float_maxtrace: maximizer vanished");
}

HighFloat float_frobenius_sq(const FloatMatrix& m) {
  HighFloat s;
  for (const HighFloat& v : m.a) s += v * v;
  return s;
}

FloatDelta float_delta(const FloatMatrix& m, const HighFloat& tie_eps) {
  FloatTrace t = float_maxtrace(m, tie_eps);
  HighFloat f = float_frobenius_sq(m);
  return {t.value - f, std::move(t), std::move(f)};
}

FloatDelta float_delta(const FloatMatrix& m) {
  ensure_precision();
  return float_delta(m, HighFloat("1e-12"));
}

namespace {

// Square root with the tiny-negative clamp: interval endpoints put the
// radicand at exactly zero, which rounding may push a hair below.  Genuinely
// infeasible x drives the radicand well past the clamp and throws.
HighFloat checked_sqrt(const HighFloat& r) {
  if (r < 0) {
    if (r < HighFloat("-1e-18"))
      throw std::domain_error(
          "negative discriminant: x outside the feasible interval");
    return HighFloat(0);
  }
  return sqrt(r);
}

void check_alpha(const HighFloat& alpha, const HighFloat& hi,
                 const char* what) {
  if (!(alpha > 0) || !(alpha < hi))
    throw std::domain_error(std::string(what) +
                            ": alpha outside the open feasible range");
}

}  // namespace

FloatInterval interval3(const HighFloat& alpha) {
  ensure_precision();
  check_alpha(alpha, HighFloat(1) / 2, "interval3");
  const HighFloat b = HighFloat(2) / 3 - sqrt(1 - 2 * alpha) / 3;
  HighFloat a;
  if (alpha * 9 <= 2)
    a = HighFloat(5) / 12 - sqrt(1 - 4 * alpha) / 12;
  else
    a = HighFloat(2) / 3 - sqrt(5 - 10 * alpha) / 6;
  return {a, b};
}

HighFloat z_of_x3(const HighFloat& alpha, const HighFloat& x) {
  ensure_precision();
  const HighFloat r = -36 * x * x + 48 * x - 11 - 10 * alpha;
  return (7 - 8 * x - checked_sqrt(r)) / 10;
}

FloatMatrix alpha_erdos3(const HighFloat& alpha, const HighFloat& x) {
  return alpha_erdos_n(3, alpha, x);
}

FloatInterval interval_n(std::size_t n, const HighFloat& alpha) {
  ensure_precision();
  if (n < 3) throw std::invalid_argument("interval_n: need n >= 3");
  const HighFloat nn(static_cast<unsigned>(n));
  check_alpha(alpha, (nn - 1) / 4, "interval_n");
  const HighFloat hi =
      (nn + 1 - sqrt((nn - 1) * (nn - 1 - 4 * alpha))) / (2 * nn);
  HighFloat lo;
  if (alpha * (4 * nn * nn) <= nn * nn - 1) {
    lo = (2 * nn - 1 - sqrt(1 - 4 * alpha)) / (2 * nn * (nn - 1));
  } else {
    lo = (nn + 1) / (2 * nn) -
         sqrt((nn * nn - nn - 1) * (nn - 1 - 4 * alpha)) /
             (2 * nn * sqrt(nn - 1));
  }
  return {lo, hi};
}

HighFloat z_of_x_n(std::size_t n, const HighFloat& alpha, const HighFloat& x) {
  ensure_precision();
  if (n < 3) throw std::invalid_argument("z_of_x_n: need n >= 3");
  const HighFloat nn(static_cast<unsigned>(n));
  const HighFloat n2 = nn * nn;
  const HighFloat n3 = n2 * nn;
  const HighFloat r = -4 * n3 * x * x + 4 * n3 * x + 4 * n2 * x * x - 4 * nn * x -
                      4 * alpha * (n2 - nn - 1) - 3 * n2 + nn + 2;
  const HighFloat denom = 2 * (n2 - nn - 1);
  return (2 * nn + 1 - 2 * (nn + 1) * x) / denom -
         checked_sqrt(r) / (denom * sqrt(n2 - 3 * nn + 2));
}

FloatMatrix alpha_erdos_n(std::size_t n, const HighFloat& alpha,
                          const HighFloat& x) {
  ensure_precision();
  const HighFloat z = z_of_x_n(n, alpha, x);
  const HighFloat w = 1 - x - (static_cast<int>(n) - 2) * z;
  FloatMatrix m(n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) m.at(i, j) = i == j ? x : z;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m.at(i, n - 1) = w;
    m.at(n - 1, i) = w;
  }
  m.at(n - 1, n - 1) = 1 - (static_cast<int>(n) - 1) * w;
  return m;
}

SegmentPoint alpha_on_segment(std::size_t n, const HighFloat& alpha,
                              const ExactMatrix& base3, const HighFloat& eps) {
  ensure_precision();
  if (n < 3 || n > 8)
    throw std::invalid_argument("alpha_on_segment: need 3 <= n <= 8");
  if (base3.rows() != 3 || base3.cols() != 3)
    throw std::invalid_argument("alpha_on_segment: base must be 3x3");
  BistochMatrix base(base3);  // validates bistochasticity

  // embedded base (+) identity block, and the segment's other endpoint
  ExactMatrix embedded = ExactMatrix::identity(n);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) embedded.at(i, j) = base3.at(i, j);
  const FloatMatrix tip = to_float(embedded);
  ExactMatrix mid_exact = ExactMatrix::identity(n);
  const Rational half(1, 2);
  const Rational off(1, 2 * static_cast<unsigned long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mid_exact.at(i, j) = (i == j ? half : Rational(0)) + off;
  const FloatMatrix mid = to_float(mid_exact);

  const auto at = [&](const HighFloat& t) {
    FloatMatrix m(n);
    for (std::size_t i = 0; i < m.a.size(); ++i)
      m.a[i] = t * tip.a[i] + (1 - t) * mid.a[i];
    return m;
  };

  SegmentPoint out;
  out.delta_at0 = float_delta(at(HighFloat(0))).delta;
  out.delta_at1 = float_delta(at(HighFloat(1))).delta;
  if (!(alpha > out.delta_at1) || !(alpha < out.delta_at0))
    throw std::domain_error(
        "alpha_on_segment: alpha does not lie between the endpoint deltas");

  HighFloat lo = 0;   // delta(lo) > alpha
  HighFloat hi = 1;   // delta(hi) < alpha
  for (int iter = 0; iter < 512; ++iter) {
    const HighFloat t = (lo + hi) / 2;
    FloatMatrix m = at(t);
    const HighFloat d = float_delta(m).delta;
    if (abs(d - alpha) <= eps) {
      out.t = t;
      out.matrix = std::move(m);
      out.delta = d;
      return out;
    }
    (d > alpha ? lo : hi) = t;
  }
  throw std::logic_error("alpha_on_segment: bisection failed to converge");
}

}  // namespace birkhoff
