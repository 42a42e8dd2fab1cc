#include "birkhoff/highfloat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace birkhoff {

namespace {

unsigned configured_bits() {
  static const unsigned bits = [] {
    unsigned b = 96;
    if (const char* env = std::getenv("BIRKHOFF_PRECISION_BITS")) {
      char* end = nullptr;
      const unsigned long v = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0' && v > 0 && v < 1u << 20)
        b = static_cast<unsigned>(v);
    }
    return std::max(b, 64u);
  }();
  return bits;
}

}  // namespace

void ensure_precision() {
  // default_precision takes decimal digits; round up so the mantissa is at
  // least the configured bit count
  const unsigned digits =
      static_cast<unsigned>(std::ceil(configured_bits() * 0.30103)) + 1;
  if (HighFloat::default_precision() != digits)
    HighFloat::default_precision(digits);
}

unsigned precision_bits() { return configured_bits(); }

HighFloat to_highfloat(const Rational& q) {
  ensure_precision();
  HighFloat x;
  mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return x;
}

}  // namespace birkhoff
