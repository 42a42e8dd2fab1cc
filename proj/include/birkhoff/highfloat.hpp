#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "birkhoff/rational.hpp"

namespace birkhoff {

// Variable-precision binary float for the constructions that involve square
// roots and therefore leave the rationals.  Precision is configured per
// process: at least 64 bits of mantissa, 96 by default, overridable with the
// BIRKHOFF_PRECISION_BITS environment variable.
using HighFloat =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

// Applies the configured precision to this thread's HighFloat default.
// Idempotent; every entry point producing HighFloat values calls it.
void ensure_precision();

// The configured mantissa width in bits.
unsigned precision_bits();

// Exact rational value rounded once to the working precision.
HighFloat to_highfloat(const Rational& q);

}  // namespace birkhoff
