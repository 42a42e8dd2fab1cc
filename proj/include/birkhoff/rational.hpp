#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace birkhoff {

// Exact arithmetic scalars. GMP keeps mpq_class values in lowest terms with a
// positive denominator as long as every value is canonicalized on entry, which
// the factories below guarantee; all mpq arithmetic preserves that form.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q" with optional sign; rejects q = 0 and garbage.
std::optional<Rational> parse_rational(const std::string& text);

// "p" when the denominator is 1, "p/q" otherwise; used by every writer so
// serialized matrices round-trip byte for byte.
std::string to_string(const Rational& r);

}  // namespace birkhoff
