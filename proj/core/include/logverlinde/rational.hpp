#pragma once

#include <gmpxx.h>

#include <string>

namespace verlinde {

// Arbitrary-precision rational, always canonical (reduced, positive denominator).
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace verlinde
