#pragma once

// Exact arithmetic types used by the combinatorial layer and the recurrence
// coefficients.  GMP-backed so that conversions into the MPFR float type are
// cheap even for coefficients with thousands of digits.
//
// Expression templates are disabled: constructing the float type from a
// deferred gmp expression silently routes through a low precision
// intermediate, so every integer expression must collapse to a plain value
// before it reaches a float constructor.

#include <boost/multiprecision/gmp.hpp>

namespace kempner {

using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

inline Int int_pow(Int base, unsigned exp) {
    Int r(1);
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

} // namespace kempner
