#pragma once

// Default arbitrary-precision float: MPFR-backed with runtime-settable
// precision (see precision.hpp for the scoping helper).  The numeric kernels
// are templates, so any boost::multiprecision float works; this is the one
// the CLI and tests instantiate.

#include <boost/multiprecision/mpfr.hpp>

namespace kempner {

using BigFloat =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

} // namespace kempner
