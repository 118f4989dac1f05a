#pragma once

// Helpers for floating types with a runtime-settable default precision
// (boost::multiprecision mpfr/gmp floats).  For fixed-precision types these
// degrade to no-ops, so the numeric kernels stay generic.

#include <cmath>
#include <concepts>
#include <limits>

namespace kempner {

template <class Real>
inline void set_working_digits(unsigned digits) {
    if constexpr (requires { Real::default_precision(digits); })
        Real::default_precision(digits);
}

template <class Real>
inline unsigned working_digits() {
    if constexpr (requires { { Real::default_precision() } -> std::convertible_to<unsigned>; })
        return Real::default_precision();
    else
        return std::numeric_limits<Real>::digits10;
}

// RAII: set the thread's default construction precision, restore on exit.
template <class Real>
class ScopedPrecision {
  public:
    explicit ScopedPrecision(unsigned digits) : saved_(working_digits<Real>()) {
        set_working_digits<Real>(digits);
    }
    ~ScopedPrecision() { set_working_digits<Real>(saved_); }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

  private:
    unsigned saved_;
};

// 10^k for possibly negative k, at the current working precision.
template <class Real>
inline Real pow10(int k) {
    using std::pow;
    Real ten(10);
    if (k >= 0) return Real(pow(ten, k));
    return Real(Real(1) / pow(ten, -k));
}

} // namespace kempner
