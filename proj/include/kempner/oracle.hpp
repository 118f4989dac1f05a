#pragma once

// Verification tools that avoid the moment machinery entirely: direct
// enumeration with a rigorous sandwich enclosure, and closed-form series for
// the base-2 distinct-digit constants.
//
// Enumerating all admissible n below b^N gives the partial sum S_N.  Every
// omitted integer of length k satisfies b^-k <= 1/n < b * b^-k, so with r_N
// the exact omitted mass (sum of count * b^-k),
//     S_N + r_N  <  K  <  S_N + b * r_N.
// The enumeration iterates integers and rescans digit windows; it shares no
// code with the generating-function counting layer on purpose.

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "kempner/bigint.hpp"
#include "kempner/counting.hpp"
#include "kempner/pattern.hpp"
#include "kempner/precision.hpp"

namespace kempner {

inline constexpr std::uint64_t brute_force_cap = std::uint64_t(1) << 34;

template <class Real>
struct SandwichBound {
    int max_len;
    Real partial_sum;  // S_N, accumulated with 15 guard digits
    Rational tail;     // r_N, exact
    Real lower;        // S_N + r_N, padded down by the accumulation allowance
    Real upper;        // S_N + b r_N, padded up likewise
    Real heuristic;    // S_N + log(b) b/(b-1) r_N: a point estimate, not a bound
    std::uint64_t terms_counted;
    std::vector<std::uint64_t> per_length_counts; // index 0..max_len
};

template <class Real>
SandwichBound<Real> brute_partial(const PatternSpec& p, int occurrences, int max_len,
                                  unsigned digits) {
    if (occurrences != 0 && occurrences != 1)
        throw std::invalid_argument("brute_partial: occurrences must be 0 or 1");
    if (max_len < 1) throw std::invalid_argument("brute_partial: max_len must be >= 1");
    Int limit = int_pow(Int(p.base), static_cast<unsigned>(max_len));
    if (limit > brute_force_cap)
        throw std::invalid_argument("brute_partial: b^max_len exceeds the enumeration cap 2^34");
    auto total = limit.convert_to<std::uint64_t>();

    unsigned work = digits + 15;
    ScopedPrecision<Real> scope(work);
    using std::abs;
    using std::log;

    Real sum(0);
    std::uint64_t terms = 0;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_len) + 1, 0);

    // digits of n, least significant first, as an odometer
    std::vector<int> d(static_cast<std::size_t>(max_len), 0);
    int len = 0;
    for (std::uint64_t n = 1; n < total; ++n) {
        int pos = 0;
        while (d[static_cast<std::size_t>(pos)] == p.base - 1) {
            d[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        ++d[static_cast<std::size_t>(pos)];
        if (pos + 1 > len) len = pos + 1;

        int occ = 0;
        for (int i = 0; i + 1 < len; ++i)
            if (d[static_cast<std::size_t>(i) + 1] == p.alpha && d[static_cast<std::size_t>(i)] == p.beta)
                ++occ;
        if (occ == occurrences) {
            sum += Real(1) / Real(n);
            ++terms;
            ++counts[static_cast<std::size_t>(len)];
        }
    }

    Rational tail = tail_mass(p, occurrences, max_len);
    Real tail_r(tail);
    Real pad = Real(terms + 2) * (abs(sum) + 1) * pow10<Real>(2 - static_cast<int>(work));
    SandwichBound<Real> out{max_len,
                            sum,
                            tail,
                            Real(sum + tail_r - pad),
                            Real(sum + p.base * tail_r + pad),
                            Real(sum + log(Real(p.base)) * p.base / (p.base - 1) * tail_r),
                            terms,
                            counts};
    return out;
}

// The two base-2 distinct-digit constants as explicit double series:
//   pattern "10": K1 = sum_{n>=2} sum_{0<=j1<j2<n} 1/(2^n - 2^j2 + 2^j1 - 1)
//   pattern "01": K1 = 2 sum_{n>=3} sum_{0<j1<j2<n} 1/(2^n - 2^j2 + 2^j1 - 1)
template <class Real>
Real direct_series_b2(std::string_view pattern, int max_outer) {
    bool ten;
    if (pattern == "10")
        ten = true;
    else if (pattern == "01")
        ten = false;
    else
        throw std::invalid_argument("direct_series_b2: pattern must be \"10\" or \"01\"");
    if (max_outer < 2) throw std::invalid_argument("direct_series_b2: max_outer must be >= 2");

    std::vector<Int> pow2(static_cast<std::size_t>(max_outer) + 1);
    pow2[0] = 1;
    for (int i = 1; i <= max_outer; ++i) pow2[static_cast<std::size_t>(i)] = pow2[static_cast<std::size_t>(i) - 1] * 2;

    Real sum(0);
    int j_low = ten ? 0 : 1;
    for (int n = ten ? 2 : 3; n <= max_outer; ++n)
        for (int j2 = j_low + 1; j2 < n; ++j2)
            for (int j1 = j_low; j1 < j2; ++j1) {
                Int den = pow2[static_cast<std::size_t>(n)] - pow2[static_cast<std::size_t>(j2)] +
                          pow2[static_cast<std::size_t>(j1)] - 1;
                sum += Real(1) / Real(den);
            }
    return ten ? sum : Real(2 * sum);
}

// Partial sum of sum_n 1/(2^n - 1).
template <class Real>
Real erdos_borwein_partial(int terms) {
    if (terms < 1) throw std::invalid_argument("erdos_borwein_partial: terms must be >= 1");
    Real sum(0);
    Int p(1);
    for (int n = 1; n <= terms; ++n) {
        p *= 2;
        sum += Real(1) / Real(p - 1);
    }
    return sum;
}

// The same constant by the theta-like rearrangement
// sum_n 2^(-n^2) (1 + 2^-n) / (1 - 2^-n); each term is formed exactly.
template <class Real>
Real erdos_borwein_clausen(int terms) {
    if (terms < 1) throw std::invalid_argument("erdos_borwein_clausen: terms must be >= 1");
    Real sum(0);
    for (int n = 1; n <= terms; ++n) {
        Int p = int_pow(Int(2), static_cast<unsigned>(n));
        Int psq = int_pow(Int(2), static_cast<unsigned>(n) * static_cast<unsigned>(n));
        Rational term = Rational(p + 1) / Rational(psq * (p - 1));
        sum += Real(term);
    }
    return sum;
}

} // namespace kempner
