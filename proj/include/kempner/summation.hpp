#pragma once

// Assembly of the harmonic subsums K0 (pattern absent) and K1 (pattern
// appearing exactly once) from transform values at two- to four-digit
// arguments, with automatic choice of series length and working precision.
//
// With p = alpha*b + beta and sums over n1 in [1,b), n2 in [0,b):
//   distinct digits:
//     K0 = sum 1/n1 + sum_{(n1,n2) != (alpha,beta)} U(n1 b + n2)
//          - sum_{n1} U(n1 b^2 + p)
//     K1 = sum_{(n1,n2) != (alpha,beta)} V(n1 b + n2)
//          + sum_{n1} [ U(n1 b^2 + p) - V(n1 b^2 + p) ]
//          + [alpha != 0] U(p)
//   repeated digit (beta == alpha):
//     K0 = sum 1/n1 + sum_{(n1,n2) != (alpha,alpha)} U(n1 b + n2)
//          + sum_{n1, n2 != alpha} U(n1 b^2 + n2 b + alpha)
//     K1 = [alpha != 0] U(p) + sum_{(n1,n2) != (alpha,alpha)} V(n1 b + n2)
//          + sum_{n1 != alpha} U(n1 b^2 + p)
//          + sum_{n1, n2 != alpha} [ V(n1 b^2 + n2 b + alpha)
//                                    + U(n1 b^3 + n2 b^2 + p) ]
// The u_0/n and v_0/n leading terms of every evaluation are collected as one
// exact rational, rounded once; the reported error bound adds every series
// truncation bound plus a rounding allowance for the floating accumulation.

#include <cmath>
#include <cstdint>
#include <vector>

#include "kempner/moments.hpp"
#include "kempner/pattern.hpp"
#include "kempner/precision.hpp"
#include "kempner/stieltjes.hpp"

namespace kempner {

enum class KIndex { k0, k1 };

struct KRequest {
    PatternSpec pattern;
    KIndex which;
    unsigned target_digits; // requested correct decimal places

    KRequest(PatternSpec p, KIndex w, unsigned digits)
        : pattern(p), which(w), target_digits(digits) {
        if (target_digits < 1)
            throw std::invalid_argument("KRequest: target_digits must be >= 1");
    }
};

struct Plan {
    int moment_terms;          // series length M
    unsigned precision_digits; // working precision
};

// The smallest series argument is b, each truncation bound is at most
// u_0 / b^(M+2), and at most ~3 b^2 evaluations are assembled; pick M so the
// summed bound clears the target with two digits to spare.
inline Plan plan(const KRequest& req) {
    int b = req.pattern.base;
    double sites = 3.0 * b * b + 4.0;
    double lb = std::log10(static_cast<double>(b));
    double need = static_cast<double>(req.target_digits) + 2.0 + std::log10(sites);
    int terms = static_cast<int>(std::ceil(need / lb)) + 3;
    if (terms < 4) terms = 4;
    auto guard = static_cast<unsigned>(std::ceil(std::log10(static_cast<double>(terms) + 2.0)));
    return Plan{terms, req.target_digits + guard + 10};
}

template <class Real>
struct KResult {
    Real value;
    Real error_bound; // rigorous: truncation bounds plus rounding allowance
    int moment_terms;
    unsigned precision_digits;
};

namespace detail {

template <class Real>
struct KAssembler {
    const MomentTable<Real>& t;
    int terms;
    Int u0, v0;
    Rational lead{0}; // exact accumulation of the c_0/n leading terms
    Real tails{0};
    Real bounds{0};
    long sites = 0;

    KAssembler(const MomentTable<Real>& table, int terms_)
        : t(table), terms(terms_), u0(Int(table.pattern.base) * table.pattern.base),
          v0(table.pattern.same ? Int(table.pattern.base) * (table.pattern.base - 1)
                                : Int(table.pattern.base) * table.pattern.base) {}

    void add_harmonic(std::uint64_t n) { lead += Rational(1) / Int(n); }

    void add(const std::vector<Real>& c, const Int& c0, std::uint64_t n, int sign) {
        using std::pow;
        Real nr(n);
        lead += Rational(sign * c0) / Int(n);
        if (sign > 0)
            tails += alternating_tail(c, terms, nr);
        else
            tails -= alternating_tail(c, terms, nr);
        bounds += c[static_cast<std::size_t>(terms) + 1] / pow(nr, terms + 2);
        ++sites;
    }

    void add_u(std::uint64_t n, int sign) { add(t.u, u0, n, sign); }
    void add_v(std::uint64_t n, int sign) { add(t.v, v0, n, sign); }
};

template <class Real>
KResult<Real> assemble_k(const KRequest& req, const Plan& pl) {
    const PatternSpec& p = req.pattern;
    auto b = static_cast<std::uint64_t>(p.base);
    auto alpha = static_cast<std::uint64_t>(p.alpha);
    auto pval = static_cast<std::uint64_t>(p.pair_value());

    ScopedPrecision<Real> scope(pl.precision_digits);
    MomentTable<Real> table = compute_moments<Real>(p, pl.moment_terms + 1, pl.precision_digits);
    KAssembler<Real> acc(table, pl.moment_terms);

    if (req.which == KIndex::k0) {
        for (std::uint64_t n1 = 1; n1 < b; ++n1) acc.add_harmonic(n1);
        for (std::uint64_t n1 = 1; n1 < b; ++n1)
            for (std::uint64_t n2 = 0; n2 < b; ++n2)
                if (n1 * b + n2 != pval) acc.add_u(n1 * b + n2, +1);
        if (!p.same) {
            for (std::uint64_t n1 = 1; n1 < b; ++n1) acc.add_u(n1 * b * b + pval, -1);
        } else {
            for (std::uint64_t n1 = 1; n1 < b; ++n1)
                for (std::uint64_t n2 = 0; n2 < b; ++n2)
                    if (n2 != alpha) acc.add_u(n1 * b * b + n2 * b + alpha, +1);
        }
    } else if (!p.same) {
        for (std::uint64_t n1 = 1; n1 < b; ++n1)
            for (std::uint64_t n2 = 0; n2 < b; ++n2)
                if (n1 * b + n2 != pval) acc.add_v(n1 * b + n2, +1);
        for (std::uint64_t n1 = 1; n1 < b; ++n1) {
            acc.add_v(n1 * b * b + pval, -1);
            acc.add_u(n1 * b * b + pval, +1);
        }
        if (p.alpha != 0) acc.add_u(pval, +1);
    } else {
        if (p.alpha != 0) acc.add_u(pval, +1);
        for (std::uint64_t n1 = 1; n1 < b; ++n1)
            for (std::uint64_t n2 = 0; n2 < b; ++n2)
                if (n1 * b + n2 != pval) acc.add_v(n1 * b + n2, +1);
        for (std::uint64_t n1 = 1; n1 < b; ++n1)
            if (n1 != alpha) acc.add_u(n1 * b * b + pval, +1);
        for (std::uint64_t n1 = 1; n1 < b; ++n1)
            for (std::uint64_t n2 = 0; n2 < b; ++n2)
                if (n2 != alpha) {
                    acc.add_v(n1 * b * b + n2 * b + alpha, +1);
                    acc.add_u(n1 * b * b * b + n2 * b * b + pval, +1);
                }
    }

    using std::abs;
    Real value = Real(acc.lead) + acc.tails;
    Real magnitude = abs(value) + 1;
    Real rounding = Real(static_cast<long>(acc.sites + 4) * static_cast<long>(pl.moment_terms + 4)) *
                    magnitude * pow10<Real>(1 - static_cast<int>(pl.precision_digits));
    return KResult<Real>{value, Real(acc.bounds + rounding), pl.moment_terms, pl.precision_digits};
}

} // namespace detail

template <class Real>
KResult<Real> compute_k(const KRequest& req) {
    Plan pl = plan(req);
    for (int attempt = 0;; ++attempt) {
        try {
            KResult<Real> r = detail::assemble_k<Real>(req, pl);
            ScopedPrecision<Real> scope(pl.precision_digits);
            if (r.error_bound < pow10<Real>(-static_cast<int>(req.target_digits))) return r;
        } catch (const precision_error&) {
            if (attempt >= 2) throw;
        }
        if (attempt >= 2)
            throw precision_error("compute_k: could not reach the requested precision");
        pl.moment_terms = pl.moment_terms * 3 / 2 + 8;
        pl.precision_digits += 25;
    }
}

template <class Real>
KResult<Real> k0(const PatternSpec& p, unsigned target_digits) {
    return compute_k<Real>(KRequest(p, KIndex::k0, target_digits));
}

template <class Real>
KResult<Real> k1(const PatternSpec& p, unsigned target_digits) {
    return compute_k<Real>(KRequest(p, KIndex::k1, target_digits));
}

// One level up the digit expansion: K1 = sum_{n<b} V(n) - [alpha != 0] (V(p) - U(p)).
// Coarser (the n=1 series converges slowly) but an independent arrangement of
// the same transform values; used as a consistency check.
template <class Real>
SeriesValue<Real> k1_level1(const MomentTable<Real>& t, int terms) {
    if (t.pattern.same)
        throw std::invalid_argument("k1_level1: distinct-digit patterns only");
    ScopedPrecision<Real> scope(t.precision_digits);
    Real value(0), bound(0);
    for (std::uint64_t n = 1; n < static_cast<std::uint64_t>(t.pattern.base); ++n) {
        auto s = stieltjes_v(n, t, terms);
        value += s.value;
        bound += s.trunc_bound;
    }
    if (t.pattern.alpha != 0) {
        auto pv = static_cast<std::uint64_t>(t.pattern.pair_value());
        auto sv = stieltjes_v(pv, t, terms);
        auto su = stieltjes_u(pv, t, terms);
        value -= sv.value - su.value;
        bound += sv.trunc_bound + su.trunc_bound;
    }
    return SeriesValue<Real>{value, bound, terms + 1};
}

template <class Real>
struct PatternStatistic {
    PatternSpec pattern;
    Real value;     // K1
    Real deviation; // K1 - b^2 log b
};

template <class Real>
struct K1Statistics {
    int base;
    unsigned target_digits;
    Real reference; // b^2 log b
    std::vector<PatternStatistic<Real>> entries; // all b^2 patterns, (alpha,beta) lexicographic
    Real max_abs_deviation;
    Real max_abs_deviation_distinct; // over alpha != beta only
    std::vector<PatternSpec> below_reference;
};

template <class Real>
K1Statistics<Real> k1_statistics(int base, unsigned target_digits) {
    if (base < 2) throw std::invalid_argument("k1_statistics: base must be >= 2");
    using std::abs;
    using std::log;
    ScopedPrecision<Real> scope(target_digits + 15);
    Real reference = Real(base) * Real(base) * log(Real(base));
    K1Statistics<Real> st{base, target_digits, reference, {}, Real(0), Real(0), {}};
    for (int a = 0; a < base; ++a)
        for (int c = 0; c < base; ++c) {
            PatternSpec p(base, a, c);
            KResult<Real> r = k1<Real>(p, target_digits);
            Real dev = r.value - reference;
            Real ad = abs(dev);
            if (ad > st.max_abs_deviation) st.max_abs_deviation = ad;
            if (a != c && ad > st.max_abs_deviation_distinct) st.max_abs_deviation_distinct = ad;
            if (dev < 0) st.below_reference.push_back(p);
            st.entries.push_back(PatternStatistic<Real>{p, r.value, dev});
        }
    return st;
}

} // namespace kempner
