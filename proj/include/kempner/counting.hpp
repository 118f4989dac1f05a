#pragma once

// Closed-form generating functions for the masses of digit strings with zero
// or exactly one occurrence of the pattern, per-length counts of admissible
// integers, exact tail masses, and the asymptotic per-length decay ratio.
//
// Masses weight every string X by base^-|X|.  With
//   P(T) = b^2 - b(b-1)T - (b-1)T^2   (repeated pattern, alpha == beta)
//   Q(T) = b^2 - b^2 T + T^2          (distinct digits,  alpha != beta)
// the series whose T^l coefficient is the mass of length-l strings are
//   no occurrence:   W = b(b+T)/P            resp.  b^2/Q
//     leading alpha: W_a = bT/P              resp.  (b-T)T/Q
//     leading d!=a:  W_d = (b+T)T/P          resp.  bT/Q
//   one occurrence:  Z = b^2 T^2 / P^2       resp.  b^2 T^2 / Q^2
//     leading alpha: Z_a = (b^2 - b(b-1)T)T^2 / P^2   (same shape both cases)
//     leading d!=a:  Z_d = bT^3 / P^2        resp.  bT^3 / Q^2
// Substituting T -> b*t turns masses into integer counts.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "kempner/pattern.hpp"
#include "kempner/rational_gf.hpp"

namespace kempner {

enum class MeasureKind {
    no_occurrence, // mass of strings avoiding the pattern (W family)
    one_occurrence // mass of strings containing it exactly once (Z family)
};

namespace detail {

inline Polynomial mass_denominator(const PatternSpec& p) {
    Int b(p.base);
    if (p.same)
        return Polynomial{b * b, -b * (b - 1), -(b - 1)};
    return Polynomial{b * b, -b * b, Int(1)};
}

inline int check_occurrences(int occurrences) {
    if (occurrences != 0 && occurrences != 1)
        throw std::invalid_argument("occurrences must be 0 or 1");
    return occurrences;
}

} // namespace detail

// The full-alphabet series W or Z (leading digit unrestricted, length-0
// string included on the W side).
inline RationalGF mass_gf(const PatternSpec& p, MeasureKind which) {
    Int b(p.base);
    Polynomial den = detail::mass_denominator(p);
    if (which == MeasureKind::no_occurrence) {
        Polynomial num = p.same ? Polynomial{b * b, b} : Polynomial{b * b};
        return RationalGF(num, den);
    }
    return RationalGF(Polynomial{Int(0), Int(0), b * b}, den * den);
}

// The leading-digit-restricted series W_d or Z_d.
inline RationalGF mass_gf(const PatternSpec& p, MeasureKind which, int leading_digit) {
    if (leading_digit < 0 || leading_digit >= p.base)
        throw std::invalid_argument("mass_gf: leading digit out of range");
    Int b(p.base);
    Polynomial den = detail::mass_denominator(p);
    if (which == MeasureKind::no_occurrence) {
        Polynomial num = (leading_digit == p.alpha)
                             ? (p.same ? Polynomial{Int(0), b} : Polynomial{Int(0), b, Int(-1)})
                             : (p.same ? Polynomial{Int(0), b, Int(1)} : Polynomial{Int(0), b});
        return RationalGF(num, den);
    }
    Polynomial num = (leading_digit == p.alpha)
                         ? Polynomial{Int(0), Int(0), b * b, -b * (b - 1)}
                         : Polynomial{Int(0), Int(0), Int(0), b};
    return RationalGF(num, den * den);
}

struct MassSequence {
    enum class Kind { mu_total, mu_by_leading_digit, nu_total, nu_by_leading_digit, integer_count };

    Kind kind;
    int leading_digit; // meaningful for the by_leading_digit kinds, else -1
    std::vector<Rational> values; // index l = 0 .. l_max
};

inline MassSequence mass_sequence(const PatternSpec& p, MassSequence::Kind kind, int l_max,
                                  int leading_digit = -1) {
    if (l_max < 0) throw std::invalid_argument("mass_sequence: l_max must be >= 0");
    using K = MassSequence::Kind;
    if (kind == K::integer_count)
        throw std::invalid_argument("mass_sequence: use count_per_length for integer counts");
    bool by_digit = (kind == K::mu_by_leading_digit || kind == K::nu_by_leading_digit);
    MeasureKind mk = (kind == K::mu_total || kind == K::mu_by_leading_digit)
                         ? MeasureKind::no_occurrence
                         : MeasureKind::one_occurrence;
    RationalGF gf = by_digit ? mass_gf(p, mk, leading_digit) : mass_gf(p, mk);
    return MassSequence{kind, by_digit ? leading_digit : -1, gf.coefficients(l_max)};
}

// Exact counts of length-l integers with the requested occurrence count and
// leading digit restricted to the given nonzero digits.
inline MassSequence count_per_length(const PatternSpec& p, int occurrences,
                                     const std::vector<int>& leading_digits, int l_max) {
    detail::check_occurrences(occurrences);
    if (l_max < 0) throw std::invalid_argument("count_per_length: l_max must be >= 0");
    if (leading_digits.empty())
        throw std::invalid_argument("count_per_length: empty leading digit set");
    std::vector<int> digits(leading_digits);
    std::sort(digits.begin(), digits.end());
    digits.erase(std::unique(digits.begin(), digits.end()), digits.end());
    for (int d : digits)
        if (d < 1 || d >= p.base)
            throw std::invalid_argument("count_per_length: leading digits must be in [1, base)");

    MeasureKind mk = occurrences == 0 ? MeasureKind::no_occurrence : MeasureKind::one_occurrence;
    RationalGF sum = mass_gf(p, mk, digits.front());
    for (std::size_t i = 1; i < digits.size(); ++i) sum = sum + mass_gf(p, mk, digits[i]);
    RationalGF counts = sum.scale_argument(Int(p.base));
    return MassSequence{MassSequence::Kind::integer_count, -1, counts.coefficients(l_max)};
}

inline std::vector<int> all_nonzero_digits(int base) {
    std::vector<int> d(static_cast<std::size_t>(base) - 1);
    for (int i = 1; i < base; ++i) d[static_cast<std::size_t>(i) - 1] = i;
    return d;
}

inline std::vector<Int> integer_counts(const MassSequence& seq) {
    std::vector<Int> out;
    out.reserve(seq.values.size());
    for (const Rational& v : seq.values) {
        if (denominator(v) != 1)
            throw std::logic_error("integer_counts: non-integer value in count sequence");
        out.push_back(numerator(v));
    }
    return out;
}

// Mass of all admissible integers (nonzero leading digit) of length > N.
inline Rational tail_mass(const PatternSpec& p, int occurrences, int N) {
    detail::check_occurrences(occurrences);
    if (N < 0) throw std::invalid_argument("tail_mass: N must be >= 0");
    MeasureKind mk = occurrences == 0 ? MeasureKind::no_occurrence : MeasureKind::one_occurrence;
    RationalGF sum = mass_gf(p, mk, 1);
    for (int d = 2; d < p.base; ++d) sum = sum + mass_gf(p, mk, d);
    Rational total = sum.value_at(Rational(1));
    std::vector<Rational> coeffs = sum.coefficients(N);
    for (const Rational& c : coeffs) total -= c;
    return total;
}

// Asymptotic ratio of consecutive tail masses: the largest magnitude among
// the reciprocals of the denominator roots.  The base denominators are exact
// quadratics, so the closed form suffices (squaring for the one-occurrence
// series changes multiplicities, not the root set).
inline double dominant_tail_ratio(const PatternSpec& p, int occurrences) {
    detail::check_occurrences(occurrences);
    Polynomial den = detail::mass_denominator(p);
    double a0 = den.coeff(0).convert_to<double>();
    double a1 = den.coeff(1).convert_to<double>();
    double a2 = den.coeff(2).convert_to<double>();
    // roots x of a0 x^2 + a1 x + a2 are the reciprocals of the roots of den(T)
    double disc = a1 * a1 - 4.0 * a0 * a2;
    if (disc < 0) throw std::logic_error("dominant_tail_ratio: complex denominator roots");
    double s = std::sqrt(disc);
    double r1 = (-a1 + s) / (2.0 * a0);
    double r2 = (-a1 - s) / (2.0 * a0);
    return std::max(std::abs(r1), std::abs(r2));
}

} // namespace kempner
